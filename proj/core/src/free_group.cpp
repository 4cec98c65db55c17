#include "forge/free_group.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "forge/error.hpp"

namespace forge {

namespace {

Word rotate(const Word& w, std::size_t r) {
  std::vector<Letter> letters(w.letters().begin() + static_cast<std::ptrdiff_t>(r), w.letters().end());
  letters.insert(letters.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(r));
  // A rotation of a cyclically reduced word is reduced, so this does not cancel.
  return Word::from_letters(w.alphabet(), letters);
}

std::optional<std::size_t> rotation_offset(const Word& target, const Word& source) {
  // Smallest r with target == rotate(source, r).
  const auto n = source.size();
  if (target.size() != n) {
    return std::nullopt;
  }
  for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = target[i] == source[(i + r) % n];
    }
    if (match) {
      return r;
    }
  }
  return std::nullopt;
}

// Generator of the centralizer of a nontrivial w: b rho b^-1 where
// w = b core b^-1 and core = rho^k.
Word centralizer_generator(const Word& w) {
  const auto cyc = cyclic_reduce(w);
  const auto root = primitive_root(cyc.core).root;
  return conjugate(root, cyc.conjugator);
}

bool better(const Word& candidate, const std::optional<Word>& best) {
  return !best || shortlex_less(candidate, *best);
}

// Least (shortlex) element of {base * gen^j : |j| <= bound} satisfying pred.
template <typename Pred>
std::optional<Word> scan_coset(const Word& base, const Word& gen, std::int64_t bound, Pred pred) {
  std::optional<Word> best;
  const auto inv = invert(gen);
  Word up = base;
  Word down = base;
  if (pred(base)) {
    best = base;
  }
  for (std::int64_t j = 1; j <= bound; ++j) {
    up = up * gen;
    down = down * inv;
    for (const Word* c : {&up, &down}) {
      if (pred(*c) && better(*c, best)) {
        best = *c;
      }
    }
  }
  return best;
}

void enumerate_into(const Alphabet& alphabet, std::size_t length, std::vector<Letter>& prefix,
                    std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.push_back(Word::from_letters(alphabet, prefix));
    return;
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (const bool positive : {true, false}) {
      const Letter l(i, positive);
      if (!prefix.empty() && prefix.back() == l.inverse()) {
        continue;
      }
      prefix.push_back(l);
      enumerate_into(alphabet, length, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorCode::empty_word, "primitive root of the identity is undefined");
  }
  const auto core = cyclic_reduce(w).core;
  const auto n = core.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = core[i] == core[i - p];
    }
    if (periodic) {
      return {core.subword(0, p), static_cast<std::int64_t>(n / p)};
    }
  }
  return {core, 1};
}

std::optional<ConjugacyWitness> conjugacy_witness(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "words are over different alphabets");
  }
  const auto cu = cyclic_reduce(u);
  const auto cv = cyclic_reduce(v);
  const auto offset = rotation_offset(cu.core, cv.core);
  if (!offset) {
    return std::nullopt;
  }
  if (v.empty()) {
    return ConjugacyWitness{Word(u.alphabet()), u, v};
  }
  // core_u = P^-1 core_v P with P the first `offset` letters of core_v, so
  // u = (a P^-1 b^-1) v (a P^-1 b^-1)^-1.
  const auto prefix = cv.core.subword(0, *offset);
  const auto base = cu.conjugator * invert(prefix) * invert(cv.conjugator);
  // Every witness is base * g^j for the centralizer generator g of v; beyond
  // |j| > 2|base| the product is longer than base itself.
  const auto gen = centralizer_generator(v);
  const auto bound = static_cast<std::int64_t>(2 * base.size() + 1);
  auto best = scan_coset(base, gen, bound, [](const Word&) { return true; });
  return ConjugacyWitness{std::move(*best), u, v};
}

std::optional<Word> simultaneous_conjugator(const Word& u1, const Word& u2, const Word& v1, const Word& v2) {
  if (v1.empty()) {
    if (!u1.empty()) {
      return std::nullopt;
    }
    auto w = conjugacy_witness(u2, v2);
    return w ? std::optional<Word>(std::move(w->witness)) : std::nullopt;
  }
  const auto first = conjugacy_witness(u1, v1);
  if (!first) {
    return std::nullopt;
  }
  const auto& base = first->witness;
  const auto gen = centralizer_generator(v1);
  if (gen * v2 == v2 * gen) {
    if (conjugate(v2, base) == u2) {
      return base;
    }
    return std::nullopt;
  }
  const auto bound = static_cast<std::int64_t>(u2.size() + v2.size() + 2 * base.size() + 2 * gen.size() + 4);
  return scan_coset(base, gen, bound, [&](const Word& c) { return conjugate(v2, c) == u2; });
}

bool is_simple_rank0(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorCode::empty_word, "simplicity is undefined for the identity");
  }
  return is_cyclically_reduced(w) && primitive_root(w).exponent == 1;
}

Word canonical_cyclic_form(const Word& w) {
  const auto core = cyclic_reduce(w).core;
  if (core.empty()) {
    return core;
  }
  std::optional<Word> best;
  for (const auto& candidate : {core, invert(core)}) {
    for (std::size_t r = 0; r < candidate.size(); ++r) {
      auto rotated = rotate(candidate, r);
      if (better(rotated, best)) {
        best = std::move(rotated);
      }
    }
  }
  return *best;
}

std::vector<Word> enumerate_reduced_words(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> prefix;
  enumerate_into(alphabet, length, prefix, out);
  return out;
}

PeriodSet periods_rank1(const Alphabet& alphabet) {
  if (alphabet.kind() != Alphabet::Kind::generators) {
    throw Error(ErrorCode::invalid_argument, "periods are defined over a generator alphabet");
  }
  PeriodSet set;
  set.rank = 1;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    set.periods.push_back(Word::generator(alphabet, i));
  }
  return set;
}

PeriodVerdict verify_periods(const PeriodSet& set, const Alphabet& alphabet) {
  const auto rank = static_cast<std::size_t>(set.rank);
  auto fail = [](std::string why) { return PeriodVerdict{false, std::move(why)}; };
  for (const auto& a : set.periods) {
    if (!(a.alphabet() == alphabet)) {
      return fail("period " + to_string(a) + " is over a different alphabet");
    }
    if (a.size() != rank) {
      return fail("period " + to_string(a) + " has length " + std::to_string(a.size()) + " != rank");
    }
    // Primitivity at rank 0: conjugate to B^l with |B| < |A| iff not cyclically
    // reduced or a proper power.
    if (a.empty() || !is_simple_rank0(a)) {
      return fail("primitivity violated: " + to_string(a) + " is conjugate to a power of a shorter word");
    }
  }
  for (std::size_t i = 0; i < set.periods.size(); ++i) {
    for (std::size_t j = i + 1; j < set.periods.size(); ++j) {
      const auto& a = set.periods[i];
      const auto& b = set.periods[j];
      if (conjugacy_witness(a, b) || conjugacy_witness(a, invert(b))) {
        return fail("independence violated: " + to_string(a) + " is conjugate to " + to_string(b) + " or its inverse");
      }
    }
  }
  for (const auto& candidate : enumerate_reduced_words(alphabet, rank)) {
    if (!is_simple_rank0(candidate)) {
      continue;
    }
    const bool covered = std::any_of(set.periods.begin(), set.periods.end(), [&](const Word& a) {
      return conjugacy_witness(candidate, a) || conjugacy_witness(candidate, invert(a));
    });
    if (!covered) {
      return fail("not maximal: " + to_string(candidate) + " could be added");
    }
  }
  return {};
}

namespace {

struct ProbePartial {
  std::int64_t words = 0;
  std::int64_t trivial = 0;
  std::int64_t regular = 0;
  bool growth_ok = true;
  std::optional<Word> first_trivial;
  std::optional<Word> first_regular;
};

class ProbeWalker {
 public:
  ProbeWalker(const Word& v1, const Word& v2, std::size_t depth)
      : vars_(xy_variables()), depth_(depth) {
    images_[0] = v1;
    images_[1] = v2;
    images_[2] = invert(v1);
    images_[3] = invert(v2);
  }

  ProbePartial run(Letter first) {
    std::vector<Letter> u{first};
    std::vector<Word> prefix_images{image_of(first)};
    walk(u, prefix_images);
    return std::move(partial_);
  }

 private:
  const Word& image_of(Letter l) const { return *images_[l.index() + (l.positive() ? 0 : 2)]; }

  void visit(const std::vector<Letter>& u, const Word& image) {
    ++partial_.words;
    if (image.size() < u.size()) {
      partial_.growth_ok = false;
    }
    if (image.empty()) {
      ++partial_.trivial;
      record(partial_.first_trivial, u);
      return;
    }
    if (is_regular(cyclic_reduce(image).core)) {
      ++partial_.regular;
      record(partial_.first_regular, u);
    }
  }

  void record(std::optional<Word>& slot, const std::vector<Letter>& u) {
    auto w = Word::from_letters(vars_, u);
    if (better(w, slot)) {
      slot = std::move(w);
    }
  }

  void walk(std::vector<Letter>& u, std::vector<Word>& prefix_images) {
    visit(u, prefix_images.back());
    if (u.size() == depth_) {
      return;
    }
    for (std::size_t i = 0; i < 2; ++i) {
      for (const bool positive : {true, false}) {
        const Letter l(i, positive);
        if (l == u.back().inverse()) {
          continue;
        }
        u.push_back(l);
        prefix_images.push_back(prefix_images.back() * image_of(l));
        walk(u, prefix_images);
        prefix_images.pop_back();
        u.pop_back();
      }
    }
  }

  Alphabet vars_;
  std::size_t depth_;
  std::optional<Word> images_[4];
  ProbePartial partial_;
};

}  // namespace

ProbeReport free_subgroup_probe(const Word& v1, const Word& v2, int depth, int jobs, int max_depth) {
  if (depth < 1) {
    throw Error(ErrorCode::invalid_argument, "probe depth must be >= 1");
  }
  if (depth > max_depth) {
    throw Error(ErrorCode::invalid_argument,
                "probe depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(max_depth));
  }
  if (!(v1.alphabet() == v2.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "probe words are over different alphabets");
  }
  const std::vector<Letter> firsts{Letter(0, true), Letter(0, false), Letter(1, true), Letter(1, false)};
  std::vector<ProbePartial> partials(firsts.size());
  auto task = [&](std::size_t k) {
    ProbeWalker walker(v1, v2, static_cast<std::size_t>(depth));
    partials[k] = walker.run(firsts[k]);
  };
  if (jobs <= 1) {
    for (std::size_t k = 0; k < firsts.size(); ++k) {
      task(k);
    }
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t k = 0; k < firsts.size(); ++k) {
      pending.push_back(std::async(std::launch::async, task, k));
    }
    for (auto& f : pending) {
      f.get();
    }
  }

  ProbeReport report;
  report.depth = depth;
  std::optional<Word> first_trivial;
  std::optional<Word> first_regular;
  for (auto& p : partials) {
    report.words_checked += p.words;
    report.trivial_images += p.trivial;
    report.regular_images += p.regular;
    report.growth_ok = report.growth_ok && p.growth_ok;
    if (p.first_trivial && better(*p.first_trivial, first_trivial)) {
      first_trivial = p.first_trivial;
    }
    if (p.first_regular && better(*p.first_regular, first_regular)) {
      first_regular = p.first_regular;
    }
  }
  report.free_up_to_depth = report.trivial_images == 0;
  report.all_images_nonregular = report.regular_images == 0;
  report.counterexample = first_trivial ? first_trivial : first_regular;
  if (report.counterexample) {
    report.counterexample_image = substitute(*report.counterexample, Bindings{{"x", v1}, {"y", v2}});
  }
  return report;
}

}  // namespace forge
