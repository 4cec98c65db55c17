#include "forge/relator.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "forge/checked.hpp"
#include "forge/error.hpp"

namespace forge {

namespace {

void require_rank(int rank, int max_rank) {
  if (rank != 0 || rank > max_rank) {
    throw Error(ErrorCode::oracle_rank_unsupported,
                "only rank 0 (the free group) is implemented; requested rank " + std::to_string(rank));
  }
}

void require_generator_words(const Word& X, const Word& Y) {
  if (!(X.alphabet() == Y.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "pair words are over different alphabets");
  }
  if (X.alphabet().kind() != Alphabet::Kind::generators) {
    throw Error(ErrorCode::invalid_argument, "pair words must be over a generator alphabet");
  }
}

// Of P and P^-1, the shortlex-smaller one; returns it with the sign that
// recovers P.
std::pair<Word, std::int64_t> oriented(const Word& p) {
  auto inv = invert(p);
  if (shortlex_less(inv, p)) {
    return {std::move(inv), -1};
  }
  return {p, 1};
}

struct ZChoice {
  Word ybar;
  CyclicDecomposition cyc;
};

bool z_better(const ZChoice& c, const std::optional<ZChoice>& best) {
  if (!best) {
    return true;
  }
  const auto& z = c.cyc.conjugator;
  const auto& bz = best->cyc.conjugator;
  if (z.size() != bz.size()) {
    return z.size() < bz.size();
  }
  if (z != bz) {
    return shortlex_less(z, bz);
  }
  return shortlex_less(c.ybar, best->ybar);
}

}  // namespace

std::string_view to_string(Gate gate) { return gate == Gate::strict ? "strict" : "demo"; }

Gate parse_gate(std::string_view text) {
  if (text == "strict") {
    return Gate::strict;
  }
  if (text == "demo") {
    return Gate::demo;
  }
  throw Error(ErrorCode::invalid_argument, "unknown gate '" + std::string(text) + "'");
}

bool FreeGroupOracle::equal_in_rank(int rank, const Word& u, const Word& v) const {
  require_rank(rank, max_rank());
  return u == v;
}

std::optional<ConjugacyWitness> FreeGroupOracle::conjugate_in_rank(int rank, const Word& u, const Word& v) const {
  require_rank(rank, max_rank());
  return conjugacy_witness(u, v);
}

Word evaluate_w(const IdentityParams& params, const Word& X, const Word& Y, std::size_t limit) {
  const auto words = build_identity_words(params);
  return words.w().substitute(Bindings{{"x", X}, {"y", Y}}, limit).reduce(limit);
}

bool w_vanishes(const IdentityParams& params, const Word& X, const Word& Y) {
  if (X * Y != Y * X) {
    return false;
  }
  const auto sums = build_identity_words(params).w().exponent_vector();
  return power(X, sums[0]) * power(Y, sums[1]) == Word(X.alphabet());
}

PairClassData classify_pair(const Word& input_x, const Word& input_y, const IdentityParams& params,
                            const RankOracle& oracle, int rank) {
  require_rank(rank, oracle.max_rank());
  require_generator_words(input_x, input_y);
  validate(params);
  if (w_vanishes(params, input_x, input_y)) {
    throw Error(ErrorCode::commuting_pair,
                "w(X, Y) = 1: the pair (" + to_string(input_x) + ", " + to_string(input_y) + ") commutes");
  }

  // Conjugate the pair so that X becomes its cyclic core B^f_B.
  const auto cyc_x = cyclic_reduce(input_x);
  const auto& X = cyc_x.core;
  const auto Yp = conjugate(input_y, invert(cyc_x.conjugator));
  const auto root_x = primitive_root(X);
  auto [B, sign_b] = oriented(root_x.root);

  // The centralizer <root_x> fixes X; search its orbit on Yp for the
  // shortest Z.
  const auto& gen = root_x.root;
  const auto gen_inv = invert(gen);
  const auto bound = static_cast<std::int64_t>(2 * Yp.size() + 2);
  std::optional<ZChoice> best;
  Word up = Yp;
  Word down = Yp;
  auto consider = [&](const Word& candidate) {
    ZChoice choice{candidate, cyclic_reduce(candidate)};
    if (z_better(choice, best)) {
      best = std::move(choice);
    }
  };
  consider(Yp);
  for (std::int64_t j = 1; j <= bound; ++j) {
    up = conjugate(up, gen);
    down = conjugate(down, gen_inv);
    consider(up);
    consider(down);
  }
  const auto& Ybar = best->ybar;
  const auto& Y = best->cyc.core;
  const auto& Z = best->cyc.conjugator;
  const auto root_y = primitive_root(Y);
  auto [C, sign_c] = oriented(root_y.root);

  const auto d = params.d;
  const auto U = power(X, d) * power(Ybar, d);
  if (U.empty()) {
    throw Error(ErrorCode::commuting_pair, "X^d Ybar^d = 1");
  }
  const auto root_u = primitive_root(U);
  const auto A = canonical_cyclic_form(root_u.root);
  const std::int64_t f =
      conjugacy_witness(root_u.root, A) ? root_u.exponent : -root_u.exponent;
  const auto witness = oracle.conjugate_in_rank(rank, U, power(A, f));
  if (!witness) {
    throw Error(ErrorCode::invalid_argument, "internal: X^d Ybar^d is not conjugate to A^f");
  }
  const auto& W = witness->witness;
  auto T = conjugate(X, invert(W));

  return PairClassData{input_x,
                       input_y,
                       X,
                       Y,
                       Z,
                       Ybar,
                       B,
                       sign_b * root_x.exponent,
                       C,
                       sign_c * root_y.exponent,
                       A,
                       f,
                       W,
                       std::move(T),
                       A.size() == 1,
                       is_regular(A)};
}

std::size_t Relator::count(SectionKind kind) const {
  return static_cast<std::size_t>(std::count(sections.begin(), sections.end(), kind));
}

Relator build_relator(const Word& A, std::int64_t f, const Word& T, const IdentityParams& params) {
  if (f == 0) {
    throw Error(ErrorCode::zero_exponent, "relator needs a nonzero power A^f");
  }
  validate(params);
  if (!(A.alphabet() == T.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "A and T are over different alphabets");
  }
  Relator r{PowerProduct(A.alphabet()), {}, Word(A.alphabet()), {}};
  auto add = [&](const Word& base, std::int64_t e, SectionKind kind) {
    r.raw.append(base, e);
    r.sections.push_back(kind);
  };
  const auto n = params.n;
  for (std::int64_t k = 1; k <= params.h0; ++k) {
    add(A, checked::mul(checked::add(n, k * k), f), SectionKind::a_power);
    add(T, 1, SectionKind::t);
  }
  for (std::int64_t k = params.h0 + 1; k <= 2 * params.h0 - 1; ++k) {
    add(A, checked::mul(checked::sub(-n, k * k), f), SectionKind::a_power);
    add(T, -1, SectionKind::t_inverse);
  }
  add(A, checked::mul(checked::add(-n, correction(params.h0, params.mode)), f), SectionKind::a_power);
  add(T, -1, SectionKind::t_inverse);
  r.reduced = r.raw.reduce();
  if (T.empty()) {
    r.warnings.push_back("T is empty: the relator degenerates to a power of A");
  }
  return r;
}

PairRelator relator_from_pair(const Word& X, const Word& Y, const IdentityParams& params, const RankOracle& oracle,
                              Gate gate) {
  auto data = classify_pair(X, Y, params, oracle);
  if (!data.a_is_rank1) {
    throw Error(ErrorCode::not_rank_one,
                "X^d Ybar^d is conjugate to a power of " + to_string(data.A) + ", which is not a rank-1 period");
  }
  if (gate == Gate::strict && !data.a_is_regular) {
    throw Error(ErrorCode::regularity_gate,
                "strict gate: period " + to_string(data.A) + " is not a regular word");
  }
  auto relator = build_relator(data.A, data.f, data.T, params);
  const auto image = conjugate(evaluate_w(params, data.X, data.Ybar), invert(data.W));
  if (image != relator.reduced) {
    throw Error(ErrorCode::invalid_argument, "internal: relator is not W^-1 w(X, Ybar) W");
  }
  return PairRelator{std::move(data), std::move(relator), gate};
}

namespace {

struct Candidate {
  Word x;
  Word y;
  Word u;       // X^d Y^d
  Word w;       // w(X, Y)
  Word u_form;  // canonical cyclic form of u, for bucketing
};

}  // namespace

bool same_pair_class(const IdentityParams& params, const WordPair& p, const WordPair& q) {
  const auto pu = power(p.first, params.d) * power(p.second, params.d);
  const auto qu = power(q.first, params.d) * power(q.second, params.d);
  return simultaneous_conjugator(pu, evaluate_w(params, p.first, p.second), qu,
                                 evaluate_w(params, q.first, q.second))
      .has_value();
}

std::vector<WordPair> search_pairs(const IdentityParams& params, std::size_t max_len, const Word& target,
                                   const SearchOptions& options) {
  validate(params);
  if (target.size() != 1) {
    throw Error(ErrorCode::invalid_argument, "search target must be a single letter");
  }
  const auto A = canonical_cyclic_form(target);
  const auto& alphabet = target.alphabet();
  const bool unit_only = options.unit_f_only.value_or(params.d >= 2);

  std::vector<Word> words;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto layer = enumerate_reduced_words(alphabet, len);
    words.insert(words.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }

  auto scan_row = [&](std::size_t i) {
    std::vector<Candidate> row;
    const auto& X = words[i];
    const auto xd = power(X, params.d);
    for (const auto& Y : words) {
      const auto u = xd * power(Y, params.d);
      if (u.empty()) {
        continue;
      }
      const auto root = primitive_root(u);
      if (canonical_cyclic_form(root.root) != A) {
        continue;
      }
      const auto abs_f = root.exponent;
      if ((unit_only && abs_f != 1) || abs_f < options.min_abs_f) {
        continue;
      }
      if (w_vanishes(params, X, Y)) {
        continue;
      }
      row.push_back(Candidate{X, Y, u, evaluate_w(params, X, Y), canonical_cyclic_form(u)});
    }
    return row;
  };

  std::vector<std::vector<Candidate>> rows(words.size());
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      rows[i] = scan_row(i);
    }
  } else {
    const auto jobs = static_cast<std::size_t>(options.jobs);
    std::vector<std::future<void>> pending;
    for (std::size_t t = 0; t < jobs; ++t) {
      pending.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < words.size(); i += jobs) {
          rows[i] = scan_row(i);
        }
      }));
    }
    for (auto& f : pending) {
      f.get();
    }
  }

  // Rows are in (X, Y) shortlex order, so the first member seen is the class
  // representative.
  std::vector<const Candidate*> reps;
  std::vector<WordPair> result;
  for (const auto& row : rows) {
    for (const auto& c : row) {
      const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Candidate* r) {
        return r->u_form == c.u_form && simultaneous_conjugator(r->u, r->w, c.u, c.w).has_value();
      });
      if (!seen) {
        reps.push_back(&c);
        result.emplace_back(c.x, c.y);
      }
    }
  }
  return result;
}

Presentation assemble_presentation(const std::vector<WordPair>& pairs, const IdentityParams& params,
                                   const RankOracle& oracle, Gate gate, std::optional<Alphabet> alphabet) {
  validate(params);
  if (!alphabet) {
    alphabet = pairs.empty() ? Alphabet::generators(2) : pairs.front().first.alphabet();
  }
  Presentation pr{*alphabet, {}, params, 1, gate, {}};
  std::vector<Word> found;
  for (const auto& [X, Y] : pairs) {
    try {
      found.push_back(relator_from_pair(X, Y, params, oracle, gate).relator.reduced);
    } catch (const Error& e) {
      pr.notes.push_back("skipped (" + to_string(X) + ", " + to_string(Y) + "): " + e.what());
    }
  }
  // Keep the shortlex-least member of each rank-0 conjugacy class.
  std::sort(found.begin(), found.end(), shortlex_less);
  for (auto& r : found) {
    const bool dup = std::any_of(pr.relators.begin(), pr.relators.end(), [&](const Word& kept) {
      return oracle.conjugate_in_rank(0, kept, r).has_value();
    });
    if (!dup) {
      pr.relators.push_back(std::move(r));
    }
  }
  return pr;
}

PresentationFormat parse_presentation_format(std::string_view text) {
  if (text == "text") {
    return PresentationFormat::text;
  }
  if (text == "json") {
    return PresentationFormat::json;
  }
  throw Error(ErrorCode::unknown_format, "unknown presentation format '" + std::string(text) + "'");
}

std::string export_presentation(const Presentation& pr, PresentationFormat format) {
  if (format == PresentationFormat::text) {
    std::ostringstream out;
    out << "< ";
    for (std::size_t i = 0; i < pr.alphabet.size(); ++i) {
      out << (i ? ", " : "") << pr.alphabet.name(i);
    }
    out << " | ";
    for (std::size_t i = 0; i < pr.relators.size(); ++i) {
      out << (i ? ", " : "") << to_string(pr.relators[i]);
    }
    out << " >";
    return out.str();
  }
  nlohmann::ordered_json j;
  j["generators"] = pr.alphabet.size();
  j["relators"] = nlohmann::json::array();
  for (const auto& r : pr.relators) {
    j["relators"].push_back(to_string(r));
  }
  j["params"] = {{"h0", pr.params.h0}, {"d", pr.params.d}, {"n", pr.params.n},
                 {"mode", std::string(to_string(pr.params.mode))}};
  j["rank"] = pr.rank;
  j["gate"] = std::string(to_string(pr.gate));
  return j.dump();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Presentation parse_presentation(std::string_view text, PresentationFormat format) {
  if (format == PresentationFormat::text) {
    auto body = trim(text);
    if (body.size() < 2 || body.front() != '<' || body.back() != '>') {
      throw Error(ErrorCode::parse, "presentation must be enclosed in '<' and '>'");
    }
    body = body.substr(1, body.size() - 2);
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) {
      throw Error(ErrorCode::parse, "presentation is missing '|'");
    }
    const auto gens = split(body.substr(0, bar), ',');
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] != "a" + std::to_string(i + 1)) {
        throw Error(ErrorCode::parse, "generators must be listed as a1, a2, ...");
      }
    }
    Presentation pr{Alphabet::generators(gens.size()), {}, IdentityParams{}, 1, Gate::strict, {}};
    const auto rels = trim(body.substr(bar + 1));
    if (!rels.empty()) {
      for (const auto r : split(rels, ',')) {
        pr.relators.push_back(parse_word(r, pr.alphabet));
      }
    }
    return pr;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const auto m = j.at("generators").get<std::size_t>();
    IdentityParams params;
    if (j.contains("params")) {
      const auto& p = j.at("params");
      params.h0 = p.at("h0").get<std::int64_t>();
      params.d = p.at("d").get<std::int64_t>();
      params.n = p.at("n").get<std::int64_t>();
      params.mode = parse_correction_mode(p.at("mode").get<std::string>());
    }
    Presentation pr{Alphabet::generators(m), {}, params, j.value("rank", 1),
                    parse_gate(j.value("gate", std::string("strict"))), {}};
    for (const auto& r : j.at("relators")) {
      pr.relators.push_back(parse_word(r.get<std::string>(), pr.alphabet));
    }
    return pr;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("presentation JSON: ") + e.what());
  }
}

}  // namespace forge
