#include "forge/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "forge/error.hpp"

namespace forge {

namespace {

void check_index(const Alphabet& alphabet, Letter l) {
  if (l.index() >= alphabet.size()) {
    throw Error(ErrorCode::index_out_of_range,
                "letter index " + std::to_string(l.index() + 1) + " outside alphabet of size " +
                    std::to_string(alphabet.size()));
  }
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "words are over different alphabets");
  }
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
    }
    const auto start = i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(text.substr(start, i - start));
    }
  }
  return tokens;
}

std::int64_t parse_exponent(std::string_view token, std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::malformed_exponent, "missing exponent in '" + std::string(token) + "'");
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorCode::malformed_exponent, "malformed exponent in '" + std::string(token) + "'");
  }
  std::int64_t magnitude = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), magnitude);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      magnitude > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorCode::malformed_exponent,
                "exponent out of range (|e| <= 2^31-1) in '" + std::string(token) + "'");
  }
  return negative ? -magnitude : magnitude;
}

}  // namespace

Word Word::from_letters(Alphabet alphabet, std::span<const Letter> letters) {
  WordBuilder builder(std::move(alphabet), std::max(kMaxExpansion, letters.size()));
  for (const auto l : letters) {
    builder.push(l);
  }
  return std::move(builder).finish();
}

Word Word::generator(Alphabet alphabet, std::size_t index, int sign) {
  const Letter l(index, sign > 0);
  check_index(alphabet, l);
  Word w(std::move(alphabet));
  w.letters_.push_back(l);
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w(alphabet_);
  const auto begin = letters_.begin() + static_cast<std::ptrdiff_t>(std::min(pos, letters_.size()));
  const auto end = letters_.begin() + static_cast<std::ptrdiff_t>(std::min(pos + len, letters_.size()));
  w.letters_.assign(begin, end);
  return w;
}

void WordBuilder::push(Letter l) {
  check_index(word_.alphabet_, l);
  if (++pushed_ > limit_) {
    throw Error(ErrorCode::expansion_limit,
                "word expansion exceeds " + std::to_string(limit_) + " letters");
  }
  auto& letters = word_.letters_;
  if (!letters.empty() && letters.back() == l.inverse()) {
    letters.pop_back();
  } else {
    letters.push_back(l);
  }
}

void WordBuilder::check_alphabet(const Word& w) const {
  if (!(w.alphabet() == word_.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "words are over different alphabets");
  }
}

void WordBuilder::append(const Word& w) {
  check_alphabet(w);
  for (const auto l : w.letters()) {
    push(l);
  }
}

void WordBuilder::append_inverse(const Word& w) {
  check_alphabet(w);
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    push(it->inverse());
  }
}

void WordBuilder::append_power(const Word& w, std::int64_t exponent) {
  check_alphabet(w);
  if (w.empty() || exponent == 0) {
    return;
  }
  const auto magnitude = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  if (magnitude > (limit_ - std::min(limit_, pushed_)) / w.size() + 1) {
    throw Error(ErrorCode::expansion_limit,
                "word expansion exceeds " + std::to_string(limit_) + " letters");
  }
  for (std::uint64_t k = 0; k < magnitude; ++k) {
    if (exponent > 0) {
      append(w);
    } else {
      append_inverse(w);
    }
  }
}

Word reduce_product(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  WordBuilder builder(u.alphabet(), std::max(kMaxExpansion, u.size() + v.size()));
  builder.append(u);
  builder.append(v);
  return std::move(builder).finish();
}

Word invert(const Word& w) {
  WordBuilder builder(w.alphabet(), std::max(kMaxExpansion, w.size()));
  builder.append_inverse(w);
  return std::move(builder).finish();
}

Word power(const Word& w, std::int64_t exponent, std::size_t limit) {
  WordBuilder builder(w.alphabet(), limit);
  builder.append_power(w, exponent);
  return std::move(builder).finish();
}

Word conjugate(const Word& w, const Word& by) {
  require_same_alphabet(w, by);
  WordBuilder builder(w.alphabet(), std::max(kMaxExpansion, w.size() + 2 * by.size()));
  builder.append(by);
  builder.append(w);
  builder.append_inverse(by);
  return std::move(builder).finish();
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  std::size_t strip = 0;
  const auto n = w.size();
  while (2 * strip + 1 < n && w[strip] == w[n - 1 - strip].inverse()) {
    ++strip;
  }
  return {w.subword(strip, n - 2 * strip), w.subword(0, strip)};
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

bool AbelianStats::zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::int64_t e) { return e == 0; });
}

AbelianStats abelian_stats(const Word& w) {
  AbelianStats stats;
  stats.exponents.assign(w.alphabet().size(), 0);
  for (const auto l : w.letters()) {
    stats.exponents[l.index()] += l.sign();
    if (l.positive()) {
      ++stats.positive_sum;
    } else {
      ++stats.negative_sum;
    }
  }
  return stats;
}

bool is_positive(const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](Letter l) { return l.positive(); });
}

bool is_regular(const Word& w) {
  // w^-1 has a positive 3-subword iff w has three consecutive negative letters.
  int positive_run = 0;
  int negative_run = 0;
  for (const auto l : w.letters()) {
    if (l.positive()) {
      ++positive_run;
      negative_run = 0;
    } else {
      ++negative_run;
      positive_run = 0;
    }
    if (positive_run >= 3 || negative_run >= 3) {
      return true;
    }
  }
  return false;
}

Word substitute(const Word& tmpl, const Bindings& bindings, std::size_t limit) {
  const auto& vars = tmpl.alphabet();
  std::vector<const Word*> images(vars.size(), nullptr);
  const Word* first = nullptr;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto it = bindings.find(vars.name(i));
    if (it != bindings.end()) {
      images[i] = &it->second;
      if (first == nullptr) {
        first = &it->second;
      }
    }
  }
  for (const auto l : tmpl.letters()) {
    if (images[l.index()] == nullptr) {
      throw Error(ErrorCode::unbound_variable, "unbound variable '" + vars.name(l.index()) + "'");
    }
  }
  if (first == nullptr) {
    if (!bindings.empty()) {
      return Word(bindings.begin()->second.alphabet());
    }
    return Word(tmpl.alphabet());
  }
  for (const auto* image : images) {
    if (image != nullptr && !(image->alphabet() == first->alphabet())) {
      throw Error(ErrorCode::alphabet_mismatch, "bound words are over different alphabets");
    }
  }
  WordBuilder builder(first->alphabet(), limit);
  for (const auto l : tmpl.letters()) {
    if (l.positive()) {
      builder.append(*images[l.index()]);
    } else {
      builder.append_inverse(*images[l.index()]);
    }
  }
  return std::move(builder).finish();
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) {
    return lhs.size() < rhs.size();
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) {
      return lhs[i].order_key() < rhs[i].order_key();
    }
  }
  return false;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) {
    throw Error(ErrorCode::parse, "empty word text (use \"1\" for the identity)");
  }
  if (tokens.size() == 1 && tokens.front() == "1") {
    return Word(alphabet);
  }
  WordBuilder builder(alphabet);
  for (const auto token : tokens) {
    const auto caret = token.find('^');
    const auto symbol = token.substr(0, caret);
    if (symbol == "1") {
      throw Error(ErrorCode::parse, "identity literal \"1\" must stand alone");
    }
    const auto index = alphabet.find(symbol);
    if (!index) {
      throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(symbol) + "'");
    }
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      exponent = parse_exponent(token, token.substr(caret + 1));
    }
    builder.append_power(Word::generator(alphabet, *index), exponent);
  }
  return std::move(builder).finish();
}

Alphabet infer_alphabet(std::string_view text, std::size_t min_generators) {
  std::size_t max_generator = 0;
  bool has_variables = false;
  std::set<std::size_t> u_indices;
  for (const auto token : split_ws(text)) {
    const auto symbol = token.substr(0, token.find('^'));
    if (symbol == "1") {
      continue;
    }
    if (symbol.size() >= 2 && symbol.front() == 'a') {
      std::size_t k = 0;
      const auto [ptr, ec] = std::from_chars(symbol.data() + 1, symbol.data() + symbol.size(), k);
      if (ec != std::errc() || ptr != symbol.data() + symbol.size() || k == 0 || k > (1u << 20)) {
        throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(symbol) + "'");
      }
      max_generator = std::max(max_generator, k);
    } else if (symbol == "x" || symbol == "y") {
      has_variables = true;
    } else if (symbol.size() >= 2 && symbol.front() == 'u') {
      std::size_t k = 0;
      const auto [ptr, ec] = std::from_chars(symbol.data() + 1, symbol.data() + symbol.size(), k);
      if (ec != std::errc() || ptr != symbol.data() + symbol.size()) {
        throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(symbol) + "'");
      }
      has_variables = true;
      u_indices.insert(k);
    } else {
      throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(symbol) + "'");
    }
  }
  if (has_variables && max_generator > 0) {
    throw Error(ErrorCode::parse, "word mixes generators and template variables");
  }
  if (!has_variables) {
    return Alphabet::generators(std::max(max_generator, min_generators));
  }
  std::vector<std::string> names{"x", "y"};
  for (const auto k : u_indices) {
    names.push_back("u" + std::to_string(k));
  }
  return Alphabet::variables(std::move(names));
}

std::string to_string(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream out;
  const auto& alphabet = w.alphabet();
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    const auto run = static_cast<std::int64_t>(j - i) * w[i].sign();
    if (!first) {
      out << ' ';
    }
    first = false;
    out << alphabet.name(w[i].index());
    if (run != 1) {
      out << '^' << run;
    }
    i = j;
  }
  return out.str();
}

}  // namespace forge
