#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forge/alphabet.hpp"

namespace forge {

// Upper bound on the number of letters any single expansion may produce.
inline constexpr std::size_t kMaxExpansion = std::size_t{1} << 26;

// A signed letter a_i^{+1} or a_i^{-1}, packed as +(i+1) / -(i+1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t index, bool positive)
      : code_(positive ? static_cast<std::int32_t>(index + 1)
                       : -static_cast<std::int32_t>(index + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t index() const { return static_cast<std::size_t>((code_ > 0 ? code_ : -code_) - 1); }
  constexpr bool positive() const { return code_ > 0; }
  constexpr int sign() const { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr std::int32_t code() const { return code_; }

  // Position in the fixed letter order a1 < a1^-1 < a2 < a2^-1 < ...
  constexpr std::size_t order_key() const { return 2 * index() + (positive() ? 0 : 1); }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_ = 1;
};

// A freely reduced word over an alphabet. The empty word is the identity.
// Every constructor reduces, so two Words are equal in the free group exactly
// when they compare equal here.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  static Word from_letters(Alphabet alphabet, std::span<const Letter> letters);
  static Word generator(Alphabet alphabet, std::size_t index, int sign = 1);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Subword [pos, pos + len); always reduced since w is.
  Word subword(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.letters_ == rhs.letters_ && lhs.alphabet_ == rhs.alphabet_;
  }

 private:
  friend class WordBuilder;
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Incremental free reduction: letters are pushed onto a stack and cancel
// against the top.
class WordBuilder {
 public:
  explicit WordBuilder(Alphabet alphabet, std::size_t limit = kMaxExpansion)
      : word_(std::move(alphabet)), limit_(limit) {}

  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);
  void append_power(const Word& w, std::int64_t exponent);

  std::size_t size() const noexcept { return word_.size(); }
  Word finish() && { return std::move(word_); }

 private:
  void check_alphabet(const Word& w) const;

  Word word_;
  std::size_t limit_;
  std::size_t pushed_ = 0;
};

// Freely reduced u*v. Throws Error(alphabet_mismatch) for different alphabets.
Word reduce_product(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return reduce_product(u, v); }

Word invert(const Word& w);
Word power(const Word& w, std::int64_t exponent, std::size_t limit = kMaxExpansion);
Word conjugate(const Word& w, const Word& by);  // by * w * by^-1

struct CyclicDecomposition {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicDecomposition cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

struct AbelianStats {
  std::vector<std::int64_t> exponents;  // per generator
  std::int64_t positive_sum = 0;
  std::int64_t negative_sum = 0;

  bool zero() const;
  friend bool operator==(const AbelianStats&, const AbelianStats&) = default;
};

AbelianStats abelian_stats(const Word& w);

bool is_positive(const Word& w);
// w or w^-1 contains three consecutive positive letters.
bool is_regular(const Word& w);

using Bindings = std::map<std::string, Word, std::less<>>;

// Image of `tmpl` under the homomorphism fixed by `bindings`. The target
// alphabet is the common alphabet of the bound words.
Word substitute(const Word& tmpl, const Bindings& bindings, std::size_t limit = kMaxExpansion);

// Shortlex: shorter first, then lexicographic under Letter::order_key.
bool shortlex_less(const Word& lhs, const Word& rhs);

Word parse_word(std::string_view text, const Alphabet& alphabet);
// Alphabet implied by the symbols in `text`: a1..am with m at least
// `min_generators`, or x, y, u1.. for template words.
Alphabet infer_alphabet(std::string_view text, std::size_t min_generators = 2);

// Canonical text form: "1" for the identity, runs collapsed to "a1^3".
std::string to_string(const Word& w);

}  // namespace forge
