#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forge/word.hpp"

namespace forge {

struct Factor {
  Word base;
  std::int64_t exponent = 1;
};

// An unreduced product base_1^e_1 * base_2^e_2 * ... kept in construction
// order. This is the "raw" form of identity words and relators: section
// structure is visible here and lost after free reduction.
//
// Exponents may be far too large to expand (the balance sweep reaches
// ~10^8 letters), so abelian invariants are computed factor-wise.
class PowerProduct {
 public:
  explicit PowerProduct(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  void append(Word base, std::int64_t exponent = 1);
  void append(const PowerProduct& other);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Factor> factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }

  // Letter count of the unreduced expansion.
  std::int64_t raw_length() const;
  // Per-generator exponent sums; invariant under free reduction.
  std::vector<std::int64_t> exponent_vector() const;

  Word reduce(std::size_t limit = kMaxExpansion) const;
  PowerProduct inverse() const;
  // Replaces every base by its image; exponents are kept.
  PowerProduct substitute(const Bindings& bindings, std::size_t limit = kMaxExpansion) const;

 private:
  Alphabet alphabet_;
  std::vector<Factor> factors_;
};

}  // namespace forge
