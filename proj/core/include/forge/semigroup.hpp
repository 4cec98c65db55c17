#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "forge/identity.hpp"
#include "forge/magma.hpp"

namespace forge {

// Outcome of one exhaustive scan. The witness is the first failure in
// row-major order over the quantified elements:
//   associative:        (i, j, k) with (ij)k != i(jk)
//   left_cancellative:  (x, a, b), a < b, with xa == xb
//   right_cancellative: (x, a, b), a < b, with ax == bx
//   left_ore:           (a, b) with no x, y such that xa == yb
//   right_ore:          (a, b) with no x, y such that ax == by
struct PropertyCheck {
  bool holds = true;
  std::vector<std::size_t> witness;
};

struct StructureReport {
  PropertyCheck associative;
  PropertyCheck left_cancellative;
  PropertyCheck right_cancellative;
  PropertyCheck left_ore;
  PropertyCheck right_ore;
  std::optional<std::size_t> identity;
  bool is_group = false;

  bool cancellative() const { return left_cancellative.holds && right_cancellative.holds; }
};

StructureReport check_structure(const FiniteMagma& m);

// Two-sided identity element, if any.
std::optional<std::size_t> identity_element(const FiniteMagma& m);
bool is_group(const FiniteMagma& m);

inline constexpr std::size_t kMaxIdentityVariables = 6;

struct IdentityCheck {
  bool holds = true;
  std::vector<std::size_t> counterexample;  // element per variable
  std::uint64_t substitutions = 0;
};

// Brute force over every assignment of elements to the identity's
// variables; the counterexample is the first failing assignment with the
// first variable most significant. Inverse letters are allowed only when m is
// a group. Throws Error(not_associative) or Error(too_many_variables).
IdentityCheck holds_identity(const FiniteMagma& m, const Identity& identity, int jobs = 1);

// Class of the lower central series; nullopt if it stalls above the trivial
// subgroup. Throws Error(not_group).
std::optional<int> nilpotency_class(const FiniteMagma& m);

struct MaltsevReport {
  int k = 0;
  bool identity_holds = false;
  std::optional<int> nilpotency;
  bool class_at_most_k = false;
  bool consistent = false;
  std::vector<std::size_t> counterexample;
};

// Compares "X_k == Y_k holds" with "nilpotent of class <= k".
MaltsevReport maltsev_crosscheck(const FiniteMagma& m, int k, int jobs = 1);

struct FractionGroup {
  FiniteMagma group;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
};

// A finite cancellative semigroup is already a group, so F(S) = S. Returns S
// with its identity and inverse map after checking that every row and
// column is a permutation. Throws Error(not_associative) or
// Error(not_cancellative).
FractionGroup fraction_group_of_finite(const FiniteMagma& m);

}  // namespace forge
