#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forge/power_product.hpp"
#include "forge/word.hpp"

namespace forge {

// How the first exponent of w_R is corrected. `literal` uses h0^2 (2h0-3)^2
// exactly as printed; `balanced` uses h0^2 (2h0-3), the unique value that
// makes the x- and y-exponent sums of w_L and w_R agree.
enum class CorrectionMode { balanced, literal };

std::string_view to_string(CorrectionMode mode);
CorrectionMode parse_correction_mode(std::string_view text);

struct IdentityParams {
  std::int64_t h0 = 2;
  std::int64_t d = 1;
  std::int64_t n = 5;
  CorrectionMode mode = CorrectionMode::balanced;

  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

// 1^2 + 2^2 + ... + k^2 = k (k + 1) (2k + 1) / 6.
std::int64_t square_sum(std::int64_t k);
std::int64_t correction(std::int64_t h0, CorrectionMode mode);
// Smallest n for which every exponent of w_R is positive.
std::int64_t minimal_valid_n(std::int64_t h0, CorrectionMode mode);

// Throws Error(invalid_params) unless h0 >= 2, d >= 1, n >= correction + 1.
void validate(const IdentityParams& params);
// Non-fatal notes, e.g. when n <= d h0^2 sits far below the large-parameter
// regime the construction assumes.
std::vector<std::string> parameter_warnings(const IdentityParams& params);

// Raw (unreduced) identity words over {x, y}.
//
//   w_L = prod_{k=1..h0} (x^d y^d)^{n+k^2} x
//   w_R = x (x^d y^d)^{n-C} prod_{k=2h0-1..h0+1} x (x^d y^d)^{n+k^2}
//   w   = w_L w_R^-1
struct IdentityWords {
  IdentityParams params;
  PowerProduct lhs;
  PowerProduct rhs;
  std::vector<std::string> warnings;

  PowerProduct w() const;
  Word lhs_word(std::size_t limit = kMaxExpansion) const { return lhs.reduce(limit); }
  Word rhs_word(std::size_t limit = kMaxExpansion) const { return rhs.reduce(limit); }
  Word w_word(std::size_t limit = kMaxExpansion) const { return w().reduce(limit); }
};

IdentityWords build_identity_words(const IdentityParams& params);

struct BalanceReport {
  IdentityParams params;
  std::int64_t sigma_x_lhs = 0;
  std::int64_t sigma_x_rhs = 0;
  std::int64_t sigma_y_lhs = 0;
  std::int64_t sigma_y_rhs = 0;
  bool balanced = false;
  std::vector<std::int64_t> discrepancy;  // (x, y) sums of w_L minus w_R
};

BalanceReport verify_balance(const IdentityParams& params);

// A formal equality lhs == rhs over a variable alphabet.
struct Identity {
  Word lhs;
  Word rhs;
  std::optional<IdentityParams> params;

  const Alphabet& variables() const noexcept { return lhs.alphabet(); }
};

// Throws Error(invalid_argument) on an empty side or mismatched alphabets.
Identity make_identity(Word lhs, Word rhs, std::optional<IdentityParams> params = std::nullopt);

struct MaltsevPair {
  Word X;
  Word Y;
};

// X_0 = x, Y_0 = y, X_{k+1} = X_k u_{k+1} Y_k, Y_{k+1} = Y_k u_{k+1} X_k.
MaltsevPair maltsev_pair(int k);
Alphabet maltsev_variables(int k);
Identity maltsev_identity(int k);

// x^k y^k == y^k x^k, k >= 1.
Identity power_commutation_pair(std::int64_t k);

// w_L == w_R as an Identity; expands the words, so only small parameters fit.
Identity identity_from_params(const IdentityParams& params, std::size_t limit = kMaxExpansion);

}  // namespace forge
