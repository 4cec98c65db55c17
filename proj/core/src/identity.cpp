#include "forge/identity.hpp"

#include "forge/checked.hpp"
#include "forge/error.hpp"

namespace forge {

namespace {

Word x_letter() { return Word::generator(xy_variables(), 0); }

Word block(std::int64_t d) {
  WordBuilder builder(xy_variables());
  builder.append_power(Word::generator(xy_variables(), 0), d);
  builder.append_power(Word::generator(xy_variables(), 1), d);
  return std::move(builder).finish();
}

}  // namespace

std::string_view to_string(CorrectionMode mode) {
  return mode == CorrectionMode::balanced ? "balanced" : "literal";
}

CorrectionMode parse_correction_mode(std::string_view text) {
  if (text == "balanced") {
    return CorrectionMode::balanced;
  }
  if (text == "literal") {
    return CorrectionMode::literal;
  }
  throw Error(ErrorCode::invalid_argument, "unknown mode '" + std::string(text) + "'");
}

std::int64_t square_sum(std::int64_t k) {
  if (k < 0) {
    throw Error(ErrorCode::invalid_argument, "square_sum of negative bound");
  }
  // One of k, k+1 is even and one of k, k+1, 2k+1 is divisible by 3; divide
  // before multiplying so the intermediate stays exact.
  std::int64_t a = k;
  std::int64_t b = k + 1;
  std::int64_t c = 2 * k + 1;
  (a % 2 == 0 ? a : b) /= 2;
  if (a % 3 == 0) {
    a /= 3;
  } else if (b % 3 == 0) {
    b /= 3;
  } else {
    c /= 3;
  }
  return checked::mul(checked::mul(a, b), c);
}

std::int64_t correction(std::int64_t h0, CorrectionMode mode) {
  const auto base = checked::mul(h0, h0);
  const auto factor = checked::sub(checked::mul(2, h0), 3);
  const auto once = checked::mul(base, factor);
  return mode == CorrectionMode::balanced ? once : checked::mul(once, factor);
}

std::int64_t minimal_valid_n(std::int64_t h0, CorrectionMode mode) {
  return std::max<std::int64_t>(1, checked::add(correction(h0, mode), 1));
}

void validate(const IdentityParams& p) {
  if (p.h0 < 2) {
    throw Error(ErrorCode::invalid_params, "h0 must be >= 2");
  }
  if (p.d < 1) {
    throw Error(ErrorCode::invalid_params, "d must be >= 1");
  }
  if (p.n < 1) {
    throw Error(ErrorCode::invalid_params, "n must be >= 1");
  }
  const auto c = correction(p.h0, p.mode);
  if (p.n < checked::add(c, 1)) {
    throw Error(ErrorCode::invalid_params,
                "n must be >= " + std::to_string(c + 1) + " so that every exponent of w_R is positive (" +
                    std::string(to_string(p.mode)) + " correction " + std::to_string(c) + ")");
  }
  // Exponents n + (2h0-1)^2 and the letter totals must stay in 64 bits.
  const auto top = checked::add(p.n, checked::mul(2 * p.h0 - 1, 2 * p.h0 - 1));
  (void)checked::mul(checked::mul(top, p.h0), checked::mul(2, p.d));
}

std::vector<std::string> parameter_warnings(const IdentityParams& p) {
  std::vector<std::string> warnings;
  if (p.n <= checked::mul(p.d, checked::mul(p.h0, p.h0))) {
    warnings.push_back("n <= d*h0^2: parameters are far from the n >> d >> h regime");
  }
  return warnings;
}

PowerProduct IdentityWords::w() const {
  PowerProduct result = lhs;
  result.append(rhs.inverse());
  return result;
}

IdentityWords build_identity_words(const IdentityParams& p) {
  validate(p);
  const auto xdyd = block(p.d);
  const auto x = x_letter();
  IdentityWords words{p, PowerProduct(xy_variables()), PowerProduct(xy_variables()), parameter_warnings(p)};
  for (std::int64_t k = 1; k <= p.h0; ++k) {
    words.lhs.append(xdyd, checked::add(p.n, k * k));
    words.lhs.append(x, 1);
  }
  words.rhs.append(x, 1);
  words.rhs.append(xdyd, checked::sub(p.n, correction(p.h0, p.mode)));
  for (std::int64_t k = 2 * p.h0 - 1; k >= p.h0 + 1; --k) {
    words.rhs.append(x, 1);
    words.rhs.append(xdyd, checked::add(p.n, k * k));
  }
  return words;
}

BalanceReport verify_balance(const IdentityParams& p) {
  const auto words = build_identity_words(p);
  const auto lhs = words.lhs.exponent_vector();
  const auto rhs = words.rhs.exponent_vector();
  BalanceReport report;
  report.params = p;
  report.sigma_x_lhs = lhs[0];
  report.sigma_y_lhs = lhs[1];
  report.sigma_x_rhs = rhs[0];
  report.sigma_y_rhs = rhs[1];
  report.discrepancy = {checked::sub(lhs[0], rhs[0]), checked::sub(lhs[1], rhs[1])};
  report.balanced = report.discrepancy[0] == 0 && report.discrepancy[1] == 0;
  return report;
}

Identity make_identity(Word lhs, Word rhs, std::optional<IdentityParams> params) {
  if (!(lhs.alphabet() == rhs.alphabet())) {
    throw Error(ErrorCode::alphabet_mismatch, "identity sides use different variable alphabets");
  }
  if (lhs.alphabet().kind() != Alphabet::Kind::variables) {
    throw Error(ErrorCode::invalid_argument, "identity sides must be words over variables");
  }
  if (lhs.empty() || rhs.empty()) {
    throw Error(ErrorCode::invalid_argument, "identity sides must be nonempty");
  }
  return Identity{std::move(lhs), std::move(rhs), params};
}

Alphabet maltsev_variables(int k) {
  std::vector<std::string> names{"x", "y"};
  for (int i = 1; i <= k; ++i) {
    names.push_back("u" + std::to_string(i));
  }
  return Alphabet::variables(std::move(names));
}

MaltsevPair maltsev_pair(int k) {
  if (k < 0 || k > 24) {
    throw Error(ErrorCode::invalid_argument, "Mal'tsev depth must be in [0, 24]");
  }
  const auto vars = maltsev_variables(k);
  Word X = Word::generator(vars, 0);
  Word Y = Word::generator(vars, 1);
  for (int i = 1; i <= k; ++i) {
    const auto u = Word::generator(vars, static_cast<std::size_t>(i + 1));
    Word next_x = X * u * Y;
    Word next_y = Y * u * X;
    X = std::move(next_x);
    Y = std::move(next_y);
  }
  return {std::move(X), std::move(Y)};
}

Identity maltsev_identity(int k) {
  auto pair = maltsev_pair(k);
  return make_identity(std::move(pair.X), std::move(pair.Y));
}

Identity power_commutation_pair(std::int64_t k) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument, "power commutation identity needs k >= 1");
  }
  const auto vars = xy_variables();
  const auto x = Word::generator(vars, 0);
  const auto y = Word::generator(vars, 1);
  return make_identity(power(x, k) * power(y, k), power(y, k) * power(x, k));
}

Identity identity_from_params(const IdentityParams& params, std::size_t limit) {
  const auto words = build_identity_words(params);
  return make_identity(words.lhs_word(limit), words.rhs_word(limit), params);
}

}  // namespace forge
