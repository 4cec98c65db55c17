#include "forge/power_product.hpp"

#include "forge/checked.hpp"
#include "forge/error.hpp"

namespace forge {

void PowerProduct::append(Word base, std::int64_t exponent) {
  if (!(base.alphabet() == alphabet_)) {
    throw Error(ErrorCode::alphabet_mismatch, "factor alphabet differs from product alphabet");
  }
  factors_.push_back(Factor{std::move(base), exponent});
}

void PowerProduct::append(const PowerProduct& other) {
  for (const auto& f : other.factors_) {
    append(f.base, f.exponent);
  }
}

std::int64_t PowerProduct::raw_length() const {
  std::int64_t total = 0;
  for (const auto& f : factors_) {
    const auto magnitude = f.exponent < 0 ? checked::sub(0, f.exponent) : f.exponent;
    total = checked::add(total, checked::mul(static_cast<std::int64_t>(f.base.size()), magnitude));
  }
  return total;
}

std::vector<std::int64_t> PowerProduct::exponent_vector() const {
  std::vector<std::int64_t> total(alphabet_.size(), 0);
  for (const auto& f : factors_) {
    const auto stats = abelian_stats(f.base);
    for (std::size_t i = 0; i < total.size(); ++i) {
      total[i] = checked::add(total[i], checked::mul(stats.exponents[i], f.exponent));
    }
  }
  return total;
}

Word PowerProduct::reduce(std::size_t limit) const {
  WordBuilder builder(alphabet_, limit);
  for (const auto& f : factors_) {
    builder.append_power(f.base, f.exponent);
  }
  return std::move(builder).finish();
}

PowerProduct PowerProduct::inverse() const {
  PowerProduct result(alphabet_);
  result.factors_.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    result.factors_.push_back(Factor{it->base, checked::sub(0, it->exponent)});
  }
  return result;
}

PowerProduct PowerProduct::substitute(const Bindings& bindings, std::size_t limit) const {
  if (bindings.empty()) {
    throw Error(ErrorCode::unbound_variable, "no bindings supplied");
  }
  PowerProduct result(bindings.begin()->second.alphabet());
  for (const auto& f : factors_) {
    result.append(forge::substitute(f.base, bindings, limit), f.exponent);
  }
  return result;
}

}  // namespace forge
