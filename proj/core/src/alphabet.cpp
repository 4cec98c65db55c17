#include "forge/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "forge/error.hpp"

namespace forge {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool valid_variable_name(std::string_view name) {
  if (name == "x" || name == "y") {
    return true;
  }
  return name.size() > 1 && name.front() == 'u' && all_digits(name.substr(1));
}

}  // namespace

Alphabet Alphabet::generators(std::size_t m) {
  if (m == 0) {
    throw Error(ErrorCode::invalid_argument, "generator alphabet needs at least one symbol");
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    names.push_back("a" + std::to_string(i));
  }
  return Alphabet(std::make_shared<const Impl>(Impl{Kind::generators, std::move(names)}));
}

Alphabet Alphabet::variables(std::vector<std::string> names) {
  if (names.empty()) {
    throw Error(ErrorCode::invalid_argument, "variable alphabet needs at least one symbol");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!valid_variable_name(name)) {
      throw Error(ErrorCode::invalid_argument, "invalid variable name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::duplicate_label, "duplicate variable '" + name + "'");
    }
  }
  return Alphabet(std::make_shared<const Impl>(Impl{Kind::variables, std::move(names)}));
}

std::optional<std::size_t> Alphabet::find(std::string_view symbol) const {
  const auto& names = impl_->names;
  if (impl_->kind == Kind::generators) {
    // a<k> maps straight to index k - 1; avoids a linear scan for large m.
    if (symbol.size() < 2 || symbol.front() != 'a' || !all_digits(symbol.substr(1)) ||
        symbol[1] == '0' || symbol.size() > 12) {
      return std::nullopt;
    }
    const auto k = std::stoull(std::string(symbol.substr(1)));
    if (k == 0 || k > names.size()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(k - 1);
  }
  const auto it = std::find(names.begin(), names.end(), symbol);
  if (it == names.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names.begin());
}

bool operator==(const Alphabet& lhs, const Alphabet& rhs) noexcept {
  if (lhs.impl_ == rhs.impl_) {
    return true;
  }
  return lhs.impl_->kind == rhs.impl_->kind && lhs.impl_->names == rhs.impl_->names;
}

Alphabet xy_variables() {
  static const Alphabet alphabet = Alphabet::variables({"x", "y"});
  return alphabet;
}

}  // namespace forge
