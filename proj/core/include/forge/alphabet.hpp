#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

// A finite set of named symbols. Generator alphabets are {a1, ..., am};
// variable alphabets hold template letters such as x, y, u1, u2.
//
// Copies share the symbol table, so passing an Alphabet by value is cheap.
class Alphabet {
 public:
  enum class Kind { generators, variables };

  // Throws Error(invalid_argument) when m == 0.
  static Alphabet generators(std::size_t m);
  // Throws on an empty list, duplicate names, or names outside the word
  // grammar ("x", "y", "u<digits>").
  static Alphabet variables(std::vector<std::string> names);

  Kind kind() const noexcept { return impl_->kind; }
  std::size_t size() const noexcept { return impl_->names.size(); }
  const std::string& name(std::size_t index) const { return impl_->names.at(index); }
  const std::vector<std::string>& names() const noexcept { return impl_->names; }

  std::optional<std::size_t> find(std::string_view symbol) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) noexcept;

 private:
  struct Impl {
    Kind kind;
    std::vector<std::string> names;
  };
  explicit Alphabet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// {x, y}: the alphabet of the two-variable identity words.
Alphabet xy_variables();

}  // namespace forge
