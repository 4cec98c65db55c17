#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forge {

enum class ErrorCode {
  parse,
  unknown_symbol,
  malformed_exponent,
  alphabet_mismatch,
  unbound_variable,
  expansion_limit,
  arithmetic_overflow,
  invalid_argument,
  invalid_params,
  empty_word,
  commuting_pair,
  oracle_rank_unsupported,
  not_rank_one,
  regularity_gate,
  zero_exponent,
  unknown_format,
  ragged_table,
  index_out_of_range,
  duplicate_label,
  not_associative,
  not_cancellative,
  not_group,
  too_many_variables,
  io,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library surface as this type; the CLI maps
// every one of them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace forge
