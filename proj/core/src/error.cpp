#include "forge/error.hpp"

namespace forge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::unknown_symbol: return "unknown_symbol";
    case ErrorCode::malformed_exponent: return "malformed_exponent";
    case ErrorCode::alphabet_mismatch: return "alphabet_mismatch";
    case ErrorCode::unbound_variable: return "unbound_variable";
    case ErrorCode::expansion_limit: return "expansion_limit";
    case ErrorCode::arithmetic_overflow: return "arithmetic_overflow";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_params: return "invalid_params";
    case ErrorCode::empty_word: return "empty_word";
    case ErrorCode::commuting_pair: return "commuting_pair";
    case ErrorCode::oracle_rank_unsupported: return "oracle_rank_unsupported";
    case ErrorCode::not_rank_one: return "not_rank_one";
    case ErrorCode::regularity_gate: return "regularity_gate";
    case ErrorCode::zero_exponent: return "zero_exponent";
    case ErrorCode::unknown_format: return "unknown_format";
    case ErrorCode::ragged_table: return "ragged_table";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::duplicate_label: return "duplicate_label";
    case ErrorCode::not_associative: return "not_associative";
    case ErrorCode::not_cancellative: return "not_cancellative";
    case ErrorCode::not_group: return "not_group";
    case ErrorCode::too_many_variables: return "too_many_variables";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace forge
