#pragma once

#include <string>
#include <string_view>

#include "forge/free_group.hpp"
#include "forge/identity.hpp"
#include "forge/relator.hpp"
#include "forge/semigroup.hpp"

namespace forge {

// {"lhs", "rhs", "variables", "params": {h0, d, n} | null, "mode": ... | null}
std::string identity_to_json(const Identity& identity);
Identity identity_from_json(std::string_view json);

std::string to_json(const AbelianStats& stats, const Alphabet& alphabet);
std::string to_json(const BalanceReport& report);
std::string to_json(const ProbeReport& report);
std::string to_json(const PeriodSet& set, const PeriodVerdict& verdict);
std::string to_json(const PairClassData& data);
std::string to_json(const PairRelator& result);
std::string to_json(const StructureReport& report, const FiniteMagma& magma);
std::string to_json(const IdentityCheck& check, const Identity& identity, const FiniteMagma& magma);
std::string to_json(const MaltsevReport& report, const FiniteMagma& magma);
std::string to_json(const FractionGroup& group);

}  // namespace forge
