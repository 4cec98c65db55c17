#include "forge/serialize.hpp"

#include <json.hpp>

#include "forge/error.hpp"

namespace forge {

namespace {

using json = nlohmann::ordered_json;

json params_json(const IdentityParams& p) {
  return {{"h0", p.h0}, {"d", p.d}, {"n", p.n}, {"mode", std::string(to_string(p.mode))}};
}

json check_json(const PropertyCheck& c, const FiniteMagma& m) {
  json j{{"holds", c.holds}};
  if (!c.holds) {
    json labels = json::array();
    for (const auto i : c.witness) {
      labels.push_back(m.label(i));
    }
    j["counterexample"] = labels;
  }
  return j;
}

json assignment_json(const std::vector<std::size_t>& assign, const Alphabet& vars, const FiniteMagma& m) {
  json j = json::object();
  for (std::size_t i = 0; i < assign.size(); ++i) {
    j[vars.name(i)] = m.label(assign[i]);
  }
  return j;
}

}  // namespace

std::string identity_to_json(const Identity& identity) {
  json j;
  j["lhs"] = to_string(identity.lhs);
  j["rhs"] = to_string(identity.rhs);
  j["variables"] = identity.variables().names();
  if (identity.params) {
    j["params"] = {{"h0", identity.params->h0}, {"d", identity.params->d}, {"n", identity.params->n}};
    j["mode"] = std::string(to_string(identity.params->mode));
  } else {
    j["params"] = nullptr;
    j["mode"] = nullptr;
  }
  return j.dump();
}

Identity identity_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto vars = Alphabet::variables(j.at("variables").get<std::vector<std::string>>());
    std::optional<IdentityParams> params;
    if (j.contains("params") && !j.at("params").is_null()) {
      const auto& p = j.at("params");
      IdentityParams ip;
      ip.h0 = p.at("h0").get<std::int64_t>();
      ip.d = p.at("d").get<std::int64_t>();
      ip.n = p.at("n").get<std::int64_t>();
      ip.mode = parse_correction_mode(j.at("mode").get<std::string>());
      params = ip;
    }
    return make_identity(parse_word(j.at("lhs").get<std::string>(), vars),
                         parse_word(j.at("rhs").get<std::string>(), vars), params);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("identity JSON: ") + e.what());
  }
}

std::string to_json(const AbelianStats& stats, const Alphabet& alphabet) {
  json vec = json::object();
  for (std::size_t i = 0; i < stats.exponents.size(); ++i) {
    vec[alphabet.name(i)] = stats.exponents[i];
  }
  return json{{"exponents", vec}, {"positive_sum", stats.positive_sum}, {"negative_sum", stats.negative_sum}}
      .dump();
}

std::string to_json(const BalanceReport& r) {
  return json{{"params", params_json(r.params)},
              {"sigma_x_lhs", r.sigma_x_lhs},
              {"sigma_x_rhs", r.sigma_x_rhs},
              {"sigma_y_lhs", r.sigma_y_lhs},
              {"sigma_y_rhs", r.sigma_y_rhs},
              {"balanced", r.balanced},
              {"discrepancy", r.discrepancy}}
      .dump();
}

std::string to_json(const ProbeReport& r) {
  json j{{"depth", r.depth},
         {"words_checked", r.words_checked},
         {"free_up_to_depth", r.free_up_to_depth},
         {"all_images_nonregular", r.all_images_nonregular},
         {"growth_ok", r.growth_ok},
         {"trivial_images", r.trivial_images},
         {"regular_images", r.regular_images}};
  j["counterexample"] = r.counterexample ? json(to_string(*r.counterexample)) : json(nullptr);
  j["counterexample_image"] = r.counterexample_image ? json(to_string(*r.counterexample_image)) : json(nullptr);
  return j.dump();
}

std::string to_json(const PeriodSet& set, const PeriodVerdict& verdict) {
  json periods = json::array();
  for (const auto& p : set.periods) {
    periods.push_back(to_string(p));
  }
  return json{{"rank", set.rank}, {"periods", periods}, {"verified", verdict.ok}, {"violation", verdict.violation}}
      .dump();
}

std::string to_json(const PairClassData& d) {
  return json{{"X", to_string(d.X)},     {"Y", to_string(d.Y)},     {"Z", to_string(d.Z)},
              {"Ybar", to_string(d.Ybar)}, {"B", to_string(d.B)},     {"f_B", d.f_B},
              {"C", to_string(d.C)},     {"f_C", d.f_C},            {"A", to_string(d.A)},
              {"f", d.f},                {"W", to_string(d.W)},     {"T", to_string(d.T)},
              {"a_is_rank1", d.a_is_rank1}, {"a_is_regular", d.a_is_regular}}
      .dump();
}

std::string to_json(const PairRelator& r) {
  return json{{"class", json::parse(to_json(r.data))},
              {"relator", to_string(r.relator.reduced)},
              {"gate", std::string(to_string(r.gate))},
              {"warnings", r.relator.warnings}}
      .dump();
}

std::string to_json(const StructureReport& r, const FiniteMagma& m) {
  json j{{"order", m.order()},
         {"associative", check_json(r.associative, m)},
         {"left_cancellative", check_json(r.left_cancellative, m)},
         {"right_cancellative", check_json(r.right_cancellative, m)},
         {"cancellative", r.cancellative()},
         {"left_ore", check_json(r.left_ore, m)},
         {"right_ore", check_json(r.right_ore, m)},
         {"is_group", r.is_group}};
  j["identity"] = r.identity ? json(m.label(*r.identity)) : json(nullptr);
  return j.dump();
}

std::string to_json(const IdentityCheck& c, const Identity& identity, const FiniteMagma& m) {
  json j{{"lhs", to_string(identity.lhs)},
         {"rhs", to_string(identity.rhs)},
         {"holds", c.holds},
         {"substitutions", c.substitutions}};
  j["counterexample"] = c.holds ? json(nullptr) : assignment_json(c.counterexample, identity.variables(), m);
  return j.dump();
}

std::string to_json(const MaltsevReport& r, const FiniteMagma& m) {
  json j{{"k", r.k}, {"identity_holds", r.identity_holds}};
  j["nilpotency_class"] = r.nilpotency ? json(*r.nilpotency) : json(nullptr);
  j["class_at_most_k"] = r.class_at_most_k;
  j["consistent"] = r.consistent;
  j["counterexample"] =
      r.identity_holds ? json(nullptr) : assignment_json(r.counterexample, maltsev_variables(r.k), m);
  return j.dump();
}

std::string to_json(const FractionGroup& g) {
  json inverses = json::object();
  for (std::size_t i = 0; i < g.inverse.size(); ++i) {
    inverses[g.group.label(i)] = g.group.label(g.inverse[i]);
  }
  return json{{"group", json::parse(magma_to_json(g.group))},
              {"identity", g.group.label(g.identity)},
              {"inverses", inverses}}
      .dump();
}

}  // namespace forge
