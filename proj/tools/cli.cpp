#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forge/error.hpp"
#include "forge/free_group.hpp"
#include "forge/identity.hpp"
#include "forge/magma.hpp"
#include "forge/relator.hpp"
#include "forge/semigroup.hpp"
#include "forge/serialize.hpp"
#include "forge/word.hpp"

namespace forge::cli {

namespace {

using json = nlohmann::ordered_json;

struct Verb {
  const char* group;
  const char* name;
  const char* help;
  std::vector<const char*> positionals;
  std::vector<const char*> flags;
};

// Flags every verb accepts.
const std::vector<const char*> kCommon{"--format"};
const std::vector<const char*> kParams{"--h0", "--d", "--n", "--mode"};

std::vector<const char*> with(std::vector<const char*> a, const std::vector<const char*>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table{
      {"word", "reduce", "Freely reduce a word", {"word"}, {"--m"}},
      {"word", "invert", "Invert a word", {"word"}, {"--m"}},
      {"word", "cyclic", "Cyclic core and conjugator", {"word"}, {"--m"}},
      {"word", "stats", "Exponent sums and positive/negative letter counts", {"word"}, {"--m"}},
      {"word", "regular", "Positive/regular predicates (exit 1 if not regular)", {"word"}, {"--m"}},
      {"identity", "build", "Build w_L, w_R and w", {}, kParams},
      {"identity", "verify", "Exponent balance of w_L vs w_R (exit 1 if unbalanced)", {}, kParams},
      {"identity", "maltsev", "Mal'tsev words X_k, Y_k", {}, {"--depth"}},
      {"identity", "check", "Randomized balance sweep (exit 1 on any imbalance)", {},
       {"--mode", "--seed", "--trials"}},
      {"freegroup", "root", "Primitive root of the cyclic core", {"word"}, {"--m"}},
      {"freegroup", "conj", "Minimal conjugating word (exit 1 if not conjugate)", {"u", "v"}, {"--m"}},
      {"freegroup", "simple", "Simple in rank 0 (exit 1 if not)", {"word"}, {"--m"}},
      {"freegroup", "periods", "Rank-1 periods and their verification", {}, {"--m"}},
      {"freegroup", "probe", "Free-subgroup and regularity probe", {}, {"--v1", "--v2", "--depth", "--jobs"}},
      {"relator", "build", "Relator from A, f, T", {}, with(kParams, {"--A", "--f", "--T", "--m"})},
      {"relator", "from-pair", "Classify a pair and emit its relator", {},
       with(kParams, {"--X", "--Y", "--gate", "--m"})},
      {"relator", "search", "Enumerate pair classes for a rank-1 period", {},
       with(kParams, {"--A", "--max-len", "--min-f", "--jobs", "--m"})},
      {"relator", "assemble", "Search pairs and assemble the rank-1 presentation", {},
       with(kParams, {"--A", "--max-len", "--gate", "--jobs", "--m"})},
      {"relator", "export", "Re-export a presentation file", {}, {"--input"}},
      {"semigroup", "check", "Associativity, cancellativity, Ore conditions", {"magma"}, {}},
      {"semigroup", "identity", "Does an identity hold? (exit 1 if not)", {"magma"},
       {"--lhs", "--rhs", "--identity", "--jobs"}},
      {"semigroup", "nilpotency", "Nilpotency class of a group table", {"magma"}, {}},
      {"semigroup", "maltsev", "Mal'tsev identity vs nilpotency class (exit 1 if inconsistent)", {"magma"},
       {"--depth", "--jobs"}},
      {"semigroup", "fractions", "Group of fractions of a finite cancellative semigroup", {"magma"}, {}},
  };
  return table;
}

void add_flag(CLI::App* sub, const std::string& flag, Options& o) {
  if (flag == "--h0") sub->add_option("--h0", o.h0, "h0 = h/2 (>= 2)");
  else if (flag == "--d") sub->add_option("--d", o.d, "block exponent d (>= 1)");
  else if (flag == "--n") sub->add_option("--n", o.n, "offset n (default: smallest valid)");
  else if (flag == "--mode") sub->add_option("--mode", o.mode, "balanced|literal")->check(CLI::IsMember({"balanced", "literal"}));
  else if (flag == "--format") sub->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  else if (flag == "--gate") sub->add_option("--gate", o.gate, "strict|demo")->check(CLI::IsMember({"strict", "demo"}));
  else if (flag == "--max-len") sub->add_option("--max-len", o.max_len, "maximum word length");
  else if (flag == "--depth") sub->add_option("--depth", o.depth, "depth / word length bound");
  else if (flag == "--seed") sub->add_option("--seed", o.seed, "random seed");
  else if (flag == "--jobs") sub->add_option("--jobs", o.jobs, "worker threads");
  else if (flag == "--trials") sub->add_option("--trials", o.trials, "number of random trials");
  else if (flag == "--m") sub->add_option("--m", o.m, "number of generators");
  else if (flag == "--min-f") sub->add_option("--min-f", o.min_f, "minimum |f|");
  else if (flag == "--A") sub->add_option("--A", o.A, "period word A");
  else if (flag == "--f") sub->add_option("--f", o.f, "exponent f");
  else if (flag == "--T") sub->add_option("--T", o.T, "word T");
  else if (flag == "--X") sub->add_option("--X", o.X, "word X");
  else if (flag == "--Y") sub->add_option("--Y", o.Y, "word Y");
  else if (flag == "--v1") sub->add_option("--v1", o.v1, "first subgroup generator");
  else if (flag == "--v2") sub->add_option("--v2", o.v2, "second subgroup generator");
  else if (flag == "--lhs") sub->add_option("--lhs", o.lhs, "identity left side");
  else if (flag == "--rhs") sub->add_option("--rhs", o.rhs, "identity right side");
  else if (flag == "--identity") sub->add_option("--identity", o.identity, "identity JSON file");
  else if (flag == "--input") sub->add_option("--input", o.input, "input file")->required();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------

struct Context {
  const Command& cmd;
  const Options& o;
  Outcome result;
  bool as_json() const { return o.format == "json"; }

  void emit(const std::string& text) { result.out += text + "\n"; }
  void warn(const std::string& text) { result.err += "warning: " + text + "\n"; }
  void fail_property() { result.exit_code = kExitPropertyFails; }
};

Alphabet alphabet_for(const Options& o, const std::vector<std::string>& texts) {
  std::string joined;
  for (const auto& t : texts) {
    joined += t + " ";
  }
  const auto inferred = infer_alphabet(joined);
  if (!o.m) {
    return inferred;
  }
  if (inferred.kind() != Alphabet::Kind::generators || static_cast<std::int64_t>(inferred.size()) > std::max<std::int64_t>(*o.m, 2)) {
    if (inferred.kind() == Alphabet::Kind::generators) {
      throw Error(ErrorCode::unknown_symbol, "word uses generators beyond --m " + std::to_string(*o.m));
    }
    return inferred;
  }
  if (*o.m < 1) {
    throw Error(ErrorCode::invalid_argument, "--m must be >= 1");
  }
  return Alphabet::generators(static_cast<std::size_t>(*o.m));
}

IdentityParams params_from(const Options& o) {
  IdentityParams p;
  p.h0 = o.h0.value_or(2);
  p.d = o.d.value_or(1);
  p.mode = parse_correction_mode(o.mode);
  p.n = o.n ? *o.n : minimal_valid_n(p.h0 < 2 ? 2 : p.h0, p.mode);
  validate(p);
  return p;
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) {
    throw UsageError{std::string("missing required flag ") + flag};
  }
  return *v;
}

// --- word -------------------------------------------------------------------

void word_cmd(Context& c) {
  const auto& text = c.cmd.args.at(0);
  const auto alphabet = alphabet_for(c.o, {text});
  const auto w = parse_word(text, alphabet);
  const auto& verb = c.cmd.path;
  if (verb == "word.reduce") {
    c.emit(c.as_json() ? json{{"word", to_string(w)}, {"length", w.size()}}.dump() : to_string(w));
  } else if (verb == "word.invert") {
    const auto inv = invert(w);
    c.emit(c.as_json() ? json{{"word", to_string(inv)}}.dump() : to_string(inv));
  } else if (verb == "word.cyclic") {
    const auto cyc = cyclic_reduce(w);
    if (c.as_json()) {
      c.emit(json{{"core", to_string(cyc.core)}, {"conjugator", to_string(cyc.conjugator)}}.dump());
    } else {
      c.emit("core: " + to_string(cyc.core));
      c.emit("conjugator: " + to_string(cyc.conjugator));
    }
  } else if (verb == "word.stats") {
    const auto stats = abelian_stats(w);
    if (c.as_json()) {
      c.emit(to_json(stats, alphabet));
    } else {
      std::string vec;
      for (std::size_t i = 0; i < stats.exponents.size(); ++i) {
        vec += (i ? ", " : "") + alphabet.name(i) + ": " + std::to_string(stats.exponents[i]);
      }
      c.emit("exponents: " + vec);
      c.emit("positive_sum: " + std::to_string(stats.positive_sum));
      c.emit("negative_sum: " + std::to_string(stats.negative_sum));
    }
  } else if (verb == "word.regular") {
    const bool reg = is_regular(w);
    const bool pos = is_positive(w);
    if (c.as_json()) {
      c.emit(json{{"word", to_string(w)}, {"positive", pos}, {"regular", reg}}.dump());
    } else {
      c.emit(std::string("positive: ") + (pos ? "true" : "false"));
      c.emit(std::string("regular: ") + (reg ? "true" : "false"));
    }
    if (!reg) {
      c.fail_property();
    }
  }
}

// --- identity ---------------------------------------------------------------

void identity_cmd(Context& c) {
  const auto& verb = c.cmd.path;
  if (verb == "identity.build") {
    const auto p = params_from(c.o);
    const auto words = build_identity_words(p);
    for (const auto& w : words.warnings) {
      c.warn(w);
    }
    const auto lhs = words.lhs_word();
    const auto rhs = words.rhs_word();
    if (c.as_json()) {
      c.emit(identity_to_json(make_identity(lhs, rhs, p)));
    } else {
      c.emit("w_L = " + to_string(lhs));
      c.emit("w_R = " + to_string(rhs));
      c.emit("w = " + to_string(words.w_word()));
    }
  } else if (verb == "identity.verify") {
    const auto r = verify_balance(params_from(c.o));
    if (c.as_json()) {
      c.emit(to_json(r));
    } else {
      c.emit("mode: " + std::string(to_string(r.params.mode)) + " (h0=" + std::to_string(r.params.h0) +
             ", d=" + std::to_string(r.params.d) + ", n=" + std::to_string(r.params.n) + ")");
      c.emit("sigma_x: w_L " + std::to_string(r.sigma_x_lhs) + ", w_R " + std::to_string(r.sigma_x_rhs));
      c.emit("sigma_y: w_L " + std::to_string(r.sigma_y_lhs) + ", w_R " + std::to_string(r.sigma_y_rhs));
      c.emit(std::string("balanced: ") + (r.balanced ? "true" : "false"));
      c.emit("discrepancy: x " + std::to_string(r.discrepancy[0]) + ", y " + std::to_string(r.discrepancy[1]));
    }
    if (!r.balanced) {
      c.fail_property();
    }
  } else if (verb == "identity.maltsev") {
    const auto pair = maltsev_pair(c.o.depth.value_or(1));
    if (c.as_json()) {
      c.emit(identity_to_json(make_identity(pair.X, pair.Y)));
    } else {
      c.emit("X = " + to_string(pair.X));
      c.emit("Y = " + to_string(pair.Y));
    }
  } else if (verb == "identity.check") {
    const auto mode = parse_correction_mode(c.o.mode);
    std::mt19937_64 rng(c.o.seed.value_or(1));
    const auto trials = c.o.trials.value_or(200);
    std::uniform_int_distribution<std::int64_t> h0_dist(2, 50), d_dist(1, 10), slack(0, 1000);
    std::int64_t failures = 0;
    json failed = json::array();
    for (std::int64_t t = 0; t < trials; ++t) {
      IdentityParams p;
      p.h0 = h0_dist(rng);
      p.d = d_dist(rng);
      p.mode = mode;
      p.n = minimal_valid_n(p.h0, mode) + slack(rng);
      const auto r = verify_balance(p);
      if (!r.balanced) {
        ++failures;
        if (failed.size() < 5) {
          failed.push_back(json::parse(to_json(r)));
        }
      }
    }
    if (c.as_json()) {
      c.emit(json{{"trials", trials}, {"unbalanced", failures}, {"examples", failed}}.dump());
    } else {
      c.emit("trials: " + std::to_string(trials) + ", unbalanced: " + std::to_string(failures));
    }
    if (failures > 0) {
      c.fail_property();
    }
  }
}

// --- freegroup --------------------------------------------------------------

void freegroup_cmd(Context& c) {
  const auto& verb = c.cmd.path;
  if (verb == "freegroup.root") {
    const auto& text = c.cmd.args.at(0);
    const auto w = parse_word(text, alphabet_for(c.o, {text}));
    const auto r = primitive_root(w);
    c.emit(c.as_json() ? json{{"root", to_string(r.root)}, {"exponent", r.exponent}}.dump()
                       : "root: " + to_string(r.root) + "\nexponent: " + std::to_string(r.exponent));
  } else if (verb == "freegroup.conj") {
    const auto alphabet = alphabet_for(c.o, c.cmd.args);
    const auto u = parse_word(c.cmd.args.at(0), alphabet);
    const auto v = parse_word(c.cmd.args.at(1), alphabet);
    const auto w = conjugacy_witness(u, v);
    if (c.as_json()) {
      c.emit(json{{"conjugate", w.has_value()}, {"witness", w ? json(to_string(w->witness)) : json(nullptr)}}.dump());
    } else {
      c.emit(w ? "witness: " + to_string(w->witness) : std::string("not conjugate"));
    }
    if (!w) {
      c.fail_property();
    }
  } else if (verb == "freegroup.simple") {
    const auto& text = c.cmd.args.at(0);
    const bool simple = is_simple_rank0(parse_word(text, alphabet_for(c.o, {text})));
    c.emit(c.as_json() ? json{{"simple", simple}}.dump() : std::string(simple ? "true" : "false"));
    if (!simple) {
      c.fail_property();
    }
  } else if (verb == "freegroup.periods") {
    const auto alphabet = Alphabet::generators(static_cast<std::size_t>(std::max<std::int64_t>(c.o.m.value_or(2), 1)));
    const auto set = periods_rank1(alphabet);
    const auto verdict = verify_periods(set, alphabet);
    if (c.as_json()) {
      c.emit(to_json(set, verdict));
    } else {
      std::string list;
      for (std::size_t i = 0; i < set.periods.size(); ++i) {
        list += (i ? ", " : "") + to_string(set.periods[i]);
      }
      c.emit("periods of rank 1: {" + list + "}");
      c.emit(verdict.ok ? std::string("verified: primitivity, independence, maximality") : "violation: " + verdict.violation);
    }
    if (!verdict.ok) {
      c.fail_property();
    }
  } else if (verb == "freegroup.probe") {
    const std::string v1_text = c.o.v1.value_or("a1 a2^-1 a1");
    const std::string v2_text = c.o.v2.value_or("a2 a1^-1 a2");
    const auto alphabet = alphabet_for(c.o, {v1_text, v2_text});
    const auto r = free_subgroup_probe(parse_word(v1_text, alphabet), parse_word(v2_text, alphabet),
                                       c.o.depth.value_or(6), c.o.jobs.value_or(1));
    if (c.as_json()) {
      c.emit(to_json(r));
    } else {
      c.emit("words checked: " + std::to_string(r.words_checked) + " (|U| <= " + std::to_string(r.depth) + ")");
      c.emit(std::string("free up to depth: ") + (r.free_up_to_depth ? "true" : "false"));
      c.emit(std::string("all images non-regular: ") + (r.all_images_nonregular ? "true" : "false"));
      if (r.counterexample) {
        c.emit("counterexample: " + to_string(*r.counterexample) + " -> " + to_string(*r.counterexample_image));
      }
    }
    if (!r.free_up_to_depth || !r.all_images_nonregular) {
      c.fail_property();
    }
  }
}

// --- relator ----------------------------------------------------------------

void relator_cmd(Context& c) {
  const auto& verb = c.cmd.path;
  const FreeGroupOracle oracle;
  if (verb == "relator.export") {
    const auto text = read_file(require(c.o.input, "--input"));
    const auto trimmed = text.find_first_not_of(" \t\r\n");
    const auto in_format = trimmed != std::string::npos && text[trimmed] == '{' ? PresentationFormat::json
                                                                                : PresentationFormat::text;
    const auto pr = parse_presentation(text, in_format);
    c.emit(export_presentation(pr, parse_presentation_format(c.o.format)));
    return;
  }
  const auto p = params_from(c.o);
  for (const auto& w : parameter_warnings(p)) {
    c.warn(w);
  }
  if (verb == "relator.build") {
    const auto& a_text = require(c.o.A, "--A");
    const auto& t_text = require(c.o.T, "--T");
    const auto alphabet = alphabet_for(c.o, {a_text, t_text});
    const auto r = build_relator(parse_word(a_text, alphabet), c.o.f.value_or(1), parse_word(t_text, alphabet), p);
    for (const auto& w : r.warnings) {
      c.warn(w);
    }
    c.emit(c.as_json() ? json{{"relator", to_string(r.reduced)},
                              {"t_sections", r.count(SectionKind::t)},
                              {"t_inverse_sections", r.count(SectionKind::t_inverse)},
                              {"warnings", r.warnings}}
                             .dump()
                       : to_string(r.reduced));
  } else if (verb == "relator.from-pair") {
    const auto& x_text = require(c.o.X, "--X");
    const auto& y_text = require(c.o.Y, "--Y");
    const auto alphabet = alphabet_for(c.o, {x_text, y_text});
    const auto gate = parse_gate(c.o.gate.value_or("demo"));
    const auto r = relator_from_pair(parse_word(x_text, alphabet), parse_word(y_text, alphabet), p, oracle, gate);
    for (const auto& w : r.relator.warnings) {
      c.warn(w);
    }
    if (c.as_json()) {
      c.emit(to_json(r));
    } else {
      const auto& d = r.data;
      c.emit("B = " + to_string(d.B) + ", f_B = " + std::to_string(d.f_B));
      c.emit("C = " + to_string(d.C) + ", f_C = " + std::to_string(d.f_C) + ", Z = " + to_string(d.Z));
      c.emit("A = " + to_string(d.A) + ", f = " + std::to_string(d.f));
      c.emit("W = " + to_string(d.W) + ", T = " + to_string(d.T));
      c.emit("gate: " + std::string(to_string(r.gate)));
      c.emit("relator: " + to_string(r.relator.reduced));
    }
  } else if (verb == "relator.search" || verb == "relator.assemble") {
    const std::string a_text = c.o.A.value_or("a1");
    const auto alphabet = alphabet_for(c.o, {a_text});
    SearchOptions opts;
    opts.jobs = c.o.jobs.value_or(1);
    if (c.o.min_f) {
      opts.min_abs_f = *c.o.min_f;
    }
    const auto max_len = static_cast<std::size_t>(std::max(c.o.max_len.value_or(2), 0));
    const auto pairs = search_pairs(p, max_len, parse_word(a_text, alphabet), opts);
    if (verb == "relator.search") {
      if (c.as_json()) {
        json list = json::array();
        for (const auto& [x, y] : pairs) {
          list.push_back({{"X", to_string(x)}, {"Y", to_string(y)}});
        }
        c.emit(json{{"pairs", list}}.dump());
      } else {
        for (const auto& [x, y] : pairs) {
          c.emit("(" + to_string(x) + ", " + to_string(y) + ")");
        }
      }
      return;
    }
    const auto pr = assemble_presentation(pairs, p, oracle, parse_gate(c.o.gate.value_or("strict")), alphabet);
    c.emit(export_presentation(pr, parse_presentation_format(c.o.format)));
  }
}

// --- semigroup --------------------------------------------------------------

std::string check_text(const char* name, const PropertyCheck& pc, const FiniteMagma& m) {
  std::string s = std::string(name) + ": " + (pc.holds ? "true" : "false");
  if (!pc.holds) {
    s += " (";
    for (std::size_t i = 0; i < pc.witness.size(); ++i) {
      s += (i ? ", " : "") + m.label(pc.witness[i]);
    }
    s += ")";
  }
  return s;
}

void semigroup_cmd(Context& c) {
  const auto& verb = c.cmd.path;
  const auto m = resolve_magma(c.cmd.args.at(0));
  if (verb == "semigroup.check") {
    const auto r = check_structure(m);
    if (c.as_json()) {
      c.emit(to_json(r, m));
    } else {
      c.emit("order: " + std::to_string(m.order()));
      c.emit(check_text("associative", r.associative, m));
      c.emit(check_text("left_cancellative", r.left_cancellative, m));
      c.emit(check_text("right_cancellative", r.right_cancellative, m));
      c.emit(check_text("left_ore", r.left_ore, m));
      c.emit(check_text("right_ore", r.right_ore, m));
      c.emit(std::string("group: ") + (r.is_group ? "true" : "false"));
    }
  } else if (verb == "semigroup.identity") {
    Identity id = [&] {
      if (c.o.identity) {
        return identity_from_json(read_file(*c.o.identity));
      }
      const auto& l = require(c.o.lhs, "--lhs");
      const auto& r = require(c.o.rhs, "--rhs");
      const auto vars = infer_alphabet(l + " " + r);
      if (vars.kind() != Alphabet::Kind::variables) {
        throw Error(ErrorCode::invalid_argument, "identity sides must use variables x, y, u1, ...");
      }
      return make_identity(parse_word(l, vars), parse_word(r, vars));
    }();
    const auto check = holds_identity(m, id, c.o.jobs.value_or(1));
    if (c.as_json()) {
      c.emit(to_json(check, id, m));
    } else {
      c.emit(std::string("holds: ") + (check.holds ? "true" : "false"));
      if (!check.holds) {
        std::string s;
        for (std::size_t i = 0; i < check.counterexample.size(); ++i) {
          s += (i ? ", " : "") + id.variables().name(i) + "=" + m.label(check.counterexample[i]);
        }
        c.emit("counterexample: " + s);
      }
    }
    if (!check.holds) {
      c.fail_property();
    }
  } else if (verb == "semigroup.nilpotency") {
    const auto cls = nilpotency_class(m);
    c.emit(c.as_json() ? json{{"nilpotency_class", cls ? json(*cls) : json(nullptr)}}.dump()
                       : "nilpotency class: " + (cls ? std::to_string(*cls) : std::string("none (not nilpotent)")));
  } else if (verb == "semigroup.maltsev") {
    const auto r = maltsev_crosscheck(m, c.o.depth.value_or(1), c.o.jobs.value_or(1));
    if (c.as_json()) {
      c.emit(to_json(r, m));
    } else {
      c.emit("X_" + std::to_string(r.k) + " == Y_" + std::to_string(r.k) + " holds: " +
             (r.identity_holds ? "true" : "false"));
      c.emit("nilpotency class: " + (r.nilpotency ? std::to_string(*r.nilpotency) : std::string("none")));
      c.emit(std::string("consistent: ") + (r.consistent ? "true" : "false"));
    }
    if (!r.consistent) {
      c.fail_property();
    }
  } else if (verb == "semigroup.fractions") {
    const auto g = fraction_group_of_finite(m);
    if (c.as_json()) {
      c.emit(to_json(g));
    } else {
      c.emit("F(S) = S, order " + std::to_string(g.group.order()) + ", identity " + g.group.label(g.identity));
      std::string inv;
      for (std::size_t i = 0; i < g.inverse.size(); ++i) {
        inv += (i ? ", " : "") + g.group.label(i) + "^-1=" + g.group.label(g.inverse[i]);
      }
      c.emit("inverses: " + inv);
    }
  }
}

}  // namespace

Command parse_args(const std::vector<std::string>& argv) {
  Command cmd;
  CLI::App app{"forge: identity words, rank-1 relators and finite-structure checks", "forge"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, std::string>> leaves;
  std::map<CLI::App*, std::vector<std::string>> positional_store;
  for (const auto& v : verbs()) {
    auto*& group = groups[v.group];
    if (group == nullptr) {
      group = app.add_subcommand(v.group, std::string(v.group) + " commands");
      group->require_subcommand(1);
    }
    auto* sub = group->add_subcommand(v.name, v.help);
    for (const auto* flag : with(v.flags, kCommon)) {
      add_flag(sub, flag, cmd.options);
    }
    if (!v.positionals.empty()) {
      auto& store = positional_store[sub];
      sub->add_option("args", store, "positional arguments")
          ->expected(static_cast<int>(v.positionals.size()))
          ->required();
    }
    leaves.emplace_back(sub, std::string(v.group) + "." + v.name);
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* leaf = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    if (!leaf->get_subcommands().empty()) {
      leaf = leaf->get_subcommands().front();
    }
    throw UsageError{leaf->help(), true};
  } catch (const CLI::ParseError& e) {
    throw UsageError{std::string(e.what()) + "\n" + app.help()};
  }
  for (const auto& [sub, path] : leaves) {
    if (sub->parsed()) {
      cmd.path = path;
      cmd.args = positional_store[sub];
    }
  }
  if (cmd.path.empty()) {
    throw UsageError{app.help()};
  }
  return cmd;
}

Outcome execute(const Command& command) {
  Context c{command, command.options, {}};
  const auto group = command.path.substr(0, command.path.find('.'));
  if (group == "word") {
    word_cmd(c);
  } else if (group == "identity") {
    identity_cmd(c);
  } else if (group == "freegroup") {
    freegroup_cmd(c);
  } else if (group == "relator") {
    relator_cmd(c);
  } else if (group == "semigroup") {
    semigroup_cmd(c);
  } else {
    throw UsageError{"unknown command " + command.path};
  }
  return std::move(c.result);
}

Outcome run(const std::vector<std::string>& argv) {
  try {
    return execute(parse_args(argv));
  } catch (const UsageError& e) {
    if (e.help_requested) {
      return {kExitOk, e.message, ""};
    }
    return {kExitInputError, "", e.message + "\n"};
  } catch (const Error& e) {
    return {kExitInputError, "", "error [" + std::string(to_string(e.code())) + "]: " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInputError, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace forge::cli
