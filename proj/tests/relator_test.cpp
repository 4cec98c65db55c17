#include <gtest/gtest.h>

#include <algorithm>

#include <json.hpp>

#include "forge/error.hpp"
#include "forge/relator.hpp"
#include "words.hpp"

namespace forge {
namespace {

using testing::f2;
using testing::g;

const IdentityParams kSmall{2, 1, 5, CorrectionMode::balanced};
const FreeGroupOracle kOracle;

TEST(Oracle, RankZeroOnly) {
  EXPECT_TRUE(kOracle.equal_in_rank(0, g("a1 a2 a2^-1"), g("a1")));
  EXPECT_TRUE(kOracle.conjugate_in_rank(0, g("a1 a2"), g("a2 a1")).has_value());
  EXPECT_FORGE_ERROR(kOracle.equal_in_rank(1, g("a1"), g("a1")), ErrorCode::oracle_rank_unsupported);
  EXPECT_FORGE_ERROR(classify_pair(g("a1 a2"), g("a2^-1"), kSmall, kOracle, 1),
                     ErrorCode::oracle_rank_unsupported);
}

TEST(Gate, Parsing) {
  EXPECT_EQ(parse_gate("strict"), Gate::strict);
  EXPECT_EQ(to_string(Gate::demo), "demo");
  EXPECT_FORGE_ERROR(parse_gate("loose"), ErrorCode::invalid_argument);
}

TEST(EvaluateW, AgreesWithVanishingTest) {
  EXPECT_TRUE(evaluate_w(kSmall, g("a1"), g("a1")).empty());
  EXPECT_TRUE(w_vanishes(kSmall, g("a1"), g("a1")));
  EXPECT_TRUE(w_vanishes(kSmall, g("a1 a2"), g("a2^-1 a1^-1")));
  EXPECT_FALSE(w_vanishes(kSmall, g("a1"), g("a2")));
  EXPECT_FALSE(evaluate_w(kSmall, g("a1"), g("a2")).empty());
  // Literal mode at h0 = 3 is unbalanced, so commuting inputs need not vanish.
  const IdentityParams literal{3, 1, 82, CorrectionMode::literal};
  EXPECT_FALSE(w_vanishes(literal, g("a1"), g("a1")));
  EXPECT_EQ(evaluate_w(literal, g("a1"), g("a1")), g("a1^108"));
}

TEST(Classify, RankOnePair) {
  const auto d = classify_pair(g("a1 a2"), g("a2^-1"), kSmall, kOracle);
  EXPECT_EQ(d.A, g("a1"));
  EXPECT_EQ(d.f, 1);
  EXPECT_TRUE(d.W.empty());
  EXPECT_EQ(d.T, g("a1 a2"));
  EXPECT_EQ(d.B, g("a1 a2"));
  EXPECT_EQ(d.f_B, 1);
  EXPECT_EQ(d.C, g("a2"));
  EXPECT_EQ(d.f_C, -1);
  EXPECT_TRUE(d.Z.empty());
  EXPECT_TRUE(d.a_is_rank1);
  EXPECT_FALSE(d.a_is_regular);
}

TEST(Classify, LongerPeriod) {
  const auto d = classify_pair(g("a1"), g("a2"), kSmall, kOracle);
  EXPECT_EQ(d.A, g("a1 a2"));
  EXPECT_EQ(d.f, 1);
  EXPECT_FALSE(d.a_is_rank1);
  EXPECT_FALSE(d.a_is_regular);
}

TEST(Classify, CommutingPair) {
  EXPECT_FORGE_ERROR(classify_pair(g("a1"), g("a1"), kSmall, kOracle), ErrorCode::commuting_pair);
  EXPECT_FORGE_ERROR(classify_pair(g("a1 a2"), g("a1 a2 a1 a2"), kSmall, kOracle), ErrorCode::commuting_pair);
}

TEST(Classify, GraphicalEqualities) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"a1 a2", "a2^-1"}, {"a2 a1 a2^-1", "a1^-1 a2"}, {"a1^2 a2", "a2^-1 a1^-1"}, {"a2 a1 a1", "a1^-1 a2^-1"}};
  for (const auto& [xs, ys] : pairs) {
    const auto d = classify_pair(g(xs), g(ys), kSmall, kOracle);
    EXPECT_EQ(power(d.B, d.f_B), d.X) << xs;
    EXPECT_EQ(power(d.C, d.f_C), d.Y) << ys;
    EXPECT_EQ(conjugate(d.Y, d.Z), d.Ybar);
    EXPECT_EQ(conjugate(power(d.A, d.f), d.W), power(d.X, 1) * d.Ybar);
    EXPECT_EQ(d.T, conjugate(d.X, invert(d.W)));
    EXPECT_TRUE(is_cyclically_reduced(d.X));
  }
}

TEST(Classify, Idempotent) {
  const auto first = classify_pair(g("a2 a1 a2^-1"), g("a1^-1 a2 a1"), kSmall, kOracle);
  const auto again = classify_pair(first.X, first.Ybar, kSmall, kOracle);
  EXPECT_EQ(again.X, first.X);
  EXPECT_EQ(again.Ybar, first.Ybar);
  EXPECT_EQ(again.A, first.A);
  EXPECT_EQ(again.f, first.f);
  EXPECT_EQ(again.W, first.W);
  EXPECT_EQ(again.T, first.T);
  EXPECT_EQ(again.Z, first.Z);
  EXPECT_EQ(again.Y, first.Y);
  EXPECT_EQ(again.B, first.B);
  EXPECT_EQ(again.C, first.C);
}

TEST(BuildRelator, Examples) {
  auto r = build_relator(g("a1"), 1, g("a2"), kSmall);
  EXPECT_EQ(to_string(r.reduced), "a1^6 a2 a1^9 a2 a1^-14 a2^-1 a1^-1 a2^-1");
  EXPECT_EQ(r.count(SectionKind::t), 2u);
  EXPECT_EQ(r.count(SectionKind::t_inverse), 2u);
  EXPECT_EQ(r.count(SectionKind::a_power), 4u);

  r = build_relator(g("a1"), 2, g("a2"), kSmall);
  EXPECT_EQ(to_string(r.reduced), "a1^12 a2 a1^18 a2 a1^-28 a2^-1 a1^-2 a2^-1");

  EXPECT_FORGE_ERROR(build_relator(g("a1"), 0, g("a2"), kSmall), ErrorCode::zero_exponent);
  EXPECT_FORGE_ERROR(build_relator(g("a1"), 1, g("a2"), IdentityParams{2, 1, 4}), ErrorCode::invalid_params);
}

TEST(BuildRelator, EmptyTWarns) {
  const auto r = build_relator(g("a1"), 1, g("1"), kSmall);
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_TRUE(r.reduced.empty());
}

TEST(BuildRelator, ZeroExponentVectorAndSections) {
  for (std::int64_t h0 = 2; h0 <= 5; ++h0) {
    const IdentityParams p{h0, 1, minimal_valid_n(h0, CorrectionMode::balanced), CorrectionMode::balanced};
    const auto r = build_relator(g("a2^-1"), -3, g("a1 a2^-1 a1"), p);
    EXPECT_EQ(r.count(SectionKind::t), static_cast<std::size_t>(h0));
    EXPECT_EQ(r.count(SectionKind::t_inverse), static_cast<std::size_t>(h0));
    EXPECT_TRUE(abelian_stats(r.reduced).zero());
    const auto raw = r.raw.exponent_vector();
    EXPECT_TRUE(std::all_of(raw.begin(), raw.end(), [](auto e) { return e == 0; }));
  }
}

TEST(RelatorFromPair, Examples) {
  const auto r = relator_from_pair(g("a1 a2"), g("a2^-1"), kSmall, kOracle);
  EXPECT_TRUE(abelian_stats(r.relator.reduced).zero());
  EXPECT_EQ(r.gate, Gate::demo);
  const auto lhs = invert(r.data.W) * evaluate_w(kSmall, r.data.X, r.data.Ybar) * r.data.W;
  EXPECT_EQ(lhs, r.relator.reduced);

  EXPECT_FORGE_ERROR(relator_from_pair(g("a1"), g("a2"), kSmall, kOracle), ErrorCode::not_rank_one);
  EXPECT_FORGE_ERROR(relator_from_pair(g("a1"), g("a1"), kSmall, kOracle), ErrorCode::commuting_pair);
  EXPECT_FORGE_ERROR(relator_from_pair(g("a1 a2"), g("a2^-1"), kSmall, kOracle, Gate::strict),
                     ErrorCode::regularity_gate);
}

TEST(Search, SmallScans) {
  const auto pairs = search_pairs(kSmall, 2, g("a1"));
  const auto hit = std::find_if(pairs.begin(), pairs.end(), [](const WordPair& p) {
    return p.first == g("a1 a2") && p.second == g("a2^-1");
  });
  EXPECT_NE(hit, pairs.end());
  EXPECT_TRUE(search_pairs(kSmall, 1, g("a1")).empty());
  for (const auto& [x, y] : pairs) {
    EXPECT_NO_THROW(relator_from_pair(x, y, kSmall, kOracle)) << to_string(x) << ", " << to_string(y);
  }
}

TEST(Search, LargeFNeedsCommutingForDTwo) {
  const IdentityParams p{2, 2, 9, CorrectionMode::balanced};
  SearchOptions opts;
  opts.unit_f_only = false;
  opts.min_abs_f = 2;
  EXPECT_TRUE(search_pairs(p, 2, g("a1"), opts).empty());
  EXPECT_TRUE(search_pairs(p, 3, g("a1"), opts).empty());
}

TEST(Search, RepresentativesAreInDistinctClasses) {
  const auto pairs = search_pairs(kSmall, 2, g("a1"));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      EXPECT_FALSE(same_pair_class(kSmall, pairs[i], pairs[j]));
    }
  }
}

TEST(Search, JobsDoNotChangeTheResult) {
  SearchOptions one;
  SearchOptions four;
  four.jobs = 4;
  const auto a = search_pairs(kSmall, 3, g("a1"), one);
  const auto b = search_pairs(kSmall, 3, g("a1"), four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(a[i].second, b[i].second);
  }
}

TEST(Search, TargetMustBeALetter) {
  EXPECT_FORGE_ERROR(search_pairs(kSmall, 2, g("a1 a2")), ErrorCode::invalid_argument);
}

TEST(Assemble, Examples) {
  auto pr = assemble_presentation({}, kSmall, kOracle, Gate::strict, f2());
  EXPECT_TRUE(pr.relators.empty());
  EXPECT_EQ(export_presentation(pr, PresentationFormat::text), "< a1, a2 |  >");

  const WordPair pair{g("a1 a2"), g("a2^-1")};
  pr = assemble_presentation({pair}, kSmall, kOracle, Gate::strict);
  EXPECT_TRUE(pr.relators.empty());
  EXPECT_FALSE(pr.notes.empty());

  pr = assemble_presentation({pair, pair}, kSmall, kOracle, Gate::demo);
  EXPECT_EQ(pr.relators.size(), 1u);
  EXPECT_EQ(pr.gate, Gate::demo);
}

TEST(Assemble, DedupeIsOrderIndependent) {
  auto pairs = search_pairs(kSmall, 2, g("a1"));
  const auto a = assemble_presentation(pairs, kSmall, kOracle, Gate::demo);
  std::reverse(pairs.begin(), pairs.end());
  const auto b = assemble_presentation(pairs, kSmall, kOracle, Gate::demo);
  EXPECT_EQ(export_presentation(a, PresentationFormat::text), export_presentation(b, PresentationFormat::text));
}

TEST(Export, TextAndJson) {
  Presentation pr{f2(), {build_relator(g("a1"), 1, g("a2"), kSmall).reduced}, kSmall, 1, Gate::demo, {}};
  EXPECT_EQ(export_presentation(pr, PresentationFormat::text),
            "< a1, a2 | a1^6 a2 a1^9 a2 a1^-14 a2^-1 a1^-1 a2^-1 >");
  const auto j = nlohmann::json::parse(export_presentation(pr, PresentationFormat::json));
  EXPECT_EQ(j["generators"], 2);
  EXPECT_EQ(j["relators"].size(), 1u);
  EXPECT_EQ(j["gate"], "demo");
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["params"]["h0"], 2);
  EXPECT_EQ(j["params"]["mode"], "balanced");
  EXPECT_FORGE_ERROR(parse_presentation_format("yaml"), ErrorCode::unknown_format);
}

TEST(Export, RoundTrip) {
  const auto pr = assemble_presentation(search_pairs(kSmall, 2, g("a1")), kSmall, kOracle, Gate::demo);
  for (const auto format : {PresentationFormat::text, PresentationFormat::json}) {
    const auto text = export_presentation(pr, format);
    const auto back = parse_presentation(text, format);
    EXPECT_EQ(export_presentation(back, format), text);
    EXPECT_EQ(back.relators, pr.relators);
  }
  EXPECT_FORGE_ERROR(parse_presentation("a1, a2 | a1", PresentationFormat::text), ErrorCode::parse);
  EXPECT_FORGE_ERROR(parse_presentation("{", PresentationFormat::json), ErrorCode::parse);
}

}  // namespace
}  // namespace forge
