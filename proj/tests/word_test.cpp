#include <gtest/gtest.h>

#include "forge/error.hpp"
#include "forge/power_product.hpp"
#include "forge/word.hpp"
#include "words.hpp"

namespace forge {
namespace {

using testing::f2;
using testing::g;
using testing::v;

TEST(Parse, LiteralTokens) {
  const auto w = g("a1 a2^-1 a1");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(to_string(w), "a1 a2^-1 a1");
}

TEST(Parse, IdentityLiteralAndZeroExponent) {
  EXPECT_TRUE(g("1").empty());
  EXPECT_TRUE(g("a1^0").empty());
  EXPECT_EQ(to_string(g("1")), "1");
}

TEST(Parse, ExponentsExpandToRuns) {
  const auto w = g("a1^3 a2^-2");
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(to_string(w), "a1^3 a2^-2");
  EXPECT_EQ(g("a1^+2"), g("a1 a1"));
}

TEST(Parse, ReducesOnInput) { EXPECT_EQ(to_string(g("a1 a2 a2^-1")), "a1"); }

TEST(Parse, Errors) {
  EXPECT_FORGE_ERROR(g(""), ErrorCode::parse);
  EXPECT_FORGE_ERROR(g("1 a1"), ErrorCode::parse);
  EXPECT_FORGE_ERROR(g("a3"), ErrorCode::unknown_symbol);
  EXPECT_FORGE_ERROR(g("b1"), ErrorCode::unknown_symbol);
  EXPECT_FORGE_ERROR(g("x"), ErrorCode::unknown_symbol);
  EXPECT_FORGE_ERROR(g("a1^"), ErrorCode::malformed_exponent);
  EXPECT_FORGE_ERROR(g("a1^x"), ErrorCode::malformed_exponent);
  EXPECT_FORGE_ERROR(g("a1^2147483648"), ErrorCode::malformed_exponent);
}

TEST(Parse, LargeExponentHitsExpansionCap) {
  EXPECT_FORGE_ERROR(g("a1^2147483647"), ErrorCode::expansion_limit);
}

TEST(InferAlphabet, GeneratorsAndVariables) {
  EXPECT_EQ(infer_alphabet("a1 a2").size(), 2u);
  EXPECT_EQ(infer_alphabet("a1").size(), 2u);
  EXPECT_EQ(infer_alphabet("a4^-1").size(), 4u);
  const auto vars = infer_alphabet("x u2 y u1");
  EXPECT_EQ(vars.kind(), Alphabet::Kind::variables);
  EXPECT_EQ(vars.names(), (std::vector<std::string>{"x", "y", "u1", "u2"}));
  EXPECT_FORGE_ERROR(infer_alphabet("a1 x"), ErrorCode::parse);
}

TEST(Alphabet, Validation) {
  EXPECT_FORGE_ERROR(Alphabet::generators(0), ErrorCode::invalid_argument);
  EXPECT_FORGE_ERROR(Alphabet::variables({"x", "x"}), ErrorCode::duplicate_label);
  EXPECT_FORGE_ERROR(Alphabet::variables({"z"}), ErrorCode::invalid_argument);
  EXPECT_EQ(Alphabet::generators(3), Alphabet::generators(3));
  EXPECT_FALSE(Alphabet::generators(2) == Alphabet::generators(3));
}

TEST(ReduceProduct, Examples) {
  EXPECT_EQ(g("a1 a2") * g("a2^-1 a1"), g("a1 a1"));
  const auto w = g("a1 a2^-1 a1^3 a2");
  EXPECT_TRUE((w * invert(w)).empty());
  EXPECT_EQ(g("1") * g("a2"), g("a2"));
}

TEST(ReduceProduct, AlphabetMismatch) {
  const auto other = parse_word("a1", Alphabet::generators(3));
  EXPECT_FORGE_ERROR(g("a1") * other, ErrorCode::alphabet_mismatch);
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(g("a1 a2^-1")), g("a2 a1^-1"));
  EXPECT_TRUE(invert(g("1")).empty());
  EXPECT_EQ(invert(g("a1^3")), g("a1^-3"));
}

TEST(Power, SignsAndLimit) {
  EXPECT_EQ(power(g("a1 a2"), 2), g("a1 a2 a1 a2"));
  EXPECT_EQ(power(g("a1 a2"), -1), g("a2^-1 a1^-1"));
  EXPECT_TRUE(power(g("a1 a2"), 0).empty());
  EXPECT_FORGE_ERROR(power(g("a1 a2"), 100, 50), ErrorCode::expansion_limit);
}

TEST(Conjugate, ByOnTheLeft) { EXPECT_EQ(conjugate(g("a2"), g("a1")), g("a1 a2 a1^-1")); }

TEST(CyclicReduce, Examples) {
  auto r = cyclic_reduce(g("a1 a2 a1^-1"));
  EXPECT_EQ(r.core, g("a2"));
  EXPECT_EQ(r.conjugator, g("a1"));

  r = cyclic_reduce(g("a1 a2"));
  EXPECT_EQ(r.core, g("a1 a2"));
  EXPECT_TRUE(r.conjugator.empty());

  r = cyclic_reduce(g("a1^-1 a2 a1 a1"));
  EXPECT_EQ(r.core, g("a2 a1"));
  EXPECT_EQ(r.conjugator, g("a1^-1"));

  EXPECT_TRUE(is_cyclically_reduced(g("a1 a2")));
  EXPECT_FALSE(is_cyclically_reduced(g("a1 a2 a1^-1")));
  EXPECT_TRUE(cyclic_reduce(g("1")).core.empty());
}

TEST(AbelianStats, Examples) {
  const auto s = abelian_stats(g("a1^2 a2^-3"));
  EXPECT_EQ(s.exponents, (std::vector<std::int64_t>{2, -3}));
  EXPECT_EQ(s.positive_sum, 2);
  EXPECT_EQ(s.negative_sum, 3);
  EXPECT_FALSE(s.zero());
  EXPECT_TRUE(abelian_stats(g("a1 a2 a1^-1 a2^-1")).zero());
}

TEST(Positive, Examples) {
  EXPECT_TRUE(is_positive(g("a1 a2")));
  EXPECT_FALSE(is_positive(g("a1 a2^-1")));
  EXPECT_TRUE(is_positive(g("1")));
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_regular(g("a1 a2 a1")));
  EXPECT_FALSE(is_regular(g("a1 a2^-1 a1")));
  EXPECT_TRUE(is_regular(g("a1^-1 a2^-1 a1^-1")));
  EXPECT_FALSE(is_regular(g("a1 a2")));
  EXPECT_TRUE(is_regular(g("a2^-1 a1 a1 a2 a1^-1")));
}

TEST(Substitute, Examples) {
  Bindings b{{"x", g("a1 a2")}, {"y", g("a2")}};
  EXPECT_EQ(substitute(v("x y^-1"), b), g("a1"));

  const auto x1 = v("x u1 y");
  EXPECT_EQ(substitute(x1, {{"x", g("a1")}, {"y", g("a1")}, {"u1", g("a2")}}), g("a1 a2 a1"));
}

TEST(Substitute, Errors) {
  EXPECT_FORGE_ERROR(substitute(v("x y"), {{"x", g("a1")}}), ErrorCode::unbound_variable);
  const auto other = parse_word("a1", Alphabet::generators(3));
  EXPECT_FORGE_ERROR(substitute(v("x y"), {{"x", g("a1")}, {"y", other}}), ErrorCode::alphabet_mismatch);
}

TEST(Shortlex, LetterOrder) {
  EXPECT_TRUE(shortlex_less(g("a1"), g("a1^-1")));
  EXPECT_TRUE(shortlex_less(g("a1^-1"), g("a2")));
  EXPECT_TRUE(shortlex_less(g("a2^-1"), g("a1 a1")));
  EXPECT_FALSE(shortlex_less(g("a1 a2"), g("a1 a2")));
}

TEST(PowerProduct, RawFormKeepsStructure) {
  PowerProduct p(f2());
  p.append(g("a1"), 3);
  p.append(g("a1"), -3);
  p.append(g("a2 a1"), 2);
  EXPECT_EQ(p.factor_count(), 3u);
  EXPECT_EQ(p.raw_length(), 10);
  EXPECT_EQ(p.exponent_vector(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(p.reduce(), g("a2 a1 a2 a1"));
  EXPECT_EQ(p.inverse().reduce(), invert(p.reduce()));
}

TEST(PowerProduct, OverflowIsReported) {
  PowerProduct p(f2());
  p.append(g("a1 a2"), std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_FORGE_ERROR(p.raw_length(), ErrorCode::arithmetic_overflow);
}

}  // namespace
}  // namespace forge
