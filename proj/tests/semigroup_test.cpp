#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "forge/error.hpp"
#include "forge/identity.hpp"
#include "forge/magma.hpp"
#include "forge/semigroup.hpp"
#include "words.hpp"

namespace forge {
namespace {

using testing::v;

FiniteMagma cat(const char* name) { return load_catalog_entry(name); }

const std::vector<std::string> kGroups{"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "D4", "Q8"};

TEST(LoadMagma, Examples) {
  const auto z2 = load_magma(R"({"elements": ["e", "g"], "table": [[0, 1], [1, 0]]})");
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_EQ(z2.label(1), "g");
  EXPECT_EQ(z2.find("g"), 1u);
  EXPECT_EQ(z2.product(1, 1), 0u);

  EXPECT_FORGE_ERROR(load_magma(R"({"elements": ["a", "b", "c"], "table": [[0, 1], [1, 0], [0, 0]]})"),
                     ErrorCode::ragged_table);
  EXPECT_FORGE_ERROR(
      load_magma(R"({"elements": ["a", "b", "c"], "table": [[0, 1, 2], [1, 5, 0], [2, 0, 1]]})"),
      ErrorCode::index_out_of_range);
  EXPECT_FORGE_ERROR(load_magma(R"({"elements": ["a", "a"], "table": [[0, 1], [1, 0]]})"), ErrorCode::duplicate_label);
  EXPECT_FORGE_ERROR(load_magma(R"({"elements": [], "table": []})"), ErrorCode::ragged_table);
  EXPECT_FORGE_ERROR(load_magma("not json"), ErrorCode::parse);
  EXPECT_FORGE_ERROR(load_magma(R"({"elements": ["a"]})"), ErrorCode::parse);
}

TEST(LoadMagma, JsonRoundTrip) {
  const auto d4 = cat("D4");
  const auto back = load_magma(magma_to_json(d4));
  EXPECT_EQ(back.labels(), d4.labels());
  EXPECT_EQ(back.rows(), d4.rows());
}

TEST(Catalog, ListsBundledEntries) {
  const auto names = catalog_names();
  for (const auto& n : kGroups) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_NE(std::find(names.begin(), names.end(), "left-zero-2"), names.end());
  EXPECT_FORGE_ERROR(load_catalog_entry("Z99"), ErrorCode::io);
}

TEST(Catalog, ResolvesFilePaths) {
  const auto path = std::filesystem::temp_directory_path() / "forge_semigroup_test_z2.json";
  std::ofstream(path) << R"({"elements": ["e", "g"], "table": [[0, 1], [1, 0]]})";
  EXPECT_EQ(resolve_magma(path.string()).order(), 2u);
  EXPECT_EQ(resolve_magma("Z5").order(), 5u);
  std::filesystem::remove(path);
}

TEST(Structure, GroupsPassEverything) {
  for (const auto& name : kGroups) {
    const auto m = cat(name.c_str());
    const auto r = check_structure(m);
    EXPECT_TRUE(r.associative.holds) << name;
    EXPECT_TRUE(r.cancellative()) << name;
    EXPECT_TRUE(r.left_ore.holds) << name;
    EXPECT_TRUE(r.right_ore.holds) << name;
    EXPECT_TRUE(r.is_group) << name;
    EXPECT_EQ(r.identity, 0u) << name;
  }
}

TEST(Structure, LeftZero) {
  const auto m = cat("left-zero-2");
  const auto r = check_structure(m);
  EXPECT_TRUE(r.associative.holds);
  EXPECT_FALSE(r.left_cancellative.holds);
  EXPECT_EQ(r.left_cancellative.witness, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_TRUE(r.right_cancellative.holds);
  EXPECT_FALSE(r.cancellative());
  EXPECT_FALSE(r.is_group);
  EXPECT_FALSE(r.identity.has_value());
}

TEST(Structure, PlantedNonAssociativeTriple) {
  // Z3 with a single entry changed: (1*1) = 1 instead of 2.
  const FiniteMagma m({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
  const auto r = check_structure(m);
  ASSERT_FALSE(r.associative.holds);
  const auto& w = r.associative.witness;
  ASSERT_EQ(w.size(), 3u);
  EXPECT_NE(m.product(m.product(w[0], w[1]), w[2]), m.product(w[0], m.product(w[1], w[2])));
  EXPECT_EQ(w, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(HoldsIdentity, Examples) {
  const auto comm = power_commutation_pair(1);
  EXPECT_TRUE(holds_identity(cat("Z3"), comm).holds);

  const auto s3 = cat("S3");
  const auto r = holds_identity(s3, comm);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.counterexample.size(), 2u);
  EXPECT_EQ(s3.label(r.counterexample[0]), "(12)");
  EXPECT_EQ(s3.label(r.counterexample[1]), "(13)");

  EXPECT_TRUE(holds_identity(cat("Z3"), maltsev_identity(1)).holds);
}

TEST(HoldsIdentity, SubstitutionCount) {
  const auto r = holds_identity(cat("Z6"), maltsev_identity(1));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.substitutions, 216u);
}

TEST(HoldsIdentity, InverseLettersNeedAGroup) {
  const auto id = make_identity(v("x y x^-1"), v("y"));
  EXPECT_TRUE(holds_identity(cat("Z4"), id).holds);
  EXPECT_FALSE(holds_identity(cat("Q8"), id).holds);
  EXPECT_FORGE_ERROR(holds_identity(cat("left-zero-2"), id), ErrorCode::not_group);
}

TEST(HoldsIdentity, Guards) {
  const FiniteMagma bad({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
  EXPECT_FORGE_ERROR(holds_identity(bad, power_commutation_pair(1)), ErrorCode::not_associative);
  EXPECT_FORGE_ERROR(holds_identity(cat("Z2"), maltsev_identity(5)), ErrorCode::too_many_variables);
}

TEST(HoldsIdentity, JobsKeepFirstCounterexample) {
  const auto m = cat("D4");
  const auto id = maltsev_identity(1);
  const auto a = holds_identity(m, id, 1);
  for (const int jobs : {2, 3, 8}) {
    const auto b = holds_identity(m, id, jobs);
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.counterexample, b.counterexample);
    EXPECT_EQ(a.substitutions, b.substitutions);
  }
}

TEST(HoldsIdentity, PowerCommutationInAbelianGroups) {
  for (const auto* name : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"}) {
    for (int k = 1; k <= 4; ++k) {
      EXPECT_TRUE(holds_identity(cat(name), power_commutation_pair(k)).holds) << name << " k=" << k;
    }
  }
}

TEST(Nilpotency, Examples) {
  EXPECT_EQ(nilpotency_class(cat("Z4")), 1);
  EXPECT_EQ(nilpotency_class(cat("D4")), 2);
  EXPECT_EQ(nilpotency_class(cat("Q8")), 2);
  EXPECT_FALSE(nilpotency_class(cat("S3")).has_value());
  EXPECT_EQ(nilpotency_class(FiniteMagma({"e"}, {{0}})), 0);
  EXPECT_FORGE_ERROR(nilpotency_class(cat("left-zero-2")), ErrorCode::not_group);
}

TEST(Maltsev, Examples) {
  auto r = maltsev_crosscheck(cat("Z6"), 1);
  EXPECT_TRUE(r.identity_holds);
  EXPECT_TRUE(r.class_at_most_k);
  EXPECT_TRUE(r.consistent);

  r = maltsev_crosscheck(cat("D4"), 1);
  EXPECT_FALSE(r.identity_holds);
  EXPECT_EQ(r.nilpotency, 2);
  EXPECT_TRUE(r.consistent);

  r = maltsev_crosscheck(cat("S3"), 2);
  EXPECT_FALSE(r.identity_holds);
  EXPECT_FALSE(r.nilpotency.has_value());
  EXPECT_TRUE(r.consistent);
}

TEST(Fractions, Examples) {
  const auto z3 = cat("Z3");
  const auto f = fraction_group_of_finite(z3);
  EXPECT_EQ(f.group.rows(), z3.rows());
  EXPECT_EQ(f.group.label(f.identity), "e");
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(z3.product(i, f.inverse[i]), f.identity);
  }

  EXPECT_FORGE_ERROR(fraction_group_of_finite(cat("left-zero-2")), ErrorCode::not_cancellative);

  const auto trivial = fraction_group_of_finite(FiniteMagma({"1"}, {{0}}));
  EXPECT_EQ(trivial.group.order(), 1u);
  EXPECT_EQ(trivial.identity, 0u);
}

}  // namespace
}  // namespace forge
