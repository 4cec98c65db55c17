#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/word.hpp"

namespace forge {

struct PrimitiveRoot {
  Word root;
  std::int64_t exponent = 1;
};

// Root and exponent of the cyclic core of w: core == root^exponent with root
// not a proper power. Throws Error(empty_word) on the identity.
PrimitiveRoot primitive_root(const Word& w);

// source == witness * target * witness^-1.
struct ConjugacyWitness {
  Word witness;
  Word source;
  Word target;
};

// Shortest witness, ties broken by shortlex order; nullopt when u and v are
// not conjugate in the free group.
std::optional<ConjugacyWitness> conjugacy_witness(const Word& u, const Word& v);

// Two pairs are conjugate when one witness conjugates both coordinates at once.
std::optional<Word> simultaneous_conjugator(const Word& u1, const Word& u2, const Word& v1, const Word& v2);

// Cyclically reduced and not a proper power. Throws on the empty word.
bool is_simple_rank0(const Word& w);

// Least element, in shortlex order, among the cyclic rotations of w and w^-1.
// Labels a conjugacy class up to inversion.
Word canonical_cyclic_form(const Word& w);

// All reduced words of exactly `length` letters, in shortlex order.
std::vector<Word> enumerate_reduced_words(const Alphabet& alphabet, std::size_t length);

struct PeriodSet {
  int rank = 1;
  std::vector<Word> periods;
};

struct PeriodVerdict {
  bool ok = true;
  std::string violation;
};

// Rank-1 periods over a generator alphabet: the letters a1, ..., am.
PeriodSet periods_rank1(const Alphabet& alphabet);

// Checks primitivity (no period is conjugate to a power of a shorter word)
// and independence (no two periods are conjugate up to inversion) at rank 0,
// plus maximality over every reduced word of length `rank`.
PeriodVerdict verify_periods(const PeriodSet& set, const Alphabet& alphabet);

struct ProbeReport {
  int depth = 0;
  std::int64_t words_checked = 0;
  bool free_up_to_depth = true;
  bool all_images_nonregular = true;
  bool growth_ok = true;  // |image(U)| >= |U| for every U
  std::int64_t trivial_images = 0;
  std::int64_t regular_images = 0;
  std::optional<Word> counterexample;  // over {x, y}, x -> v1, y -> v2
  std::optional<Word> counterexample_image;
};

inline constexpr int kDefaultProbeDepth = 12;

// Enumerates every nonempty reduced U(x, y) with |U| <= depth, maps
// x -> v1, y -> v2, and tests the images for triviality and for regularity of
// their cyclic cores. The counterexample is the shortlex-least U with a
// trivial image, else the least with a regular image. Results do not depend
// on `jobs`.
ProbeReport free_subgroup_probe(const Word& v1, const Word& v2, int depth, int jobs = 1,
                                int max_depth = kDefaultProbeDepth);

}  // namespace forge
