#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/free_group.hpp"
#include "forge/identity.hpp"
#include "forge/power_product.hpp"
#include "forge/word.hpp"

namespace forge {

// Answers "equal in rank i" and "conjugate in rank i" questions. Only the
// free group (rank 0) ships; higher ranks are an extension point.
class RankOracle {
 public:
  virtual ~RankOracle() = default;

  virtual int max_rank() const = 0;
  virtual bool equal_in_rank(int rank, const Word& u, const Word& v) const = 0;
  virtual std::optional<ConjugacyWitness> conjugate_in_rank(int rank, const Word& u, const Word& v) const = 0;
};

class FreeGroupOracle final : public RankOracle {
 public:
  int max_rank() const override { return 0; }
  bool equal_in_rank(int rank, const Word& u, const Word& v) const override;
  std::optional<ConjugacyWitness> conjugate_in_rank(int rank, const Word& u, const Word& v) const override;
};

// strict: only periods that are regular words produce relators.
// demo: the regularity requirement is waived so rank 1 is exercisable.
enum class Gate { strict, demo };

std::string_view to_string(Gate gate);
Gate parse_gate(std::string_view text);

// Canonical data of one class of pairs (X, Y), i.e. the (A^f, j)-triple plus
// the words W and T used to build its relator.
//
//   X    == B^f_B              (graphically; B cyclically reduced, primitive)
//   Y    == C^f_C              (graphically)
//   Ybar == Z Y Z^-1           (graphically, |Z| minimal)
//   X^d Ybar^d == W A^f W^-1   (|W| minimal)
//   T    == W^-1 X W           (reduced)
struct PairClassData {
  Word input_x;
  Word input_y;
  Word X;
  Word Y;
  Word Z;
  Word Ybar;
  Word B;
  std::int64_t f_B = 1;
  Word C;
  std::int64_t f_C = 1;
  Word A;
  std::int64_t f = 1;
  Word W;
  Word T;
  bool a_is_rank1 = false;
  bool a_is_regular = false;
};

// w(X, Y) evaluated and freely reduced.
Word evaluate_w(const IdentityParams& params, const Word& X, const Word& Y, std::size_t limit = kMaxExpansion);

// Exact test for w(X, Y) == 1 in the free group that never expands w. If X and
// Y do not commute they generate a free group of rank 2 and w(X, Y) != 1;
// otherwise w(X, Y) == X^sx Y^sy with (sx, sy) the exponent sums of w.
bool w_vanishes(const IdentityParams& params, const Word& X, const Word& Y);

// Throws Error(commuting_pair) when w(X, Y) == 1 and
// Error(oracle_rank_unsupported) for rank != 0.
PairClassData classify_pair(const Word& X, const Word& Y, const IdentityParams& params, const RankOracle& oracle,
                            int rank = 0);

enum class SectionKind { a_power, t, t_inverse };

struct Relator {
  PowerProduct raw;
  std::vector<SectionKind> sections;  // one entry per factor of `raw`
  Word reduced;
  std::vector<std::string> warnings;

  std::size_t count(SectionKind kind) const;
};

// A^{(n+1^2)f} T ... A^{(n+h0^2)f} T A^{(-n-(h0+1)^2)f} T^-1 ... A^{(-n-(2h0-1)^2)f} T^-1 A^{(-n+C)f} T^-1
Relator build_relator(const Word& A, std::int64_t f, const Word& T, const IdentityParams& params);

struct PairRelator {
  PairClassData data;
  Relator relator;
  Gate gate = Gate::demo;
};

// classify_pair + build_relator, then checks
// reduce(W^-1 w(X, Ybar) W) == reduce(R). Throws Error(not_rank_one) when |A| != 1
// and Error(regularity_gate) when the strict gate rejects A.
PairRelator relator_from_pair(const Word& X, const Word& Y, const IdentityParams& params, const RankOracle& oracle,
                              Gate gate = Gate::demo);

struct SearchOptions {
  // Keep only |f| == 1. Defaults to on when d >= 2; for d >= 2, |f| >= 2
  // forces X and Y to commute.
  std::optional<bool> unit_f_only;
  std::int64_t min_abs_f = 1;
  int jobs = 1;
};

using WordPair = std::pair<Word, Word>;

// Pairs of reduced words with |X|, |Y| <= max_len, w(X, Y) != 1 and X^d Y^d
// conjugate to a nonzero power of the letter `target`; one representative
// (the least in (X, Y) shortlex order) per class of the pair relation.
std::vector<WordPair> search_pairs(const IdentityParams& params, std::size_t max_len, const Word& target,
                                   const SearchOptions& options = {});

// Are (X1, Y1) and (X2, Y2) in the same class: (X^d Y^d, w(X, Y)) conjugate
// as pairs?
bool same_pair_class(const IdentityParams& params, const WordPair& p, const WordPair& q);

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  IdentityParams params;
  int rank = 1;
  Gate gate = Gate::strict;
  std::vector<std::string> notes;
};

Presentation assemble_presentation(const std::vector<WordPair>& pairs, const IdentityParams& params,
                                   const RankOracle& oracle, Gate gate = Gate::strict,
                                   std::optional<Alphabet> alphabet = std::nullopt);

enum class PresentationFormat { text, json };

PresentationFormat parse_presentation_format(std::string_view text);
// text: "< a1, a2 | R1, R2 >"; json: {generators, relators, params, rank, gate}.
std::string export_presentation(const Presentation& presentation, PresentationFormat format);
Presentation parse_presentation(std::string_view text, PresentationFormat format);

}  // namespace forge
