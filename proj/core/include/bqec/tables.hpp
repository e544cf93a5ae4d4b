#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bqec/curve.hpp"

namespace bqec::tables {

/// Embedded verification corpora. Bump when any record changes.
inline constexpr int kVersion = 1;

/// r-values whose E_{-(r+1)/(r(r-1))} are known rank-three curves with
/// torsion Z/2 x Z/8.
const std::vector<Rational>& z2z8_rank3_r();

struct HighRankRow {
  int subfamily;
  Rational k;
  std::string marker;  // "", "*" (rank window 4..5) or "**" (shared curve)
};

/// Subfamily parameters that survived the Mestre-Nagao sieve.
const std::vector<HighRankRow>& high_rank_rows();

/// Subfamily-4 parameters with published rank windows only.
const std::vector<HighRankRow>& rank_window_rows();

/// (prime bound, threshold) pairs used to sieve a subfamily.
std::vector<std::pair<int, double>> default_thresholds(int subfamily);

/// The common curve reached from subfamily 5 at k = 79/50 and subfamily 8 at
/// k = 113/129, as a general Weierstrass model.
Curve shared_rank5_curve();

}  // namespace bqec::tables
