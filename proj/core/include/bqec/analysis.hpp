#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqec/curve.hpp"

namespace bqec {

/// log max(|num x|, den x). Throws Error(InfinityPoint) on O.
double naive_height(const CurvePoint& p);

/// Largest decimal size allowed for a coordinate during height doubling:
/// BQEC_DIGIT_CAP from the environment, else one million digits.
std::size_t digit_cap();

struct HeightResult {
  double value = 0.0;
  int doublings_used = 0;
  double error_bound = 0.0;      // C / 4^n with C the log-height of the discriminant
  bool torsion_collapse = false; // some 2^k P = O, so the height is exactly 0
};

/// h(2^n P) / 4^n with exact doubling. Throws Error(HeightNotConverged) when
/// the error bound is not below 0.01 and Error(DigitCapExceeded) when a
/// coordinate outgrows digit_cap(). O and points that reach O while doubling
/// get height 0 with torsion_collapse set.
HeightResult canonical_height(const Curve& c, const CurvePoint& p, int doublings = 8);

/// (h(P+Q) - h(P) - h(Q)) / 2.
double height_pairing(const Curve& c, const CurvePoint& p, const CurvePoint& q, int doublings = 8);

/// Determinant of the height-pairing Gram matrix.
double regulator(const Curve& c, const std::vector<CurvePoint>& points, int doublings = 8);

bool is_probably_independent(const Curve& c, const std::vector<CurvePoint>& points, int doublings = 8,
                             double tol = 1e-4);

/// S(n, E) = sum over good primes 3 < p <= n of (1 - (p-1)/#E(F_p)) log p,
/// on the integral model for AB-form curves.
double mestre_nagao(const Curve& c, int bound);

/// S for several bounds from a single pass over the primes.
std::map<int, double> mestre_nagao_sums(const Curve& c, const std::vector<int>& bounds);

struct SieveRecord {
  int subfamily = 0;
  Rational k;
  std::optional<Rational> a;
  std::map<int, double> sums;
  bool passed = false;
  std::optional<std::string> error;  // set for singular parameters
};

/// One record per k, in input order. A threshold (n, t) passes when S(n) > t.
std::vector<SieveRecord> sieve(int subfamily, const std::vector<Rational>& ks,
                               const std::vector<std::pair<int, double>>& thresholds, unsigned jobs = 1);

struct PointSearchResult {
  std::vector<CurvePoint> points;
  bool truncated = false;  // divisor enumeration hit its cap or B was not fully factored
};

/// Points with x = +-d m^2 / e^2, d | B, gcd(m, e) = 1 and m, e <= bound, on
/// an AB-form curve. Non-integral curves are searched on their integral model
/// and the results mapped back.
PointSearchResult point_search(const Curve& c, long numerator_bound, std::size_t divisor_cap = 10'000);

}  // namespace bqec
