#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqec/curve.hpp"

namespace bqec {

enum class TorsionShape { Cyclic, Product2 };
enum class Certainty { Proven, BoundOnly };

/// Rational torsion subgroup: Z/n, or Z/2 x Z/n when shape is Product2.
struct TorsionStructure {
  TorsionShape shape = TorsionShape::Cyclic;
  int n = 1;
  std::vector<CurvePoint> generators;
  Certainty certainty = Certainty::BoundOnly;
  std::uint64_t bound = 0;  // gcd of #E(F_p) over the sampled good primes

  int order() const { return shape == TorsionShape::Cyclic ? n : 2 * n; }
  /// "Z/8", "Z/2xZ/8", or "trivial".
  std::string str() const;
};

/// Least n <= 12 with nP = O, or nullopt when the order exceeds Mazur's
/// bound (so P has infinite order over Q).
std::optional<int> point_order(const Curve& c, const CurvePoint& p);

/// All rational points of order 2, (0, 0) first on an AB-form curve, then by
/// ascending x. General-form curves are handled through the rational roots of
/// 4x^3 + b2 x^2 + 2 b4 x + b6.
std::vector<CurvePoint> two_torsion_points(const Curve& c);

/// gcd of #E(F_p) over the first `prime_count` primes p > 3 of good
/// reduction; the rational torsion order divides it.
std::uint64_t torsion_order_bound(const Curve& c, int prime_count = 12);

struct TorsionSearchOptions {
  int prime_count = 12;
  long height = 1'000'000;          // |x| bound for the plain integral scan
  std::size_t divisor_cap = 10'000; // divisor-structured candidates tried first
};

TorsionStructure torsion_subgroup(const Curve& c, const std::vector<CurvePoint>& hints,
                                  const TorsionSearchOptions& opts = {});

/// Subgroup generated by `gens` (all of finite order). Throws if it grows past
/// 16 elements, which Mazur's theorem rules out for genuine torsion.
std::vector<CurvePoint> generated_subgroup(const Curve& c, const std::vector<CurvePoint>& gens);

}  // namespace bqec
