#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bqec/rational.hpp"

namespace bqec {

/// Affine rational point or the point at infinity. Immutable value.
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  CurvePoint(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const noexcept { return !affine_; }
  /// Coordinates; throw Error(InfinityPoint) on the point at infinity.
  const Rational& x() const;
  const Rational& y() const;

  std::string str() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.affine_ != b.affine_) return false;
    return !a.affine_ || (a.x_ == b.x_ && a.y_ == b.y_);
  }

 private:
  CurvePoint() = default;
  bool affine_ = false;
  Rational x_;
  Rational y_;
};

enum class CurveForm { AB, General };

/// Weierstrass model over Q. Either the special form y^2 = x^3 + A x^2 + B x
/// or the general form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// Construction rejects singular models; the discriminant is cached.
class Curve {
 public:
  static Curve ab(Rational A, Rational B);
  static Curve general(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);

  CurveForm form() const noexcept { return form_; }
  bool is_ab_form() const noexcept { return form_ == CurveForm::AB; }

  // AB-form coefficients; Error(InvalidInput) on a general-form curve.
  const Rational& A() const;
  const Rational& B() const;

  // General coefficients, valid for both forms.
  const Rational& a1() const noexcept { return a1_; }
  const Rational& a2() const noexcept { return a2_; }
  const Rational& a3() const noexcept { return a3_; }
  const Rational& a4() const noexcept { return a4_; }
  const Rational& a6() const noexcept { return a6_; }

  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  Rational c4() const;

  const Rational& discriminant() const noexcept { return disc_; }

  std::string str() const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.form_ == b.form_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ &&
           a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  Curve() = default;
  CurveForm form_ = CurveForm::General;
  Rational a1_, a2_, a3_, a4_, a6_;
  Rational disc_;
};

bool on_curve(const Curve& c, const CurvePoint& p);

CurvePoint negate(const Curve& c, const CurvePoint& p);

/// Chord-tangent addition with the full a1..a6 formulas. Throws
/// Error(PointNotOnCurve) if either input is off the curve.
CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q);

/// n * P by double-and-add; negative n negates first.
CurvePoint scalar_mul(const Curve& c, long n, const CurvePoint& p);

namespace detail {
// Group law without the on-curve check, for inner loops over known points.
CurvePoint add_unchecked(const Curve& c, const CurvePoint& p, const CurvePoint& q);
}  // namespace detail

inline const Rational& discriminant(const Curve& c) { return c.discriminant(); }

/// c4^3 / discriminant.
Rational j_invariant(const Curve& c);

/// Right-hand side minus the a1/a3 terms: for AB form x^3 + A x^2 + B x.
/// For general form returns the value under the square root that solving
/// for y requires, (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6).
Rational lift_discriminant(const Curve& c, const Rational& x);

/// The point with abscissa x and the larger root y, when rational.
std::optional<CurvePoint> lift_x(const Curve& c, const Rational& x);

struct IntegralModel {
  Curve curve;
  Integer lambda;  // least positive integer with lambda^2 A, lambda^4 B integral

  /// (u, v) -> (lambda^2 u, lambda^3 v).
  CurvePoint to_model(const CurvePoint& p) const;
  CurvePoint from_model(const CurvePoint& p) const;
};

/// AB-form only: the scaled model {lambda^2 A, lambda^4 B}.
IntegralModel integral_model(const Curve& c);

/// #E(F_p) by Legendre-symbol summation over x mod p. AB-form curves accept
/// odd p; general-form curves need p > 3. Throws Error(BadPrime) if p is
/// excluded or divides a coefficient denominator and Error(BadReduction) if p
/// divides the discriminant.
std::uint64_t count_points_mod_p(const Curve& c, std::uint32_t p);

}  // namespace bqec
