#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bqec/curve.hpp"
#include "bqec/polynomial.hpp"

namespace bqec {

/// E_a : v^2 = u^3 + (a^4 - 4a^3 - 2a^2 - 4a + 1) u^2 + 16 a^4 u.
struct FamilyCurve {
  Rational a;
  Curve curve;
};

/// Throws Error(SingularParameter) for a in {0, 1, -1} (a^2 - 6a + 1 has no
/// rational roots).
FamilyCurve family_curve(const Rational& a);

Rational family_A(const Rational& a);
Rational family_B(const Rational& a);

/// 4096 a^8 (a+1)^2 (a-1)^4 (a^2-6a+1).
Rational family_discriminant(const Rational& a);

struct TorsionPoint {
  CurvePoint point;
  int order;
};

/// (0,0) of order 2; (4a^2, +-4a^2(a-1)^2) of order 4; (4a, +-4a(a^2-1)) and
/// (4a^3, +-4a^3(a^2-1)) of order 8. Both signs are returned.
std::vector<TorsionPoint> named_torsion(const Rational& a);

bool has_full_two_torsion(const Rational& a);

/// a = -(r+1)/(r(r-1)); E_a then has three rational points of order 2.
Rational z2z8_parameter(const Rational& r);
/// The same family through the slope of the line b = 1 + k a: a = 2(k+3)/(1-k^2).
Rational z2z8_parameter_from_slope(const Rational& k);

/// One of the eight rank-one subfamilies: a(k) = num(k)/den(k) and a
/// distinguished abscissa x(a) that lies on E_a for every admissible k.
struct SubfamilyRow {
  int index;
  Polynomial num;
  Polynomial den;
  Polynomial x_of_a;
  const char* x_text;
  const char* a_text;
};

const SubfamilyRow& subfamily_row(int index);

/// Rational k where a(k) is undefined or E_{a(k)} is singular. Derived from
/// the row polynomials, computed once per row.
const std::vector<Rational>& subfamily_singular_k(int index);

struct SubfamilyInstance {
  int index;
  Rational k;
  Rational a;
  Rational x_candidate;
  std::optional<CurvePoint> point;
};

/// Throws Error(SingularParameter) for a singular k and Error(NotASquare) if
/// the row's abscissa fails to lift, which would mean a corrupted row.
SubfamilyInstance subfamily(int index, const Rational& k);

struct ClearedCurve {
  Curve curve;
  CurvePoint point;
};

/// Subfamily 1 with denominators cleared: y^2 = x^3 + A(k) x^2 + B(k) x and
/// P = ((k^2-5)^4, 16(k-2)(k^2-4k+5)(k^2-5)^4).
ClearedCurve subfamily1_cleared(const Rational& k);
Polynomial subfamily1_A();
Polynomial subfamily1_B();

/// For any AB-form curve, the 2-isogenous curve y^2 = x^3 - 2A x^2 + (A^2-4B) x.
Curve two_isogenous(const Curve& c);
/// (x, y) -> (y^2/x^2, y(B - x^2)/x^2). Kernel points raise Error(KernelPoint).
CurvePoint two_isogeny(const Curve& c, const CurvePoint& p);

Curve dual_curve(const Rational& a);
CurvePoint isogeny_to_dual(const Rational& a, const CurvePoint& p);

struct ProgressionEntry {
  int exponent;
  Rational x;
  std::optional<CurvePoint> point;
};

/// x = 4a^i for i = 0..4.
std::vector<ProgressionEntry> gp_points(const Rational& a);

/// q^2 = p^3 + 7668 p + 361881.
Curve eprime_curve();

struct EprimeImage {
  Rational a;
  Rational b;  // nonnegative root of a^4 - 5a^3 - 2a^2 - 20a + 1
};

/// a = (15p + 2q + 1170)/(12p - 819).
EprimeImage a_from_eprime_point(const Rational& p, const Rational& q);

}  // namespace bqec
