#include "bqec/family.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "bqec/error.hpp"

namespace bqec {

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

void require_nonsingular(const Rational& a) {
  if (a.is_zero() || a == r(1) || a == r(-1))
    throw Error(ErrorCode::SingularParameter, "E_a is singular at a = " + a.str());
}

}  // namespace

Rational family_A(const Rational& a) {
  return (((a - r(4)) * a - r(2)) * a - r(4)) * a + r(1);
}

Rational family_B(const Rational& a) { return r(16) * a.pow(4); }

Rational family_discriminant(const Rational& a) {
  const Rational am1 = a - r(1);
  const Rational ap1 = a + r(1);
  return r(4096) * a.pow(8) * ap1 * ap1 * am1.pow(4) * (a * a - r(6) * a + r(1));
}

FamilyCurve family_curve(const Rational& a) {
  require_nonsingular(a);
  return FamilyCurve{a, Curve::ab(family_A(a), family_B(a))};
}

std::vector<TorsionPoint> named_torsion(const Rational& a) {
  const FamilyCurve e = family_curve(a);
  const Rational a2 = a * a;
  const Rational a3 = a2 * a;
  const Rational am1 = a - r(1);
  const Rational order4_y = r(4) * a2 * am1 * am1;
  const Rational x8_y = r(4) * a * (a2 - r(1));
  const Rational x8b_y = r(4) * a3 * (a2 - r(1));
  std::vector<TorsionPoint> out{
      {CurvePoint(r(0), r(0)), 2},
      {CurvePoint(r(4) * a2, order4_y), 4},
      {CurvePoint(r(4) * a2, -order4_y), 4},
      {CurvePoint(r(4) * a, x8_y), 8},
      {CurvePoint(r(4) * a, -x8_y), 8},
      {CurvePoint(r(4) * a3, x8b_y), 8},
      {CurvePoint(r(4) * a3, -x8b_y), 8},
  };
  for (const auto& t : out)
    if (!on_curve(e.curve, t.point)) throw Error(ErrorCode::PointNotOnCurve, "named torsion " + t.point.str());
  return out;
}

bool has_full_two_torsion(const Rational& a) {
  require_nonsingular(a);
  return (a * a - r(6) * a + r(1)).is_square();
}

Rational z2z8_parameter(const Rational& rr) {
  if (rr.is_zero() || rr == r(1) || rr == r(-1))
    throw Error(ErrorCode::ExcludedParameter, "r must avoid 0 and +-1, got " + rr.str());
  return -(rr + r(1)) / (rr * (rr - r(1)));
}

Rational z2z8_parameter_from_slope(const Rational& k) {
  if (k == r(1) || k == r(-1)) throw Error(ErrorCode::ExcludedParameter, "k must avoid +-1");
  return r(2) * (k + r(3)) / (r(1) - k * k);
}

const SubfamilyRow& subfamily_row(int index) {
  // a(k) = num/den, coefficients lowest degree first; x(a) as a polynomial in a.
  static const std::array<SubfamilyRow, 8> rows{{
      {1, {r(11), r(-8), r(1)}, {r(-5), r(0), r(1)}, {r(4)}, "4", "(k^2-8k+11)/(k^2-5)"},
      {2, {r(12), r(0), r(1)}, {r(-8), r(0), r(2)}, {r(-4), r(8)}, "8a-4", "(k^2+12)/(2k^2-8)"},
      {3, {r(3), r(-2)}, {r(-1), r(0), r(1)}, {r(0), r(1), r(2), r(1)}, "a(a+1)^2", "-(2k-3)/(k^2-1)"},
      {4, {r(0), r(-2)}, {r(-1), r(0), r(1)}, {r(0), r(2), r(0), r(2)}, "2a(a^2+1)", "-2k/(k^2-1)"},
      {5, {r(5), r(-4), r(1)}, {r(-1), r(0), r(1)}, {r(-1), r(4), r(1)}, "a^2+4a-1", "(k^2-4k+5)/(k^2-1)"},
      {6, {r(4), r(-4)}, {r(3), r(0), r(1)}, {r(0), r(0), r(0), r(8), r(-4)}, "-4a^3(a-2)", "-4(k-1)/(k^2+3)"},
      {7, {r(-1), r(0), r(-1)}, {r(-2), r(2)}, {r(-2), r(4), r(2)}, "2(a^2+2a-1)", "-(k^2+1)/(2k-2)"},
      {8, {r(4), r(-2)}, {r(1), r(0), r(1)}, {r(0), r(0), r(1), r(4), r(-1)}, "a^2(-a^2+4a+1)", "-(2k-4)/(k^2+1)"},
  }};
  if (index < 1 || index > 8) throw Error(ErrorCode::InvalidInput, "subfamily index must be 1..8");
  return rows[static_cast<size_t>(index - 1)];
}

const std::vector<Rational>& subfamily_singular_k(int index) {
  static std::array<std::vector<Rational>, 8> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int i = 1; i <= 8; ++i) {
      const SubfamilyRow& row = subfamily_row(i);
      const Polynomial& P = row.num;
      const Polynomial& Q = row.den;
      // Poles of a(k), and k with a in {0, 1, -1} or a^2 - 6a + 1 = 0.
      std::vector<Rational> ks;
      for (const Polynomial& f : {Q, P, P - Q, P + Q, P * P - r(6) * P * Q + Q * Q})
        for (const auto& root : f.rational_roots()) ks.push_back(root);
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
      cache[static_cast<size_t>(i - 1)] = std::move(ks);
    }
  });
  subfamily_row(index);  // range check
  return cache[static_cast<size_t>(index - 1)];
}

SubfamilyInstance subfamily(int index, const Rational& k) {
  const SubfamilyRow& row = subfamily_row(index);
  const auto& bad = subfamily_singular_k(index);
  if (std::find(bad.begin(), bad.end(), k) != bad.end())
    throw Error(ErrorCode::SingularParameter,
                "subfamily " + std::to_string(index) + " is singular at k = " + k.str());
  const Rational a = row.num(k) / row.den(k);
  const FamilyCurve e = family_curve(a);
  const Rational x = row.x_of_a(a);
  auto p = lift_x(e.curve, x);
  if (!p)
    throw Error(ErrorCode::NotASquare, "subfamily " + std::to_string(index) + " at k = " + k.str() +
                                           ": cubic at x = " + x.str() + " is not a square");
  return SubfamilyInstance{index, k, a, x, std::move(p)};
}

Polynomial subfamily1_A() {
  const Polynomial inner{r(-5167), r(11984), r(-11348), r(5456), r(-1226), r(-16), r(76), r(-16), r(1)};
  return r(-2) * inner;
}

Polynomial subfamily1_B() {
  const Polynomial p{r(11), r(-8), r(1)};
  const Polynomial q{r(-5), r(0), r(1)};
  return (p * q).pow(4);
}

ClearedCurve subfamily1_cleared(const Rational& k) {
  if (k == r(1) || k == r(2) || k == r(3))
    throw Error(ErrorCode::SingularParameter, "subfamily 1 is singular at k = " + k.str());
  const Curve c = Curve::ab(subfamily1_A()(k), subfamily1_B()(k));
  const Rational q4 = (k * k - r(5)).pow(4);
  const CurvePoint p(q4, r(16) * (k - r(2)) * (k * k - r(4) * k + r(5)) * q4);
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, "subfamily 1 point " + p.str());
  return ClearedCurve{c, p};
}

Curve two_isogenous(const Curve& c) {
  return Curve::ab(r(-2) * c.A(), c.A() * c.A() - r(4) * c.B());
}

CurvePoint two_isogeny(const Curve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str());
  if (p.is_infinity() || p.x().is_zero())
    throw Error(ErrorCode::KernelPoint, p.str() + " lies in the kernel {O, (0,0)}");
  const Rational x2 = p.x() * p.x();
  CurvePoint image(p.y() * p.y() / x2, p.y() * (c.B() - x2) / x2);
  if (!on_curve(two_isogenous(c), image))
    throw Error(ErrorCode::PointNotOnCurve, "isogeny image " + image.str());
  return image;
}

Curve dual_curve(const Rational& a) { return two_isogenous(family_curve(a).curve); }

CurvePoint isogeny_to_dual(const Rational& a, const CurvePoint& p) {
  return two_isogeny(family_curve(a).curve, p);
}

std::vector<ProgressionEntry> gp_points(const Rational& a) {
  const FamilyCurve e = family_curve(a);
  std::vector<ProgressionEntry> out;
  Rational x = r(4);
  for (int i = 0; i <= 4; ++i) {
    out.push_back({i, x, lift_x(e.curve, x)});
    x *= a;
  }
  return out;
}

Curve eprime_curve() { return Curve::general(r(0), r(0), r(0), r(7668), r(361881)); }

EprimeImage a_from_eprime_point(const Rational& p, const Rational& q) {
  if (!on_curve(eprime_curve(), CurvePoint(p, q)))
    throw Error(ErrorCode::PointNotOnCurve, "(" + p.str() + ", " + q.str() + ") is not on E'");
  const Rational den = r(12) * p - r(819);
  if (den.is_zero()) throw Error(ErrorCode::MapPole, "12p = 819");
  const Rational a = (r(15) * p + r(2) * q + r(1170)) / den;
  const Rational quartic = (((a - r(5)) * a - r(2)) * a - r(20)) * a + r(1);
  auto b = quartic.sqrt();
  if (!b) throw Error(ErrorCode::NotASquare, "a^4 - 5a^3 - 2a^2 - 20a + 1 at a = " + a.str());
  return EprimeImage{a, *b};
}

}  // namespace bqec
