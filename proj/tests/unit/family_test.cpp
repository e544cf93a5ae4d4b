#include <gtest/gtest.h>

#include <functional>

#include "bqec/error.hpp"
#include "bqec/family.hpp"
#include "bqec/torsion.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace bqec;
using oracle::Q;

namespace {


// The eight parametrizations and x-candidates, written out independently of
// the library's polynomial tables.
struct RowOracle {
  std::function<std::optional<mpq_class>(const mpq_class&)> a_of_k;
  std::function<mpq_class(const mpq_class&)> x_of_a;
};

std::optional<mpq_class> ratio(const mpq_class& n, const mpq_class& d) {
  if (d == 0) return std::nullopt;
  return n / d;
}

const std::vector<RowOracle>& rows() {
  static const std::vector<RowOracle> r{
      {[](const mpq_class& k) { return ratio(k * k - 8 * k + 11, k * k - 5); }, [](const mpq_class&) { return mpq_class(4); }},
      {[](const mpq_class& k) { return ratio(k * k + 12, 2 * k * k - 8); }, [](const mpq_class& a) { return mpq_class(8 * a - 4); }},
      {[](const mpq_class& k) { return ratio(-(2 * k - 3), k * k - 1); }, [](const mpq_class& a) { return mpq_class(a * (a + 1) * (a + 1)); }},
      {[](const mpq_class& k) { return ratio(-2 * k, k * k - 1); }, [](const mpq_class& a) { return mpq_class(2 * a * (a * a + 1)); }},
      {[](const mpq_class& k) { return ratio(k * k - 4 * k + 5, k * k - 1); }, [](const mpq_class& a) { return mpq_class(a * a + 4 * a - 1); }},
      {[](const mpq_class& k) { return ratio(-4 * (k - 1), k * k + 3); }, [](const mpq_class& a) { return mpq_class(-4 * a * a * a * (a - 2)); }},
      {[](const mpq_class& k) { return ratio(-(k * k + 1), 2 * k - 2); }, [](const mpq_class& a) { return mpq_class(2 * (a * a + 2 * a - 1)); }},
      {[](const mpq_class& k) { return ratio(-(2 * k - 4), k * k + 1); }, [](const mpq_class& a) { return mpq_class(a * a * (-a * a + 4 * a + 1)); }},
  };
  return r;
}

bool singular_a(const mpq_class& a) { return a == 0 || a == 1 || a == -1; }

mpq_class cubic(const mpq_class& a, const mpq_class& x) {
  return x * x * x + oracle::fam_A(a) * x * x + oracle::fam_B(a) * x;
}

bool excluded(const Rational& a) { return singular_a(Q(a)); }

}  // namespace

TEST(Family, CoefficientsAndSingularParameters) {
  oracle::RandomRational rnd(31);
  for (int i = 0; i < 30; ++i) {
    const Rational a = rnd.draw(excluded);
    EXPECT_EQ(Q(family_A(a)), oracle::fam_A(Q(a)));
    EXPECT_EQ(Q(family_B(a)), oracle::fam_B(Q(a)));
    EXPECT_EQ(family_discriminant(a), family_curve(a).curve.discriminant());
  }
  for (long a : {0L, 1L, -1L}) EXPECT_EQ(code_of([&] { (void)family_curve(Rational(a)); }), ErrorCode::SingularParameter);
  EXPECT_EQ(family_curve(Rational(10)).curve, Curve::ab(5761, 160000));
}

TEST(Family, TableThreeRowsOnRandomK) {
  oracle::RandomRational rnd(8080, 40, 20);
  for (int i = 1; i <= 8; ++i) {
    const RowOracle& row = rows()[i - 1];
    int done = 0;
    while (done < 5) {
      const Rational k = rnd();
      const auto a = row.a_of_k(Q(k));
      if (!a || singular_a(*a)) {
        EXPECT_THROW((void)subfamily(i, k), Error) << "row " << i << " k=" << k;
        continue;
      }
      const SubfamilyInstance inst = subfamily(i, k);
      EXPECT_EQ(Q(inst.a), *a) << "row " << i << " k=" << k;
      const mpq_class x = row.x_of_a(*a);
      EXPECT_EQ(Q(inst.x_candidate), x);
      const auto y = oracle::exact_sqrt(cubic(*a, x));
      ASSERT_TRUE(y) << "row " << i << " k=" << k;
      ASSERT_TRUE(inst.point);
      EXPECT_EQ(Q(inst.point->x()), x);
      EXPECT_EQ(abs(Q(inst.point->y())), *y);
      ++done;
    }
  }
  EXPECT_EQ(code_of([] { (void)subfamily(9, Rational(1)); }), ErrorCode::InvalidInput);
}

TEST(Family, SingularKValuesAreRejected) {
  for (int i = 1; i <= 8; ++i)
    for (const auto& k : subfamily_singular_k(i))
      EXPECT_EQ(code_of([&] { (void)subfamily(i, k); }), ErrorCode::SingularParameter) << "row " << i << " k=" << k;
  EXPECT_EQ(subfamily_singular_k(1), (std::vector<Rational>{1, 2, 3}));
}

TEST(Family, SubfamilyFourFrozenInstance) {
  const SubfamilyInstance inst = subfamily(4, Rational(3));
  EXPECT_EQ(inst.a, Rational(-3, 4));
  EXPECT_EQ(inst.x_candidate, Rational(-75, 32));
  EXPECT_EQ(cubic(Q(inst.a), Q(inst.x_candidate)), Q("540225/262144"));
  EXPECT_EQ(inst.point->y().abs(), Rational(735, 512));
}

TEST(Family, SubfamilyOneClearedModel) {
  // Printed polynomials, lowest degree last for readability.
  auto A = [](const mpq_class& k) {
    const mpq_class k2 = k * k, k4 = k2 * k2;
    return mpq_class(-2 * (k4 * k4 - 16 * k4 * k2 * k + 76 * k4 * k2 - 16 * k4 * k - 1226 * k4 + 5456 * k2 * k -
                           11348 * k2 + 11984 * k - 5167));
  };
  auto B = [](const mpq_class& k) {
    const mpq_class p = k * k - 8 * k + 11, q = k * k - 5;
    return mpq_class(p * p * p * p * q * q * q * q);
  };
  auto rhs = [](const mpq_class& k) {
    return mpq_class(-4096 * (k - 1) * (k - 1) * (k - 2) * (k - 2) * (k - 2) * (k - 2) * (k - 3) * (k - 3) *
                     (k * k + 2 * k - 7) * (k * k - 10 * k + 17));
  };
  oracle::RandomRational rnd(1234, 50, 25);
  const Polynomial pa = subfamily1_A(), pb = subfamily1_B();
  for (int i = 0; i < 10; ++i) {
    const Rational k = rnd.draw([](const Rational& r) { return r == 1 || r == 2 || r == 3; });
    const mpq_class qk = Q(k);
    EXPECT_EQ(Q(pa(k)), A(qk)) << k;
    EXPECT_EQ(Q(pb(k)), B(qk)) << k;
    EXPECT_EQ(A(qk) * A(qk) - 4 * B(qk), rhs(qk)) << k;
    const ClearedCurve cc = subfamily1_cleared(k);
    EXPECT_EQ(Q(cc.curve.A()), A(qk));
    EXPECT_EQ(Q(cc.curve.B()), B(qk));
    const mpq_class q4 = (qk * qk - 5) * (qk * qk - 5) * (qk * qk - 5) * (qk * qk - 5);
    EXPECT_EQ(Q(cc.point.x()), q4);
    EXPECT_EQ(abs(Q(cc.point.y())), abs(mpq_class(16 * (qk - 2) * (qk * qk - 4 * qk + 5) * q4)));
    EXPECT_TRUE(on_curve(cc.curve, cc.point));
  }
  for (long k : {1L, 2L, 3L}) EXPECT_EQ(code_of([&] { (void)subfamily1_cleared(Rational(k)); }), ErrorCode::SingularParameter);
  const ClearedCurve e0 = subfamily1_cleared(Rational(0));
  EXPECT_EQ(e0.curve, Curve::ab(10334, 9150625));
  EXPECT_EQ(subfamily1_cleared(Rational(4)).curve, e0.curve);
}

TEST(Family, XEqualsFourFactorization) {
  const Polynomial lhs{5, -4, -2, -4, 5};
  const Polynomial rhs = Polynomial{-1, 1}.pow(2) * Polynomial{5, 6, 5};
  EXPECT_EQ(lhs, rhs);
  oracle::RandomRational rnd(55);
  for (int i = 0; i < 20; ++i) {
    const Rational a = rnd.draw(excluded);
    EXPECT_EQ(cubic(Q(a), 4), 16 * Q(lhs(a)));
  }
}

TEST(Family, ReflectionSymmetry) {
  oracle::RandomRational rnd(66);
  for (int i = 0; i < 20; ++i) {
    const Rational a = rnd.draw(excluded);
    const Curve c = family_curve(a).curve;
    for (const auto& t : named_torsion(a)) {
      if (t.point.x().is_zero()) continue;
      const Rational x = t.point.x(), y = t.point.y();
      const CurvePoint r(c.B() / x, c.B() * y / (x * x));
      EXPECT_TRUE(on_curve(c, r)) << a << " " << t.point.str();
    }
  }
  const Curve e10 = family_curve(Rational(10)).curve;
  CurvePoint p = CurvePoint(Rational(-32), Rational(-864));
  for (int n = 1; n <= 4; ++n, p = add(e10, p, CurvePoint(Rational(-32), Rational(-864)))) {
    EXPECT_TRUE(on_curve(e10, CurvePoint(e10.B() / p.x(), e10.B() * p.y() / (p.x() * p.x()))));
  }
}

TEST(Family, ZTwoZEightParametrization) {
  oracle::RandomRational rnd(20, 30, 30);
  for (int i = 0; i < 20; ++i) {
    const Rational r = rnd.draw([](const Rational& v) { return v.is_zero() || v == 1 || v == -1; });
    const mpq_class qr = Q(r);
    const Rational a = z2z8_parameter(r);
    EXPECT_EQ(Q(a), -(qr + 1) / (qr * (qr - 1)));
    EXPECT_EQ(z2z8_parameter_from_slope(Rational(2) * r - Rational(1)), a);
    EXPECT_TRUE(has_full_two_torsion(a)) << r;
    std::vector<CurvePoint> hints;
    for (const auto& t : named_torsion(a)) hints.push_back(t.point);
    const auto t = torsion_subgroup(family_curve(a).curve, hints);
    EXPECT_EQ(t.str(), "Z/2xZ/8") << r;
    EXPECT_EQ(t.certainty, Certainty::Proven) << r;
  }
  for (long r : {0L, 1L, -1L}) EXPECT_EQ(code_of([&] { (void)z2z8_parameter(Rational(r)); }), ErrorCode::ExcludedParameter);
}

TEST(Family, IsogenyImagesLandOnDualCurve) {
  oracle::RandomRational rnd(4242);
  std::mt19937_64 pick(1);
  for (int i = 0; i < 20; ++i) {
    const Rational a = rnd.draw(excluded);
    const Curve c = family_curve(a).curve;
    const auto named = named_torsion(a);
    // A random non-kernel combination of the order-4 and order-8 points.
    CurvePoint p = add(c, named[1 + pick() % 6].point, named[1 + pick() % 6].point);
    if (p.is_infinity() || p == CurvePoint(Rational(0), Rational(0))) p = named[3].point;
    const CurvePoint img = isogeny_to_dual(a, p);
    const mpq_class A = oracle::fam_A(Q(a)), B = oracle::fam_B(Q(a));
    const oracle::W dual = oracle::ab(-2 * A, A * A - 4 * B);
    const mpq_class x = Q(p.x()), y = Q(p.y());
    const oracle::Pt want = oracle::Pt::at(y * y / (x * x), y * (B - x * x) / (x * x));
    EXPECT_TRUE(oracle::on(dual, want));
    EXPECT_EQ(oracle::Pt::at(Q(img.x()), Q(img.y())), want);
    EXPECT_EQ(dual_curve(a), Curve::ab(Rational(-2 * A), Rational(A * A - 4 * B)));
  }
  EXPECT_EQ(code_of([] { (void)isogeny_to_dual(Rational(10), CurvePoint(Rational(0), Rational(0))); }),
            ErrorCode::KernelPoint);
}

TEST(Family, IsogenyIsAHomomorphismAndComposesToDoubling) {
  const Rational a(10);
  const Curve c = family_curve(a).curve;
  const Curve d = dual_curve(a);
  const CurvePoint g(Rational(-32), Rational(-864));
  const CurvePoint t = named_torsion(a)[3].point;
  EXPECT_EQ(isogeny_to_dual(a, add(c, g, t)), add(d, isogeny_to_dual(a, g), isogeny_to_dual(a, t)));
  // The second isogeny lands on y^2 = x^3 + 4A x^2 + 16B x, which is E_a
  // scaled by (x, y) -> (4x, 8y).
  const Curve dd = two_isogenous(d);
  EXPECT_EQ(dd, Curve::ab(Rational(4) * c.A(), Rational(16) * c.B()));
  for (const CurvePoint& p : {g, add(c, g, t), scalar_mul(c, 3, g)}) {
    const CurvePoint back = two_isogeny(d, isogeny_to_dual(a, p));
    const CurvePoint twice = scalar_mul(c, 2, p);
    EXPECT_EQ(back.x(), Rational(4) * twice.x());
    EXPECT_EQ(back.y().abs(), (Rational(8) * twice.y()).abs());
  }
}

TEST(Family, GeometricProgressions) {
  oracle::RandomRational rnd(5050);
  for (int i = 0; i < 50; ++i) {
    const Rational a = rnd.draw(excluded);
    const auto g = gp_points(a);
    ASSERT_EQ(g.size(), 5u);
    for (int e = 0; e < 5; ++e) {
      EXPECT_EQ(g[e].exponent, e);
      EXPECT_EQ(g[e].x, Rational(4) * a.pow(static_cast<unsigned>(e)));
      EXPECT_EQ(g[e].point.has_value(), oracle::exact_sqrt(cubic(Q(a), Q(g[e].x))).has_value());
    }
    EXPECT_TRUE(g[1].point && g[2].point && g[3].point);
    EXPECT_EQ(g[0].point.has_value(), g[4].point.has_value()) << a;
  }
  // Subfamily 1 always carries the full length-five progression.
  for (long k : {0L, 4L, -3L, 7L}) {
    const auto g = gp_points(subfamily(1, Rational(k)).a);
    EXPECT_TRUE(g[0].point && g[4].point) << k;
  }
}

TEST(Family, ConditionalProgressionQuartic) {
  // a = (k^2-2k+2)/(k^2+2): x = 4 lies on E_a exactly when
  // 4k^4 - 8k^3 + 21k^2 - 16k + 16 is a square, since
  // 5P^2 + 6PQ + 5Q^2 = 4(4k^4 - 8k^3 + 21k^2 - 16k + 16).
  oracle::RandomRational rnd(777);
  for (int i = 0; i < 30; ++i) {
    const mpq_class k = Q(rnd());
    const mpq_class P = k * k - 2 * k + 2, Qd = k * k + 2;
    const mpq_class quartic = 4 * k * k * k * k - 8 * k * k * k + 21 * k * k - 16 * k + 16;
    EXPECT_EQ(5 * P * P + 6 * P * Qd + 5 * Qd * Qd, 4 * quartic);
  }
  const Rational k(32, 33);
  const Rational a = (k * k - Rational(2) * k + Rational(2)) / (k * k + Rational(2));
  const auto g = gp_points(a);
  EXPECT_TRUE(g[0].point && g[4].point);
}

TEST(Family, EPrimeMap) {
  const Curve ep = eprime_curve();
  const CurvePoint p1(Rational(-24), Rational(405)), p2(Rational(-38), Rational(125)), t(Rational(12), Rational(675));
  const EprimeImage i1 = a_from_eprime_point(Rational(-24), Rational(405));
  EXPECT_EQ(i1.a, Rational(-60, 41));
  EXPECT_EQ(i1.b, Rational(11431, 1681));
  const EprimeImage it = a_from_eprime_point(Rational(12), Rational(675));
  EXPECT_EQ(it.a, Rational(-4));
  EXPECT_EQ(it.b, Rational(25));
  const EprimeImage i2 = a_from_eprime_point(Rational(-38), Rational(125));
  EXPECT_EQ(i2.a, Rational(-2, 3));
  EXPECT_EQ(i2.b, Rational(35, 9));
  EXPECT_EQ(code_of([] { (void)a_from_eprime_point(Rational(-38), Rational(128)); }), ErrorCode::PointNotOnCurve);
  // (273/4, 8775/8) is a rational point where the map to a has a pole.
  EXPECT_TRUE(on_curve(ep, CurvePoint(Rational(273, 4), Rational(8775, 8))));
  EXPECT_EQ(code_of([] { (void)a_from_eprime_point(Rational(273, 4), Rational(8775, 8)); }), ErrorCode::MapPole);

  int checked = 0;
  for (long m = -2; m <= 2; ++m)
    for (long n = -2; n <= 2; ++n)
      for (long s = 0; s < 3; ++s) {
        const CurvePoint q = add(ep, add(ep, scalar_mul(ep, m, p1), scalar_mul(ep, n, p2)), scalar_mul(ep, s, t));
        if (q.is_infinity()) continue;
        const mpq_class p = Q(q.x()), qq = Q(q.y());
        if (12 * p == 819) {
          EXPECT_EQ(code_of([&] { (void)a_from_eprime_point(q.x(), q.y()); }), ErrorCode::MapPole);
          continue;
        }
        const mpq_class a = (15 * p + 2 * qq + 1170) / (12 * p - 819);
        const EprimeImage im = a_from_eprime_point(q.x(), q.y());
        EXPECT_EQ(Q(im.a), a);
        EXPECT_EQ(Q(im.b) * Q(im.b), a * a * a * a - 5 * a * a * a - 2 * a * a - 20 * a + 1);
        // The point exists for the x-coordinate -a^3 on E_a.
        if (!singular_a(a)) {
          EXPECT_TRUE(oracle::exact_sqrt(cubic(a, -a * a * a))) << q.str();
          ++checked;
        }
      }
  EXPECT_GT(checked, 50);
}
