#include <gtest/gtest.h>

#include <cmath>

#include "bqec/curve.hpp"
#include "bqec/error.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace bqec;
using oracle::Q;

namespace {

oracle::W to_w(const Curve& c) { return {Q(c.a1()), Q(c.a2()), Q(c.a3()), Q(c.a4()), Q(c.a6())}; }

oracle::Pt to_pt(const CurvePoint& p) {
  return p.is_infinity() ? oracle::Pt{} : oracle::Pt::at(Q(p.x()), Q(p.y()));
}

CurvePoint P(const char* x, const char* y) { return CurvePoint(Rational::parse(x), Rational::parse(y)); }

const Curve& e10() {
  static const Curve c = Curve::ab(5761, 160000);
  return c;
}

// y^2 - 12xy - 8y = x^3 - 6x^2 + 124x - 744, rank one with generator (-18, -96).
const Curve& aux() {
  static const Curve c = Curve::general(-12, -6, -8, 124, -744);
  return c;
}


}  // namespace

TEST(Curve, RejectsSingularModels) {
  EXPECT_EQ(code_of([] { (void)Curve::ab(2, 1); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([] { (void)Curve::ab(1, 0); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([] { (void)Curve::general(0, 0, 0, 0, 0); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([] { (void)Curve::general(0, 0, 0, -3, 2); }), ErrorCode::SingularCurve);
}

TEST(Curve, AccessorsAndPointBasics) {
  EXPECT_EQ(e10().A(), Rational(5761));
  EXPECT_EQ(code_of([] { (void)aux().A(); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { (void)CurvePoint::infinity().x(); }), ErrorCode::InfinityPoint);
  EXPECT_EQ(CurvePoint::infinity().str(), "O");
  EXPECT_EQ(P("3/4", "-1").str(), "(3/4, -1)");
}

TEST(Curve, DiscriminantClosedFormOnRandomFamilyMembers) {
  oracle::RandomRational rnd(2024);
  for (int i = 0; i < 50; ++i) {
    const Rational a = rnd.draw([](const Rational& r) {
      const mpq_class q = Q(r);
      return q == 0 || q == 1 || q == -1 || q * q - 6 * q + 1 == 0;
    });
    const mpq_class qa = Q(a), A = oracle::fam_A(qa), B = oracle::fam_B(qa);
    const Curve c = Curve::ab(Rational(A), Rational(B));
    EXPECT_EQ(Q(c.discriminant()), 16 * B * B * (A * A - 4 * B)) << a;
    const mpq_class a2 = qa * qa, a4 = a2 * a2;
    EXPECT_EQ(Q(c.discriminant()), 4096 * a4 * a4 * (qa + 1) * (qa + 1) * (qa - 1) * (qa - 1) * (qa - 1) * (qa - 1) *
                                       (a2 - 6 * qa + 1))
        << a;
    const mpq_class c4 = 16 * (A * A - 3 * B);
    EXPECT_EQ(Q(j_invariant(c)), c4 * c4 * c4 / Q(c.discriminant())) << a;
  }
}

TEST(Curve, FrozenInvariants) {
  EXPECT_EQ(j_invariant(e10()).str(), "34995050144226882178561/3254912100000000");
  // Standard general-model invariants for the rank-one auxiliary curve.
  EXPECT_EQ(aux().b2(), Rational(120));
  EXPECT_EQ(aux().b4(), Rational(344));
  EXPECT_EQ(aux().b6(), Rational(-2912));
}

TEST(Curve, AdditionAgreesWithTextbookOracle) {
  const CurvePoint g = P("-32", "-864"), t = P("40", "3960");
  const CurvePoint h = P("-18", "-96");
  for (const auto& [c, gens] : {std::pair{e10(), std::vector{g, t}}, std::pair{aux(), std::vector{h}}}) {
    const oracle::W w = to_w(c);
    std::vector<CurvePoint> pts{CurvePoint::infinity()};
    for (const auto& base : gens)
      for (long n = -3; n <= 3; ++n) pts.push_back(scalar_mul(c, n, base));
    for (const auto& p : pts) {
      ASSERT_TRUE(on_curve(c, p)) << p.str();
      EXPECT_EQ(to_pt(negate(c, p)), oracle::neg(w, to_pt(p)));
      for (const auto& q : pts) EXPECT_EQ(to_pt(add(c, p, q)), oracle::add(w, to_pt(p), to_pt(q))) << p.str() << " " << q.str();
    }
  }
}

TEST(Curve, GroupAxiomsOnRandomSmallMultiples) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> k(-4, 4);
  const CurvePoint g = P("-32", "-864"), t = P("40", "3960");
  const CurvePoint o = CurvePoint::infinity();
  for (int trial = 0; trial < 25; ++trial) {
    const CurvePoint p = add(e10(), scalar_mul(e10(), k(rng), g), scalar_mul(e10(), k(rng), t));
    const CurvePoint q = add(e10(), scalar_mul(e10(), k(rng), g), scalar_mul(e10(), k(rng), t));
    const CurvePoint r = add(e10(), scalar_mul(e10(), k(rng), g), scalar_mul(e10(), k(rng), t));
    EXPECT_EQ(add(e10(), p, o), p);
    EXPECT_EQ(add(e10(), p, negate(e10(), p)), o);
    EXPECT_EQ(add(e10(), p, q), add(e10(), q, p));
    EXPECT_EQ(add(e10(), add(e10(), p, q), r), add(e10(), p, add(e10(), q, r)));
  }
  const CurvePoint h = P("-18", "-96");
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      EXPECT_EQ(add(aux(), scalar_mul(aux(), m, h), scalar_mul(aux(), n, h)), scalar_mul(aux(), m + n, h));
}

TEST(Curve, CheckedAdditionRejectsStrangers) {
  EXPECT_EQ(code_of([] { (void)add(e10(), P("1", "1"), P("-32", "-864")); }), ErrorCode::PointNotOnCurve);
}

TEST(Curve, LiftX) {
  const auto p = lift_x(e10(), Rational(-32));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, P("-32", "864"));
  EXPECT_FALSE(lift_x(e10(), Rational(1)));
  const auto q = lift_x(aux(), Rational(-18));
  ASSERT_TRUE(q);
  EXPECT_TRUE(on_curve(aux(), *q));
  EXPECT_EQ(*q, P("-18", "-96"));
  // (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6) at x = -18: 208^2 - 4 * 10752.
  EXPECT_EQ(lift_discriminant(aux(), Rational(-18)), Rational(256));
}

TEST(Curve, IntegralModel) {
  const Curve c = Curve::ab(Rational(-22664, 625), Rational(3111696, 625));
  const IntegralModel m = integral_model(c);
  EXPECT_EQ(m.lambda, 25);
  EXPECT_EQ(m.curve.A(), Rational(-22664));
  EXPECT_EQ(m.curve.B(), Rational(Integer("1944810000")));
  const CurvePoint p = P("1764", "366912/5");
  const CurvePoint pm = m.to_model(p);
  EXPECT_EQ(pm, CurvePoint(Rational(1764 * 625), Rational(366912L * 15625 / 5)));
  EXPECT_TRUE(on_curve(m.curve, pm));
  EXPECT_EQ(m.from_model(pm), p);
  EXPECT_EQ(m.to_model(CurvePoint::infinity()), CurvePoint::infinity());
}

TEST(Curve, IntegralModelIsMinimalScaling) {
  oracle::RandomRational rnd(99);
  for (int i = 0; i < 30; ++i) {
    const Rational a = rnd.draw([](const Rational& r) {
      const mpq_class q = Q(r);
      return q == 0 || q == 1 || q == -1;
    });
    const Curve c = Curve::ab(Rational(oracle::fam_A(Q(a))), Rational(oracle::fam_B(Q(a))));
    const IntegralModel m = integral_model(c);
    ASSERT_TRUE(m.curve.A().is_integer() && m.curve.B().is_integer()) << a;
    mpz_class l = m.lambda;
    // Dividing lambda by any of its primes must break integrality.
    for (mpz_class p = 2; p <= l; ++p) {
      if (l % p != 0 || mpz_probab_prime_p(p.get_mpz_t(), 20) == 0) continue;
      const mpq_class s = mpq_class(l / p);
      const mpq_class A2 = Q(c.A()) * s * s, B4 = Q(c.B()) * s * s * s * s;
      EXPECT_FALSE(A2.get_den() == 1 && B4.get_den() == 1) << a << " lambda " << l.get_str();
    }
  }
}

TEST(Curve, PointCountsMatchBruteForceAndHasse) {
  struct Case {
    Curve c;
    std::vector<long> coeffs;
  };
  const std::vector<Case> cases{
      {e10(), {0, 5761, 0, 160000, 0}},
      {aux(), {-12, -6, -8, 124, -744}},
      {Curve::general(1, 0, 0, -17, -23), {1, 0, 0, -17, -23}},
      {Curve::general(0, 0, 0, 7668, 361881), {0, 0, 0, 7668, 361881}},
  };
  for (const auto& cs : cases) {
    const mpz_class disc = Q(cs.c.discriminant()).get_num();
    for (long p = 5; p <= 101; ++p) {
      if (!oracle::is_prime(p)) continue;
      if (disc % p == 0) {
        EXPECT_EQ(code_of([&] { (void)count_points_mod_p(cs.c, static_cast<std::uint32_t>(p)); }), ErrorCode::BadReduction);
        continue;
      }
      const auto n = static_cast<long>(count_points_mod_p(cs.c, static_cast<std::uint32_t>(p)));
      EXPECT_EQ(n, oracle::count_points(cs.coeffs, p)) << cs.c.str() << " p=" << p;
      EXPECT_LE(std::abs(n - p - 1), 2.0 * std::sqrt(static_cast<double>(p)));
    }
  }
}

TEST(Curve, FrozenPointCounts) {
  EXPECT_EQ(count_points_mod_p(e10(), 7), 8u);
  EXPECT_EQ(count_points_mod_p(e10(), 13), 16u);
  EXPECT_EQ(code_of([] { (void)count_points_mod_p(e10(), 11); }), ErrorCode::BadReduction);
  EXPECT_EQ(count_points_mod_p(Curve::ab(0, 1), 3), 4u);
  EXPECT_EQ(code_of([] { (void)count_points_mod_p(aux(), 3); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { (void)count_points_mod_p(Curve::ab(Rational(1, 7), 1), 7); }), ErrorCode::BadPrime);
}
