#include "bqec/curve.hpp"

#include <vector>

#include "bqec/arith.hpp"
#include "bqec/error.hpp"

namespace bqec {

const Rational& CurvePoint::x() const {
  if (!affine_) throw Error(ErrorCode::InfinityPoint, "x of the point at infinity");
  return x_;
}

const Rational& CurvePoint::y() const {
  if (!affine_) throw Error(ErrorCode::InfinityPoint, "y of the point at infinity");
  return y_;
}

std::string CurvePoint::str() const {
  if (!affine_) return "O";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

Curve Curve::ab(Rational A, Rational B) {
  Curve c;
  c.form_ = CurveForm::AB;
  c.a1_ = 0;
  c.a2_ = std::move(A);
  c.a3_ = 0;
  c.a4_ = std::move(B);
  c.a6_ = 0;
  c.disc_ = Rational(16) * c.a4_ * c.a4_ * (c.a2_ * c.a2_ - Rational(4) * c.a4_);
  if (c.disc_.is_zero()) throw Error(ErrorCode::SingularCurve, "y^2 = x^3 + A x^2 + B x has zero discriminant");
  return c;
}

Curve Curve::general(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6) {
  Curve c;
  c.form_ = CurveForm::General;
  c.a1_ = std::move(a1);
  c.a2_ = std::move(a2);
  c.a3_ = std::move(a3);
  c.a4_ = std::move(a4);
  c.a6_ = std::move(a6);
  const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
  c.disc_ = -b2 * b2 * b8 - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
  if (c.disc_.is_zero()) throw Error(ErrorCode::SingularCurve, "Weierstrass model has zero discriminant");
  return c;
}

const Rational& Curve::A() const {
  if (form_ != CurveForm::AB) throw Error(ErrorCode::InvalidInput, "A() on a general-form curve");
  return a2_;
}

const Rational& Curve::B() const {
  if (form_ != CurveForm::AB) throw Error(ErrorCode::InvalidInput, "B() on a general-form curve");
  return a4_;
}

Rational Curve::b2() const { return a1_ * a1_ + Rational(4) * a2_; }
Rational Curve::b4() const { return Rational(2) * a4_ + a1_ * a3_; }
Rational Curve::b6() const { return a3_ * a3_ + Rational(4) * a6_; }
Rational Curve::b8() const {
  return a1_ * a1_ * a6_ + Rational(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
}
Rational Curve::c4() const {
  const Rational b2v = b2();
  return b2v * b2v - Rational(24) * b4();
}

std::string Curve::str() const {
  if (form_ == CurveForm::AB) return "y^2 = x^3 + (" + a2_.str() + ")x^2 + (" + a4_.str() + ")x";
  return "y^2 + (" + a1_.str() + ")xy + (" + a3_.str() + ")y = x^3 + (" + a2_.str() + ")x^2 + (" +
         a4_.str() + ")x + (" + a6_.str() + ")";
}

bool on_curve(const Curve& c, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  const Rational& y = p.y();
  const Rational lhs = y * (y + c.a1() * x + c.a3());
  const Rational rhs = ((x + c.a2()) * x + c.a4()) * x + c.a6();
  return lhs == rhs;
}

CurvePoint negate(const Curve& c, const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint(p.x(), -p.y() - c.a1() * p.x() - c.a3());
}

namespace detail {

CurvePoint add_unchecked(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rational& x1 = p.x();
  const Rational& y1 = p.y();
  const Rational& x2 = q.x();
  const Rational& y2 = q.y();
  Rational lambda;
  if (x1 == x2) {
    // Same abscissa: either P = -Q or a doubling.
    const Rational denom = y1 + y2 + c.a1() * x2 + c.a3();
    if (denom.is_zero()) return CurvePoint::infinity();
    lambda = (Rational(3) * x1 * x1 + Rational(2) * c.a2() * x1 + c.a4() - c.a1() * y1) /
             (Rational(2) * y1 + c.a1() * x1 + c.a3());
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rational x3 = lambda * (lambda + c.a1()) - c.a2() - x1 - x2;
  Rational y3 = -(lambda + c.a1()) * x3 - (y1 - lambda * x1) - c.a3();
  return CurvePoint(std::move(x3), std::move(y3));
}

}  // namespace detail

CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str());
  if (!on_curve(c, q)) throw Error(ErrorCode::PointNotOnCurve, q.str());
  return detail::add_unchecked(c, p, q);
}

CurvePoint scalar_mul(const Curve& c, long n, const CurvePoint& p) {
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str());
  CurvePoint base = n < 0 ? negate(c, p) : p;
  unsigned long k = n < 0 ? 0ul - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::infinity();
  while (k > 0) {
    if (k & 1ul) acc = detail::add_unchecked(c, acc, base);
    k >>= 1;
    if (k > 0) base = detail::add_unchecked(c, base, base);
  }
  return acc;
}

Rational j_invariant(const Curve& c) {
  const Rational c4 = c.c4();
  return c4 * c4 * c4 / c.discriminant();
}

Rational lift_discriminant(const Curve& c, const Rational& x) {
  const Rational cubic = ((x + c.a2()) * x + c.a4()) * x + c.a6();
  if (c.is_ab_form()) return cubic;
  const Rational lin = c.a1() * x + c.a3();
  return lin * lin + Rational(4) * cubic;
}

std::optional<CurvePoint> lift_x(const Curve& c, const Rational& x) {
  auto root = lift_discriminant(c, x).sqrt();
  if (!root) return std::nullopt;
  if (c.is_ab_form()) return CurvePoint(x, *root);
  return CurvePoint(x, (*root - c.a1() * x - c.a3()) / Rational(2));
}

CurvePoint IntegralModel::to_model(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  const Rational l(lambda);
  return CurvePoint(p.x() * l * l, p.y() * l * l * l);
}

CurvePoint IntegralModel::from_model(const CurvePoint& p) const {
  if (p.is_infinity()) return p;
  const Rational l(lambda);
  return CurvePoint(p.x() / (l * l), p.y() / (l * l * l));
}

namespace {

// Smallest lambda with den | lambda^k.
Integer min_root_multiple(const Integer& den, unsigned k) {
  Integer out = 1;
  const Factorization f = factor(den);
  for (const auto& [p, e] : f.primes) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), (e + k - 1) / k);
    out *= pk;
  }
  // An unfactored cofactor keeps integrality but may not be minimal.
  out *= f.cofactor;
  return out;
}

}  // namespace

IntegralModel integral_model(const Curve& c) {
  if (!c.is_ab_form()) throw Error(ErrorCode::InvalidInput, "integral_model needs an AB-form curve");
  const Integer la = min_root_multiple(c.A().den(), 2);
  const Integer lb = min_root_multiple(c.B().den(), 4);
  Integer lambda;
  mpz_lcm(lambda.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
  const Rational l2 = Rational(lambda) * Rational(lambda);
  return IntegralModel{Curve::ab(c.A() * l2, c.B() * l2 * l2), lambda};
}

std::uint64_t count_points_mod_p(const Curve& c, std::uint32_t p) {
  if (p < 3 || (!c.is_ab_form() && p <= 3))
    throw Error(ErrorCode::BadPrime, "p = " + std::to_string(p) + " is excluded for this model");
  const std::uint64_t P = p;
  std::vector<std::uint64_t> coef;  // cubic in x whose Legendre sum gives the count
  if (c.is_ab_form()) {
    coef = {0, reduce_mod(c.B(), P), reduce_mod(c.A(), P), 1};
  } else {
    coef = {reduce_mod(c.b6(), P), 2 * reduce_mod(c.b4(), P) % P, reduce_mod(c.b2(), P), 4};
  }
  if (reduce_mod(c.discriminant(), P) == 0)
    throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides the discriminant");
  long long sum = 0;
  for (std::uint64_t x = 0; x < P; ++x) {
    const std::uint64_t v = (((coef[3] * x + coef[2]) % P * x + coef[1]) % P * x + coef[0]) % P;
    sum += legendre(v, P);
  }
  return static_cast<std::uint64_t>(static_cast<long long>(P) + 1 + sum);
}

}  // namespace bqec
