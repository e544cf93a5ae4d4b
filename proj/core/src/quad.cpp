#include "bqec/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "bqec/curve.hpp"
#include "bqec/family.hpp"

namespace bqec {

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }
}  // namespace

Quadrilateral::Quadrilateral(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0 || d.sign() <= 0)
    throw Error(ErrorCode::InvalidInput, "sides must be positive: " + str());
}

std::string Quadrilateral::str() const {
  return "{" + a.str() + "," + b.str() + "," + c.str() + "," + d.str() + "}";
}

BicentricData validate_bicentric(const Quadrilateral& q) {
  const auto& [a, b, c, d] = q;
  if (a + c != b + d) throw Error(ErrorCode::NotPitot, q.str() + " has a+c != b+d");
  BicentricData out;
  out.s = a + c;
  out.area_sq = a * b * c * d;
  const Rational product = (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
  out.circum_sq = product / (r(16) * out.area_sq);
  out.in_sq = out.area_sq / (out.s * out.s);
  out.n_sq = out.circum_sq / out.in_sq;
  out.n = out.n_sq.sqrt();
  return out;
}

Rational n_ratio(const Quadrilateral& q) {
  const BicentricData data = validate_bicentric(q);
  if (!data.n) throw Error(ErrorCode::IrrationalN, "N^2 = " + data.n_sq.str() + " for " + q.str());
  return *data.n;
}

Rational quartic_value(const Rational& a, const Rational& s) {
  const Rational ap1 = a + r(1);
  const Rational mid = (((a + r(8)) * a + r(10)) * a + r(8)) * a + r(1);
  return ap1 * ap1 * s.pow(4) - r(2) * ap1.pow(3) * s.pow(3) + mid * s * s -
         r(4) * a * ap1 * (a * a + a + r(1)) * s + r(4) * a * a * (a * a + r(1));
}

QuadPoint quad_to_point(const Quadrilateral& q) {
  const BicentricData data = validate_bicentric(q);
  if (!data.n) throw Error(ErrorCode::IrrationalN, "N^2 = " + data.n_sq.str() + " for " + q.str());
  const Rational a = q.a / q.d;
  const Rational s = (q.a + q.c) / q.d;
  const FamilyCurve e = family_curve(a);
  const auto t = quartic_value(a, s).sqrt();
  if (!t) throw Error(ErrorCode::IrrationalN, "quartic is not a square for " + q.str());
  const Rational ap1 = a + r(1);
  const Rational mid = (((a + r(8)) * a + r(10)) * a + r(8)) * a + r(1);
  const Rational u = r(-2) * (a.pow(3) * (s - r(2)) - a * a * (s * s - r(3) * s + r(2)) -
                              a * (r(2) * s * s - r(3) * s + r(2) + *t) - s * s + s - *t);
  const Rational v = r(2) * ap1 *
                     (r(2) * s.pow(3) * ap1 * ap1 - r(3) * s * s * ap1.pow(3) + r(2) * s * *t * ap1 + s * mid -
                      *t * ap1 * ap1 - r(2) * a * ap1 * (a * a + a + r(1)));
  if (!on_curve(e.curve, CurvePoint(u, v)))
    throw Error(ErrorCode::PointNotOnCurve, "quadrilateral image (" + u.str() + ", " + v.str() + ")");
  return QuadPoint{a, s, *t, u, v};
}

Rational point_to_s(const Rational& a, const Rational& u, const Rational& v) {
  const FamilyCurve e = family_curve(a);
  if (!on_curve(e.curve, CurvePoint(u, v)))
    throw Error(ErrorCode::PointNotOnCurve, "(" + u.str() + ", " + v.str() + ") not on E_" + a.str());
  if (u.is_zero()) throw Error(ErrorCode::ZeroU, "u = 0 has no quadrilateral");
  const Rational ap1 = a + r(1);
  return (u * ap1 * ap1 + v) / (r(2) * u * ap1);
}

Quadrilateral primitive_integer_form(const Quadrilateral& q) {
  Integer l = 1;
  Integer g = 0;
  const auto sides = q.sides();
  for (const auto& side : sides) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), side.den().get_mpz_t());
  std::array<Integer, 4> ints;
  for (size_t i = 0; i < 4; ++i) {
    const Rational& side = sides[i];
    ints[i] = side.num() * (l / side.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  return Quadrilateral(Rational(Integer(ints[0] / g)), Rational(Integer(ints[1] / g)), Rational(Integer(ints[2] / g)), Rational(Integer(ints[3] / g)));
}

Quadrilateral point_to_quad(const Rational& a, const Rational& u, const Rational& v) {
  const Rational s = point_to_s(a, u, v);
  if (a.sign() <= 0) throw NotRealizable("a", a);
  const Rational b = s - r(1);
  if (b.sign() <= 0) throw NotRealizable("b", b);
  const Rational c = s - a;
  if (c.sign() <= 0) throw NotRealizable("c", c);
  return primitive_integer_form(Quadrilateral(a, b, c, r(1)));
}

Trapezoid trapezoid(const Rational& k) {
  if (k.sign() <= 0 || k >= r(1)) throw Error(ErrorCode::OutOfRange, "k must lie in (0, 1), got " + k.str());
  const Rational k2 = k * k;
  Quadrilateral q(k2 + r(1), r(2) - r(2) * k, k2 + r(1), r(2) * k2 + r(2) * k);
  const Rational n = (k2 + r(1)) * (k2 - r(2) * k - r(1)) / (r(4) * k * (k2 - r(1)));
  return Trapezoid{std::move(q), n};
}

namespace {

using u128 = unsigned __int128;

bool is_square_u128(u128 v, u128* root) {
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  while (x * x > v) --x;
  while ((x + 1) * (x + 1) <= v) ++x;
  *root = x;
  return x * x == v;
}

bool is_canonical(const std::array<long, 4>& q) {
  const auto [a, b, c, d] = q;
  const std::array<std::array<long, 4>, 7> images{{
      {b, c, d, a}, {c, d, a, b}, {d, a, b, c}, {d, c, b, a}, {a, d, c, b}, {b, a, d, c}, {c, b, a, d},
  }};
  return std::all_of(images.begin(), images.end(), [&](const auto& im) { return q <= im; });
}

void search_range(long max_side, long a_lo, long a_hi, std::vector<FoundQuad>& out) {
  for (long a = a_lo; a <= a_hi; ++a) {
    for (long b = a; b <= max_side; ++b) {  // canonical forms start with the least side
      for (long c = a; c <= max_side; ++c) {
        const long d = a + c - b;
        if (d < a || d > max_side) continue;
        const std::array<long, 4> q{a, b, c, d};
        if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1 || !is_canonical(q)) continue;
        const u128 p = static_cast<u128>(a * b + c * d) * static_cast<u128>(a * c + b * d) *
                       static_cast<u128>(a * d + b * c);
        u128 root = 0;
        if (!is_square_u128(p, &root)) continue;
        const Integer root_z(static_cast<unsigned long>(root));
        // N = s sqrt(P) / (4abcd)
        out.push_back({q, Rational(Integer(a + c) * root_z, Integer(4) * a * b * c * d)});
      }
    }
  }
}

}  // namespace

std::vector<FoundQuad> search_quads(long max_side, unsigned jobs) {
  if (max_side < 1) throw Error(ErrorCode::InvalidInput, "max_side must be >= 1");
  if (max_side > 20000) throw Error(ErrorCode::InvalidInput, "max_side above 20000 overflows the search");
  jobs = std::max(1u, jobs);
  std::vector<std::vector<FoundQuad>> parts(jobs);
  std::vector<std::thread> workers;
  const long per = (max_side + static_cast<long>(jobs) - 1) / static_cast<long>(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const long lo = 1 + static_cast<long>(j) * per;
    const long hi = std::min(max_side, lo + per - 1);
    if (lo > hi) break;
    workers.emplace_back(search_range, max_side, lo, hi, std::ref(parts[j]));
  }
  for (auto& w : workers) w.join();
  std::vector<FoundQuad> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), [](const FoundQuad& x, const FoundQuad& y) {
    const long px = x.sides[0] + x.sides[1] + x.sides[2] + x.sides[3];
    const long py = y.sides[0] + y.sides[1] + y.sides[2] + y.sides[3];
    return px != py ? px < py : x.sides < y.sides;
  });
  return out;
}

}  // namespace bqec
