#include "bqec/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "bqec/arith.hpp"
#include "bqec/error.hpp"
#include "bqec/polynomial.hpp"

namespace bqec {

std::string TorsionStructure::str() const {
  if (shape == TorsionShape::Product2) return "Z/2xZ/" + std::to_string(n);
  if (n == 1) return "trivial";
  return "Z/" + std::to_string(n);
}

std::optional<int> point_order(const Curve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str());
  CurvePoint acc = p;
  for (int n = 1; n <= 12; ++n) {
    if (acc.is_infinity()) return n;
    acc = detail::add_unchecked(c, acc, p);
  }
  return std::nullopt;
}

std::vector<CurvePoint> two_torsion_points(const Curve& c) {
  std::vector<CurvePoint> out;
  if (c.is_ab_form()) {
    out.emplace_back(Rational(0), Rational(0));
    const Rational disc = c.A() * c.A() - Rational(4) * c.B();
    if (auto r = disc.sqrt()) {
      const Rational x1 = (-c.A() - *r) / Rational(2);
      const Rational x2 = (-c.A() + *r) / Rational(2);
      out.emplace_back(x1, Rational(0));
      out.emplace_back(x2, Rational(0));
    }
    return out;
  }
  const Polynomial cubic{c.b6(), Rational(2) * c.b4(), c.b2(), Rational(4)};
  for (const auto& x : cubic.rational_roots())
    out.emplace_back(x, -(c.a1() * x + c.a3()) / Rational(2));
  return out;
}

std::uint64_t torsion_order_bound(const Curve& c, int prime_count) {
  if (prime_count < 1) throw Error(ErrorCode::InvalidInput, "prime_count must be positive");
  std::uint64_t g = 0;
  int used = 0;
  std::uint32_t hi = 1024;
  std::uint32_t lo = 5;
  while (used < prime_count) {
    for (std::uint32_t p : primes_between(lo, hi)) {
      try {
        g = std::gcd(g, count_points_mod_p(c, p));
      } catch (const Error&) {
        continue;  // bad prime for this model
      }
      if (++used == prime_count) break;
    }
    lo = hi + 1;
    hi *= 2;
    if (hi > (1u << 24)) throw Error(ErrorCode::InvalidInput, "too few primes of good reduction");
  }
  return g;
}

std::vector<CurvePoint> generated_subgroup(const Curve& c, const std::vector<CurvePoint>& gens) {
  std::vector<CurvePoint> group{CurvePoint::infinity()};
  auto contains = [&](const CurvePoint& p) { return std::find(group.begin(), group.end(), p) != group.end(); };
  for (const auto& g : gens) {
    if (contains(g)) continue;
    // group <- group + <g>, iterating until closed.
    std::vector<CurvePoint> frontier = group;
    while (!frontier.empty()) {
      std::vector<CurvePoint> next;
      for (const auto& p : frontier) {
        CurvePoint s = detail::add_unchecked(c, p, g);
        if (!contains(s)) {
          group.push_back(s);
          next.push_back(std::move(s));
          if (group.size() > 16) throw Error(ErrorCode::InvalidInput, "generated subgroup exceeds Mazur's bound");
        }
      }
      frontier = std::move(next);
    }
  }
  return group;
}

namespace {

// Candidate integral points on an AB-form curve with integral coefficients:
// abscissae dividing B first, then (optionally) every |x| <= height.
void scan_ab(const Curve& model, const TorsionSearchOptions& opts, bool plain_scan, std::vector<CurvePoint>& out) {
  auto try_x = [&](const Integer& x) {
    if (auto p = lift_x(model, Rational(x))) {
      out.push_back(*p);
      if (!p->y().is_zero()) out.push_back(negate(model, *p));
    }
  };
  if (!plain_scan) {
    bool truncated = false;
    for (const auto& d : divisors(model.B().num(), opts.divisor_cap, &truncated)) {
      try_x(d);
      try_x(-d);
    }
    return;
  }
  const Integer& A = model.A().num();
  const Integer& B = model.B().num();
  Integer v;
  for (long x = -opts.height; x <= opts.height; ++x) {
    if (x == 0) continue;
    // x^3 + A x^2 + B x
    v = x;
    v += A;
    v *= x;
    v += B;
    v *= x;
    if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) continue;
    try_x(Integer(x));
  }
}

// Integral short model Y^2 = X^3 - 27 c4 X - 54 c6 scaled by lambda, with the
// maps back to the original general-form coordinates.
void scan_short(const Curve& c, const TorsionSearchOptions& opts, std::vector<CurvePoint>& out) {
  const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6();
  const Rational c4 = b2 * b2 - Rational(24) * b4;
  const Rational c6 = -b2 * b2 * b2 + Rational(36) * b2 * b4 - Rational(216) * b6;
  const Rational a4s = Rational(-27) * c4;
  const Rational a6s = Rational(-54) * c6;
  Integer lambda = 1;
  while (!(a4s * Rational(lambda).pow(4)).is_integer() || !(a6s * Rational(lambda).pow(6)).is_integer()) {
    lambda *= (a4s.den() * a6s.den());
  }
  const Rational l(lambda);
  const Integer A4 = (a4s * l.pow(4)).num();
  const Integer A6 = (a6s * l.pow(6)).num();
  Integer v;
  for (long X = -opts.height; X <= opts.height; ++X) {
    v = X;
    v *= X;
    v += A4;
    v *= X;
    v += A6;
    if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) continue;
    Integer Y;
    mpz_sqrt(Y.get_mpz_t(), v.get_mpz_t());
    for (const Integer& y_short : {Y, Integer(-Y)}) {
      const Rational x = (Rational(X) / (l * l) - Rational(3) * b2) / Rational(36);
      const Rational y = (Rational(y_short) / (Rational(108) * l * l * l) - c.a1() * x - c.a3()) / Rational(2);
      CurvePoint p(x, y);
      if (on_curve(c, p)) out.push_back(p);
      if (Y == 0) break;
    }
  }
}

// A general-form curve with a rational 2-torsion point, moved to AB form:
// X = 4x - x0, Y = 4(2y + a1 x + a3).
struct AbTransport {
  Curve ab;
  Rational shift;  // x0
  CurvePoint back(const Curve& c, const CurvePoint& p) const {
    if (p.is_infinity()) return p;
    const Rational x = (p.x() + shift) / Rational(4);
    const Rational y = (p.y() / Rational(4) - c.a1() * x - c.a3()) / Rational(2);
    return CurvePoint(x, y);
  }
};

std::optional<AbTransport> to_ab(const Curve& c) {
  const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6();
  // Y^2 = X^3 + b2 X^2 + 8 b4 X + 16 b6 with X = 4x.
  const Polynomial cubic{Rational(16) * b6, Rational(8) * b4, b2, Rational(1)};
  const auto roots = cubic.rational_roots();
  if (roots.empty()) return std::nullopt;
  const Rational& x0 = roots.front();
  const Rational A = Rational(3) * x0 + b2;
  const Rational B = Rational(3) * x0 * x0 + Rational(2) * b2 * x0 + Rational(8) * b4;
  return AbTransport{Curve::ab(A, B), x0};
}

TorsionStructure classify(const Curve& c, const std::vector<CurvePoint>& group, std::uint64_t bound) {
  TorsionStructure t;
  t.bound = bound;
  const int size = static_cast<int>(group.size());
  std::vector<std::pair<CurvePoint, int>> ordered;
  int twos = 0;
  for (const auto& p : group) {
    const int ord = point_order(c, p).value();
    if (ord == 2) ++twos;
    ordered.emplace_back(p, ord);
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (twos == 3) {
    t.shape = TorsionShape::Product2;
    t.n = size / 2;
    const CurvePoint& g = ordered.front().first;
    t.generators.push_back(g);
    const auto span = generated_subgroup(c, {g});
    for (const auto& [p, ord] : ordered) {
      if (ord == 2 && std::find(span.begin(), span.end(), p) == span.end()) {
        t.generators.push_back(p);
        break;
      }
    }
  } else {
    t.shape = TorsionShape::Cyclic;
    t.n = size;
    if (size > 1) t.generators.push_back(ordered.front().first);
  }
  t.certainty = static_cast<std::uint64_t>(t.order()) == bound ? Certainty::Proven : Certainty::BoundOnly;
  return t;
}

void keep_torsion(const Curve& c, const std::vector<CurvePoint>& cands, std::vector<CurvePoint>& gens) {
  for (const auto& p : cands) {
    if (std::find(gens.begin(), gens.end(), p) != gens.end()) continue;
    if (point_order(c, p).has_value()) gens.push_back(p);
  }
}

}  // namespace

TorsionStructure torsion_subgroup(const Curve& c, const std::vector<CurvePoint>& hints,
                                  const TorsionSearchOptions& opts) {
  for (const auto& h : hints)
    if (!on_curve(c, h)) throw Error(ErrorCode::PointNotOnCurve, "hint " + h.str());
  const std::uint64_t bound = torsion_order_bound(c, opts.prime_count);

  std::vector<CurvePoint> gens;
  keep_torsion(c, hints, gens);
  keep_torsion(c, two_torsion_points(c), gens);
  auto group = generated_subgroup(c, gens);
  auto done = [&] { return group.size() == bound; };

  // Searches run on an integral AB model whenever one exists.
  std::optional<AbTransport> transport;
  if (!done() && !c.is_ab_form()) transport = to_ab(c);
  const bool have_ab = c.is_ab_form() || transport.has_value();
  const Curve ab_curve = c.is_ab_form() ? c : (transport ? transport->ab : c);

  for (int pass = 0; pass < 2 && !done(); ++pass) {
    const bool plain = pass == 1;
    std::vector<CurvePoint> found;
    if (have_ab) {
      const IntegralModel im = integral_model(ab_curve);
      std::vector<CurvePoint> on_model;
      scan_ab(im.curve, opts, plain, on_model);
      for (const auto& p : on_model) {
        CurvePoint q = im.from_model(p);
        found.push_back(transport ? transport->back(c, q) : q);
      }
    } else if (plain) {
      scan_short(c, opts, found);
    }
    keep_torsion(c, found, gens);
    group = generated_subgroup(c, gens);
  }
  return classify(c, group, bound);
}

}  // namespace bqec
