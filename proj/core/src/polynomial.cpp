#include "bqec/polynomial.hpp"

#include <algorithm>

#include "bqec/error.hpp"

namespace bqec {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> r = p.c_;
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r{Rational(1)};
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

namespace {

Integer eval_int(const std::vector<Integer>& c, const Integer& t) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int sign_at(const std::vector<Integer>& c, const Integer& t) { return sgn(eval_int(c, t)); }

// Integer brackets around the real roots of c: for each real root r, some
// l with l <= r <= l + 1 is reported. Exact integer roots appear as l = r.
std::vector<Integer> root_brackets(const std::vector<Integer>& c) {
  const size_t n = c.size() - 1;
  if (n == 0) return {};
  // Cauchy bound on |root| relative to the leading coefficient.
  Integer bound = 0;
  for (size_t i = 0; i < n; ++i) {
    Integer q = ::abs(c[i]);
    if (q > bound) bound = q;
  }
  bound = bound / ::abs(c[n]) + 2;

  std::vector<Integer> cuts{-bound};
  if (n >= 2) {
    std::vector<Integer> d(n);
    for (size_t i = 1; i <= n; ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
    for (const auto& l : root_brackets(d)) {
      if (l > cuts.back()) cuts.push_back(l);
      if (l + 1 > cuts.back()) cuts.push_back(l + 1);
    }
  }
  if (bound > cuts.back()) cuts.push_back(bound);

  std::vector<Integer> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Integer lo = cuts[i];
    Integer hi = cuts[i + 1];
    const int slo = sign_at(c, lo);
    const int shi = sign_at(c, hi);
    if (slo == 0) {
      if (out.empty() || out.back() != lo) out.push_back(lo);
      continue;
    }
    if (hi - lo == 1) {
      // Unit pieces straddle a critical point; keep them as brackets whether
      // or not the sign changes.
      if (out.empty() || out.back() != lo) out.push_back(lo);
      continue;
    }
    if (shi == 0 || slo == shi) continue;  // hi handled by the next segment
    // Monotone with a sign change: bisect to a unit bracket.
    while (hi - lo > 1) {
      Integer mid = lo + (hi - lo) / 2;
      const int sm = sign_at(c, mid);
      if (sm == 0) {
        lo = mid;
        break;
      }
      if (sm == slo) lo = mid; else hi = mid;
    }
    if (out.empty() || out.back() != lo) out.push_back(lo);
  }
  if (sign_at(c, cuts.back()) == 0 && (out.empty() || out.back() != cuts.back())) out.push_back(cuts.back());
  return out;
}

}  // namespace

std::vector<Integer> integer_roots_monic(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial");
  std::vector<Integer> roots;
  for (const auto& l : root_brackets(coeffs)) {
    for (const Integer& cand : {Integer(l), Integer(l + 1)}) {
      if (eval_int(coeffs, cand) == 0 &&
          std::find(roots.begin(), roots.end(), cand) == roots.end())
        roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> Polynomial::rational_roots() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "rational roots of the zero polynomial");
  if (degree() == 0) return {};
  // Clear denominators to an integer polynomial f.
  Integer lcm_den = 1;
  for (const auto& q : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
  std::vector<Integer> f;
  for (const auto& q : c_) f.push_back(q.num() * (lcm_den / q.den()));
  // g(y) = lead^(n-1) f(y / lead) is monic with integer coefficients; its
  // rational roots are integers y and those of f are y / lead.
  const size_t n = f.size() - 1;
  const Integer lead = f[n];
  std::vector<Integer> g(n + 1);
  Integer scale = 1;
  for (size_t i = n; i-- > 0;) {
    g[i] = f[i] * scale;
    scale *= lead;
  }
  g[n] = 1;
  std::vector<Rational> out;
  for (const auto& y : integer_roots_monic(g)) out.emplace_back(y, lead);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bqec
