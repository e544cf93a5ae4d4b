#include "bqec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "bqec/arith.hpp"
#include "bqec/error.hpp"
#include "bqec/family.hpp"

namespace bqec {

double naive_height(const CurvePoint& p) { return p.x().log_height(); }

std::size_t digit_cap() {
  if (const char* env = std::getenv("BQEC_DIGIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

namespace {

std::size_t digits(const Rational& q) {
  return std::max(mpz_sizeinbase(q.raw().get_num_mpz_t(), 10), mpz_sizeinbase(q.raw().get_den_mpz_t(), 10));
}

}  // namespace

HeightResult canonical_height(const Curve& c, const CurvePoint& p, int doublings) {
  if (doublings < 1 || doublings > 10) throw Error(ErrorCode::InvalidInput, "doublings must be in 1..10");
  if (!on_curve(c, p)) throw Error(ErrorCode::PointNotOnCurve, p.str());
  HeightResult out;
  out.doublings_used = doublings;
  if (p.is_infinity()) {
    out.torsion_collapse = true;
    return out;
  }
  const double scale = std::pow(4.0, doublings);
  out.error_bound = std::max(1.0, c.discriminant().log_height()) / scale;
  const std::size_t cap = digit_cap();
  CurvePoint q = p;
  for (int i = 0; i < doublings; ++i) {
    q = detail::add_unchecked(c, q, q);
    if (q.is_infinity()) {
      out.value = 0.0;
      out.torsion_collapse = true;
      return out;
    }
    if (digits(q.x()) > cap || digits(q.y()) > cap)
      throw Error(ErrorCode::DigitCapExceeded, "coordinate exceeds " + std::to_string(cap) + " digits");
  }
  if (out.error_bound >= 0.01)
    throw Error(ErrorCode::HeightNotConverged,
                "error bound " + std::to_string(out.error_bound) + " after " + std::to_string(doublings) + " doublings");
  out.value = naive_height(q) / scale;
  return out;
}

namespace {

double height_or_zero(const Curve& c, const CurvePoint& p, int doublings) {
  return canonical_height(c, p, doublings).value;
}

// (h(P+Q) - (h(P) + h(Q))) / 2; grouping the two single heights keeps the
// result bitwise symmetric in P and Q.
double pairing_from(double sum, double hp, double hq) { return (sum - (hp + hq)) / 2.0; }

}  // namespace

double height_pairing(const Curve& c, const CurvePoint& p, const CurvePoint& q, int doublings) {
  const CurvePoint sum = add(c, p, q);
  return pairing_from(height_or_zero(c, sum, doublings), height_or_zero(c, p, doublings),
                      height_or_zero(c, q, doublings));
}

double regulator(const Curve& c, const std::vector<CurvePoint>& points, int doublings) {
  const std::size_t n = points.size();
  if (n == 0) return 1.0;
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = height_or_zero(c, points[i], doublings);
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = h[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double hs = height_or_zero(c, add(c, points[i], points[j]), doublings);
      m[i][j] = m[j][i] = pairing_from(hs, h[i], h[j]);
    }
  }
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::fabs(m[row][col]) > std::fabs(m[piv][col])) piv = row;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

bool is_probably_independent(const Curve& c, const std::vector<CurvePoint>& points, int doublings, double tol) {
  return regulator(c, points, doublings) > tol;
}

std::map<int, double> mestre_nagao_sums(const Curve& c, const std::vector<int>& bounds) {
  std::map<int, double> out;
  if (bounds.empty()) return out;
  const Curve model = c.is_ab_form() ? integral_model(c).curve : c;
  std::vector<int> sorted = bounds;
  std::sort(sorted.begin(), sorted.end());
  const int top = std::max(sorted.back(), 0);
  double acc = 0.0;
  std::size_t next = 0;
  for (std::uint32_t p : primes_between(5, static_cast<std::uint32_t>(top))) {
    while (next < sorted.size() && sorted[next] < static_cast<int>(p)) out[sorted[next++]] = acc;
    std::uint64_t count = 0;
    try {
      count = count_points_mod_p(model, p);
    } catch (const Error&) {
      continue;  // bad reduction or denominator prime
    }
    acc += (1.0 - static_cast<double>(p - 1) / static_cast<double>(count)) * std::log(static_cast<double>(p));
  }
  while (next < sorted.size()) out[sorted[next++]] = acc;
  return out;
}

double mestre_nagao(const Curve& c, int bound) { return mestre_nagao_sums(c, {bound}).at(bound); }

namespace {

SieveRecord sieve_one(int subfamily_index, const Rational& k, const std::vector<std::pair<int, double>>& thresholds) {
  SieveRecord rec;
  rec.subfamily = subfamily_index;
  rec.k = k;
  try {
    const SubfamilyInstance inst = subfamily(subfamily_index, k);
    rec.a = inst.a;
    std::vector<int> bounds;
    for (const auto& [b, t] : thresholds) bounds.push_back(b);
    rec.sums = mestre_nagao_sums(family_curve(inst.a).curve, bounds);
    rec.passed = std::all_of(thresholds.begin(), thresholds.end(),
                             [&](const auto& bt) { return rec.sums.at(bt.first) > bt.second; });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularParameter) throw;
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<SieveRecord> sieve(int subfamily_index, const std::vector<Rational>& ks,
                               const std::vector<std::pair<int, double>>& thresholds, unsigned jobs) {
  subfamily_row(subfamily_index);
  std::vector<SieveRecord> out(ks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(ks.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] = sieve_one(subfamily_index, ks[i], thresholds);
    return out;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> failures(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (std::size_t i = j; i < ks.size(); i += jobs) out[i] = sieve_one(subfamily_index, ks[i], thresholds);
      } catch (...) {
        failures[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

PointSearchResult point_search(const Curve& c, long numerator_bound, std::size_t divisor_cap) {
  if (!c.is_ab_form()) throw Error(ErrorCode::InvalidInput, "point_search needs an AB-form curve");
  if (numerator_bound < 1) throw Error(ErrorCode::InvalidInput, "numerator bound must be >= 1");
  const IntegralModel im = integral_model(c);
  PointSearchResult out;
  const auto ds = divisors(im.curve.B().num(), divisor_cap, &out.truncated);
  std::set<Rational> xs;
  for (const auto& d : ds) {
    for (long m = 1; m <= numerator_bound; ++m) {
      for (long e = 1; e <= numerator_bound; ++e) {
        if (std::gcd(m, e) != 1) continue;
        const Rational x = Rational(d) * Rational(m * m, e * e);
        xs.insert(x);
        xs.insert(-x);
      }
    }
  }
  for (const auto& x : xs) {
    if (auto p = lift_x(im.curve, x)) {
      out.points.push_back(im.from_model(*p));
      if (!p->y().is_zero()) out.points.push_back(im.from_model(negate(im.curve, *p)));
    }
  }
  return out;
}

}  // namespace bqec
