#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace bqec {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// result is canonicalized, so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                          // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}        // NOLINT(implicit)
  Rational(const Integer& v) : q_(v) {}                // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" or "-p/q" with no whitespace. Throws
  /// Error(InvalidInput) on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned e) const;

  /// Exact square root when the value is the square of a rational.
  std::optional<Rational> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  /// Height-style magnitude: log max(|num|, den).
  double log_height() const;

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Natural log of |v| for arbitrarily large integers; v must be nonzero.
double log_abs(const Integer& v);

/// Exact integer square root when v is a perfect square.
std::optional<Integer> isqrt_exact(const Integer& v);

}  // namespace bqec
