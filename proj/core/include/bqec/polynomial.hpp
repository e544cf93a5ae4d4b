#pragma once

#include <initializer_list>
#include <vector>

#include "bqec/rational.hpp"

namespace bqec {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial x.
  static Polynomial x();

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(int i) const;

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const;

  /// All distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Integer roots of a monic polynomial with integer coefficients (lowest
/// degree first, leading 1 implied by the last entry), ascending and
/// distinct. Uses exact integer bisection on monotone pieces, so it works for
/// coefficients far beyond what trial factoring could handle.
std::vector<Integer> integer_roots_monic(const std::vector<Integer>& coeffs);

}  // namespace bqec
