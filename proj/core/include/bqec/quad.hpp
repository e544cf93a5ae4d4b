#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bqec/error.hpp"
#include "bqec/rational.hpp"

namespace bqec {

/// Side lengths in cyclic order, all strictly positive.
struct Quadrilateral {
  Rational a, b, c, d;

  Quadrilateral(Rational a_, Rational b_, Rational c_, Rational d_);
  std::array<Rational, 4> sides() const { return {a, b, c, d}; }
  std::string str() const;
  friend bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
};

struct BicentricData {
  Rational s;          // semiperimeter, a + c = b + d
  Rational area_sq;    // K^2 = abcd
  Rational circum_sq;  // R^2
  Rational in_sq;      // r^2
  Rational n_sq;       // (R/r)^2
  std::optional<Rational> n;  // R/r when rational
};

/// Throws Error(NotPitot) unless a + c = b + d.
BicentricData validate_bicentric(const Quadrilateral& q);

/// R/r, or Error(IrrationalN).
Rational n_ratio(const Quadrilateral& q);

/// t^2 for the side-normalized quadrilateral (d = 1, a, b = s-1, c = s-a).
Rational quartic_value(const Rational& a, const Rational& s);

struct QuadPoint {
  Rational a;  // normalized side a/d, the curve parameter
  Rational s;
  Rational t;  // nonnegative root of quartic_value(a, s)
  Rational u;
  Rational v;  // (u, -v) is the mirror point on the same curve
};

QuadPoint quad_to_point(const Quadrilateral& q);

/// s = (u(a+1)^2 + v) / (2u(a+1)).
Rational point_to_s(const Rational& a, const Rational& u, const Rational& v);

/// Raised when a curve point gives a non-positive side.
class NotRealizable : public Error {
 public:
  NotRealizable(std::string side, Rational value)
      : Error(ErrorCode::NotRealizable, side + "=" + value.str()), side_(std::move(side)), value_(std::move(value)) {}
  const std::string& side() const noexcept { return side_; }
  const Rational& value() const noexcept { return value_; }

 private:
  std::string side_;
  Rational value_;
};

/// Sides (a, s-1, s-a, 1) scaled to coprime integers.
Quadrilateral point_to_quad(const Rational& a, const Rational& u, const Rational& v);

/// Smallest positive integer multiple of q with coprime integer sides.
Quadrilateral primitive_integer_form(const Quadrilateral& q);

struct Trapezoid {
  Quadrilateral quad;
  Rational n;
};

/// Isosceles trapezoid (k^2+1, 2-2k, k^2+1, 2k^2+2k) for 0 < k < 1.
Trapezoid trapezoid(const Rational& k);

struct FoundQuad {
  std::array<long, 4> sides;
  Rational n;
};

/// Integer bicentric quadrilaterals with sides <= max_side and rational R/r,
/// one primitive representative per dihedral class (the lexicographically
/// least rotation or reflection), ordered by perimeter then sides.
std::vector<FoundQuad> search_quads(long max_side, unsigned jobs = 1);

}  // namespace bqec
