#include "bqec/rational.hpp"

#include <cmath>

#include "bqec/error.hpp"

namespace bqec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::ExcludedParameter: return "ExcludedParameter";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::KernelPoint: return "KernelPoint";
    case ErrorCode::MapPole: return "MapPole";
    case ErrorCode::NotPitot: return "NotPitot";
    case ErrorCode::IrrationalN: return "IrrationalN";
    case ErrorCode::ZeroU: return "ZeroU";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InfinityPoint: return "InfinityPoint";
    case ErrorCode::HeightNotConverged: return "HeightNotConverged";
    case ErrorCode::DigitCapExceeded: return "DigitCapExceeded";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_txt = body.substr(0, slash);
  const std::string_view den_txt = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!digits_ok(num_txt) || !digits_ok(den_txt))
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  Integer num(std::string(num_txt), 10);
  Integer den(std::string(den_txt), 10);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "inverse of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::optional<Integer> isqrt_exact(const Integer& v) {
  if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  // Lowest terms: q is a square iff numerator and denominator both are.
  auto n = isqrt_exact(num());
  if (!n) return std::nullopt;
  auto d = isqrt_exact(den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double log_abs(const Integer& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double Rational::log_height() const {
  const Integer n = ::abs(q_.get_num());
  const Integer& d = q_.get_den();
  if (n == 0) return 0.0;
  return log_abs(n > d ? n : d);
}

}  // namespace bqec
