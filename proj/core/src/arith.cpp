#include "bqec/arith.hpp"

#include <algorithm>

#include "bqec/error.hpp"

namespace bqec {

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::uint64_t v, std::uint64_t p) {
  v %= p;
  if (v == 0) return 0;
  return pow_mod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  const Integer den = q.den();
  const unsigned long d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw Error(ErrorCode::BadPrime, "prime divides a denominator");
  const Integer num = q.num();
  const unsigned long n = mpz_fdiv_ui(num.get_mpz_t(), p);
  return static_cast<std::uint64_t>(n) * pow_mod(d, p - 2, p) % p;
}

Factorization factor(Integer n, std::uint32_t limit) {
  Factorization f;
  n = ::abs(n);
  if (n == 0) throw Error(ErrorCode::InvalidInput, "factor(0)");
  auto take_small = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) f.primes[Integer(d)] += e;
  };
  take_small(2);
  for (unsigned long d = 3; d <= limit; d += 2) {
    if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0) break;
    take_small(d);
  }
  if (n == 1) return f;
  if (Integer(limit) * limit >= n || mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    f.primes[n] += 1;
    return f;
  }
  // Large cofactor: peel a perfect power r^k with prime r.
  for (unsigned k = 12; k >= 2; --k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0 && mpz_probab_prime_p(r.get_mpz_t(), 30) != 0) {
      f.primes[r] += k;
      return f;
    }
  }
  f.cofactor = n;
  return f;
}

std::vector<Integer> divisors(const Integer& n, std::size_t cap, bool* truncated) {
  Factorization f = factor(n);
  bool cut = !f.complete();
  if (!f.complete()) f.primes[f.cofactor] += 1;
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f.primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        if (out.size() >= cap) {
          cut = true;
          break;
        }
        out.push_back(out[i] * pk);
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (truncated != nullptr) *truncated = cut;
  return out;
}

}  // namespace bqec
