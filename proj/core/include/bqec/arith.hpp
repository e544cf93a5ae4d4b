#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bqec/rational.hpp"

namespace bqec {

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Legendre symbol (v | p) for odd prime p by Euler's criterion; 0 when p | v.
int legendre(std::uint64_t v, std::uint64_t p);

/// Residue of a rational mod p. Throws Error(BadPrime) if p divides the
/// denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

struct Factorization {
  std::map<Integer, unsigned> primes;  // prime -> exponent
  Integer cofactor = 1;                // unfactored remainder (> 1 when incomplete)
  bool complete() const { return cofactor == 1; }
};

/// Trial division up to `limit`, then perfect-power and primality checks on
/// what remains. A composite cofactor without small factors is left in
/// `cofactor`.
Factorization factor(Integer n, std::uint32_t limit = 1u << 20);

/// Positive divisors of |n|, ascending, at most `cap` of them. `truncated`
/// is set if the cap was hit or n could not be fully factored (an
/// unfactored cofactor is then treated as if it were prime).
std::vector<Integer> divisors(const Integer& n, std::size_t cap, bool* truncated = nullptr);

}  // namespace bqec
