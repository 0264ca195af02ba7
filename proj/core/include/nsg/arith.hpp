#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace nsg {

using BigInt = mpz_class;

/// Exact rational. GMP keeps the value canonical (lowest terms, positive
/// denominator, zero as 0/1) after every arithmetic operation; values built
/// from a raw numerator/denominator pair must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);

/// True when gcd(|num|, den) == 1 and den >= 1.
bool is_canonical(const BigRational& r);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Trial division up to sqrt(n). Inputs in scope are below 2^32.
Factorization factorize(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Sorted positive divisors of n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Product of the distinct primes dividing n.
std::int64_t squarefree_kernel(std::int64_t n);

struct BezoutResult {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// g = gcd(a, b) > 0 with a*x + b*y == g. Rejects (0, 0).
BezoutResult extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m in [0, m). Throws if gcd(a, m) != 1 or m < 2.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// B_0..B_m with B_1 = -1/2 (the z/(e^z - 1) convention).
///
/// Values come from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and are
/// memoized in a process-wide append-only cache. Safe to call concurrently.
std::vector<BigRational> bernoulli_upto(unsigned m);

/// Single Bernoulli number, served from the same cache.
BigRational bernoulli(unsigned n);

/// S_j(n) = sum_{k=0}^{n-1} k^j evaluated through the Bernoulli closed form,
/// with 0^0 = 1 so that S_0(n) = n. Throws InternalError if the closed form
/// does not produce an integer.
BigInt power_sum(unsigned j, std::uint64_t n);

/// C(n, k); zero for k outside [0, n].
BigInt binomial(std::int64_t n, std::int64_t k);

/// n! / (i! j! k!) with i + j + k == n.
BigInt multinomial(unsigned n, unsigned i, unsigned j, unsigned k);

BigInt pow(const BigInt& base, unsigned long exponent);
BigRational pow(const BigRational& base, unsigned long exponent);

}  // namespace nsg
