#pragma once

#include <cstdint>
#include <vector>

#include "nsg/poly.hpp"

namespace nsg {

inline constexpr std::int64_t kMaxCyclotomicIndex = 30'000;

/// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: every mu = +1 factor is
/// multiplied into the numerator first, then each mu = -1 factor is divided
/// out exactly. Throws ResourceLimit for n > kMaxCyclotomicIndex.
IntPoly cyclotomic(std::int64_t n);

/// Pairwise coprime integers r_1 < ... < r_s, each > 1.
class RhoSet {
 public:
  /// Throws std::invalid_argument on an empty set, an element <= 1, a
  /// repeated element, or a non-coprime pair.
  explicit RhoSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// n_0 = product of all elements.
  std::int64_t product() const noexcept { return product_; }
  /// prod (r_i - 1), the degree of Q_rho.
  std::int64_t degree() const noexcept;

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t product_ = 1;
};

/// Upper bound on n_0 accepted by inclusion_exclusion.
inline constexpr std::int64_t kMaxRhoProduct = 1'000'000;

/// Q_rho: for each subset T of rho, the factor x^{n_0 / prod T} - 1 sits in
/// the numerator when |T| is even and in the denominator when |T| is odd.
/// Numerator factors are multiplied first, then denominators divided out.
IntPoly inclusion_exclusion(const RhoSet& rho);

/// Divisors d of n_0 with gcd(d, r_i) > 1 for every i, ascending.
std::vector<std::int64_t> d_rho(const RhoSet& rho);

/// Coprime p, q > 1 with the unique (rho, sigma) solving 1 + pq = rho*p + sigma*q,
/// 0 <= rho < q, 0 <= sigma < p. Stores p^{-1} mod q and q^{-1} mod p.
struct BinaryPair {
  std::int64_t p;
  std::int64_t q;
  std::int64_t rho;
  std::int64_t sigma;
  std::int64_t p_inv_mod_q;
  std::int64_t q_inv_mod_p;

  std::int64_t pq() const noexcept { return p * q; }

  friend bool operator==(const BinaryPair&, const BinaryPair&) = default;
};

/// Throws std::invalid_argument unless p, q > 1 and gcd(p, q) == 1.
BinaryPair binary_pair(std::int64_t p, std::int64_t q);

/// a_{p,q}(m) for 0 <= m < pq, read off from m = alpha*p + beta*q (mod pq)
/// with alpha = m p^{-1} mod q and beta = m q^{-1} mod p.
int binary_coefficient(const BinaryPair& pair, std::int64_t m);

/// Expands
///   sum_{i<rho} sum_{j<sigma} x^{ip+jq} - sum_{i=rho}^{q-1} sum_{j=sigma}^{p-1} x^{ip+jq-pq}
/// into a dense polynomial. Throws InternalError if two monomials collide.
IntPoly lam_leung_expand(const BinaryPair& pair);

/// Number of nonzero coefficients of Q_{p,q}: 2*rho*sigma - 1.
std::int64_t theta(const BinaryPair& pair);

}  // namespace nsg
