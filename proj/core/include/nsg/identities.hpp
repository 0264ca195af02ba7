#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/poly.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// First differing coefficient of two polynomials, or nullopt when equal.
std::optional<std::string> describe_difference(const IntPoly& lhs, const IntPoly& rhs);

/// P_{S(p,q)} built along three independent routes and compared with
/// Q_{p,q} = (x^{pq} - 1)(x - 1) / ((x^p - 1)(x^q - 1)).
struct FolkloreReport {
  BinaryPair pair;
  /// 1 + (x - 1) * sum over gaps.
  IntPoly from_gaps;
  /// (1 - x) * sum_{w in Ap(S; m)} x^w divided exactly by 1 - x^m.
  IntPoly from_apery;
  /// (1 - x) * sum_{j < pq} r(j) x^j + x^{pq}, with r the denumerant of (p, q).
  IntPoly from_denumerant;
  IntPoly quotient;
  /// Ap(S(p,q); p) == {0, q, ..., (p-1)q}.
  bool apery_is_multiples_of_q = false;
  /// r(j) <= 1 below pq and r(j) - r(j - pq) == 1 on [pq, 2pq).
  bool denumerant_steps_hold = false;
  /// Empty when every comparison holds.
  std::string diagnostic;

  bool holds() const noexcept { return diagnostic.empty(); }
};

/// Throws std::invalid_argument for p, q <= 1 or gcd(p, q) > 1.
FolkloreReport folklore_check(std::int64_t p, std::int64_t q);

/// r(n) = n/pq - {p^{-1} n / q} - {q^{-1} n / p} + 1 in exact rationals.
BigInt denumerant_closed_form(const BinaryPair& pair, std::int64_t n);

/// Gaps of S(p, q).
std::vector<std::int64_t> binary_gaps(const BinaryPair& pair);

/// sum over gaps of s^k, by direct summation.
BigInt gap_power_sum(std::span<const std::int64_t> gaps, unsigned k);

struct SylvesterReport {
  BinaryPair pair;
  unsigned k = 0;
  /// sigma_k from the Bernoulli/multinomial double sum with m = k + 1.
  BigInt value_formula;
  /// sigma_k summed over the gap list.
  BigInt value_brute;

  bool holds() const { return value_formula == value_brute; }
};

/// Throws InternalError if the closed form is not a non-negative integer.
SylvesterReport sylvester_sum(const BinaryPair& pair, unsigned k);

/// sigma_k via the Bernoulli double sum only.
BigInt sylvester_formula(const BinaryPair& pair, unsigned k);

/// (p-1)(q-1)(2pq-p-q-1)/12
BigInt sylvester_sigma1_closed(const BinaryPair& pair);
/// (p-1)(q-1)pq(pq-p-q)/12
BigInt sylvester_sigma2_closed(const BinaryPair& pair);

/// B_0..B_mmax from
///   B_m = m/(p^m-1) sigma_{m-1} + q^m/(p(1-p^m)) sum_{r<m} C(m,r) (p/q)^r B_r S_{m-r}(p)
/// where sigma_{m-1} is the brute-force gap sum, S_{m-r}(p) a plain loop and
/// every B_r comes from earlier steps of this same recursion. Nothing is taken
/// from the arith Bernoulli cache, so the result is an independent check.
std::vector<BigRational> bernoulli_sequence_via_semigroup(unsigned mmax, const BinaryPair& pair);

/// Last entry of bernoulli_sequence_via_semigroup(m, pair); m >= 1.
BigRational bernoulli_via_semigroup(unsigned m, const BinaryPair& pair);

struct TuenterReport {
  BigInt lhs;  ///< sum_{n not in S} (f(n+p) - f(n))
  BigInt rhs;  ///< sum_{n=1}^{p-1} (f(nq) - f(n))
  BigInt lhs_swapped;
  BigInt rhs_swapped;

  bool holds() const { return lhs == rhs && lhs_swapped == rhs_swapped; }
};

/// Smallest table size tuenter_check accepts: F + max(p, q) + 1.
std::size_t tuenter_table_size(const BinaryPair& pair);

/// f is given as the table f(0), f(1), ...; it must cover [0, F + max(p, q)]
/// so that both orientations can be evaluated. Throws IncompleteTable.
TuenterReport tuenter_check(const BinaryPair& pair, std::span<const BigInt> f);

struct TuenterProductReport {
  BigInt lhs;  ///< prod_{n not in S} (n + p)
  BigInt rhs;  ///< q^{p-1} prod_{n not in S} n
  BigInt lhs_swapped;
  BigInt rhs_swapped;

  bool holds() const { return lhs == rhs && lhs_swapped == rhs_swapped; }
};

TuenterProductReport tuenter_product_identity(const BinaryPair& pair);

/// +1 if k in S and k-1 not in S, -1 if k not in S and k-1 in S, else 0.
int coefficient_from_membership(const NumericalSemigroup& s, std::int64_t k);
/// Same for S(p, q); k must lie in [0, pq).
int coefficient_from_membership(const BinaryPair& pair, std::int64_t k);

struct MaxGapRecord {
  /// g(Q_{p,q}); only set for the binary overload.
  std::optional<std::int64_t> g_q;
  /// g(P_S).
  std::int64_t g_p = 0;
  std::int64_t m_minus_1 = 0;

  bool holds() const noexcept { return g_p == m_minus_1 && (!g_q || *g_q == m_minus_1); }
};

MaxGapRecord max_gap_theorems(const BinaryPair& pair);
/// Rejects S = Z>=0 with std::domain_error.
MaxGapRecord max_gap_theorems(const NumericalSemigroup& s);

struct BlockCountRecord {
  std::int64_t gap_blocks = 0;
  std::int64_t element_blocks = 0;
  std::int64_t rho_sigma = 0;

  bool holds() const noexcept {
    return gap_blocks == rho_sigma - 1 && element_blocks == rho_sigma - 1;
  }
};

BlockCountRecord block_counts(const BinaryPair& pair);

/// Membership patterns of (k, k-1) over 0 <= k <= F(S(p,q)), by brute force,
/// next to the closed forms. The commonly stated fourth count N - rho*sigma - 1
/// is kept for comparison and not asserted; brute force gives N - rho*sigma + 1.
struct CornerCountRecord {
  std::int64_t in_in = 0;
  std::int64_t in_out = 0;  ///< k in S, k-1 not in S
  std::int64_t out_in = 0;  ///< k not in S, k-1 in S
  std::int64_t out_out = 0;
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  std::int64_t rho_sigma = 0;

  std::int64_t in_in_closed() const noexcept { return genus - rho_sigma + 1; }
  std::int64_t edge_closed() const noexcept { return rho_sigma - 1; }
  std::int64_t out_out_stated() const noexcept { return genus - rho_sigma - 1; }

  /// First three closed forms plus the total F + 1.
  bool asserted_hold() const noexcept {
    return in_in == in_in_closed() && in_out == edge_closed() && out_in == edge_closed() &&
           in_in + in_out + out_in + out_out == frobenius + 1;
  }
  bool fourth_matches_stated() const noexcept { return out_out == out_out_stated(); }
};

CornerCountRecord corner_counts(const BinaryPair& pair);

}  // namespace nsg
