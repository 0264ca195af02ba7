#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/poly.hpp"

namespace nsg {

/// Closed run of consecutive integers [first, last].
struct Block {
  std::int64_t first;
  std::int64_t last;

  std::int64_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> gap_blocks;
  /// Maximal runs of elements inside [0, F(S)]; the infinite tail is excluded.
  std::vector<Block> element_blocks;
};

/// Numerical semigroup generated by a finite set of positive integers with
/// gcd 1. Immutable after construction.
///
/// Everything is derived from the Apery set with respect to the multiplicity
/// m(S): apery()[r] is the least element of S congruent to r mod m(S). It is
/// computed as single-source shortest paths on the residue graph mod m(S),
/// with one edge of weight a per generator a, so the cost does not depend
/// on the size of the Frobenius number.
///
/// S = Z>=0 (a generator equal to 1) has F(S) = -1 and is treated as
/// symmetric.
class NumericalSemigroup {
 public:
  /// Throws NotNumerical if gcd(generators) > 1, std::invalid_argument for
  /// an empty list or a generator < 1, and ResourceLimit if the
  /// multiplicity exceeds kMaxMultiplicity.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  static constexpr std::int64_t kMaxMultiplicity = 10'000'000;

  /// Sorted, deduplicated input generators.
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  const std::vector<std::int64_t>& minimal_generators() const noexcept { return minimal_; }
  const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

  std::int64_t multiplicity() const noexcept { return multiplicity_; }
  std::int64_t embedding_dimension() const noexcept {
    return static_cast<std::int64_t>(minimal_.size());
  }
  std::int64_t frobenius() const noexcept { return frobenius_; }
  std::int64_t genus() const noexcept { return genus_; }

  bool contains(std::int64_t n) const noexcept;

  /// Ap(S; m) for an arbitrary nonzero element m, indexed by residue.
  std::vector<std::int64_t> apery_set(std::int64_t m) const;

  std::vector<std::int64_t> gaps() const;

  /// P_S(x) = 1 + (x - 1) * sum_{s not in S} x^s.
  IntPoly semigroup_polynomial() const;

  /// Decided by the definition (n in S iff F - n not in S) and by
  /// selfreciprocity of P_S; throws InternalError if the two disagree.
  bool is_symmetric() const;

  /// Rejects S = Z>=0 with std::domain_error.
  BlockDecomposition blocks() const;

 private:
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> minimal_;
  std::vector<std::int64_t> apery_;
  std::int64_t multiplicity_ = 1;
  std::int64_t frobenius_ = -1;
  std::int64_t genus_ = 0;
};

/// Least element per residue class mod `modulus` of the monoid spanned by
/// `generators`; -1 marks a residue class the monoid never reaches.
std::vector<std::int64_t> residue_minima(std::span<const std::int64_t> generators,
                                         std::int64_t modulus);

/// Number of non-negative representations of k by the generators, by dynamic
/// programming. Zero for negative k. Throws ResourceLimit for k > kMaxDenumerantArg.
BigInt denumerant(std::int64_t k, std::span<const std::int64_t> generators);

/// d(0), ..., d(kmax) in one pass.
std::vector<BigInt> denumerants_upto(std::int64_t kmax, std::span<const std::int64_t> generators);

inline constexpr std::int64_t kMaxDenumerantArg = 1'000'000;

/// JSON record with generators, minimal generators, m, e, F, N, gaps, blocks
/// and symmetry.
std::string to_json(const NumericalSemigroup& s);

}  // namespace nsg
