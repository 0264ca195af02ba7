#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Dense univariate polynomial over Z. Index is the exponent; the leading
/// stored coefficient is never zero, so the zero polynomial is an empty
/// coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(std::size_t exponent, const BigInt& c = 1);
  /// x^d - 1
  static IntPoly x_pow_minus_one(std::size_t d);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const;
  /// Coefficient of x^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// f(x^k)
  IntPoly substitute_power(std::size_t k) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct Term {
  std::size_t exponent;
  BigInt coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Schoolbook product, iterating only over nonzero coefficients of the
/// sparser operand. Sparse binomials x^d - 1 therefore cost O(deg f).
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);

/// Quotient of an exact division over Z. Throws NonZeroRemainder when g
/// does not divide f, and std::domain_error when g is zero.
IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g);

/// Largest difference between consecutive exponents of nonzero terms; 0 for
/// a single monomial. Rejects the zero polynomial.
std::size_t max_gap(const IntPoly& f);

/// coefficient(k) == coefficient(deg - k) for all k. Rejects zero.
bool is_selfreciprocal(const IntPoly& f);

std::vector<Term> nonzero_terms(const IntPoly& f);

/// Descending-exponent rendering such as "x^4 - 3*x^2 + x - 1".
std::string to_string(const IntPoly& f);

/// JSON array of coefficients, index = exponent.
std::string to_json_array(const IntPoly& f);

}  // namespace nsg
