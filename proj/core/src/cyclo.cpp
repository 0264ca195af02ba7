#include "nsg/cyclo.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nsg/arith.hpp"
#include "nsg/errors.hpp"

namespace nsg {

namespace {

// Multiplies the numerator list together, then divides out the denominators.
IntPoly binomial_quotient(const std::vector<std::int64_t>& numerator,
                          const std::vector<std::int64_t>& denominator) {
  IntPoly acc = IntPoly::constant(1);
  for (auto d : numerator) acc = poly_mul(acc, IntPoly::x_pow_minus_one(static_cast<std::size_t>(d)));
  for (auto d : denominator) {
    acc = poly_exact_div(acc, IntPoly::x_pow_minus_one(static_cast<std::size_t>(d)));
  }
  return acc;
}

}  // namespace

IntPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  if (n > kMaxCyclotomicIndex) {
    throw ResourceLimit("cyclotomic: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxCyclotomicIndex));
  }
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;
  for (auto d : divisors(n)) {
    switch (mobius(n / d)) {
      case 1: numerator.push_back(d); break;
      case -1: denominator.push_back(d); break;
      default: break;
    }
  }
  IntPoly phi;
  try {
    phi = binomial_quotient(numerator, denominator);
  } catch (const NonZeroRemainder& e) {
    throw InternalError(std::string("cyclotomic: Moebius product not exact: ") + e.what());
  }
  if (static_cast<std::int64_t>(phi.degree()) != euler_phi(n)) {
    throw InternalError("cyclotomic: degree differs from euler_phi");
  }
  return phi;
}

RhoSet::RhoSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("RhoSet: empty set");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] <= 1) {
      throw std::invalid_argument("RhoSet: element " + std::to_string(elements_[i]) +
                                  " is not > 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(elements_[i], elements_[j]) != 1) {
        throw std::invalid_argument("RhoSet: " + std::to_string(elements_[j]) + " and " +
                                    std::to_string(elements_[i]) + " are not coprime");
      }
    }
    if (product_ > kMaxRhoProduct / elements_[i]) {
      throw ResourceLimit("RhoSet: product of elements exceeds " + std::to_string(kMaxRhoProduct));
    }
    product_ *= elements_[i];
  }
}

std::int64_t RhoSet::degree() const noexcept {
  std::int64_t d = 1;
  for (auto r : elements_) d *= r - 1;
  return d;
}

IntPoly inclusion_exclusion(const RhoSet& rho) {
  const auto& r = rho.elements();
  const std::size_t s = r.size();
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    std::int64_t n = rho.product();
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1U) n /= r[i];
    }
    (std::popcount(mask) % 2 == 0 ? numerator : denominator).push_back(n);
  }
  IntPoly q = binomial_quotient(numerator, denominator);
  if (static_cast<std::int64_t>(q.degree()) != rho.degree()) {
    throw InternalError("inclusion_exclusion: degree differs from prod (r_i - 1)");
  }
  return q;
}

std::vector<std::int64_t> d_rho(const RhoSet& rho) {
  std::vector<std::int64_t> out;
  for (auto d : divisors(rho.product())) {
    const bool shares_all = std::all_of(rho.elements().begin(), rho.elements().end(),
                                        [d](std::int64_t r) { return std::gcd(d, r) > 1; });
    if (shares_all) out.push_back(d);
  }
  return out;
}

BinaryPair binary_pair(std::int64_t p, std::int64_t q) {
  if (p <= 1 || q <= 1) {
    throw std::invalid_argument("binary_pair: p and q must exceed 1");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("binary_pair: " + std::to_string(p) + " and " +
                                std::to_string(q) + " are not coprime");
  }
  if (p > 3'000'000'000 / q) throw ResourceLimit("binary_pair: pq too large");
  BinaryPair out{p, q, 0, 0, mod_inverse(p, q), mod_inverse(q, p)};
  // 1 + pq = rho p + sigma q forces rho = p^{-1} mod q.
  out.rho = out.p_inv_mod_q;
  const std::int64_t rest = 1 + p * q - out.rho * p;
  if (rest % q != 0) throw InternalError("binary_pair: sigma is not integral");
  out.sigma = rest / q;
  if (out.sigma < 0 || out.sigma >= p) throw InternalError("binary_pair: sigma out of range");
  return out;
}

int binary_coefficient(const BinaryPair& pair, std::int64_t m) {
  const std::int64_t pq = pair.pq();
  if (m < 0 || m >= pq) {
    throw std::out_of_range("binary_coefficient: exponent " + std::to_string(m) +
                            " outside [0, pq)");
  }
  const std::int64_t alpha = (m % pair.q) * pair.p_inv_mod_q % pair.q;
  const std::int64_t beta = (m % pair.p) * pair.q_inv_mod_p % pair.p;
  const std::int64_t raw = alpha * pair.p + beta * pair.q;
  if (raw == m && alpha < pair.rho && beta < pair.sigma) return 1;
  if (raw == m + pq && alpha >= pair.rho && beta >= pair.sigma) return -1;
  return 0;
}

IntPoly lam_leung_expand(const BinaryPair& pair) {
  const std::int64_t p = pair.p;
  const std::int64_t q = pair.q;
  std::vector<BigInt> c(static_cast<std::size_t>(p * q));
  std::vector<bool> hit(c.size(), false);
  auto place = [&](std::int64_t e, int sign) {
    const auto k = static_cast<std::size_t>(e);
    if (e < 0 || k >= c.size() || hit[k]) {
      throw InternalError("lam_leung_expand: monomial collision at exponent " + std::to_string(e));
    }
    hit[k] = true;
    c[k] = sign;
  };
  for (std::int64_t i = 0; i < pair.rho; ++i) {
    for (std::int64_t j = 0; j < pair.sigma; ++j) place(i * p + j * q, 1);
  }
  for (std::int64_t i = pair.rho; i < q; ++i) {
    for (std::int64_t j = pair.sigma; j < p; ++j) place(i * p + j * q - p * q, -1);
  }
  return IntPoly(std::move(c));
}

std::int64_t theta(const BinaryPair& pair) { return 2 * pair.rho * pair.sigma - 1; }

}  // namespace nsg
