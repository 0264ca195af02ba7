#include "nsg/arith.hpp"

#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " +
                                std::to_string(n));
  }
}

class BernoulliCache {
 public:
  BernoulliCache() { values_.emplace_back(1); }

  std::vector<BigRational> prefix(unsigned m) {
    {
      std::shared_lock lock(mutex_);
      if (values_.size() > m) {
        return {values_.begin(), values_.begin() + m + 1};
      }
    }
    std::unique_lock lock(mutex_);
    extend(m);
    return {values_.begin(), values_.begin() + m + 1};
  }

  BigRational at(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (values_.size() > n) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

 private:
  // Caller holds the unique lock.
  void extend(unsigned m) {
    while (values_.size() <= m) {
      const auto n = static_cast<unsigned>(values_.size());
      if (n >= 3 && n % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      // (n+1) B_n = -sum_{j<n} C(n+1, j) B_j
      BigRational acc = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (values_[j] == 0) continue;
        acc += BigRational(binomial(n + 1, j)) * values_[j];
      }
      BigRational b = -acc / BigRational(n + 1);
      b.canonicalize();
      values_.push_back(std::move(b));
    }
  }

  std::shared_mutex mutex_;
  std::vector<BigRational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("make_rational: zero denominator");
  BigRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_canonical(const BigRational& r) {
  const BigInt& den = r.get_den();
  if (den < 1) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), den.get_mpz_t());
  return g == 1;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  auto rest = static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t phi = n;
  for (const auto& pe : factorize(n)) {
    const auto p = static_cast<std::int64_t>(pe.prime);
    phi = phi / p * (p - 1);
  }
  return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t squarefree_kernel(std::int64_t n) {
  require_positive(n, "squarefree_kernel");
  std::int64_t k = 1;
  for (const auto& pe : factorize(n)) k *= static_cast<std::int64_t>(pe.prime);
  return k;
}

BezoutResult extended_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("extended_gcd: both arguments are zero");
  if (a != 0 && b % a == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
    old_t = std::exchange(t, old_t - quot * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  const auto [g, x, y] = extended_gcd(a, m);
  if (g != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  }
  (void)y;
  const std::int64_t inv = x % m;
  return inv < 0 ? inv + m : inv;
}

std::vector<BigRational> bernoulli_upto(unsigned m) { return bernoulli_cache().prefix(m); }

BigRational bernoulli(unsigned n) { return bernoulli_cache().at(n); }

BigInt power_sum(unsigned j, std::uint64_t n) {
  // S_j(n) = 1/(j+1) sum_{i=0}^{j} C(j+1, i) B_i n^{j+1-i}
  const auto b = bernoulli_upto(j);
  const BigInt big_n(static_cast<unsigned long>(n));
  BigRational acc = 0;
  for (unsigned i = 0; i <= j; ++i) {
    if (b[i] == 0) continue;
    acc += BigRational(binomial(j + 1, i) * pow(big_n, j + 1 - i)) * b[i];
  }
  acc /= BigRational(j + 1);
  acc.canonicalize();
  if (acc.get_den() != 1) {
    throw InternalError("power_sum: non-integral result " + acc.get_str() + " for S_" +
                        std::to_string(j) + "(" + std::to_string(n) + ")");
  }
  return acc.get_num();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(unsigned n, unsigned i, unsigned j, unsigned k) {
  if (i + j + k != n) throw std::invalid_argument("multinomial: parts must sum to n");
  // C(n, i) * C(n - i, j)
  return binomial(n, i) * binomial(n - i, j);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigRational out(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

}  // namespace nsg
