#include "nsg/census.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nsg/arith.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/errors.hpp"

namespace nsg {

namespace {

std::int64_t parse_positive(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) {
    throw std::invalid_argument("gamma: '" + std::string(s) + "' is not a positive integer");
  }
  return v;
}

// Smallest prime factor for every n <= limit.
std::vector<std::uint32_t> smallest_prime_factors(std::int64_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

}  // namespace

Gamma parse_gamma(std::string_view text) {
  Gamma g;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    g.num = parse_positive(text);
    g.den = 1;
  } else {
    g.num = parse_positive(text.substr(0, slash));
    g.den = parse_positive(text.substr(slash + 1));
  }
  const std::int64_t d = std::gcd(g.num, g.den);
  g.num /= d;
  g.den /= d;
  if (g.den > 10'000 || g.num > 10'000) {
    throw std::invalid_argument("gamma: numerator and denominator must be <= 10000 in lowest terms");
  }
  return g;
}

bool theta_within_bound(std::int64_t theta, std::int64_t m, const Gamma& gamma) {
  const BigInt lhs = pow(BigInt(static_cast<long>(theta)), static_cast<unsigned long>(2 * gamma.den));
  const BigInt rhs =
      pow(BigInt(static_cast<long>(m)), static_cast<unsigned long>(gamma.den + 2 * gamma.num));
  return lhs <= rhs;
}

CensusResult theta_census(std::int64_t max, const Gamma& gamma, unsigned workers) {
  if (max > kMaxCensus) {
    throw ResourceLimit("census: max " + std::to_string(max) + " exceeds " +
                        std::to_string(kMaxCensus));
  }
  CensusResult out;
  if (max < 6) return out;

  const auto spf = smallest_prime_factors(max);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

  const std::int64_t chunk_count = std::min<std::int64_t>(max, std::int64_t{workers} * 8);
  const std::int64_t chunk_len = (max + chunk_count) / chunk_count;
  std::vector<std::vector<CensusRecord>> chunks(static_cast<std::size_t>(chunk_count));
  std::atomic<std::int64_t> next{0};

  auto work = [&] {
    for (std::int64_t c = next++; c < chunk_count; c = next++) {
      const std::int64_t lo = std::max<std::int64_t>(6, c * chunk_len);
      const std::int64_t hi = std::min(max, (c + 1) * chunk_len - 1);
      auto& dst = chunks[static_cast<std::size_t>(c)];
      for (std::int64_t m = lo; m <= hi; ++m) {
        const std::int64_t p = spf[static_cast<std::size_t>(m)];
        const std::int64_t q = m / p;
        if (q == p || spf[static_cast<std::size_t>(q)] != q) continue;
        const auto pair = binary_pair(p, q);
        const std::int64_t t = theta(pair);
        dst.push_back({m, p, q, t, theta_within_bound(t, m, gamma)});
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (auto& chunk : chunks) {
    for (auto& r : chunk) {
      if (r.within_bound) ++out.within_count;
      out.records.push_back(r);
    }
  }
  return out;
}

}  // namespace nsg
