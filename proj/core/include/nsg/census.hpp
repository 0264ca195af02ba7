#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nsg {

/// Positive rational exponent a/b, stored in lowest terms.
struct Gamma {
  std::int64_t num = 1;
  std::int64_t den = 20;

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Accepts "a/b" or "a" with a, b > 0 and b <= 10000. Throws std::invalid_argument.
Gamma parse_gamma(std::string_view text);

/// theta <= m^{1/2 + a/b}, decided as theta^{2b} <= m^{b + 2a} in integers.
bool theta_within_bound(std::int64_t theta, std::int64_t m, const Gamma& gamma);

struct CensusRecord {
  std::int64_t m;
  std::int64_t p;
  std::int64_t q;
  std::int64_t theta;
  bool within_bound;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  std::int64_t within_count = 0;
};

inline constexpr std::int64_t kMaxCensus = 10'000'000;

/// Every m = pq <= max with p < q primes, ascending, theta from the closed
/// form 2 rho sigma - 1. The m range is split into chunks handed to workers;
/// chunk results are concatenated in order, so the output does not depend on
/// the worker count. Throws ResourceLimit above kMaxCensus.
CensusResult theta_census(std::int64_t max, const Gamma& gamma, unsigned workers = 0);

}  // namespace nsg
