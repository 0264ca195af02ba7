#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsg {

enum class Status { Pass, Warn, Fail };

const char* to_string(Status s) noexcept;

/// One identity checked on one pair; serialized as a JSON line
/// {"identity", "p", "q", "status", "lhs", "rhs"}.
struct VerificationRecord {
  std::string identity;
  std::int64_t p = 0;
  std::int64_t q = 0;
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
};

struct VerifyOptions {
  /// Every coprime pair 2 <= p < q <= pmax is checked; pmax >= 3.
  std::int64_t pmax = 30;
  /// Sylvester sums sigma_0..sigma_kmax; Bernoulli recursion up to kmax + 1.
  unsigned kmax = 6;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// All identity records for one pair, in a fixed order.
std::vector<VerificationRecord> verify_pair(std::int64_t p, std::int64_t q, unsigned kmax);

/// Pairs are distributed across workers; the result is in ascending (p, q)
/// order regardless of worker count.
std::vector<VerificationRecord> run_verification(const VerifyOptions& options);

std::string to_json_line(const VerificationRecord& r);

}  // namespace nsg
