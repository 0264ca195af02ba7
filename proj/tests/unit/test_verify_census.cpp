#include <gtest/gtest.h>

#include <random>
#include <set>

#include "json.hpp"
#include "nsg/census.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/errors.hpp"
#include "nsg/verify.hpp"
#include "oracles.hpp"

using namespace nsg;

TEST(Verify, SmallestSweep) {
  const auto recs = run_verification({.pmax = 3, .kmax = 2, .workers = 1});
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) {
    EXPECT_EQ(r.p, 2);
    EXPECT_EQ(r.q, 3);
    EXPECT_NE(r.status, Status::Fail) << r.identity;
  }
  EXPECT_THROW(run_verification({.pmax = 2}), std::invalid_argument);
}

TEST(Verify, OnlyCornerFourthWarns) {
  const auto recs = run_verification({.pmax = 20, .kmax = 4, .workers = 2});
  std::set<std::string> warn;
  for (const auto& r : recs) {
    ASSERT_NE(r.status, Status::Fail) << to_json_line(r);
    if (r.status == Status::Warn) warn.insert(r.identity);
  }
  EXPECT_EQ(warn, std::set<std::string>{"corner_count_fourth"});
}

TEST(Verify, DeterministicAcrossWorkers) {
  const auto a = run_verification({.pmax = 14, .kmax = 3, .workers = 1});
  const auto b = run_verification({.pmax = 14, .kmax = 3, .workers = 4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(to_json_line(a[i]), to_json_line(b[i]));
}

TEST(Verify, JsonLineShape) {
  const auto recs = verify_pair(5, 7, 2);
  const auto j = nlohmann::json::parse(to_json_line(recs.front()));
  EXPECT_EQ(j["identity"], "folklore");
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["q"], 7);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_TRUE(j.contains("lhs"));
  EXPECT_TRUE(j.contains("rhs"));
}

TEST(Gamma, Parse) {
  const auto g = parse_gamma("5/100");
  EXPECT_EQ(g.num, 1);
  EXPECT_EQ(g.den, 20);
  EXPECT_EQ(parse_gamma("2").den, 1);
  for (const char* bad : {"", "0/3", "1/0", "-1/2", "a/b", "1/2/3", "1/20001", " 1/2"}) {
    EXPECT_THROW(parse_gamma(bad), std::invalid_argument) << bad;
  }
}

TEST(Gamma, BoundIsExact) {
  // theta <= m^{3/4}: 10 <= 22^{0.75} = 10.15..., 11 is not.
  const Gamma g{1, 4};
  EXPECT_TRUE(theta_within_bound(10, 22, g));
  EXPECT_FALSE(theta_within_bound(11, 22, g));
  // boundary equality: 8 = 16^{3/4}
  EXPECT_TRUE(theta_within_bound(8, 16, g));
  EXPECT_FALSE(theta_within_bound(9, 16, g));
}

TEST(Census, Examples) {
  const auto a = theta_census(35, {1, 4}, 1);
  ASSERT_FALSE(a.records.empty());
  EXPECT_EQ(a.records.back().m, 35);
  EXPECT_EQ(a.records.back().theta, 17);
  const auto b = theta_census(6, {1, 2}, 1);
  ASSERT_EQ(b.records.size(), 1u);
  EXPECT_EQ(b.records[0].m, 6);
  EXPECT_EQ(b.records[0].theta, 3);
  EXPECT_TRUE(theta_census(5, {1, 20}, 1).records.empty());
  EXPECT_THROW(theta_census(kMaxCensus + 1, {1, 20}, 1), ResourceLimit);
}

TEST(Census, CountsSemiprimes) {
  const auto r = theta_census(10'000, {1, 20}, 3);
  std::int64_t want = 0;
  for (std::int64_t m = 6; m <= 10'000; ++m) {
    for (std::int64_t p = 2; p * p < m; ++p) {
      if (m % p == 0 && oracle::is_prime(p) && oracle::is_prime(m / p)) {
        ++want;
        break;
      }
    }
  }
  EXPECT_EQ(static_cast<std::int64_t>(r.records.size()), want);
  for (std::size_t i = 1; i < r.records.size(); ++i) ASSERT_LT(r.records[i - 1].m, r.records[i].m);
}

TEST(Census, WorkerCountInvariant) {
  const auto a = theta_census(20'000, {1, 20}, 1);
  for (unsigned w : {2u, 3u, 7u, 16u}) {
    const auto b = theta_census(20'000, {1, 20}, w);
    ASSERT_EQ(a.records, b.records);
    ASSERT_EQ(a.within_count, b.within_count);
  }
}

TEST(Census, ThetaMatchesExpansion) {
  std::mt19937_64 rng(0x5eed0009);
  const auto r = theta_census(3000, {1, 20}, 1);
  std::uniform_int_distribution<std::size_t> pick(0, r.records.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto& rec = r.records[pick(rng)];
    const auto phi = oracle::cyclotomic(rec.m);
    std::int64_t nz = 0;
    for (auto c : phi) nz += c != 0;
    ASSERT_EQ(rec.theta, nz) << rec.m;
  }
}
