// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/diagram.hpp"
#include "nsg/identities.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"
#include "oracles.hpp"

using namespace nsg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

template <class F>
void coprime_pairs(std::int64_t limit, F&& f) {
  for (std::int64_t p = 2; p <= limit; ++p) {
    for (std::int64_t q = p + 1; q <= limit; ++q) {
      if (std::gcd(p, q) == 1) f(p, q);
    }
  }
}

std::string pair_str(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nsg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome folklore() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int pairs = 0;
  coprime_pairs(50, [&](std::int64_t p, std::int64_t q) {
    ++pairs;
    const auto r = folklore_check(p, q);
    if (!r.holds()) o.fail(pair_str(p, q) + ": " + r.diagnostic);
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, three routes each, " + std::to_string(secs) + " s";
  return o;
}

Outcome coefficients() {
  Outcome o;
  int pairs = 0;
  coprime_pairs(40, [&](std::int64_t p, std::int64_t q) {
    ++pairs;
    const auto pair = binary_pair(p, q);
    const auto qpoly = inclusion_exclusion(RhoSet({p, q}));
    std::int64_t pos = 0, neg = 0;
    int last = -1;
    for (std::int64_t m = 0; m < pair.pq(); ++m) {
      const int a = binary_coefficient(pair, m);
      const BigInt c = qpoly.coefficient(static_cast<std::size_t>(m));
      const int b = coefficient_from_membership(pair, m);
      if (c != a || a != b) {
        o.fail(pair_str(p, q) + " m=" + std::to_string(m));
        return;
      }
      if (a == 0) continue;
      if (a == last) o.fail(pair_str(p, q) + ": no alternation at m=" + std::to_string(m));
      last = a;
      (a > 0 ? pos : neg) += 1;
    }
    const std::int64_t rs = pair.rho * pair.sigma;
    if (pos != rs || neg != rs - 1) o.fail(pair_str(p, q) + ": counts " + std::to_string(pos) + "/" + std::to_string(neg));
  });
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome max_gaps() {
  Outcome o;
  int n_phi = 0, n_q = 0;
  for (std::int64_t p = 3; p <= 80; ++p) {
    for (std::int64_t q = p + 1; q <= 80; ++q) {
      if (!oracle::is_prime(p) || !oracle::is_prime(q)) continue;
      ++n_phi;
      if (static_cast<std::int64_t>(max_gap(cyclotomic(p * q))) != p - 1) o.fail("Phi_" + std::to_string(p * q));
    }
  }
  coprime_pairs(50, [&](std::int64_t p, std::int64_t q) {
    ++n_q;
    if (static_cast<std::int64_t>(max_gap(inclusion_exclusion(RhoSet({p, q})))) != p - 1) o.fail("Q" + pair_str(p, q));
  });
  std::mt19937_64 rng(0xacce0003);
  for (int i = 0; i < 200; ++i) {
    const auto gens = oracle::random_generators(rng, 30, 5);
    const NumericalSemigroup s(gens);
    if (static_cast<std::int64_t>(max_gap(s.semigroup_polynomial())) != s.multiplicity() - 1) {
      o.fail("P_S for generators " + std::to_string(gens.front()) + "...");
    }
  }
  if (o.ok) o.detail = std::to_string(n_phi) + " Phi_pq, " + std::to_string(n_q) + " Q_{p,q}, 200 random P_S";
  return o;
}

Outcome sylvester() {
  Outcome o;
  coprime_pairs(60, [&](std::int64_t p, std::int64_t q) {
    const NumericalSemigroup s({p, q});
    const auto gaps = oracle::gaps({p, q});
    const std::int64_t f = gaps.back();
    const auto n = static_cast<std::int64_t>(gaps.size());
    if (s.frobenius() != f || f != p * q - p - q) o.fail("F" + pair_str(p, q));
    if (s.genus() != n || 2 * n != (p - 1) * (q - 1)) o.fail("N" + pair_str(p, q));
  });
  coprime_pairs(30, [&](std::int64_t p, std::int64_t q) {
    const auto pair = binary_pair(p, q);
    const auto gaps = oracle::gaps({p, q});
    for (unsigned k = 0; k <= 8; ++k) {
      BigInt brute = 0;
      for (auto g : gaps) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), BigInt(static_cast<long>(g)).get_mpz_t(), k);
        brute += t;
      }
      try {
        if (sylvester_formula(pair, k) != brute) o.fail("sigma_" + std::to_string(k) + pair_str(p, q));
      } catch (const std::exception& e) {
        o.fail(std::string("sigma_") + std::to_string(k) + pair_str(p, q) + ": " + e.what());
      }
    }
  });
  const auto pair = binary_pair(4, 7);
  const long want[] = {9, 66, 714, 9216};
  for (unsigned k = 0; k < 4; ++k) {
    if (sylvester_formula(pair, k) != want[k]) o.fail("(4,7) sigma_" + std::to_string(k));
  }
  if (o.ok) o.detail = "F, N for pairs <= 60; sigma_0..8 for pairs <= 30; (4,7) = 9, 66, 714, 9216";
  return o;
}

Outcome bernoulli_recursion() {
  Outcome o;
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{4, 7}, {3, 5}, {5, 7}}) {
    const auto seq = bernoulli_sequence_via_semigroup(20, binary_pair(p, q));
    for (unsigned m = 0; m <= 20; ++m) {
      if (seq[m] != oracle::bernoulli_at(m)) o.fail(pair_str(p, q) + " B_" + std::to_string(m));
    }
    if (seq[4] != BigRational(-1, 30)) o.fail("B_4");
  }
  if (o.ok) o.detail = "B_0..B_20 via (4,7), (3,5), (5,7)";
  return o;
}

Outcome symmetry() {
  Outcome o;
  std::mt19937_64 rng(0xacce0006);
  int e2 = 0, sym = 0;
  for (int i = 0; i < 500; ++i) {
    const auto gens = oracle::random_generators(rng, 40, 5);
    const NumericalSemigroup s(gens);
    bool symmetric = false;
    try {
      symmetric = s.is_symmetric();  // both routes, throws on disagreement
    } catch (const std::exception& e) {
      o.fail(e.what());
      continue;
    }
    // set-definition oracle
    const auto f = s.frobenius();
    const auto in = oracle::membership(gens, std::max<std::int64_t>(f, 0));
    bool def = true;
    for (std::int64_t n = 0; n <= f; ++n) {
      if (in[static_cast<std::size_t>(n)] == in[static_cast<std::size_t>(f - n)]) def = false;
    }
    if (def != symmetric) o.fail("definition disagrees at sample " + std::to_string(i));
    if (s.embedding_dimension() == 2) {
      ++e2;
      if (!symmetric) o.fail("e(S) = 2 but not symmetric");
    }
    sym += symmetric;
    const auto g = s.genus();
    if (2 * g < f + 1 || ((2 * g == f + 1) != symmetric)) o.fail("2N vs F+1 at sample " + std::to_string(i));
  }
  if (o.ok) {
    o.detail = "500 random semigroups (" + std::to_string(sym) + " symmetric, " + std::to_string(e2) + " with e = 2)";
  }
  return o;
}

Outcome diagrams() {
  Outcome o;
  const auto plain = cli({"diagram", "5", "7"});
  const auto marked = cli({"diagram", "5", "7", "--mark-gaps"});
  if (plain.code != 0 || plain.out != slurp(NSG_GOLDEN_DIR "/diagram_5_7.txt")) o.fail("diagram 5 7 differs from golden");
  if (marked.code != 0 || marked.out != slurp(NSG_GOLDEN_DIR "/diagram_5_7_gaps.txt")) {
    o.fail("diagram 5 7 --mark-gaps differs from golden");
  }
  std::set<std::int64_t> starred;
  for (const auto& c : build_diagram(binary_pair(5, 7)).cells()) {
    if (c.is_gap) starred.insert(c.value);
  }
  const auto g57 = oracle::gaps({5, 7});
  if (starred != std::set<std::int64_t>(g57.begin(), g57.end())) o.fail("starred cells != gaps of S(5,7)");
  int pairs = 0;
  coprime_pairs(30, [&](std::int64_t p, std::int64_t q) {
    ++pairs;
    const auto corners = corner_exponents(build_diagram(binary_pair(p, q)));
    const auto series = oracle::binary_q_series(p, q);
    std::set<std::int64_t> plus, minus;
    for (std::size_t k = 0; k < series.size(); ++k) {
      if (series[k] > 0) plus.insert(static_cast<std::int64_t>(k));
      if (series[k] < 0) minus.insert(static_cast<std::int64_t>(k));
    }
    if (corners.plus != plus || corners.minus != minus) o.fail("corners " + pair_str(p, q));
  });
  if (o.ok) o.detail = "both golden files byte-exact; corners on " + std::to_string(pairs) + " pairs";
  return o;
}

Outcome tuenter() {
  Outcome o;
  std::mt19937_64 rng(0xacce0008);
  std::uniform_int_distribution<long> val(-1'000'000'000, 1'000'000'000);
  int checks = 0;
  coprime_pairs(30, [&](std::int64_t p, std::int64_t q) {
    const auto pair = binary_pair(p, q);
    const std::size_t n = tuenter_table_size(pair);
    std::vector<std::vector<BigInt>> tables;
    for (unsigned e = 0; e <= 3; ++e) {
      std::vector<BigInt> f(n);
      for (std::size_t i = 0; i < n; ++i) {
        mpz_pow_ui(f[i].get_mpz_t(), BigInt(static_cast<unsigned long>(i)).get_mpz_t(), e);
      }
      tables.push_back(std::move(f));
    }
    tables.push_back(std::vector<BigInt>(n, 7));
    for (int t = 0; t < 100; ++t) {
      std::vector<BigInt> f(n);
      for (auto& x : f) x = val(rng);
      tables.push_back(std::move(f));
    }
    for (const auto& f : tables) {
      ++checks;
      if (!tuenter_check(pair, f).holds()) o.fail("functional " + pair_str(p, q));
    }
    if (!tuenter_product_identity(pair).holds()) o.fail("product " + pair_str(p, q));
  });
  if (o.ok) o.detail = std::to_string(checks) + " tables, both orientations, product identity";
  return o;
}

Outcome blocks() {
  Outcome o;
  coprime_pairs(40, [&](std::int64_t p, std::int64_t q) {
    const auto r = block_counts(binary_pair(p, q));
    if (!r.holds()) o.fail(pair_str(p, q));
  });
  const auto b = NumericalSemigroup({4, 7}).blocks();
  const std::vector<Block> gaps{{1, 3}, {5, 6}, {9, 10}, {13, 13}, {17, 17}};
  const std::vector<Block> elems{{0, 0}, {4, 4}, {7, 8}, {11, 12}, {14, 16}};
  if (b.gap_blocks != gaps) o.fail("(4,7) gap blocks");
  if (b.element_blocks != elems) o.fail("(4,7) element blocks");
  if (o.ok) o.detail = "pairs <= 40; (4,7) blocks verbatim";
  return o;
}

Outcome census() {
  Outcome o;
  const auto one = cli({"scan", "--max", "10000", "--gamma", "1/20", "--workers", "1"});
  const auto many = cli({"scan", "--max", "10000", "--gamma", "1/20", "--workers", "8"});
  const auto again = cli({"scan", "--max", "10000", "--gamma", "1/20", "--workers", "3"});
  if (one.code != 0 || one.out.empty()) o.fail("scan exit " + std::to_string(one.code));
  if (one.out != many.out || one.out != again.out) o.fail("output differs across worker counts");

  // Parse records, spot-check theta by full expansion.
  std::vector<std::array<std::int64_t, 4>> recs;
  std::istringstream in(one.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'm') continue;
    std::istringstream ls(line);
    std::array<std::int64_t, 4> r{};
    ls >> r[0] >> r[1] >> r[2] >> r[3];
    recs.push_back(r);
  }
  std::mt19937_64 rng(0xacce0010);
  std::uniform_int_distribution<std::size_t> pick(0, recs.empty() ? 0 : recs.size() - 1);
  for (int i = 0; i < 50 && !recs.empty(); ++i) {
    const auto& r = recs[pick(rng)];
    std::int64_t nz = 0;
    for (auto c : oracle::cyclotomic(r[0])) nz += c != 0;
    if (nz != r[3]) o.fail("theta(" + std::to_string(r[0]) + ")");
  }
  if (o.ok) o.detail = std::to_string(recs.size()) + " records identical for 1/3/8 workers; 50 thetas expanded";
  return o;
}

Outcome discrepancy() {
  Outcome o;
  const auto r = cli({"verify", "--pmax", "30", "--kmax", "6"});
  if (r.code != 0) o.fail("verify exit code " + std::to_string(r.code));
  std::set<std::string> warn_classes;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"status\":\"FAIL\"") != std::string::npos) o.fail("FAIL record: " + line);
    if (line.find("\"status\":\"WARN\"") != std::string::npos) {
      const auto a = line.find("\"identity\":\"") + 12;
      warn_classes.insert(line.substr(a, line.find('"', a) - a));
    }
  }
  if (warn_classes != std::set<std::string>{"corner_count_fourth"}) o.fail("unexpected WARN classes");
  coprime_pairs(30, [&](std::int64_t p, std::int64_t q) {
    const auto c = corner_counts(binary_pair(p, q));
    if (c.out_out != c.genus - c.rho_sigma + 1) o.fail("brute-force fourth count " + pair_str(p, q));
  });
  if (o.ok) o.detail = "single WARN class corner_count_fourth, exit 0, brute force = N - rho*sigma + 1";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"folklore identity, three routes, pairs <= 50", folklore},
      {"coefficient closed form, alternation, counts", coefficients},
      {"maximum gaps of Phi_pq, Q_{p,q}, P_S", max_gaps},
      {"Frobenius, genus, Sylvester sums", sylvester},
      {"Bernoulli numbers via semigroup recursion", bernoulli_recursion},
      {"symmetry routes and genus bound", symmetry},
      {"diagram golden files and corners", diagrams},
      {"Tuenter functional and product identities", tuenter},
      {"gap and element block counts", blocks},
      {"census determinism and theta spot checks", census},
      {"known fourth corner-count discrepancy as WARN", discrepancy},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::printf("%s [%2zu] %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
