#include "nsg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "nsg/arith.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/diagram.hpp"
#include "nsg/identities.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Warn: return "WARN";
    case Status::Fail: return "FAIL";
  }
  return "FAIL";
}

std::string to_json_line(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["p"] = r.p;
  j["q"] = r.q;
  j["status"] = to_string(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  return j.dump();
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

std::string summary(const IntPoly& f) {
  return "deg " + std::to_string(f.degree()) + ", " + std::to_string(nonzero_terms(f).size()) +
         " terms";
}

std::string join(const std::set<std::int64_t>& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

class PairChecker {
 public:
  PairChecker(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  // Runs `body`, which fills lhs/rhs and returns the status; exceptions turn
  // into FAIL records carrying the message.
  void check(const std::string& identity,
             const std::function<Status(std::string&, std::string&)>& body) {
    VerificationRecord r{identity, p_, q_, Status::Fail, {}, {}};
    try {
      r.status = body(r.lhs, r.rhs);
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.lhs = std::string("exception: ") + e.what();
    }
    records_.push_back(std::move(r));
  }

  std::vector<VerificationRecord> take() { return std::move(records_); }

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::vector<VerificationRecord> records_;
};

Status equal_status(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace

std::vector<VerificationRecord> verify_pair(std::int64_t p, std::int64_t q, unsigned kmax) {
  PairChecker c(p, q);
  const BinaryPair pair = binary_pair(p, q);
  const NumericalSemigroup s({p, q});
  const IntPoly quotient = inclusion_exclusion(RhoSet({p, q}));
  const auto gaps = s.gaps();
  const std::int64_t pq = pair.pq();

  c.check("folklore", [&](std::string& lhs, std::string& rhs) {
    const auto rep = folklore_check(p, q);
    lhs = "P_S " + summary(rep.from_gaps);
    rhs = "Q " + summary(rep.quotient);
    if (!rep.holds()) lhs += "; " + rep.diagnostic;
    return equal_status(rep.holds());
  });

  c.check("bachman_product", [&](std::string& lhs, std::string& rhs) {
    IntPoly prod = IntPoly::constant(1);
    std::string ds;
    for (auto d : d_rho(RhoSet({p, q}))) {
      prod = poly_mul(prod, cyclotomic(d));
      ds += (ds.empty() ? "" : ",") + std::to_string(d);
    }
    lhs = "prod Phi_d, d in {" + ds + "}: " + summary(prod);
    rhs = "Q " + summary(quotient);
    if (auto d = describe_difference(prod, quotient)) lhs += "; " + *d;
    return equal_status(prod == quotient);
  });

  if (is_prime(p) && is_prime(q)) {
    c.check("cyclotomic_primes", [&](std::string& lhs, std::string& rhs) {
      const IntPoly phi = cyclotomic(pq);
      lhs = "Phi_pq " + summary(phi);
      rhs = "Q " + summary(quotient);
      return equal_status(phi == quotient);
    });
  }

  c.check("lam_leung", [&](std::string& lhs, std::string& rhs) {
    const IntPoly ll = lam_leung_expand(pair);
    lhs = summary(ll);
    rhs = summary(quotient);
    if (auto d = describe_difference(ll, quotient)) lhs += "; " + *d;
    return equal_status(ll == quotient);
  });

  c.check("binary_coefficient", [&](std::string& lhs, std::string& rhs) {
    for (std::int64_t k = 0; k < pq; ++k) {
      const int closed = binary_coefficient(pair, k);
      const int member = coefficient_from_membership(s, k);
      const BigInt expanded = quotient.coefficient(static_cast<std::size_t>(k));
      if (closed != member || expanded != closed) {
        lhs = "k=" + std::to_string(k) + " closed=" + std::to_string(closed) +
              " membership=" + std::to_string(member);
        rhs = "expanded=" + expanded.get_str();
        return Status::Fail;
      }
    }
    lhs = rhs = "agree on [0," + std::to_string(pq) + ")";
    return Status::Pass;
  });

  c.check("alternation", [&](std::string& lhs, std::string& rhs) {
    const auto terms = nonzero_terms(quotient);
    bool ok = !terms.empty() && terms.front().coefficient == 1;
    for (std::size_t i = 0; ok && i < terms.size(); ++i) {
      ok = terms[i].coefficient == (i % 2 == 0 ? 1 : -1);
    }
    lhs = ok ? "+1,-1,...,+1" : "not alternating";
    rhs = "+1,-1,...,+1";
    return equal_status(ok);
  });

  c.check("coefficient_counts", [&](std::string& lhs, std::string& rhs) {
    std::int64_t pos = 0, neg = 0;
    for (const auto& t : nonzero_terms(quotient)) (t.coefficient > 0 ? pos : neg)++;
    const std::int64_t rs = pair.rho * pair.sigma;
    lhs = "pos=" + std::to_string(pos) + " neg=" + std::to_string(neg);
    rhs = "pos=" + std::to_string(rs) + " neg=" + std::to_string(rs - 1);
    return equal_status(pos == rs && neg == rs - 1);
  });

  c.check("theta", [&](std::string& lhs, std::string& rhs) {
    const auto terms = static_cast<std::int64_t>(nonzero_terms(quotient).size());
    lhs = std::to_string(terms);
    rhs = std::to_string(theta(pair));
    return equal_status(terms == theta(pair));
  });

  c.check("selfreciprocal", [&](std::string& lhs, std::string& rhs) {
    const bool ok = is_selfreciprocal(quotient);
    lhs = ok ? "true" : "false";
    rhs = "true";
    return equal_status(ok);
  });

  c.check("frobenius", [&](std::string& lhs, std::string& rhs) {
    lhs = std::to_string(s.frobenius());
    rhs = std::to_string(pq - p - q);
    return equal_status(s.frobenius() == pq - p - q);
  });

  c.check("genus", [&](std::string& lhs, std::string& rhs) {
    const std::int64_t closed = (p - 1) * (q - 1) / 2;
    lhs = std::to_string(s.genus()) + " (gap list " + std::to_string(gaps.size()) + ")";
    rhs = std::to_string(closed);
    return equal_status(s.genus() == closed && static_cast<std::int64_t>(gaps.size()) == closed);
  });

  c.check("symmetric", [&](std::string& lhs, std::string& rhs) {
    const bool sym = s.is_symmetric();
    lhs = sym ? "true" : "false";
    rhs = "true";
    return equal_status(sym && 2 * s.genus() == s.frobenius() + 1);
  });

  c.check("denumerant_closed_form", [&](std::string& lhs, std::string& rhs) {
    const std::int64_t limit = 3 * pq;
    const std::int64_t gens[] = {p, q};
    const auto dp = denumerants_upto(limit, gens);
    for (std::int64_t n = 0; n <= limit; ++n) {
      const BigInt closed = denumerant_closed_form(pair, n);
      const bool step_ok = n < pq || closed == denumerant_closed_form(pair, n - pq) + 1;
      if (closed != dp[static_cast<std::size_t>(n)] || !step_ok) {
        lhs = "r(" + std::to_string(n) + ") closed=" + closed.get_str();
        rhs = "dp=" + dp[static_cast<std::size_t>(n)].get_str();
        return Status::Fail;
      }
    }
    lhs = rhs = "agree on [0," + std::to_string(limit) + "]";
    return Status::Pass;
  });

  for (unsigned k = 0; k <= kmax; ++k) {
    c.check("sylvester_k" + std::to_string(k), [&](std::string& lhs, std::string& rhs) {
      const BigInt formula = sylvester_formula(pair, k);
      const BigInt brute = gap_power_sum(gaps, k);
      lhs = formula.get_str();
      rhs = brute.get_str();
      return equal_status(formula == brute);
    });
  }

  c.check("sigma1_closed", [&](std::string& lhs, std::string& rhs) {
    lhs = gap_power_sum(gaps, 1).get_str();
    rhs = sylvester_sigma1_closed(pair).get_str();
    return equal_status(lhs == rhs);
  });

  c.check("sigma2_closed", [&](std::string& lhs, std::string& rhs) {
    lhs = gap_power_sum(gaps, 2).get_str();
    rhs = sylvester_sigma2_closed(pair).get_str();
    return equal_status(lhs == rhs);
  });

  c.check("bernoulli_recursion", [&](std::string& lhs, std::string& rhs) {
    const unsigned mmax = kmax + 1;
    const auto via = bernoulli_sequence_via_semigroup(mmax, pair);
    const auto ref = bernoulli_upto(mmax);
    for (unsigned m = 0; m <= mmax; ++m) {
      if (via[m] != ref[m]) {
        lhs = "B_" + std::to_string(m) + "=" + via[m].get_str();
        rhs = ref[m].get_str();
        return Status::Fail;
      }
    }
    lhs = rhs = "B_" + std::to_string(mmax) + "=" + ref[mmax].get_str();
    return Status::Pass;
  });

  c.check("tuenter_functional", [&](std::string& lhs, std::string& rhs) {
    const std::size_t size = tuenter_table_size(pair);
    for (unsigned power = 0; power <= 3; ++power) {
      std::vector<BigInt> table(size);
      for (std::size_t n = 0; n < size; ++n) table[n] = pow(BigInt(static_cast<unsigned long>(n)), power);
      const auto rep = tuenter_check(pair, table);
      lhs = "f=n^" + std::to_string(power) + ": " + rep.lhs.get_str() + "/" +
            rep.lhs_swapped.get_str();
      rhs = rep.rhs.get_str() + "/" + rep.rhs_swapped.get_str();
      if (!rep.holds()) return Status::Fail;
    }
    return Status::Pass;
  });

  c.check("tuenter_product", [&](std::string& lhs, std::string& rhs) {
    const auto rep = tuenter_product_identity(pair);
    lhs = rep.lhs.get_str();
    rhs = rep.rhs.get_str();
    return equal_status(rep.holds());
  });

  c.check("max_gap", [&](std::string& lhs, std::string& rhs) {
    const auto rec = max_gap_theorems(pair);
    lhs = "g(Q)=" + std::to_string(*rec.g_q) + " g(P_S)=" + std::to_string(rec.g_p);
    rhs = "m(S)-1=" + std::to_string(rec.m_minus_1);
    return equal_status(rec.holds() && rec.m_minus_1 == std::min(p, q) - 1);
  });

  if (is_prime(p) && is_prime(q) && std::min(p, q) > 2) {
    c.check("max_gap_phi", [&](std::string& lhs, std::string& rhs) {
      const auto g = static_cast<std::int64_t>(max_gap(cyclotomic(pq)));
      lhs = std::to_string(g);
      rhs = std::to_string(std::min(p, q) - 1);
      return equal_status(g == std::min(p, q) - 1);
    });
  }

  c.check("block_counts", [&](std::string& lhs, std::string& rhs) {
    const auto rec = block_counts(pair);
    lhs = "gap=" + std::to_string(rec.gap_blocks) + " element=" + std::to_string(rec.element_blocks);
    rhs = "rho*sigma-1=" + std::to_string(rec.rho_sigma - 1);
    return equal_status(rec.holds());
  });

  const auto corners = corner_counts(pair);
  c.check("corner_counts", [&](std::string& lhs, std::string& rhs) {
    lhs = std::to_string(corners.in_in) + "," + std::to_string(corners.in_out) + "," +
          std::to_string(corners.out_in) + " sum=" +
          std::to_string(corners.in_in + corners.in_out + corners.out_in + corners.out_out);
    rhs = std::to_string(corners.in_in_closed()) + "," + std::to_string(corners.edge_closed()) +
          "," + std::to_string(corners.edge_closed()) + " sum=" +
          std::to_string(corners.frobenius + 1);
    return equal_status(corners.asserted_hold());
  });

  c.check("corner_count_fourth", [&](std::string& lhs, std::string& rhs) {
    lhs = std::to_string(corners.out_out);
    rhs = std::to_string(corners.out_out_stated());
    return corners.fourth_matches_stated() ? Status::Pass : Status::Warn;
  });

  const LLLDiagram diagram = build_diagram(pair);
  c.check("diagram_permutation", [&](std::string& lhs, std::string& rhs) {
    std::vector<bool> seen(static_cast<std::size_t>(pq), false);
    for (const auto& cell : diagram.cells()) seen[static_cast<std::size_t>(cell.value)] = true;
    const bool ok = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
                    static_cast<std::int64_t>(diagram.cells().size()) == pq;
    lhs = ok ? "permutation" : "not a permutation";
    rhs = "permutation of [0," + std::to_string(pq) + ")";
    return equal_status(ok);
  });

  c.check("diagram_corners", [&](std::string& lhs, std::string& rhs) {
    const auto ce = corner_exponents(diagram);
    std::set<std::int64_t> plus, minus;
    for (const auto& t : nonzero_terms(quotient)) {
      (t.coefficient > 0 ? plus : minus).insert(static_cast<std::int64_t>(t.exponent));
    }
    lhs = "+{" + join(ce.plus) + "} -{" + join(ce.minus) + "}";
    rhs = "+{" + join(plus) + "} -{" + join(minus) + "}";
    return equal_status(ce.plus == plus && ce.minus == minus);
  });

  c.check("diagram_gaps", [&](std::string& lhs, std::string& rhs) {
    std::set<std::int64_t> marked;
    for (const auto& cell : diagram.cells()) {
      if (cell.is_gap) marked.insert(cell.value);
    }
    const std::set<std::int64_t> expected(gaps.begin(), gaps.end());
    lhs = std::to_string(marked.size()) + " marked";
    rhs = std::to_string(expected.size()) + " gaps";
    return equal_status(marked == expected &&
                        static_cast<std::int64_t>(marked.size()) == (p - 1) * (q - 1) / 2);
  });

  c.check("diagram_neutral", [&](std::string& lhs, std::string& rhs) {
    auto in_t = [&](std::int64_t k) { return k >= 0 && k < pq && s.contains(k); };
    for (const auto& cell : diagram.cells()) {
      if (cell.region != Region::Neutral) continue;
      if (in_t(cell.value) != in_t(cell.value - 1)) {
        lhs = "neutral cell " + std::to_string(cell.value) + " changes membership";
        rhs = "no change";
        return Status::Fail;
      }
    }
    lhs = rhs = "no membership change in neutral cells";
    return Status::Pass;
  });

  return c.take();
}

std::vector<VerificationRecord> run_verification(const VerifyOptions& options) {
  if (options.pmax < 3) throw std::invalid_argument("verify: pmax must be >= 3");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 2; p <= options.pmax; ++p) {
    for (std::int64_t q = p + 1; q <= options.pmax; ++q) {
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));

  std::vector<std::vector<VerificationRecord>> per_pair(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      per_pair[i] = verify_pair(pairs[i].first, pairs[i].second, options.kmax);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<VerificationRecord> out;
  for (auto& v : per_pair) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nsg
