#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsg/arith.hpp"
#include "nsg/census.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/diagram.hpp"
#include "nsg/errors.hpp"
#include "nsg/identities.hpp"
#include "nsg/poly.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

namespace nsg::cli {

namespace {

using json = nlohmann::ordered_json;

template <class Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : r) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

std::string blocks_text(const std::vector<Block>& bs) {
  std::string out;
  for (const auto& b : bs) {
    if (!out.empty()) out += ' ';
    out += '[' + std::to_string(b.first) + ',' + std::to_string(b.last) + ']';
  }
  return out;
}

// semigroup ------------------------------------------------------------------

struct SemigroupArgs {
  std::vector<std::int64_t> generators;
  bool as_json = false;
};

int cmd_semigroup(const SemigroupArgs& a, std::ostream& out) {
  const NumericalSemigroup s(a.generators);
  if (a.as_json) {
    out << to_json(s) << '\n';
    return kOk;
  }
  out << "generators: " << join(s.generators()) << '\n';
  out << "minimal generators: " << join(s.minimal_generators()) << '\n';
  out << "multiplicity: " << s.multiplicity() << '\n';
  out << "embedding dimension: " << s.embedding_dimension() << '\n';
  out << "frobenius: " << s.frobenius() << '\n';
  out << "genus: " << s.genus() << '\n';
  out << "gaps: " << join(s.gaps()) << '\n';
  if (s.frobenius() >= 0) {
    const auto b = s.blocks();
    out << "gap blocks: " << blocks_text(b.gap_blocks) << '\n';
    out << "element blocks: " << blocks_text(b.element_blocks) << '\n';
  } else {
    out << "gap blocks: \nelement blocks: \n";
  }
  out << "symmetric: " << (s.is_symmetric() ? "true" : "false") << '\n';
  return kOk;
}

// poly -----------------------------------------------------------------------

struct PolyArgs {
  std::string kind;
  std::vector<std::int64_t> args;
  bool as_json = false;
};

int cmd_poly(const PolyArgs& a, std::ostream& out, std::ostream& err) {
  IntPoly f;
  if (a.kind == "phi") {
    if (a.args.size() != 1) {
      err << "poly phi: expected exactly one index n >= 1\n";
      return kUsage;
    }
    f = cyclotomic(a.args[0]);
  } else if (a.kind == "q") {
    if (a.args.empty()) {
      err << "poly q: expected at least one element\n";
      return kUsage;
    }
    f = inclusion_exclusion(RhoSet(a.args));
  } else {
    if (a.args.empty()) {
      err << "poly ps: expected at least one generator\n";
      return kUsage;
    }
    f = NumericalSemigroup(a.args).semigroup_polynomial();
  }
  const auto terms = nonzero_terms(f);
  if (a.as_json) {
    json j;
    j["kind"] = a.kind;
    j["args"] = a.args;
    j["degree"] = f.degree();
    j["terms"] = terms.size();
    j["max_gap"] = max_gap(f);
    j["selfreciprocal"] = is_selfreciprocal(f);
    j["text"] = to_string(f);
    j["coefficients"] = json::parse(to_json_array(f));
    out << j.dump() << '\n';
    return kOk;
  }
  out << "polynomial: " << to_string(f) << '\n';
  out << "degree: " << f.degree() << '\n';
  out << "terms: " << terms.size() << '\n';
  out << "max gap: " << max_gap(f) << '\n';
  out << "selfreciprocal: " << (is_selfreciprocal(f) ? "true" : "false") << '\n';
  return kOk;
}

// diagram --------------------------------------------------------------------

struct DiagramArgs {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool mark_gaps = false;
  std::string format = "text";
};

int cmd_diagram(const DiagramArgs& a, std::ostream& out) {
  RenderOptions opt;
  opt.mark_gaps = a.mark_gaps;
  if (a.format == "markdown") opt.format = DiagramFormat::Markdown;
  if (a.format == "json") opt.format = DiagramFormat::Json;
  out << render(build_diagram(binary_pair(a.p, a.q)), opt);
  return kOk;
}

// sylvester ------------------------------------------------------------------

struct SylvesterArgs {
  std::int64_t p = 0;
  std::int64_t q = 0;
  unsigned kmax = 3;
  bool as_json = false;
};

int cmd_sylvester(const SylvesterArgs& a, std::ostream& out) {
  const auto pair = binary_pair(a.p, a.q);
  bool ok = true;
  json rows = json::array();
  for (unsigned k = 0; k <= a.kmax; ++k) {
    const auto rep = sylvester_sum(pair, k);
    ok = ok && rep.holds();
    if (a.as_json) {
      json r;
      r["k"] = k;
      r["formula"] = rep.value_formula.get_str();
      r["brute"] = rep.value_brute.get_str();
      r["match"] = rep.holds();
      rows.push_back(std::move(r));
    } else {
      out << "sigma_" << k << "(" << a.p << "," << a.q << ") = " << rep.value_brute
          << "  formula=" << rep.value_formula << (rep.holds() ? "  ok" : "  MISMATCH") << '\n';
    }
  }
  if (a.as_json) {
    json j;
    j["p"] = a.p;
    j["q"] = a.q;
    j["sums"] = std::move(rows);
    out << j.dump() << '\n';
  }
  return ok ? kOk : kIdentityFailure;
}

// bernoulli ------------------------------------------------------------------

struct BernoulliArgs {
  unsigned m = 0;
  std::vector<std::int64_t> via;
  bool as_json = false;
};

int cmd_bernoulli(const BernoulliArgs& a, std::ostream& out, std::ostream& err) {
  const auto b = bernoulli_upto(a.m);
  std::vector<BigRational> alt;
  if (!a.via.empty()) {
    if (a.via.size() != 2) {
      err << "bernoulli --via: expected two coprime integers p q\n";
      return kUsage;
    }
    alt = bernoulli_sequence_via_semigroup(a.m, binary_pair(a.via[0], a.via[1]));
  }
  bool ok = true;
  json rows = json::array();
  for (unsigned n = 0; n <= a.m; ++n) {
    const bool match = alt.empty() || alt[n] == b[n];
    ok = ok && match;
    if (a.as_json) {
      json r;
      r["n"] = n;
      r["value"] = b[n].get_str();
      if (!alt.empty()) {
        r["via_semigroup"] = alt[n].get_str();
        r["match"] = match;
      }
      rows.push_back(std::move(r));
    } else {
      out << "B_" << n << " = " << b[n];
      if (!alt.empty()) out << "  semigroup=" << alt[n] << (match ? "  ok" : "  MISMATCH");
      out << '\n';
    }
  }
  if (a.as_json) {
    json j;
    j["m"] = a.m;
    if (!a.via.empty()) j["via"] = a.via;
    j["bernoulli"] = std::move(rows);
    out << j.dump() << '\n';
  }
  return ok ? kOk : kIdentityFailure;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto records = run_verification(opt);
  std::size_t pass = 0, warn = 0, fail = 0;
  const VerificationRecord* first_fail = nullptr;
  std::vector<std::string> warn_classes;
  for (const auto& r : records) {
    out << to_json_line(r) << '\n';
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Warn:
        ++warn;
        if (std::find(warn_classes.begin(), warn_classes.end(), r.identity) == warn_classes.end()) {
          warn_classes.push_back(r.identity);
        }
        break;
      case Status::Fail:
        ++fail;
        if (!first_fail) first_fail = &r;
        break;
    }
  }
  err << "verify: " << records.size() << " records, " << pass << " PASS, " << warn << " WARN ("
      << warn_classes.size() << " classes: " << join(warn_classes, ",") << "), " << fail
      << " FAIL\n";
  if (first_fail) {
    err << "first counterexample: " << to_json_line(*first_fail) << '\n';
    return kIdentityFailure;
  }
  return kOk;
}

// scan -----------------------------------------------------------------------

struct ScanArgs {
  std::int64_t max = 0;
  std::string gamma = "1/20";
  unsigned workers = 0;
  bool as_json = false;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  Gamma gamma;
  try {
    gamma = parse_gamma(a.gamma);
  } catch (const std::invalid_argument& e) {
    err << "scan: " << e.what() << '\n';
    return kUsage;
  }
  const auto result = theta_census(a.max, gamma, a.workers);
  if (a.as_json) {
    json j;
    j["max"] = a.max;
    j["gamma"] = gamma.str();
    json recs = json::array();
    for (const auto& r : result.records) {
      json row;
      row["m"] = r.m;
      row["p"] = r.p;
      row["q"] = r.q;
      row["theta"] = r.theta;
      row["within_bound"] = r.within_bound;
      recs.push_back(std::move(row));
    }
    j["records"] = std::move(recs);
    j["semiprimes"] = result.records.size();
    j["within_bound"] = result.within_count;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# theta census: max=" << a.max << " gamma=" << gamma.str() << '\n';
  out << "m p q theta within_bound\n";
  for (const auto& r : result.records) {
    out << r.m << ' ' << r.p << ' ' << r.q << ' ' << r.theta << ' '
        << (r.within_bound ? "yes" : "no") << '\n';
  }
  out << "# semiprimes: " << result.records.size() << " within bound: " << result.within_count
      << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, cyclotomic and inclusion-exclusion polynomials"};
  app.name("nsg");
  app.require_subcommand(1);

  SemigroupArgs sg;
  auto* sg_cmd = app.add_subcommand("semigroup", "Invariants of the semigroup spanned by the generators");
  sg_cmd->add_option("generators", sg.generators, "Positive generators with gcd 1")
      ->required()
      ->check(CLI::PositiveNumber);
  sg_cmd->add_flag("--json", sg.as_json, "Emit a JSON record");

  PolyArgs pa;
  auto* poly_cmd = app.add_subcommand("poly", "Print P_S (ps), Q_rho (q) or Phi_n (phi)");
  poly_cmd->add_option("kind", pa.kind, "ps | q | phi")
      ->required()
      ->check(CLI::IsMember({"ps", "q", "phi"}));
  poly_cmd->add_option("args", pa.args, "Generators, rho elements, or n")->check(CLI::PositiveNumber);
  poly_cmd->add_flag("--json", pa.as_json, "Emit a JSON record");

  DiagramArgs da;
  auto* diag_cmd = app.add_subcommand("diagram", "Render the residue diagram of a coprime pair");
  diag_cmd->add_option("p", da.p)->required();
  diag_cmd->add_option("q", da.q)->required();
  diag_cmd->add_flag("--mark-gaps", da.mark_gaps, "Star the gaps of S(p,q)");
  diag_cmd->add_option("--format", da.format, "text | markdown | json")
      ->check(CLI::IsMember({"text", "markdown", "json"}));

  SylvesterArgs sa;
  auto* syl_cmd = app.add_subcommand("sylvester", "Sylvester sums sigma_0..sigma_kmax of S(p,q)");
  syl_cmd->add_option("p", sa.p)->required();
  syl_cmd->add_option("q", sa.q)->required();
  syl_cmd->add_option("--kmax", sa.kmax, "Largest power");
  syl_cmd->add_flag("--json", sa.as_json, "Emit a JSON record");

  BernoulliArgs ba;
  auto* ber_cmd = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_m");
  ber_cmd->add_option("m", ba.m)->required();
  ber_cmd->add_option("--via", ba.via, "Also run the semigroup recursion for the pair p q")
      ->expected(2);
  ber_cmd->add_flag("--json", ba.as_json, "Emit a JSON record");

  VerifyOptions vo;
  auto* ver_cmd = app.add_subcommand("verify", "Check every identity on all coprime pairs up to pmax");
  ver_cmd->add_option("--pmax", vo.pmax, "Largest pair element")->check(CLI::Range(3, 1000));
  ver_cmd->add_option("--kmax", vo.kmax, "Largest Sylvester power")->check(CLI::Range(0, 40));
  ver_cmd->add_option("--workers", vo.workers, "Worker threads (0 = all cores)");

  ScanArgs sc;
  auto* scan_cmd = app.add_subcommand("scan", "Census of theta(pq) over semiprimes up to max");
  scan_cmd->add_option("--max", sc.max, "Upper bound on m = pq")
      ->required()
      ->check(CLI::Range(std::int64_t{6}, kMaxCensus));
  scan_cmd->add_option("--gamma", sc.gamma, "Exponent gamma as a/b");
  scan_cmd->add_option("--workers", sc.workers, "Worker threads (0 = all cores)");
  scan_cmd->add_flag("--json", sc.as_json, "Emit a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sg_cmd->parsed()) return cmd_semigroup(sg, out);
    if (poly_cmd->parsed()) return cmd_poly(pa, out, err);
    if (diag_cmd->parsed()) return cmd_diagram(da, out);
    if (syl_cmd->parsed()) return cmd_sylvester(sa, out);
    if (ber_cmd->parsed()) return cmd_bernoulli(ba, out, err);
    if (ver_cmd->parsed()) return cmd_verify(vo, out, err);
    if (scan_cmd->parsed()) return cmd_scan(sc, out, err);
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kIdentityFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace nsg::cli
