#include "nsg/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

NumericalSemigroup binary_semigroup(const BinaryPair& pair) {
  return NumericalSemigroup({pair.p, pair.q});
}

BigRational fractional_part(const BigInt& numerator, const BigInt& denominator) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return make_rational(r, denominator);
}

BigInt naive_power_sum(unsigned j, std::int64_t n) {
  BigInt acc = 0;
  for (std::int64_t k = 0; k < n; ++k) acc += pow(BigInt(static_cast<long>(k)), j);
  return acc;
}

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace

std::optional<std::string> describe_difference(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  const std::size_t n = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.coefficient(k) != rhs.coefficient(k)) {
      std::ostringstream os;
      os << "coefficient of x^" << k << ": " << lhs.coefficient(k) << " vs "
         << rhs.coefficient(k);
      return os.str();
    }
  }
  return std::string("polynomials differ");
}

FolkloreReport folklore_check(std::int64_t p, std::int64_t q) {
  FolkloreReport rep{binary_pair(p, q), {}, {}, {}, {}, false, false, {}};
  const auto s = binary_semigroup(rep.pair);
  const std::int64_t pq = rep.pair.pq();

  rep.from_gaps = s.semigroup_polynomial();

  {
    const auto& apery = s.apery();
    std::vector<BigInt> c(static_cast<std::size_t>(*std::max_element(apery.begin(), apery.end())) +
                          1);
    for (auto w : apery) c[static_cast<std::size_t>(w)] += 1;
    const IntPoly numerator = poly_mul(IntPoly{1, -1}, IntPoly(std::move(c)));
    IntPoly one_minus_xm = IntPoly::constant(0) - IntPoly::x_pow_minus_one(
                                                      static_cast<std::size_t>(s.multiplicity()));
    rep.from_apery = poly_exact_div(numerator, one_minus_xm);
  }

  {
    auto ap = s.apery_set(p);
    std::sort(ap.begin(), ap.end());
    std::vector<std::int64_t> expected;
    for (std::int64_t j = 0; j < p; ++j) expected.push_back(j * q);
    rep.apery_is_multiples_of_q = ap == expected;
  }

  {
    const std::int64_t gens[] = {p, q};
    const auto r = denumerants_upto(2 * pq - 1, gens);
    rep.denumerant_steps_hold = true;
    for (std::int64_t j = 0; j < pq; ++j) {
      if (r[static_cast<std::size_t>(j)] > 1) rep.denumerant_steps_hold = false;
    }
    for (std::int64_t j = pq; j < 2 * pq; ++j) {
      if (r[static_cast<std::size_t>(j)] - r[static_cast<std::size_t>(j - pq)] != 1) {
        rep.denumerant_steps_hold = false;
      }
    }
    std::vector<BigInt> head(r.begin(), r.begin() + pq);
    rep.from_denumerant =
        poly_mul(IntPoly{1, -1}, IntPoly(std::move(head))) + IntPoly::monomial(static_cast<std::size_t>(pq));
  }

  rep.quotient = inclusion_exclusion(RhoSet({p, q}));

  std::string diag;
  auto compare = [&](const char* name, const IntPoly& f) {
    if (auto d = describe_difference(f, rep.quotient)) {
      diag += std::string(diag.empty() ? "" : "; ") + name + " route vs quotient: " + *d;
    }
  };
  compare("gap", rep.from_gaps);
  compare("Apery", rep.from_apery);
  compare("denumerant", rep.from_denumerant);
  if (!rep.apery_is_multiples_of_q) {
    diag += std::string(diag.empty() ? "" : "; ") + "Ap(S;p) is not {0,q,...,(p-1)q}";
  }
  if (!rep.denumerant_steps_hold) {
    diag += std::string(diag.empty() ? "" : "; ") + "denumerant step r(k+pq) = r(k)+1 fails";
  }
  rep.diagnostic = std::move(diag);
  return rep;
}

BigInt denumerant_closed_form(const BinaryPair& pair, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("denumerant_closed_form: n must be >= 0");
  const BigInt big_n = to_big(n);
  BigRational r = make_rational(big_n, to_big(pair.pq()));
  r -= fractional_part(to_big(pair.p_inv_mod_q) * big_n, to_big(pair.q));
  r -= fractional_part(to_big(pair.q_inv_mod_p) * big_n, to_big(pair.p));
  r += 1;
  if (r.get_den() != 1 || r < 0) {
    throw InternalError("denumerant_closed_form: r(" + std::to_string(n) + ") = " + r.get_str() +
                        " is not a non-negative integer");
  }
  return r.get_num();
}

std::vector<std::int64_t> binary_gaps(const BinaryPair& pair) {
  return binary_semigroup(pair).gaps();
}

BigInt gap_power_sum(std::span<const std::int64_t> gaps, unsigned k) {
  BigInt acc = 0;
  for (auto s : gaps) acc += pow(to_big(s), k);
  return acc;
}

BigInt sylvester_formula(const BinaryPair& pair, unsigned k) {
  const unsigned m = k + 1;
  const auto b = bernoulli_upto(m);
  const BigInt p = to_big(pair.p);
  const BigInt q = to_big(pair.q);
  // m sigma_{m-1} = 1/(m+1) sum_{i+j<=m} C(m+1; i, j, m+1-i-j) B_i B_j p^{m-j} q^{m-i} - B_m
  BigRational acc = 0;
  for (unsigned i = 0; i <= m; ++i) {
    if (b[i] == 0) continue;
    for (unsigned j = 0; j + i <= m; ++j) {
      if (b[j] == 0) continue;
      const BigInt weight = multinomial(m + 1, i, j, m + 1 - i - j) * pow(p, m - j) * pow(q, m - i);
      acc += BigRational(weight) * b[i] * b[j];
    }
  }
  acc /= BigRational(m + 1);
  acc -= b[m];
  acc /= BigRational(m);
  acc.canonicalize();
  if (acc.get_den() != 1 || acc < 0) {
    throw InternalError("sylvester_formula: sigma_" + std::to_string(k) + " = " + acc.get_str() +
                        " is not a non-negative integer");
  }
  return acc.get_num();
}

SylvesterReport sylvester_sum(const BinaryPair& pair, unsigned k) {
  const auto gaps = binary_gaps(pair);
  return {pair, k, sylvester_formula(pair, k), gap_power_sum(gaps, k)};
}

BigInt sylvester_sigma1_closed(const BinaryPair& pair) {
  const BigInt p = to_big(pair.p);
  const BigInt q = to_big(pair.q);
  const BigRational v = make_rational((p - 1) * (q - 1) * (2 * p * q - p - q - 1), 12);
  if (v.get_den() != 1) throw InternalError("sigma_1 closed form is not integral");
  return v.get_num();
}

BigInt sylvester_sigma2_closed(const BinaryPair& pair) {
  const BigInt p = to_big(pair.p);
  const BigInt q = to_big(pair.q);
  const BigRational v = make_rational((p - 1) * (q - 1) * p * q * (p * q - p - q), 12);
  if (v.get_den() != 1) throw InternalError("sigma_2 closed form is not integral");
  return v.get_num();
}

std::vector<BigRational> bernoulli_sequence_via_semigroup(unsigned mmax, const BinaryPair& pair) {
  const auto gaps = binary_gaps(pair);
  const BigInt p = to_big(pair.p);
  const BigInt q = to_big(pair.q);
  const BigRational p_over_q = make_rational(p, q);

  std::vector<BigRational> b{BigRational(1)};
  for (unsigned m = 1; m <= mmax; ++m) {
    const BigInt pm = pow(p, m);
    BigRational value = BigRational(BigInt(m) * gap_power_sum(gaps, m - 1)) / BigRational(pm - 1);
    BigRational inner = 0;
    for (unsigned r = 0; r < m; ++r) {
      if (b[r] == 0) continue;
      inner += BigRational(binomial(m, r) * naive_power_sum(m - r, pair.p)) * pow(p_over_q, r) * b[r];
    }
    value += make_rational(pow(q, m), p * (1 - pm)) * inner;
    value.canonicalize();
    b.push_back(std::move(value));
  }
  return b;
}

BigRational bernoulli_via_semigroup(unsigned m, const BinaryPair& pair) {
  if (m < 1) throw std::invalid_argument("bernoulli_via_semigroup: m must be >= 1");
  return bernoulli_sequence_via_semigroup(m, pair).back();
}

std::size_t tuenter_table_size(const BinaryPair& pair) {
  const std::int64_t frobenius = pair.pq() - pair.p - pair.q;
  return static_cast<std::size_t>(frobenius + std::max(pair.p, pair.q) + 1);
}

TuenterReport tuenter_check(const BinaryPair& pair, std::span<const BigInt> f) {
  const std::size_t need = tuenter_table_size(pair);
  if (f.size() < need) {
    throw IncompleteTable("tuenter_check: table covers [0, " + std::to_string(f.size()) +
                          ") but [0, " + std::to_string(need) + ") is required");
  }
  const auto gaps = binary_gaps(pair);
  auto at = [&](std::int64_t n) -> const BigInt& { return f[static_cast<std::size_t>(n)]; };
  auto side = [&](std::int64_t a, std::int64_t b, BigInt& lhs, BigInt& rhs) {
    lhs = 0;
    rhs = 0;
    for (auto n : gaps) lhs += at(n + a) - at(n);
    for (std::int64_t n = 1; n < a; ++n) rhs += at(n * b) - at(n);
  };
  TuenterReport rep;
  side(pair.p, pair.q, rep.lhs, rep.rhs);
  side(pair.q, pair.p, rep.lhs_swapped, rep.rhs_swapped);
  return rep;
}

TuenterProductReport tuenter_product_identity(const BinaryPair& pair) {
  const auto gaps = binary_gaps(pair);
  BigInt plain = 1;
  TuenterProductReport rep{1, 0, 1, 0};
  for (auto n : gaps) {
    plain *= to_big(n);
    rep.lhs *= to_big(n + pair.p);
    rep.lhs_swapped *= to_big(n + pair.q);
  }
  rep.rhs = pow(to_big(pair.q), static_cast<unsigned long>(pair.p - 1)) * plain;
  rep.rhs_swapped = pow(to_big(pair.p), static_cast<unsigned long>(pair.q - 1)) * plain;
  return rep;
}

int coefficient_from_membership(const NumericalSemigroup& s, std::int64_t k) {
  if (k < 0) throw std::out_of_range("coefficient_from_membership: k must be >= 0");
  const bool here = s.contains(k);
  const bool before = s.contains(k - 1);
  if (here && !before) return 1;
  if (!here && before) return -1;
  return 0;
}

int coefficient_from_membership(const BinaryPair& pair, std::int64_t k) {
  if (k < 0 || k >= pair.pq()) {
    throw std::out_of_range("coefficient_from_membership: k = " + std::to_string(k) +
                            " outside [0, pq)");
  }
  return coefficient_from_membership(binary_semigroup(pair), k);
}

MaxGapRecord max_gap_theorems(const BinaryPair& pair) {
  MaxGapRecord rec = max_gap_theorems(binary_semigroup(pair));
  rec.g_q = static_cast<std::int64_t>(max_gap(inclusion_exclusion(RhoSet({pair.p, pair.q}))));
  return rec;
}

MaxGapRecord max_gap_theorems(const NumericalSemigroup& s) {
  if (s.frobenius() < 0) throw std::domain_error("max_gap_theorems: S = Z>=0");
  MaxGapRecord rec;
  rec.g_p = static_cast<std::int64_t>(max_gap(s.semigroup_polynomial()));
  rec.m_minus_1 = s.multiplicity() - 1;
  return rec;
}

BlockCountRecord block_counts(const BinaryPair& pair) {
  const auto b = binary_semigroup(pair).blocks();
  return {static_cast<std::int64_t>(b.gap_blocks.size()),
          static_cast<std::int64_t>(b.element_blocks.size()), pair.rho * pair.sigma};
}

CornerCountRecord corner_counts(const BinaryPair& pair) {
  const auto s = binary_semigroup(pair);
  CornerCountRecord rec;
  rec.frobenius = s.frobenius();
  rec.genus = s.genus();
  rec.rho_sigma = pair.rho * pair.sigma;
  for (std::int64_t k = 0; k <= rec.frobenius; ++k) {
    const bool here = s.contains(k);
    const bool before = s.contains(k - 1);
    if (here && before) {
      ++rec.in_in;
    } else if (here) {
      ++rec.in_out;
    } else if (before) {
      ++rec.out_in;
    } else {
      ++rec.out_out;
    }
  }
  return rec;
}

}  // namespace nsg
