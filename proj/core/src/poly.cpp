#include "nsg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

void require_nonzero(const IntPoly& f, const char* what) {
  if (f.is_zero()) throw std::domain_error(std::string(what) + ": zero polynomial");
}

std::vector<std::size_t> support(const IntPoly& f) {
  std::vector<std::size_t> out;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.push_back(k);
  }
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t exponent, const BigInt& c) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t d) {
  std::vector<BigInt> v(d + 1);
  v[0] -= 1;
  v[d] += 1;
  return IntPoly(std::move(v));
}

std::size_t IntPoly::degree() const {
  require_nonzero(*this, "degree");
  return coeffs_.size() - 1;
}

BigInt IntPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPoly IntPoly::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: exponent must be >= 1");
  if (is_zero()) return {};
  std::vector<BigInt> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  auto sf = support(f);
  auto sg = support(g);
  const IntPoly& dense = sf.size() >= sg.size() ? f : g;
  const IntPoly& sparse = sf.size() >= sg.size() ? g : f;
  const auto& sparse_support = sf.size() >= sg.size() ? sg : sf;

  const auto& dc = dense.coefficients();
  const auto& sc = sparse.coefficients();
  std::vector<BigInt> out(dc.size() + sc.size() - 1);
  for (std::size_t j : sparse_support) {
    const BigInt& c = sc[j];
    for (std::size_t i = 0; i < dc.size(); ++i) {
      if (dc[i] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), dc[i].get_mpz_t(), c.get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g) {
  require_nonzero(g, "poly_exact_div");
  if (f.is_zero()) return {};
  const std::size_t dg = g.degree();
  const std::size_t df = f.degree();
  if (df < dg) throw NonZeroRemainder("poly_exact_div: divisor degree exceeds dividend degree");

  const auto g_support = support(g);
  const BigInt& lead = g.coefficients().back();
  std::vector<BigInt> rem = f.coefficients();
  std::vector<BigInt> quot(df - dg + 1);

  for (std::size_t k = df - dg + 1; k-- > 0;) {
    BigInt& top = rem[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonZeroRemainder("poly_exact_div: leading coefficient not divisible at x^" +
                             std::to_string(k + dg));
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j : g_support) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), g.coefficients()[j].get_mpz_t());
    }
    quot[k] = std::move(c);
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (rem[i] != 0) {
      throw NonZeroRemainder("poly_exact_div: nonzero remainder at x^" + std::to_string(i));
    }
  }
  return IntPoly(std::move(quot));
}

std::size_t max_gap(const IntPoly& f) {
  require_nonzero(f, "max_gap");
  const auto s = support(f);
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) best = std::max(best, s[i] - s[i - 1]);
  return best;
}

bool is_selfreciprocal(const IntPoly& f) {
  require_nonzero(f, "is_selfreciprocal");
  const auto& c = f.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

std::vector<Term> nonzero_terms(const IntPoly& f) {
  std::vector<Term> out;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.push_back({k, c[k]});
  }
  return out;
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto& c = f.coefficients();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const BigInt mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) os << '-';
    } else {
      os << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string to_json_array(const IntPoly& f) {
  std::string out = "[";
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    out += c[k].get_str();
  }
  out += ']';
  return out;
}

}  // namespace nsg
