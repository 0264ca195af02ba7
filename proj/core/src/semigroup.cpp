#include "nsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "nsg/errors.hpp"

namespace nsg {

namespace {

constexpr std::int64_t kMaxListedFrobenius = 100'000'000;

void require_generators(std::span<const std::int64_t> generators, const char* what) {
  if (generators.empty()) throw std::invalid_argument(std::string(what) + ": no generators");
  for (auto a : generators) {
    if (a < 1) {
      throw std::invalid_argument(std::string(what) + ": generator " + std::to_string(a) +
                                  " is not positive");
    }
  }
}

}  // namespace

std::vector<std::int64_t> residue_minima(std::span<const std::int64_t> generators,
                                         std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("residue_minima: modulus must be >= 1");
  if (modulus > NumericalSemigroup::kMaxMultiplicity) {
    throw ResourceLimit("residue_minima: modulus " + std::to_string(modulus) + " too large");
  }
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<std::int64_t> dist(m, -1);
  std::vector<bool> done(m, false);
  using Entry = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    const auto [d, r] = heap.top();
    heap.pop();
    if (done[r]) continue;
    done[r] = true;
    for (auto a : generators) {
      if (a % modulus == 0) continue;
      const auto next = static_cast<std::size_t>((static_cast<std::int64_t>(r) + a) % modulus);
      const std::int64_t nd = d + a;
      if (dist[next] < 0 || nd < dist[next]) {
        dist[next] = nd;
        heap.emplace(nd, next);
      }
    }
  }
  return dist;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)) {
  require_generators(generators_, "NumericalSemigroup");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  std::int64_t g = 0;
  for (auto a : generators_) g = std::gcd(g, a);
  if (g != 1) {
    throw NotNumerical("generators have gcd " + std::to_string(g) +
                       "; a numerical semigroup needs relatively prime generators");
  }

  multiplicity_ = generators_.front();
  if (multiplicity_ > kMaxMultiplicity) {
    throw ResourceLimit("multiplicity " + std::to_string(multiplicity_) + " exceeds " +
                        std::to_string(kMaxMultiplicity));
  }
  apery_ = residue_minima(generators_, multiplicity_);

  BigInt apery_sum = 0;
  std::int64_t apery_max = 0;
  for (auto w : apery_) {
    if (w < 0) throw InternalError("Apery set: unreachable residue class despite gcd 1");
    apery_sum += BigInt(static_cast<long>(w));
    apery_max = std::max(apery_max, w);
  }
  if (apery_[0] != 0) throw InternalError("Apery set: apery[0] != 0");
  frobenius_ = apery_max - multiplicity_;

  // N(S) = (sum of Apery elements)/m - (m - 1)/2
  const BigInt m(static_cast<long>(multiplicity_));
  const BigRational genus = make_rational(2 * apery_sum - m * (m - 1), 2 * m);
  if (genus.get_den() != 1) throw InternalError("genus: Apery sum identity is not integral");
  genus_ = genus.get_num().get_si();

  // Ascending scan: a generator is redundant iff the smaller kept ones span it.
  for (auto a : generators_) {
    if (minimal_.empty()) {
      minimal_.push_back(a);
      continue;
    }
    const auto minima = residue_minima(minimal_, minimal_.front());
    const std::int64_t w = minima[static_cast<std::size_t>(a % minimal_.front())];
    if (w < 0 || w > a) minimal_.push_back(a);
  }
}

bool NumericalSemigroup::contains(std::int64_t n) const noexcept {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % multiplicity_)];
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t m) const {
  if (m <= 0 || !contains(m)) {
    throw std::invalid_argument("apery_set: " + std::to_string(m) +
                                " is not a nonzero element of S");
  }
  return residue_minima(generators_, m);
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  if (frobenius_ > kMaxListedFrobenius) {
    throw ResourceLimit("gaps: Frobenius number " + std::to_string(frobenius_) + " too large");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::int64_t n = 1; n <= frobenius_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

IntPoly NumericalSemigroup::semigroup_polynomial() const {
  const auto g = gaps();
  std::vector<BigInt> c(static_cast<std::size_t>(frobenius_ + 2));
  c[0] = 1;
  for (auto s : g) {
    c[static_cast<std::size_t>(s)] -= 1;
    c[static_cast<std::size_t>(s) + 1] += 1;
  }
  return IntPoly(std::move(c));
}

bool NumericalSemigroup::is_symmetric() const {
  if (frobenius_ < 0) return true;
  bool by_definition = true;
  for (std::int64_t n = 0; n <= frobenius_ && by_definition; ++n) {
    by_definition = contains(n) != contains(frobenius_ - n);
  }
  const bool by_polynomial = is_selfreciprocal(semigroup_polynomial());
  if (by_definition != by_polynomial) {
    throw InternalError("is_symmetric: definition and selfreciprocity routes disagree");
  }
  return by_definition;
}

BlockDecomposition NumericalSemigroup::blocks() const {
  if (frobenius_ < 0) throw std::domain_error("blocks: S = Z>=0 has no gaps");
  BlockDecomposition out;
  std::int64_t start = 0;
  bool in_s = true;  // 0 is always an element
  for (std::int64_t n = 1; n <= frobenius_ + 1; ++n) {
    const bool member = contains(n);
    if (member == in_s) continue;
    (in_s ? out.element_blocks : out.gap_blocks).push_back({start, n - 1});
    start = n;
    in_s = member;
  }
  return out;
}

std::vector<BigInt> denumerants_upto(std::int64_t kmax,
                                     std::span<const std::int64_t> generators) {
  require_generators(generators, "denumerant");
  if (kmax > kMaxDenumerantArg) {
    throw ResourceLimit("denumerant: argument " + std::to_string(kmax) + " exceeds " +
                        std::to_string(kMaxDenumerantArg));
  }
  if (kmax < 0) return {};
  std::vector<BigInt> d(static_cast<std::size_t>(kmax) + 1);
  d[0] = 1;
  for (auto a : generators) {
    for (std::int64_t k = a; k <= kmax; ++k) {
      d[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k - a)];
    }
  }
  return d;
}

BigInt denumerant(std::int64_t k, std::span<const std::int64_t> generators) {
  if (k < 0) {
    require_generators(generators, "denumerant");
    return 0;
  }
  return denumerants_upto(k, generators).back();
}

std::string to_json(const NumericalSemigroup& s) {
  nlohmann::ordered_json j;
  j["generators"] = s.generators();
  j["minimal_generators"] = s.minimal_generators();
  j["multiplicity"] = s.multiplicity();
  j["embedding_dimension"] = s.embedding_dimension();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["symmetric"] = s.is_symmetric();
  auto blocks_json = [](const std::vector<Block>& bs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : bs) arr.push_back({b.first, b.last});
    return arr;
  };
  if (s.frobenius() >= 0) {
    const auto b = s.blocks();
    j["gap_blocks"] = blocks_json(b.gap_blocks);
    j["element_blocks"] = blocks_json(b.element_blocks);
  } else {
    j["gap_blocks"] = nlohmann::ordered_json::array();
    j["element_blocks"] = nlohmann::ordered_json::array();
  }
  return j.dump();
}

}  // namespace nsg
