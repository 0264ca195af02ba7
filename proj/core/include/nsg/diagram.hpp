#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nsg/cyclo.hpp"

namespace nsg {

enum class Region { LowerLeft, UpperRight, Neutral };

const char* to_string(Region r) noexcept;

struct DiagramCell {
  std::int64_t alpha;  ///< column, 0..q-1
  std::int64_t beta;   ///< row, 0..p-1, counted from the bottom
  std::int64_t value;  ///< (alpha p + beta q) mod pq
  std::int64_t raw;    ///< alpha p + beta q
  Region region;
  bool is_gap;  ///< raw > pq
};

/// p x q residue grid: start at 0 in the bottom-left corner, add p per step
/// to the right and q per step upwards, reduce mod pq. The lower-left corner
/// holds alpha < rho, beta < sigma; the upper-right corner alpha >= rho,
/// beta >= sigma.
class LLLDiagram {
 public:
  explicit LLLDiagram(const BinaryPair& pair);

  const BinaryPair& pair() const noexcept { return pair_; }
  std::int64_t rows() const noexcept { return pair_.p; }
  std::int64_t columns() const noexcept { return pair_.q; }
  const DiagramCell& cell(std::int64_t alpha, std::int64_t beta) const;
  /// Row-major, beta ascending then alpha ascending.
  const std::vector<DiagramCell>& cells() const noexcept { return cells_; }

 private:
  BinaryPair pair_;
  std::vector<DiagramCell> cells_;
};

LLLDiagram build_diagram(const BinaryPair& pair);

struct CornerExponents {
  std::set<std::int64_t> plus;
  std::set<std::int64_t> minus;
};

CornerExponents corner_exponents(const LLLDiagram& diagram);

enum class DiagramFormat { Text, Markdown, Json };

struct RenderOptions {
  bool mark_gaps = false;
  DiagramFormat format = DiagramFormat::Text;
};

/// Text layout: rows from beta = p-1 (top) down to beta = 0, values
/// right-aligned in a field as wide as pq - 1, one space between cells,
/// " | " in front of column rho, and a rule of '-' (with '+' under the bar)
/// between rows sigma and sigma - 1. Gap values are wrapped as *v* and the
/// field grows by two when gaps are marked. Markdown wraps gaps as **v**.
/// JSON ignores mark_gaps and carries is_gap per cell.
std::string render(const LLLDiagram& diagram, const RenderOptions& options = {});

}  // namespace nsg
