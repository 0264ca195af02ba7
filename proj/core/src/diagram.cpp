#include "nsg/diagram.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nsg {

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::LowerLeft: return "lower-left";
    case Region::UpperRight: return "upper-right";
    case Region::Neutral: return "neutral";
  }
  return "neutral";
}

LLLDiagram::LLLDiagram(const BinaryPair& pair) : pair_(pair) {
  const std::int64_t p = pair.p;
  const std::int64_t q = pair.q;
  const std::int64_t pq = pair.pq();
  cells_.reserve(static_cast<std::size_t>(pq));
  for (std::int64_t beta = 0; beta < p; ++beta) {
    for (std::int64_t alpha = 0; alpha < q; ++alpha) {
      const std::int64_t raw = alpha * p + beta * q;
      Region region = Region::Neutral;
      if (alpha < pair.rho && beta < pair.sigma) region = Region::LowerLeft;
      if (alpha >= pair.rho && beta >= pair.sigma) region = Region::UpperRight;
      cells_.push_back({alpha, beta, raw % pq, raw, region, raw > pq});
    }
  }
}

const DiagramCell& LLLDiagram::cell(std::int64_t alpha, std::int64_t beta) const {
  if (alpha < 0 || alpha >= pair_.q || beta < 0 || beta >= pair_.p) {
    throw std::out_of_range("LLLDiagram::cell: index outside the grid");
  }
  return cells_[static_cast<std::size_t>(beta * pair_.q + alpha)];
}

LLLDiagram build_diagram(const BinaryPair& pair) { return LLLDiagram(pair); }

CornerExponents corner_exponents(const LLLDiagram& diagram) {
  CornerExponents out;
  for (const auto& c : diagram.cells()) {
    if (c.region == Region::LowerLeft) out.plus.insert(c.value);
    if (c.region == Region::UpperRight) out.minus.insert(c.value);
  }
  return out;
}

namespace {

std::string render_text(const LLLDiagram& d, bool mark_gaps) {
  const auto& pair = d.pair();
  const std::size_t digits = std::to_string(pair.pq() - 1).size();
  const std::size_t width = digits + (mark_gaps ? 2 : 0);

  auto pad = [width](const std::string& s) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
  };

  std::ostringstream os;
  for (std::int64_t beta = pair.p - 1; beta >= 0; --beta) {
    std::string line;
    std::size_t bar = 0;
    for (std::int64_t alpha = 0; alpha < pair.q; ++alpha) {
      if (alpha == pair.rho) {
        bar = line.size() + 1;
        line += " | ";
      } else if (alpha > 0) {
        line += ' ';
      }
      const auto& c = d.cell(alpha, beta);
      std::string token = std::to_string(c.value);
      if (mark_gaps && c.is_gap) token = "*" + token + "*";
      line += pad(token);
    }
    os << line << '\n';
    if (beta == pair.sigma) {
      std::string rule(line.size(), '-');
      rule[bar] = '+';
      os << rule << '\n';
    }
  }
  return os.str();
}

std::string render_markdown(const LLLDiagram& d, bool mark_gaps) {
  const auto& pair = d.pair();
  std::ostringstream os;
  os << "| row\\col |";
  for (std::int64_t alpha = 0; alpha < pair.q; ++alpha) os << ' ' << alpha << " |";
  os << "\n|---|";
  for (std::int64_t alpha = 0; alpha < pair.q; ++alpha) os << "---:|";
  os << '\n';
  for (std::int64_t beta = pair.p - 1; beta >= 0; --beta) {
    os << "| " << beta << " |";
    for (std::int64_t alpha = 0; alpha < pair.q; ++alpha) {
      const auto& c = d.cell(alpha, beta);
      if (mark_gaps && c.is_gap) {
        os << " **" << c.value << "** |";
      } else {
        os << ' ' << c.value << " |";
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const LLLDiagram& d) {
  const auto& pair = d.pair();
  nlohmann::ordered_json j;
  j["p"] = pair.p;
  j["q"] = pair.q;
  j["rho"] = pair.rho;
  j["sigma"] = pair.sigma;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : d.cells()) {
    nlohmann::ordered_json cell;
    cell["alpha"] = c.alpha;
    cell["beta"] = c.beta;
    cell["value"] = c.value;
    cell["raw"] = c.raw;
    cell["region"] = to_string(c.region);
    cell["is_gap"] = c.is_gap;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return j.dump() + "\n";
}

}  // namespace

std::string render(const LLLDiagram& diagram, const RenderOptions& options) {
  switch (options.format) {
    case DiagramFormat::Text: return render_text(diagram, options.mark_gaps);
    case DiagramFormat::Markdown: return render_markdown(diagram, options.mark_gaps);
    case DiagramFormat::Json: return render_json(diagram);
  }
  throw std::invalid_argument("render: unknown format");
}

}  // namespace nsg
