#include "subshift/bratteli.hpp"

#include <map>
#include <sstream>

namespace subshift {

BratteliDiagram build_bratteli(const LanguageTable& t, int depth) {
  if (depth < 0) fail(Errc::invalid_argument, "negative diagram depth");
  if (2 * depth > t.max_len())
    fail(Errc::depth_exceeded, "diagram depth needs language depth 2K");
  BratteliDiagram d;
  d.depth = depth;
  for (int k = 1; k <= depth; ++k) d.levels.push_back(t.words(2 * k));
  return d;
}

IntMatrix inclusion_matrix(const LanguageTable& t, const BratteliDiagram& d, int k) {
  if (k < 1 || k >= d.depth) fail(Errc::invalid_argument, "inclusion index out of range");
  const auto& src = d.level(k);
  const auto& dst = d.level(k + 1);
  std::map<Word, std::size_t> col;
  for (std::size_t j = 0; j < src.size(); ++j) col[src[j]] = j;
  IntMatrix m(dst.size(), src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const Word central = dst[i].substr(1, dst[i].size() - 2);
    auto it = col.find(central);
    if (it != col.end()) m.at(i, it->second) = 1;
  }
  (void)t;
  return m;
}

DimensionData dimension_data(const LanguageTable& t, const BratteliDiagram& d) {
  if (d.depth < 2) fail(Errc::invalid_argument, "dimension data needs depth >= 2");
  std::vector<IntMatrix> steps;
  for (int k = 1; k < d.depth; ++k) steps.push_back(inclusion_matrix(t, d, k));

  DimensionData out;
  // Order unit: all-ones at level 1 pushed through the inclusions.
  std::vector<Int> unit(d.level(1).size(), Int(1));
  for (int k = 1; k < d.depth; ++k) {
    const IntMatrix composite = [&] {
      IntMatrix acc = steps[static_cast<std::size_t>(k - 1)];
      for (std::size_t j = static_cast<std::size_t>(k); j < steps.size(); ++j)
        acc = steps[j] * acc;
      return acc;
    }();
    SmithNormalForm snf = smith_normal_form(composite);
    LevelDimensionData data;
    data.level = k;
    data.vertex_count = d.level(k).size();
    data.composite_rank = snf.rank();
    data.elementary_divisors = snf.invariant_factors;
    data.order_unit = unit;
    data.snf_certified = snf.verify(composite);
    out.per_level.push_back(std::move(data));

    const IntMatrix& m = steps[static_cast<std::size_t>(k - 1)];
    std::vector<Int> next(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) next[i] += m.at(i, j) * unit[j];
    unit = std::move(next);
  }
  return out;
}

std::string export_dot(const LanguageTable& t, const BratteliDiagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int k = 1; k <= d.depth; ++k) {
    os << "  { rank=same;";
    for (const Word& w : d.level(k)) os << " \"L" << k << ":" << w << "\";";
    os << " }\n";
  }
  for (int k = 1; k < d.depth; ++k) {
    for (const Word& x : d.level(k + 1)) {
      const Word central = x.substr(1, x.size() - 2);
      if (t.contains(central))
        os << "  \"L" << k << ":" << central << "\" -> \"L" << k + 1 << ":" << x << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace subshift
