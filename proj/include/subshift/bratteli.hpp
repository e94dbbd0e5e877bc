#pragma once

#include <string>
#include <vector>

#include "subshift/intmatrix.hpp"
#include "subshift/language.hpp"

namespace subshift {

// Levels k = 1..depth carry the words of W_{2k}; the edge u -> aub
// exists for each two-sided extension present in the language, with
// multiplicity one.
struct BratteliDiagram {
  int depth = 0;
  std::vector<std::vector<Word>> levels;  // levels[k-1], sorted

  const std::vector<Word>& level(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
};

BratteliDiagram build_bratteli(const LanguageTable& t, int depth);

// 0/1 matrix of the inclusion F_k -> F_{k+1}; rows indexed by W_{2k+2},
// columns by W_{2k}, entry 1 iff the row word extends the column word
// by one letter on each side.
IntMatrix inclusion_matrix(const LanguageTable& t, const BratteliDiagram& d, int k);

struct LevelDimensionData {
  int level = 0;
  std::size_t vertex_count = 0;
  std::size_t composite_rank = 0;           // rank of M_{K-1} ... M_k over Q
  std::vector<Int> elementary_divisors;     // SNF of that composite
  std::vector<Int> order_unit;              // all-ones at level 1 pushed forward
  bool snf_certified = false;
};

struct DimensionData {
  std::vector<LevelDimensionData> per_level;  // k = 1..K-1
};

DimensionData dimension_data(const LanguageTable& t, const BratteliDiagram& d);

// Deterministic DOT rendering, one rank per level.
std::string export_dot(const LanguageTable& t, const BratteliDiagram& d);

}  // namespace subshift
