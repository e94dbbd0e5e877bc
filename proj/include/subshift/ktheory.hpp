#pragma once

#include <vector>

#include "subshift/intmatrix.hpp"
#include "subshift/language.hpp"

namespace subshift {

// Matrix of (1 - Phi) from the level-l basis to the level-(l+1) basis:
// chi_w goes to sum_b chi_{bw} - sum_a chi_{wa}, overlaps cancelling.
struct PhiLevelMap {
  int level = 0;
  std::vector<Word> source_basis;  // W_l, sorted
  std::vector<Word> target_basis;  // W_{l+1}, sorted
  IntMatrix one_minus_phi;
};

PhiLevelMap phi_map(const LanguageTable& t, int level);

// chi_w -> sum over left extensions chi_{bw}; the level-raising identity
// the direct limit is built on.
IntMatrix refine_matrix(const LanguageTable& t, int level);

// (1 - Phi) kills the indicator of the whole vertex set; per-level form
// of the nonzero K_1 class.
bool k1_witness(const PhiLevelMap& map);

struct NaturalityReport {
  int level = 0;
  bool pass = false;
  Word witness;  // basis word of the offending column
};

// refine o (1-Phi)_l == (1-Phi)_{l+1} o refine as integer matrices.
NaturalityReport naturality_check(const LanguageTable& t, int level);

struct SNFReport {
  int level = 0;
  std::size_t rows = 0, cols = 0;
  std::size_t rank = 0;
  std::size_t kernel_rank = 0;
  std::size_t coker_free_rank = 0;
  std::vector<Int> invariant_factors;
  std::vector<Int> coker_torsion;  // invariant factors > 1
  bool certified = false;          // transformation re-verified by multiplication
};

SNFReport snf_report(const PhiLevelMap& map);

struct K0LevelData {
  int level = 0;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
};

struct K0Report {
  int first_level = 0, last_level = 0;
  std::vector<K0LevelData> per_level;
  bool connecting_well_defined = false;  // images of relations stay relations
  bool routes_agree = false;             // composed map vs stepwise maps, mod image
  bool stable = false;                   // same free rank and torsion across the range
  // Connecting map at each step written in the Smith bases of both
  // ends, torsion coordinates reduced; exposes divisibility patterns.
  std::vector<IntMatrix> connecting_in_snf_coords;
};

// Truncation view of K_0: per-level cokernel data for l in
// [first_level, last_level] plus the induced connecting maps checked by
// two independent routes.
K0Report k0_stabilization(const LanguageTable& t, int first_level, int last_level);

}  // namespace subshift
