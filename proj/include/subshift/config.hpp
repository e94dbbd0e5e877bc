#pragma once

#include <map>
#include <string>
#include <vector>

#include "subshift/sequence.hpp"

namespace subshift {

// Key-value run configuration; one source spec plus the analysis depths.
struct RunConfig {
  enum class Kind { substitution, morse, periodic };

  Kind kind = Kind::substitution;
  std::map<Symbol, Word> rules;
  Symbol seed_left = '1';
  Symbol seed_right = '0';
  int power = 1;
  std::vector<Word> blocks;
  bool blocks_cycle = false;
  Word pattern;

  long window = 1L << 16;            // symbols per side
  int depth = 34;                    // language table depth
  int measure_depth = 12;
  long empirical_window = 1L << 19;  // per side; the scan sees twice this

  int axiom_levels = 5;
  int tprime_len = 5;
  int conjugation_len = 5;
  int partition_len = 4;
  int bratteli_levels = 4;
  int k1_levels = 10;
  int naturality_levels = 8;
  int k0_from = 4;
  int k0_to = 10;
  int disagree_len = 8;
  int disagree_ceiling = 4;
  int trace_len = 3;
  int shift_invariance_len = 6;

  std::string out_dir = "out";

  static RunConfig load(const std::string& path);
  static RunConfig parse(const std::string& text);

  void set(const std::string& key, const std::string& value);
  void validate() const;  // depth consistency
  SequenceSource make_source() const;
  bool exact_measure_available() const { return kind != Kind::morse; }
};

}  // namespace subshift
