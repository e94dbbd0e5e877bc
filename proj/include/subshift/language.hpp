#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "subshift/sequence.hpp"
#include "subshift/words.hpp"

namespace subshift {

struct RecurrenceReport {
  Word word;
  long max_gap = 0;  // max difference of consecutive occurrence positions
  std::size_t occurrence_count = 0;
};

struct MaxPowerResult {
  int power = 0;       // largest k with w^k in the table
  bool capped = false; // w^cap present, cap limited by the table depth: read as ">= power"
};

struct DisagreeabilityReport {
  int len_bound = 0;
  int power_ceiling = 0;
  bool pass = false;
  Word witness;  // candidate repeatable path, set on fail
  std::map<Word, MaxPowerResult> per_word;
};

// Factors of a scanned window, by length, with sorted occurrence
// positions. Occurrences are counted only in the region trimmed by
// max_len at both ends, so every stored word extends on both sides
// within the window.
class LanguageTable {
 public:
  static LanguageTable build(const Window& window, int max_len);

  int max_len() const { return max_len_; }
  long scan_lo() const { return lo_; }
  long scan_hi() const { return hi_; }

  bool contains(const Word& w) const;  // true for epsilon
  const std::map<Word, std::vector<long>>& level(int n) const;
  std::vector<Word> words(int n) const;  // sorted
  std::size_t complexity(int n) const { return level(n).size(); }

  RecurrenceReport max_gap(const Word& w) const;
  MaxPowerResult max_power(const Word& w) const;
  DisagreeabilityReport disagreeability(int len_bound, int power_ceiling) const;

  // Copy with one word (and its occurrence data) dropped; deeper levels
  // untouched. Produces an inconsistent table for fault-injection tests.
  LanguageTable with_word_removed(const Word& w) const;

  // word,length,count,first,last,max_gap
  void write_csv(std::ostream& os) const;

 private:
  LanguageTable() = default;

  int max_len_ = 0;
  long lo_ = 0, hi_ = 0;
  std::vector<std::map<Word, std::vector<long>>> levels_;  // [n-1] = W_n
};

}  // namespace subshift
