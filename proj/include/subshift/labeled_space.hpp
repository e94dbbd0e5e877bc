#pragma once

#include <set>
#include <utility>
#include <vector>

#include "subshift/language.hpp"

namespace subshift {

// An element of the accommodating set at a fixed level l: a set of
// length-l factors, each standing for the generalized vertex with that
// past word. Level 0 with the empty word is the whole vertex set.
class EbarSet {
 public:
  EbarSet() = default;  // empty at level 0
  EbarSet(int level, std::set<Word> words);

  static EbarSet full_space() { return EbarSet(0, {Word()}); }
  static EbarSet empty_set(int level = 0) { return EbarSet(level, {}); }

  int level() const { return level_; }
  const std::set<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

  bool operator==(const EbarSet& other) const = default;

 private:
  int level_ = 0;
  std::set<Word> words_;
};

// r(alpha): the singleton class of alpha, empty if alpha is not a
// factor (p_emptyset = 0), the whole space for alpha = epsilon.
EbarSet gen_vertex(const LanguageTable& t, const Word& alpha);

// r(A, alpha) = {w alpha : w in A} cut to the language; level grows by
// |alpha|.
EbarSet relative_range(const LanguageTable& t, const EbarSet& a, const Word& alpha);

// Left-extension refinement to a deeper level: the words of W_m whose
// length-l suffix lies in A.
EbarSet refine(const LanguageTable& t, const EbarSet& a, int target_level);

EbarSet set_union(const LanguageTable& t, const EbarSet& a, const EbarSet& b);
EbarSet set_intersect(const LanguageTable& t, const EbarSet& a, const EbarSet& b);
EbarSet set_difference(const LanguageTable& t, const EbarSet& a, const EbarSet& b);
bool set_equal(const LanguageTable& t, const EbarSet& a, const EbarSet& b);
bool set_subset(const LanguageTable& t, const EbarSet& a, const EbarSet& b);

struct AxiomReport {
  int axiom = 0;  // 1..4
  int level = 0;
  bool pass = false;
  std::vector<Word> counterexample;
  std::string detail;
};

// Word-identity form of the representation axioms, level by level up to
// max_level. Failures are reported, never thrown.
std::vector<AxiomReport> verify_axioms(const LanguageTable& t, int max_level);

struct CofinalityCertificate {
  Word word;
  int span = 0;  // N
  bool pass = false;
  Word failing_witness;                      // some u in W_N missing the word
  std::vector<Word> paths;                   // the distinct suffixes lambda_i
  std::vector<std::pair<Word, Word>> cover;  // (u, chosen suffix), sorted by u
};

// For every u in W_N, locate w inside u and certify the suffix
// inclusion [u] subset r([w], lambda). Needs N >= max_gap(w) + |w| so a
// non-tail occurrence always exists.
CofinalityCertificate strong_cofinality_certificate(const LanguageTable& t, const Word& w,
                                                    int span);

}  // namespace subshift
