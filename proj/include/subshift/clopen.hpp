#pragma once

#include <set>
#include <string>
#include <vector>

#include "subshift/language.hpp"

namespace subshift {

// Finite union of cylinders [beta.alpha] sharing one window shape
// (|beta|, |alpha|); each member word is beta+alpha. Empty word set is
// the zero set, {epsilon} at shape (0,0) is the whole space.
class ClopenSet {
 public:
  ClopenSet() = default;  // zero at (0,0)
  ClopenSet(int past_len, int future_len, std::set<Word> words);

  static ClopenSet full_space() { return ClopenSet(0, 0, {Word()}); }
  static ClopenSet zero(int past_len = 0, int future_len = 0) {
    return ClopenSet(past_len, future_len, {});
  }

  int past_len() const { return past_; }
  int future_len() const { return future_; }
  int total_len() const { return past_ + future_; }
  const std::set<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }

  std::string to_string() const;  // "beta.alpha" pieces joined with '|'

 private:
  int past_ = 0, future_ = 0;
  std::set<Word> words_;
};

struct CoreGenerator {
  Word alpha;  // s_alpha p_{r(beta alpha)} s_alpha^*
  Word beta;
};

// rho(s_a p s_a^*)-image: the cylinder [beta.alpha], zero if beta+alpha
// is not a factor.
ClopenSet rho(const LanguageTable& t, const Word& alpha, const Word& beta);
inline ClopenSet rho(const LanguageTable& t, const CoreGenerator& g) {
  return rho(t, g.alpha, g.beta);
}

ClopenSet refine_to(const LanguageTable& t, const ClopenSet& c, int past_len, int future_len);
ClopenSet clopen_union(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_intersect(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b);
bool clopen_equal(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b);

// One step of the shift: [beta.alpha] -> [beta a1 . a2...an]; refines
// the future side first when it is exhausted.
ClopenSet shift(const LanguageTable& t, const ClopenSet& c);
ClopenSet unshift(const LanguageTable& t, const ClopenSet& c);

struct CheckReport {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
};

// shift(rho(alpha, beta)) == rho(alpha_[2..], beta alpha_1) for all
// factor pairs with lengths in [1, max_len].
CheckReport verify_tprime(const LanguageTable& t, int max_len);

// shift([beta.]) == union over a of [beta a.], for |beta| <= max_len
// (epsilon included).
CheckReport verify_conjugation(const LanguageTable& t, int max_len);

// [beta.alpha] == disjoint union over (a,b) of [a beta. alpha b], plus
// full coverage of the two-deeper level.
CheckReport verify_partition_axiom(const LanguageTable& t, int max_len);

// The three generator laws behind t_a := u* p_{r(a)}, checked in the
// cylinder calculus against pasts up to beta_len.
CheckReport verify_generator_laws(const LanguageTable& t, Symbol a, int beta_len);

}  // namespace subshift
