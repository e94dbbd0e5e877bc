#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>

#include "subshift/clopen.hpp"
#include "subshift/intmatrix.hpp"
#include "subshift/labeled_space.hpp"
#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

using Rational = boost::rational<Int>;

// Word frequencies of the invariant measure, either exact rationals
// (substitution / periodic sources) or scan counts. The interval tag
// marks exact-rational midpoints certified only up to `precision`.
class FrequencyMeasure {
 public:
  enum class Mode { exact, certified_interval, empirical };

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }
  int depth() const { return depth_; }
  long scan_length() const { return scan_length_; }
  double precision() const { return precision_; }

  Rational value(const Word& w) const;  // 1 for epsilon, 0 off the support
  double value_approx(const Word& w) const;

  Rational measure_of(const EbarSet& a) const;
  Rational measure_of(const ClopenSet& c) const;
  double measure_approx(const ClopenSet& c) const;

  // Perturbed copy for fault-injection tests.
  FrequencyMeasure with_value(const Word& w, const Rational& v) const;

  // max over W_n of |m(w) - sum_a m(wa)| and of the left-handed version.
  double consistency_defect(int n) const;

  // word,value,approx
  void write_csv(std::ostream& os) const;

  static FrequencyMeasure exact_from_substitution(const Substitution& sigma, int depth);
  static FrequencyMeasure exact_from_periodic(const Word& pattern, int depth);
  static FrequencyMeasure empirical(const Window& window, int depth);

 private:
  FrequencyMeasure() = default;

  Mode mode_ = Mode::empirical;
  int depth_ = 0;
  long scan_length_ = 0;
  double precision_ = 0.0;
  std::map<Word, Rational> exact_;
  std::map<Word, double> approx_;
};

// Distinct length-n factors of the substitution subshift, computed from
// the substitution alone (no window).
std::vector<Word> substitution_language(const Substitution& sigma, int n);

struct MeasureCheckReport {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  double max_defect = 0.0;
  std::vector<std::string> witnesses;
};

// m(shift(C)) == m(C) over all cylinder shapes of total length <= max_len.
MeasureCheckReport shift_invariance_check(const LanguageTable& t, const FrequencyMeasure& m,
                                          int max_len);

struct GeneratorSymbol {
  Word alpha, nu, beta;  // s_alpha p_{r(nu alpha)} s_beta^*
};

// delta_{alpha,beta} * m(nu alpha); exact modes only.
Rational trace_eval(const GeneratorSymbol& g, const FrequencyMeasure& m);

// Exhaustive check of tau(XY) == tau(YX) over generator symbols with
// word lengths <= len_bound, by symbolic products.
MeasureCheckReport tracial_property_check(const LanguageTable& t, const FrequencyMeasure& m,
                                          int len_bound);

}  // namespace subshift
