#include "subshift/measure.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace subshift {

namespace {

double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

// ---- exact Perron-Frobenius machinery -----------------------------------

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Nullspace of a square rational matrix; empty unless the kernel is one
// dimensional, in which case the generator is returned.
std::optional<RatVec> kernel_generator(RatMat m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == Rational(0)) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = m[row][col];
    for (auto& x : m[row]) x /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == Rational(0)) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (n - row != 1) return std::nullopt;
  // Single free column: back-substitute with the free variable = 1.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;
  RatVec v(n, Rational(0));
  v[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    v[pivot_col[r]] = -m[r][free_col];
  return v;
}

struct PFResult {
  bool exact = false;
  RatVec frequencies;  // normalized, positive
  double precision = 0.0;
};

// Normalized positive eigenvector of a primitive nonnegative integer
// matrix. Integer eigenvalues are certified exactly by a strictly
// positive kernel vector; otherwise Collatz-Wielandt bounds around a
// power-iterated vector give a stated precision.
PFResult perron_vector(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  long col_max = 0, col_min = 0;
  for (std::size_t j = 0; j < n; ++j) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += m[i][j];
    col_max = std::max(col_max, s);
    col_min = (j == 0) ? s : std::min(col_min, s);
  }
  (void)col_min;
  for (long lam = col_max; lam >= 1; --lam) {
    RatMat shifted(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted[i][j] = Rational(Int(m[i][j]) - (i == j ? Int(lam) : Int(0)));
    auto v = kernel_generator(shifted);
    if (!v) continue;
    bool pos = true, neg = true;
    for (const auto& x : *v) {
      if (x <= Rational(0)) pos = false;
      if (x >= Rational(0)) neg = false;
    }
    if (!pos && neg)
      for (auto& x : *v) x = -x;
    else if (!pos)
      continue;
    Rational sum(0);
    for (const auto& x : *v) sum += x;
    for (auto& x : *v) x /= sum;
    return {true, *v, 0.0};
  }

  // Irrational spectral radius: power iteration in doubles, then exact
  // Collatz-Wielandt bounds for the reported precision.
  std::vector<double> x(n, 1.0);
  for (int it = 0; it < 400; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += static_cast<double>(m[i][j]) * x[j];
    double s = 0;
    for (double t : y) s += t;
    for (auto& t : y) t /= s;
    x = std::move(y);
  }
  RatVec xr(n);
  Rational sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    xr[i] = Rational(Int(static_cast<long long>(x[i] * 1e15)), Int(1000000000000000LL));
    if (xr[i] <= Rational(0)) xr[i] = Rational(Int(1), Int(1000000000000000LL));
    sum += xr[i];
  }
  for (auto& r : xr) r /= sum;
  Rational lo, hi;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) acc += Rational(Int(m[i][j])) * xr[j];
    const Rational ratio = acc / xr[i];
    if (first || ratio < lo) lo = ratio;
    if (first || ratio > hi) hi = ratio;
    first = false;
  }
  return {false, xr, to_double(hi - lo)};
}

// ---- substitution language ------------------------------------------------

std::set<Word> two_block_set(const Substitution& sigma) {
  std::set<Word> blocks;
  for (char a : sigma.alphabet().symbols()) {
    Word w(1, a);
    for (int j = 0; j < 12; ++j) {
      w = sigma.apply(w);
      if (w.size() > 4096) break;
    }
    for (std::size_t i = 0; i + 2 <= w.size(); ++i) blocks.insert(w.substr(i, 2));
  }
  // Close under descent: 2-blocks of images of known 2-blocks.
  for (;;) {
    std::set<Word> next = blocks;
    for (const Word& b : blocks) {
      const Word img = sigma.apply(b);
      for (std::size_t i = 0; i + 2 <= img.size(); ++i) next.insert(img.substr(i, 2));
    }
    if (next == blocks) break;
    blocks = std::move(next);
  }
  return blocks;
}

}  // namespace

std::vector<Word> substitution_language(const Substitution& sigma, int n) {
  if (n < 1) fail(Errc::invalid_argument, "language length must be >= 1");
  const std::set<Word> blocks = two_block_set(sigma);
  if (n == 1) {
    std::set<Word> letters;
    for (const Word& b : blocks) {
      letters.insert(b.substr(0, 1));
      letters.insert(b.substr(1, 1));
    }
    return {letters.begin(), letters.end()};
  }
  // Blow each 2-block up until both halves reach length n; a window of
  // n symbols then spans at most one seam between adjacent images.
  std::set<Word> out;
  for (const Word& b : blocks) {
    Word left(1, b[0]), right(1, b[1]);
    int guard = 0;
    while (static_cast<long>(left.size()) < n || static_cast<long>(right.size()) < n) {
      const std::size_t before = left.size() + right.size();
      left = sigma.apply(left);
      right = sigma.apply(right);
      if (++guard > 64 || left.size() + right.size() == before)
        fail(Errc::not_uniquely_certified, "substitution images do not grow");
    }
    const Word w = left + right;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= w.size(); ++i)
      out.insert(w.substr(i, static_cast<std::size_t>(n)));
  }
  return {out.begin(), out.end()};
}

FrequencyMeasure FrequencyMeasure::exact_from_substitution(const Substitution& sigma,
                                                           int depth) {
  if (depth < 1) fail(Errc::invalid_argument, "measure depth must be >= 1");
  if (!sigma.primitivity_witness(16))
    fail(Errc::not_uniquely_certified,
         "substitution is not primitive; no certified frequency vector");
  FrequencyMeasure m;
  m.mode_ = Mode::exact;
  m.depth_ = depth;
  bool exact_everywhere = true;
  double worst_precision = 0.0;

  for (int n = 1; n <= depth; ++n) {
    const std::vector<Word> basis = substitution_language(sigma, n);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    // Induced n-block substitution: the blocks of sigma(w) starting at
    // offsets 0 .. |sigma(w_0)|-1.
    std::vector<std::vector<long>> incidence(basis.size(),
                                             std::vector<long>(basis.size(), 0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Word img = sigma.apply(basis[j]);
      const std::size_t q = sigma.image(basis[j][0]).size();
      for (std::size_t off = 0; off < q; ++off) {
        const Word block = img.substr(off, static_cast<std::size_t>(n));
        auto it = index.find(block);
        if (it == index.end())
          fail(Errc::not_uniquely_certified, "induced block escapes the language: " + block);
        ++incidence[it->second][j];
      }
    }
    PFResult pf = perron_vector(incidence);
    if (!pf.exact) {
      exact_everywhere = false;
      worst_precision = std::max(worst_precision, pf.precision);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) m.exact_[basis[i]] = pf.frequencies[i];
  }

  if (!exact_everywhere) {
    m.mode_ = Mode::certified_interval;
    m.precision_ = worst_precision;
    return m;
  }

  // Kolmogorov consistency across neighbouring depths must come out
  // exactly; anything else means the eigen-data was not unique.
  for (int n = 1; n < depth; ++n) {
    for (const auto& [w, val] : m.exact_) {
      if (static_cast<int>(w.size()) != n) continue;
      Rational right(0), left(0);
      for (const auto& [x, xv] : m.exact_) {
        if (static_cast<int>(x.size()) != n + 1) continue;
        if (x.compare(0, w.size(), w) == 0) right += xv;
        if (x.compare(1, w.size(), w) == 0) left += xv;
      }
      if (right != val || left != val)
        fail(Errc::not_uniquely_certified, "frequency tables are not consistent at " + w);
    }
  }
  return m;
}

FrequencyMeasure FrequencyMeasure::exact_from_periodic(const Word& pattern, int depth) {
  if (pattern.empty()) fail(Errc::invalid_argument, "empty pattern");
  if (depth < 1) fail(Errc::invalid_argument, "measure depth must be >= 1");
  FrequencyMeasure m;
  m.mode_ = Mode::exact;
  m.depth_ = depth;
  const std::size_t p = pattern.size();
  for (int n = 1; n <= depth; ++n) {
    std::map<Word, long> counts;
    for (std::size_t r = 0; r < p; ++r) {
      Word w;
      for (int k = 0; k < n; ++k) w += pattern[(r + static_cast<std::size_t>(k)) % p];
      ++counts[w];
    }
    for (const auto& [w, c] : counts) m.exact_[w] = Rational(Int(c), Int(p));
  }
  return m;
}

FrequencyMeasure FrequencyMeasure::empirical(const Window& window, int depth) {
  if (depth < 1) fail(Errc::invalid_argument, "measure depth must be >= 1");
  if (2 * window.radius < (1L << 16))
    fail(Errc::insufficient_window, "empirical mode wants at least 2^16 scanned symbols");
  FrequencyMeasure m;
  m.mode_ = Mode::empirical;
  m.depth_ = depth;
  const long n = window.radius;
  const long lo = -n + depth, hi = n - depth;
  m.scan_length_ = hi - lo;
  for (int len = 1; len <= depth; ++len) {
    std::map<Word, long> counts;
    for (long p = lo; p + len <= hi; ++p)
      ++counts[window.symbols.substr(static_cast<std::size_t>(p + n),
                                     static_cast<std::size_t>(len))];
    const double slots = static_cast<double>(hi - lo - len + 1);
    for (const auto& [w, c] : counts) m.approx_[w] = static_cast<double>(c) / slots;
  }
  return m;
}

Rational FrequencyMeasure::value(const Word& w) const {
  if (mode_ == Mode::empirical)
    fail(Errc::invalid_argument, "empirical measure has no exact values");
  if (w.empty()) return Rational(1);
  if (static_cast<int>(w.size()) > depth_)
    fail(Errc::depth_exceeded, "measure depth exceeded by " + w);
  auto it = exact_.find(w);
  return it == exact_.end() ? Rational(0) : it->second;
}

double FrequencyMeasure::value_approx(const Word& w) const {
  if (w.empty()) return 1.0;
  if (static_cast<int>(w.size()) > depth_)
    fail(Errc::depth_exceeded, "measure depth exceeded by " + w);
  if (mode_ == Mode::empirical) {
    auto it = approx_.find(w);
    return it == approx_.end() ? 0.0 : it->second;
  }
  return to_double(value(w));
}

Rational FrequencyMeasure::measure_of(const EbarSet& a) const {
  Rational sum(0);
  for (const Word& w : a.words()) sum += value(w);
  return sum;
}

Rational FrequencyMeasure::measure_of(const ClopenSet& c) const {
  if (c.total_len() == 0) return c.is_empty() ? Rational(0) : Rational(1);
  Rational sum(0);
  for (const Word& w : c.words()) sum += value(w);
  return sum;
}

double FrequencyMeasure::measure_approx(const ClopenSet& c) const {
  if (c.total_len() == 0) return c.is_empty() ? 0.0 : 1.0;
  double sum = 0;
  for (const Word& w : c.words()) sum += value_approx(w);
  return sum;
}

FrequencyMeasure FrequencyMeasure::with_value(const Word& w, const Rational& v) const {
  FrequencyMeasure m(*this);
  if (m.mode_ == Mode::empirical)
    m.approx_[w] = to_double(v);
  else
    m.exact_[w] = v;
  return m;
}

double FrequencyMeasure::consistency_defect(int n) const {
  if (n + 1 > depth_) fail(Errc::depth_exceeded, "defect needs depth n + 1");
  std::set<Word> words;
  if (mode_ == Mode::empirical) {
    for (const auto& [w, v] : approx_)
      if (static_cast<int>(w.size()) == n) words.insert(w);
  } else {
    for (const auto& [w, v] : exact_)
      if (static_cast<int>(w.size()) == n) words.insert(w);
  }
  double worst = 0.0;
  for (const Word& w : words) {
    if (mode_ == Mode::empirical) {
      double right = 0, left = 0;
      for (const auto& [x, v] : approx_) {
        if (x.size() != w.size() + 1) continue;
        if (x.compare(0, w.size(), w) == 0) right += v;
        if (x.compare(1, w.size(), w) == 0) left += v;
      }
      const double base = value_approx(w);
      worst = std::max({worst, std::abs(base - right), std::abs(base - left)});
    } else {
      Rational right_r(0), left_r(0);
      for (const auto& [x, v] : exact_) {
        if (x.size() != w.size() + 1) continue;
        if (x.compare(0, w.size(), w) == 0) right_r += v;
        if (x.compare(1, w.size(), w) == 0) left_r += v;
      }
      const Rational base = value(w);
      worst = std::max({worst, std::abs(to_double(base - right_r)),
                        std::abs(to_double(base - left_r))});
    }
  }
  return worst;
}

void FrequencyMeasure::write_csv(std::ostream& os) const {
  os << "word,exact,empirical,defect\n";
  const auto fmt = [](double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
  };
  const auto defect = [&](const Word& w) -> std::string {
    if (static_cast<int>(w.size()) >= depth_) return "";
    if (mode_ != Mode::empirical) {
      Rational right(0);
      for (const auto& [x, v] : exact_)
        if (x.size() == w.size() + 1 && x.compare(0, w.size(), w) == 0) right += v;
      return fmt(std::abs(to_double(value(w) - right)));
    }
    double right = 0;
    for (const auto& [x, v] : approx_)
      if (x.size() == w.size() + 1 && x.compare(0, w.size(), w) == 0) right += v;
    return fmt(std::abs(value_approx(w) - right));
  };
  if (mode_ == Mode::empirical) {
    for (const auto& [w, v] : approx_)
      os << w << ",," << fmt(v) << ',' << defect(w) << '\n';
  } else {
    for (const auto& [w, v] : exact_)
      os << w << ',' << v.numerator() << '/' << v.denominator() << ',' << fmt(to_double(v))
         << ',' << defect(w) << '\n';
  }
}

MeasureCheckReport shift_invariance_check(const LanguageTable& t, const FrequencyMeasure& m,
                                          int max_len) {
  MeasureCheckReport rep{"shift-invariance", true, 0, 0.0, {}};
  if (max_len + 1 > t.max_len())
    fail(Errc::insufficient_language, "shift invariance needs depth max_len + 1");
  const bool exact = m.mode() != FrequencyMeasure::Mode::empirical;
  const double tol =
      exact ? 0.0
            : 2.0 * static_cast<double>(max_len) / static_cast<double>(m.scan_length());
  for (int n = 0; n <= max_len; ++n) {
    std::vector<Word> mids;
    if (n == 0)
      mids.push_back(Word());
    else
      for (const auto& [w, pos] : t.level(n)) mids.push_back(w);
    for (const Word& mid : mids) {
      for (int p = 0; p <= n; ++p) {
        const ClopenSet c = rho(t, mid.substr(static_cast<std::size_t>(p)),
                                mid.substr(0, static_cast<std::size_t>(p)));
        const ClopenSet shifted = shift(t, c);
        ++rep.cases;
        double defect;
        if (exact) {
          defect = std::abs(to_double(m.measure_of(shifted) - m.measure_of(c)));
          if (m.measure_of(shifted) != m.measure_of(c)) {
            rep.pass = false;
            rep.witnesses.push_back(c.to_string());
          }
        } else {
          defect = std::abs(m.measure_approx(shifted) - m.measure_approx(c));
          if (defect > tol) {
            rep.pass = false;
            rep.witnesses.push_back(c.to_string());
          }
        }
        rep.max_defect = std::max(rep.max_defect, defect);
        if (rep.witnesses.size() >= 8) return rep;
      }
    }
  }
  return rep;
}

Rational trace_eval(const GeneratorSymbol& g, const FrequencyMeasure& m) {
  if (g.alpha != g.beta) return Rational(0);
  return m.value(g.nu + g.alpha);
}

namespace {

// s_alpha p_mid s_beta^*, with mid already below r(alpha) and r(beta).
struct Term {
  Word alpha;
  EbarSet mid;
  Word beta;
};

std::optional<Term> normalize(const LanguageTable& t, Word alpha, EbarSet mid, Word beta) {
  EbarSet cut = set_intersect(t, std::move(mid), gen_vertex(t, alpha));
  cut = set_intersect(t, cut, gen_vertex(t, beta));
  if (cut.is_empty()) return std::nullopt;
  return Term{std::move(alpha), std::move(cut), std::move(beta)};
}

std::optional<Term> product(const LanguageTable& t, const Term& x, const Term& y) {
  if (y.alpha.size() >= x.beta.size() && y.alpha.compare(0, x.beta.size(), x.beta) == 0) {
    // s_beta^* s_mu = p_{r(beta)} s_{mu'}
    const Word tail = y.alpha.substr(x.beta.size());
    EbarSet mid = set_intersect(t, relative_range(t, x.mid, tail), y.mid);
    if (mid.is_empty()) return std::nullopt;
    return normalize(t, x.alpha + tail, std::move(mid), y.beta);
  }
  if (x.beta.size() > y.alpha.size() && x.beta.compare(0, y.alpha.size(), y.alpha) == 0) {
    // s_beta^* s_mu = s_{beta'}^* p_{r(mu)}
    const Word tail = x.beta.substr(y.alpha.size());
    EbarSet mid = set_intersect(t, x.mid, relative_range(t, y.mid, tail));
    if (mid.is_empty()) return std::nullopt;
    return normalize(t, x.alpha, std::move(mid), y.beta + tail);
  }
  return std::nullopt;
}

Rational trace_term(const FrequencyMeasure& m, const std::optional<Term>& t) {
  if (!t || t->alpha != t->beta) return Rational(0);
  return m.measure_of(t->mid);
}

}  // namespace

MeasureCheckReport tracial_property_check(const LanguageTable& t, const FrequencyMeasure& m,
                                          int len_bound) {
  MeasureCheckReport rep{"tracial-property", true, 0, 0.0, {}};
  if (!m.is_exact())
    fail(Errc::invalid_argument, "the tracial identity is checked in exact mode");
  std::vector<Word> words{Word()};
  for (int n = 1; n <= len_bound; ++n)
    for (const auto& [w, pos] : t.level(n)) words.push_back(w);

  std::vector<Term> terms;
  for (const Word& alpha : words)
    for (const Word& nu : words) {
      if (!t.contains(nu + alpha)) continue;
      const EbarSet base = gen_vertex(t, nu + alpha);
      for (const Word& beta : words) {
        auto term = normalize(t, alpha, base, beta);
        if (term) terms.push_back(std::move(*term));
      }
    }

  for (const Term& x : terms)
    for (const Term& y : terms) {
      ++rep.cases;
      const Rational lhs = trace_term(m, product(t, x, y));
      const Rational rhs = trace_term(m, product(t, y, x));
      if (lhs != rhs) {
        rep.pass = false;
        rep.max_defect = std::max(rep.max_defect, std::abs(to_double(lhs - rhs)));
        if (rep.witnesses.size() < 8)
          rep.witnesses.push_back("X=" + x.alpha + "|" + x.beta + " Y=" + y.alpha + "|" +
                                  y.beta);
      }
    }
  return rep;
}

}  // namespace subshift
