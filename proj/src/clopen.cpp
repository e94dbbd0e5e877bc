#include "subshift/clopen.hpp"

#include <algorithm>
#include <sstream>

namespace subshift {

ClopenSet::ClopenSet(int past_len, int future_len, std::set<Word> words)
    : past_(past_len), future_(future_len), words_(std::move(words)) {
  if (past_ < 0 || future_ < 0) fail(Errc::invalid_argument, "negative window shape");
  for (const Word& w : words_)
    if (static_cast<int>(w.size()) != past_ + future_)
      fail(Errc::invalid_argument, "cylinder word length disagrees with the shape: " + w);
}

std::string ClopenSet::to_string() const {
  if (words_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Word& w : words_) {
    if (!first) os << '|';
    first = false;
    os << w.substr(0, static_cast<std::size_t>(past_)) << '.'
       << w.substr(static_cast<std::size_t>(past_));
  }
  return os.str();
}

ClopenSet rho(const LanguageTable& t, const Word& alpha, const Word& beta) {
  const Word w = beta + alpha;
  const int p = static_cast<int>(beta.size());
  const int f = static_cast<int>(alpha.size());
  if (!w.empty() && !t.contains(w)) return ClopenSet::zero(p, f);
  return ClopenSet(p, f, {w});
}

namespace {

ClopenSet grow_past(const LanguageTable& t, const ClopenSet& c) {
  const int n = c.total_len();
  if (n + 1 > t.max_len()) fail(Errc::depth_exceeded, "cylinder refinement exceeds the depth");
  std::set<Word> out;
  for (const auto& [x, pos] : t.level(n + 1))
    if (c.words().count(x.substr(1))) out.insert(x);
  return ClopenSet(c.past_len() + 1, c.future_len(), std::move(out));
}

ClopenSet grow_future(const LanguageTable& t, const ClopenSet& c) {
  const int n = c.total_len();
  if (n + 1 > t.max_len()) fail(Errc::depth_exceeded, "cylinder refinement exceeds the depth");
  std::set<Word> out;
  for (const auto& [x, pos] : t.level(n + 1))
    if (c.words().count(x.substr(0, x.size() - 1))) out.insert(x);
  return ClopenSet(c.past_len(), c.future_len() + 1, std::move(out));
}

}  // namespace

ClopenSet refine_to(const LanguageTable& t, const ClopenSet& c, int past_len, int future_len) {
  if (past_len < c.past_len() || future_len < c.future_len())
    fail(Errc::invalid_argument, "refine cannot coarsen a cylinder");
  ClopenSet out = c;
  while (out.past_len() < past_len) out = grow_past(t, out);
  while (out.future_len() < future_len) out = grow_future(t, out);
  return out;
}

ClopenSet clopen_union(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b) {
  const int p = std::max(a.past_len(), b.past_len());
  const int f = std::max(a.future_len(), b.future_len());
  ClopenSet x = refine_to(t, a, p, f), y = refine_to(t, b, p, f);
  std::set<Word> out = x.words();
  out.insert(y.words().begin(), y.words().end());
  return ClopenSet(p, f, std::move(out));
}

ClopenSet clopen_intersect(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b) {
  const int p = std::max(a.past_len(), b.past_len());
  const int f = std::max(a.future_len(), b.future_len());
  ClopenSet x = refine_to(t, a, p, f), y = refine_to(t, b, p, f);
  std::set<Word> out;
  std::ranges::set_intersection(x.words(), y.words(), std::inserter(out, out.begin()));
  return ClopenSet(p, f, std::move(out));
}

bool clopen_equal(const LanguageTable& t, const ClopenSet& a, const ClopenSet& b) {
  const int p = std::max(a.past_len(), b.past_len());
  const int f = std::max(a.future_len(), b.future_len());
  return refine_to(t, a, p, f).words() == refine_to(t, b, p, f).words();
}

ClopenSet shift(const LanguageTable& t, const ClopenSet& c) {
  ClopenSet x = c.future_len() >= 1 ? c : grow_future(t, c);
  return ClopenSet(x.past_len() + 1, x.future_len() - 1, x.words());
}

ClopenSet unshift(const LanguageTable& t, const ClopenSet& c) {
  ClopenSet x = c.past_len() >= 1 ? c : grow_past(t, c);
  return ClopenSet(x.past_len() - 1, x.future_len() + 1, x.words());
}

CheckReport verify_tprime(const LanguageTable& t, int max_len) {
  CheckReport rep{"tprime", true, 0, {}};
  if (2 * max_len > t.max_len())
    fail(Errc::insufficient_language, "tprime check needs depth 2*max_len");
  for (int la = 1; la <= max_len; ++la) {
    for (const auto& [alpha, pa] : t.level(la)) {
      for (int lb = 1; lb <= max_len; ++lb) {
        for (const auto& [beta, pb] : t.level(lb)) {
          if (!t.contains(beta + alpha)) continue;
          ++rep.cases;
          const ClopenSet lhs = shift(t, rho(t, alpha, beta));
          const ClopenSet rhs = rho(t, alpha.substr(1), beta + alpha[0]);
          if (!clopen_equal(t, lhs, rhs)) {
            rep.pass = false;
            rep.witnesses.push_back(beta + "." + alpha);
            if (rep.witnesses.size() >= 8) return rep;
          }
        }
      }
    }
  }
  return rep;
}

CheckReport verify_conjugation(const LanguageTable& t, int max_len) {
  CheckReport rep{"conjugation", true, 0, {}};
  if (max_len + 1 > t.max_len())
    fail(Errc::insufficient_language, "conjugation check needs depth max_len + 1");
  std::vector<Word> pasts{Word()};
  for (int n = 1; n <= max_len; ++n)
    for (const auto& [w, pos] : t.level(n)) pasts.push_back(w);
  for (const Word& beta : pasts) {
    ++rep.cases;
    const ClopenSet lhs = shift(t, rho(t, Word(), beta));
    ClopenSet rhs = ClopenSet::zero(static_cast<int>(beta.size()) + 1, 0);
    for (const auto& [letter, pos] : t.level(1))
      rhs = clopen_union(t, rhs, rho(t, Word(), beta + letter));
    if (!clopen_equal(t, lhs, rhs)) {
      rep.pass = false;
      rep.witnesses.push_back(beta + ".");
      if (rep.witnesses.size() >= 8) return rep;
    }
  }
  return rep;
}

CheckReport verify_partition_axiom(const LanguageTable& t, int max_len) {
  CheckReport rep{"partition", true, 0, {}};
  if (max_len + 2 > t.max_len())
    fail(Errc::insufficient_language, "partition check needs depth max_len + 2");
  for (int n = 0; n <= max_len; ++n) {
    std::vector<Word> mids;
    if (n == 0)
      mids.push_back(Word());
    else
      for (const auto& [w, pos] : t.level(n)) mids.push_back(w);
    for (const Word& mid : mids) {
      for (int p = 0; p <= n; ++p) {
        const Word beta = mid.substr(0, static_cast<std::size_t>(p));
        const Word alpha = mid.substr(static_cast<std::size_t>(p));
        ++rep.cases;
        const ClopenSet whole = rho(t, alpha, beta);
        ClopenSet pieces = ClopenSet::zero(p + 1, static_cast<int>(alpha.size()) + 1);
        std::size_t piece_words = 0;
        for (const auto& [a, ap] : t.level(1)) {
          for (const auto& [b, bp] : t.level(1)) {
            const ClopenSet block = rho(t, alpha + b, a + beta);
            piece_words += block.words().size();
            pieces = clopen_union(t, pieces, block);
          }
        }
        // Disjointness: the union cannot shrink the piece count.
        if (piece_words != pieces.words().size() || !clopen_equal(t, whole, pieces)) {
          rep.pass = false;
          rep.witnesses.push_back(beta + "." + alpha);
          if (rep.witnesses.size() >= 8) return rep;
        }
      }
    }
    // Coverage: every word two levels deeper sits in exactly one block.
    for (const auto& [y, pos] : t.level(n + 2)) {
      if (n == 0) continue;  // central factor is epsilon, always covered
      if (!t.contains(y.substr(1, static_cast<std::size_t>(n)))) {
        rep.pass = false;
        rep.witnesses.push_back("uncovered:" + y);
        if (rep.witnesses.size() >= 8) return rep;
      }
    }
  }
  return rep;
}

CheckReport verify_generator_laws(const LanguageTable& t, Symbol a, int beta_len) {
  CheckReport rep{"generator-laws", true, 0, {}};
  const Word la(1, a);
  if (!t.contains(la)) fail(Errc::unknown_word, "letter does not occur: " + la);
  if (beta_len + 2 > t.max_len())
    fail(Errc::insufficient_language, "generator laws need depth beta_len + 2");

  // t_a^* t_a = p_{r(a)}: the range cylinder is fixed by unshift o shift.
  const ClopenSet range_a = rho(t, Word(), la);
  ++rep.cases;
  if (!clopen_equal(t, unshift(t, shift(t, range_a)), range_a)) {
    rep.pass = false;
    rep.witnesses.push_back("isometry:" + la);
  }

  // t_a^* t_b = 0 for b != a.
  for (const auto& [letter, pos] : t.level(1)) {
    if (letter == la) continue;
    ++rep.cases;
    if (!clopen_intersect(t, range_a, rho(t, Word(), letter)).is_empty()) {
      rep.pass = false;
      rep.witnesses.push_back("orthogonality:" + la + "," + letter);
    }
  }

  // p_{r(beta)} t_a = t_a p_{r(beta a)}: unshift([beta a.]) = [beta.a]
  // = [beta.] cap T^{-1}[a.].
  std::vector<Word> pasts{Word()};
  for (int n = 1; n <= beta_len; ++n)
    for (const auto& [w, pos] : t.level(n)) pasts.push_back(w);
  for (const Word& beta : pasts) {
    ++rep.cases;
    const ClopenSet lhs = unshift(t, rho(t, Word(), beta + la));
    const ClopenSet mid = rho(t, la, beta);
    const ClopenSet rhs = clopen_intersect(t, rho(t, Word(), beta), unshift(t, range_a));
    if (!clopen_equal(t, lhs, mid) || !clopen_equal(t, mid, rhs)) {
      rep.pass = false;
      rep.witnesses.push_back("intertwining:" + beta + "." + la);
      if (rep.witnesses.size() >= 8) return rep;
    }
  }
  return rep;
}

}  // namespace subshift
