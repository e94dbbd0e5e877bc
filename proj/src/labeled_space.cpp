#include "subshift/labeled_space.hpp"

#include <algorithm>

namespace subshift {

EbarSet::EbarSet(int level, std::set<Word> words) : level_(level), words_(std::move(words)) {
  if (level_ < 0) fail(Errc::invalid_argument, "negative level");
  for (const Word& w : words_)
    if (static_cast<int>(w.size()) != level_)
      fail(Errc::invalid_argument, "word length disagrees with the level: " + w);
}

EbarSet gen_vertex(const LanguageTable& t, const Word& alpha) {
  if (alpha.empty()) return EbarSet::full_space();
  const int l = static_cast<int>(alpha.size());
  if (!t.contains(alpha)) return EbarSet::empty_set(l);
  return EbarSet(l, {alpha});
}

EbarSet relative_range(const LanguageTable& t, const EbarSet& a, const Word& alpha) {
  if (alpha.empty()) return a;
  const int m = a.level() + static_cast<int>(alpha.size());
  if (m > t.max_len()) fail(Errc::depth_exceeded, "relative range exceeds the table depth");
  std::set<Word> out;
  for (const Word& w : a.words()) {
    Word ext = w + alpha;
    if (t.contains(ext)) out.insert(std::move(ext));
  }
  return EbarSet(m, std::move(out));
}

EbarSet refine(const LanguageTable& t, const EbarSet& a, int target_level) {
  if (target_level < a.level()) fail(Errc::invalid_argument, "refine cannot coarsen");
  if (target_level == a.level()) return a;
  if (target_level > t.max_len()) fail(Errc::depth_exceeded, "refine exceeds the table depth");
  std::set<Word> out;
  const std::size_t l = static_cast<std::size_t>(a.level());
  for (const auto& [x, pos] : t.level(target_level)) {
    if (a.words().count(x.substr(x.size() - l))) out.insert(x);
  }
  return EbarSet(target_level, std::move(out));
}

namespace {

std::pair<EbarSet, EbarSet> common_level(const LanguageTable& t, const EbarSet& a,
                                         const EbarSet& b) {
  const int m = std::max(a.level(), b.level());
  return {refine(t, a, m), refine(t, b, m)};
}

}  // namespace

EbarSet set_union(const LanguageTable& t, const EbarSet& a, const EbarSet& b) {
  auto [x, y] = common_level(t, a, b);
  std::set<Word> out = x.words();
  out.insert(y.words().begin(), y.words().end());
  return EbarSet(x.level(), std::move(out));
}

EbarSet set_intersect(const LanguageTable& t, const EbarSet& a, const EbarSet& b) {
  auto [x, y] = common_level(t, a, b);
  std::set<Word> out;
  std::ranges::set_intersection(x.words(), y.words(), std::inserter(out, out.begin()));
  return EbarSet(x.level(), std::move(out));
}

EbarSet set_difference(const LanguageTable& t, const EbarSet& a, const EbarSet& b) {
  auto [x, y] = common_level(t, a, b);
  std::set<Word> out;
  std::ranges::set_difference(x.words(), y.words(), std::inserter(out, out.begin()));
  return EbarSet(x.level(), std::move(out));
}

bool set_equal(const LanguageTable& t, const EbarSet& a, const EbarSet& b) {
  auto [x, y] = common_level(t, a, b);
  return x.words() == y.words();
}

bool set_subset(const LanguageTable& t, const EbarSet& a, const EbarSet& b) {
  auto [x, y] = common_level(t, a, b);
  return std::ranges::includes(y.words(), x.words());
}

namespace {

// Representative family at one level: empty, full, singletons and their
// complements. Small enough for exhaustive pairing.
std::vector<EbarSet> sample_family(const LanguageTable& t, int l) {
  std::vector<EbarSet> fam;
  std::set<Word> all;
  for (const auto& [w, pos] : t.level(l)) all.insert(w);
  fam.emplace_back(EbarSet::empty_set(l));
  fam.emplace_back(EbarSet(l, all));
  for (const Word& w : all) {
    fam.emplace_back(EbarSet(l, {w}));
    std::set<Word> rest = all;
    rest.erase(w);
    fam.emplace_back(EbarSet(l, std::move(rest)));
  }
  return fam;
}

AxiomReport boolean_laws(const LanguageTable& t, int l) {
  AxiomReport rep{1, l, true, {}, "boolean laws and refinement compatibility"};
  const auto fam = sample_family(t, l);
  const EbarSet full(l, [&] {
    std::set<Word> all;
    for (const auto& [w, pos] : t.level(l)) all.insert(w);
    return all;
  }());
  for (const auto& a : fam) {
    if (!set_equal(t, set_union(t, a, set_difference(t, full, a)), full) ||
        !set_intersect(t, a, EbarSet::empty_set(l)).is_empty()) {
      rep.pass = false;
      rep.counterexample.assign(a.words().begin(), a.words().end());
      rep.detail = "complement law failed";
      return rep;
    }
    for (const auto& b : fam) {
      const auto uni = set_union(t, a, b);
      const auto inter = set_intersect(t, a, b);
      if (uni.size() + inter.size() != a.size() + b.size()) {
        rep.pass = false;
        rep.detail = "inclusion-exclusion failed";
        rep.counterexample.assign(a.words().begin(), a.words().end());
        return rep;
      }
      if (l < t.max_len()) {
        // p_A is insensitive to the level it is written at.
        if (!set_equal(t, refine(t, uni, l + 1),
                       set_union(t, refine(t, a, l + 1), refine(t, b, l + 1)))) {
          rep.pass = false;
          rep.detail = "refinement does not commute with union";
          rep.counterexample.assign(uni.words().begin(), uni.words().end());
          return rep;
        }
      }
    }
  }
  return rep;
}

AxiomReport range_commutation(const LanguageTable& t, int l) {
  AxiomReport rep{2, l, true, {}, "relative ranges respect intersections"};
  const auto fam = sample_family(t, l);
  std::vector<Word> labels;
  for (int n = 1; n <= 2 && l + n <= t.max_len(); ++n)
    for (const auto& [w, pos] : t.level(n)) labels.push_back(w);
  for (const auto& a : fam)
    for (const auto& b : fam)
      for (const Word& alpha : labels) {
        const auto lhs = relative_range(t, set_intersect(t, a, b), alpha);
        const auto rhs = set_intersect(t, relative_range(t, a, alpha),
                                       relative_range(t, b, alpha));
        if (!set_equal(t, lhs, rhs)) {
          rep.pass = false;
          rep.counterexample = {alpha};
          rep.detail = "weak left-resolving identity failed";
          return rep;
        }
      }
  return rep;
}

AxiomReport letter_orthogonality(const LanguageTable& t, int l) {
  AxiomReport rep{3, l, true, {}, "distinct letters give disjoint suffix classes"};
  if (l + 1 > t.max_len()) return rep;
  std::vector<Word> letters;
  for (const auto& [w, pos] : t.level(1)) letters.push_back(w);
  const auto fam = sample_family(t, l);
  for (const auto& a : fam)
    for (std::size_t i = 0; i < letters.size(); ++i)
      for (std::size_t j = i + 1; j < letters.size(); ++j) {
        const auto ra = relative_range(t, a, letters[i]);
        const auto rb = relative_range(t, a, letters[j]);
        if (!set_intersect(t, ra, rb).is_empty()) {
          rep.pass = false;
          rep.counterexample = {letters[i], letters[j]};
          rep.detail = "suffix classes overlap";
          return rep;
        }
      }
  return rep;
}

AxiomReport partition_law(const LanguageTable& t, int l) {
  AxiomReport rep{4, l, true, {}, "one-step decomposition and refinement consistency"};
  if (l + 1 > t.max_len()) return rep;
  // Every class extends on both sides and every deeper word decomposes
  // over the shallower level.
  for (const auto& [w, pos] : t.level(l)) {
    bool right = false, left = false;
    for (const auto& [letter, lp] : t.level(1)) {
      if (t.contains(w + letter)) right = true;
      if (t.contains(letter + w)) left = true;
    }
    if (!right || !left) {
      rep.pass = false;
      rep.counterexample = {w};
      rep.detail = right ? "class receives no labeled edge" : "class emits no labeled edge";
      return rep;
    }
  }
  for (const auto& [x, pos] : t.level(l + 1)) {
    if (!t.contains(x.substr(0, static_cast<std::size_t>(l))) ||
        !t.contains(x.substr(1))) {
      rep.pass = false;
      rep.counterexample = {x};
      rep.detail = "deeper word does not decompose over the level below";
      return rep;
    }
  }
  if (l + 2 <= t.max_len()) {
    for (const auto& [w, pos] : t.level(l)) {
      const EbarSet v(l, {w});
      if (!set_equal(t, refine(t, refine(t, v, l + 1), l + 2), refine(t, v, l + 2))) {
        rep.pass = false;
        rep.counterexample = {w};
        rep.detail = "refinement chain is inconsistent";
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<AxiomReport> verify_axioms(const LanguageTable& t, int max_level) {
  if (max_level < 1 || max_level + 1 > t.max_len())
    fail(Errc::insufficient_language, "axiom checks need depth max_level + 1");
  std::vector<AxiomReport> out;
  for (int l = 1; l <= max_level; ++l) {
    out.push_back(boolean_laws(t, l));
    out.push_back(range_commutation(t, l));
    out.push_back(letter_orthogonality(t, l));
    out.push_back(partition_law(t, l));
  }
  return out;
}

CofinalityCertificate strong_cofinality_certificate(const LanguageTable& t, const Word& w,
                                                    int span) {
  if (w.empty() || !t.contains(w)) fail(Errc::unknown_word, "not a factor: " + w);
  const int l = static_cast<int>(w.size());
  const long bound = t.max_gap(w).max_gap + l;
  if (span < bound)
    fail(Errc::invalid_argument,
         "span " + std::to_string(span) + " below the recurrence bound " +
             std::to_string(bound) + " for " + w);
  if (span > t.max_len()) fail(Errc::depth_exceeded, "span exceeds the table depth");

  CofinalityCertificate cert;
  cert.word = w;
  cert.span = span;
  cert.pass = true;
  std::set<Word> paths;
  for (const auto& [u, pos] : t.level(span)) {
    // Last occurrence leaving a nonempty suffix keeps the paths short;
    // the recurrence bound guarantees one exists.
    std::size_t at = u.rfind(w, u.size() - w.size() - 1);
    if (at == std::string::npos) {
      cert.pass = false;
      cert.failing_witness = u;
      cert.paths.clear();
      cert.cover.clear();
      return cert;
    }
    const Word suffix = u.substr(at + w.size());
    // [u] subset r([w], suffix) holds exactly when w+suffix ends u.
    paths.insert(suffix);
    cert.cover.emplace_back(u, suffix);
  }
  cert.paths.assign(paths.begin(), paths.end());
  return cert;
}

}  // namespace subshift
