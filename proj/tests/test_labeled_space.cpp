#include <doctest.h>

#include <random>

#include "subshift/labeled_space.hpp"

using namespace subshift;

namespace {

LanguageTable tm_table(long radius = 2048, int depth = 16) {
  const auto src = SequenceSource::fixed_point(thue_morse_substitution(), '1', '0', 2);
  return LanguageTable::build(src.window(radius), depth);
}

std::vector<EbarSet> all_subsets(const LanguageTable& t, int level) {
  const auto words = t.words(level);
  std::vector<EbarSet> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << words.size()); ++bits) {
    std::set<Word> s;
    for (std::size_t i = 0; i < words.size(); ++i)
      if (bits & (std::size_t{1} << i)) s.insert(words[i]);
    out.emplace_back(level, std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("generalized vertices are singleton past words") {
  const LanguageTable t = tm_table();
  CHECK(gen_vertex(t, "01") == EbarSet(2, {"01"}));
  CHECK(gen_vertex(t, "000").is_empty());
  CHECK(gen_vertex(t, "000").level() == 3);
  CHECK(gen_vertex(t, "") == EbarSet::full_space());
}

TEST_CASE("relative range extends on the right") {
  const LanguageTable t = tm_table();
  CHECK(relative_range(t, EbarSet(1, {"0"}), "1") == EbarSet(2, {"01"}));
  CHECK(relative_range(t, EbarSet(2, {"00"}), "0").is_empty());
  CHECK(relative_range(t, EbarSet::full_space(), "01") == gen_vertex(t, "01"));
  CHECK(relative_range(t, EbarSet(1, {"0"}), "") == EbarSet(1, {"0"}));
}

TEST_CASE("weak left-resolving holds for every pair of level-2 sets") {
  const LanguageTable t = tm_table();
  const auto family = all_subsets(t, 2);
  std::vector<Word> labels;
  for (int n = 1; n <= 2; ++n)
    for (const auto& [w, pos] : t.level(n)) labels.push_back(w);
  for (const auto& a : family)
    for (const auto& b : family)
      for (const Word& alpha : labels)
        CHECK(set_equal(t, relative_range(t, set_intersect(t, a, b), alpha),
                        set_intersect(t, relative_range(t, a, alpha),
                                      relative_range(t, b, alpha))));
}

TEST_CASE("weak left-resolving on sampled level-3 sets") {
  const LanguageTable t = tm_table();
  const auto words = t.words(3);
  std::mt19937 rng(991);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Word> labels;
  for (int n = 1; n <= 2; ++n)
    for (const auto& [w, pos] : t.level(n)) labels.push_back(w);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Word> sa, sb;
    for (const Word& w : words) {
      if (coin(rng)) sa.insert(w);
      if (coin(rng)) sb.insert(w);
    }
    const EbarSet a(3, sa), b(3, sb);
    for (const Word& alpha : labels)
      CHECK(set_equal(t, relative_range(t, set_intersect(t, a, b), alpha),
                      set_intersect(t, relative_range(t, a, alpha),
                                    relative_range(t, b, alpha))));
  }
}

TEST_CASE("refinement adds past letters") {
  const LanguageTable t = tm_table();
  CHECK(refine(t, EbarSet(1, {"0"}), 2) == EbarSet(2, {"00", "10"}));
  CHECK(refine(t, EbarSet::full_space(), 3) == EbarSet(3, [&] {
          std::set<Word> all;
          for (const auto& w : t.words(3)) all.insert(w);
          return all;
        }()));
  for (int l = 1; l <= 4; ++l)
    for (const auto& [w, pos] : t.level(l)) {
      const EbarSet v(l, {w});
      CHECK(refine(t, refine(t, v, l + 1), l + 2) == refine(t, v, l + 2));
    }
}

TEST_CASE("vertex classes refine into exactly the left extensions") {
  const LanguageTable t = tm_table();
  for (int la = 1; la <= 3; ++la)
    for (const auto& [alpha, pos] : t.level(la))
      for (int m = la; m <= la + 2; ++m) {
        const EbarSet lhs = refine(t, gen_vertex(t, alpha), m);
        const EbarSet rhs =
            relative_range(t, refine(t, EbarSet::full_space(), m - la), alpha);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("boolean operations auto-refine to the common level") {
  const LanguageTable t = tm_table();
  const EbarSet mixed = set_union(t, EbarSet(1, {"0"}), EbarSet(2, {"01"}));
  CHECK(mixed == EbarSet(2, {"00", "01", "10"}));
  const EbarSet full2(2, {"00", "01", "10", "11"});
  for (const auto& a : all_subsets(t, 2)) {
    CHECK(set_equal(t, set_union(t, a, set_difference(t, full2, a)), full2));
    CHECK(set_intersect(t, a, EbarSet::empty_set(2)).is_empty());
  }
  // Indicator semantics survive refinement.
  CHECK(set_equal(t, EbarSet(1, {"0"}), refine(t, EbarSet(1, {"0"}), 4)));
}

TEST_CASE("representation axioms verify on healthy languages") {
  for (const auto& reports : {verify_axioms(tm_table(), 5),
                              verify_axioms(LanguageTable::build(
                                                SequenceSource::periodic("01").window(512), 8),
                                            3)}) {
    for (const auto& r : reports) {
      CAPTURE(r.axiom);
      CAPTURE(r.level);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("axioms flag a dropped word with a counterexample") {
  const LanguageTable broken = tm_table().with_word_removed("011");
  const auto reports = verify_axioms(broken, 4);
  bool axiom4_failed = false;
  for (const auto& r : reports)
    if (r.axiom == 4 && !r.pass) {
      axiom4_failed = true;
      CHECK(!r.counterexample.empty());
    }
  CHECK(axiom4_failed);
}

TEST_CASE("strong cofinality certificate covers every long factor") {
  const LanguageTable t = tm_table();
  const auto cert = strong_cofinality_certificate(t, "0", 8);
  CHECK(cert.pass);
  CHECK(!cert.paths.empty());
  for (const Word& s : cert.paths) CHECK(s.size() <= 3);
  // Soundness: the certified suffix relation really holds.
  for (const auto& [u, s] : cert.cover) {
    const Word tail = "0" + s;
    CHECK(u.size() >= tail.size());
    CHECK(u.compare(u.size() - tail.size(), tail.size(), tail) == 0);
  }

  const auto gap = t.max_gap("0110");
  const int span = static_cast<int>(gap.max_gap) + 4;
  const auto cert2 = strong_cofinality_certificate(t, "0110", span);
  CHECK(cert2.pass);
  for (const auto& [u, s] : cert2.cover) {
    const Word tail = "0110" + s;
    CHECK(u.compare(u.size() - tail.size(), tail.size(), tail) == 0);
  }
}

TEST_CASE("cofinality preconditions") {
  const LanguageTable t = tm_table();
  try {
    strong_cofinality_certificate(t, "00", 2);  // below the recurrence bound
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  const LanguageTable p =
      LanguageTable::build(SequenceSource::periodic("01").window(512), 8);
  try {
    strong_cofinality_certificate(p, "00", 6);
    FAIL("expected unknown_word");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_word);
  }
}
