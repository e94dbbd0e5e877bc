#include <doctest.h>

#include "oracles.hpp"
#include "subshift/bratteli.hpp"
#include "subshift/measure.hpp"

using namespace subshift;

namespace {

LanguageTable tm_table(long radius = 2048, int depth = 16) {
  const auto src = SequenceSource::fixed_point(thue_morse_substitution(), '1', '0', 2);
  return LanguageTable::build(src.window(radius), depth);
}

}  // namespace

TEST_CASE("vertex sets are the even-length factor sets") {
  const LanguageTable t = tm_table();
  const BratteliDiagram d = build_bratteli(t, 3);
  CHECK(d.level(1) == t.words(2));
  CHECK(d.level(1).size() == 4);
  CHECK(d.level(2).size() == 10);
  CHECK(d.level(2).size() == t.complexity(4));
  CHECK(d.level(3).size() == t.complexity(6));
  try {
    build_bratteli(t, 9);
    FAIL("expected depth_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::depth_exceeded);
  }
}

TEST_CASE("inclusion matrices have one incoming edge per deep vertex") {
  const LanguageTable t = tm_table();
  const BratteliDiagram d = build_bratteli(t, 4);
  for (int k = 1; k < 4; ++k) {
    const IntMatrix m = inclusion_matrix(t, d, k);
    CHECK(m.rows() == d.level(k + 1).size());
    CHECK(m.cols() == d.level(k).size());
    std::size_t ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int row_sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        CHECK((m.at(i, j) == 0 || m.at(i, j) == 1));
        row_sum += m.at(i, j);
        if (m.at(i, j) == 1) ++ones;
      }
      CHECK(row_sum == 1);
    }
    // Every class keeps extending: no zero columns.
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int col_sum = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) col_sum += m.at(i, j);
      CHECK(col_sum >= 1);
    }
    // Column sums count the valid two-sided extensions, and the total
    // edge count is the size of the deeper level.
    std::size_t direct = 0;
    for (const Word& u : d.level(k))
      for (const auto& [a, ap] : t.level(1))
        for (const auto& [b, bp] : t.level(1))
          if (t.contains(a + u + b)) ++direct;
    CHECK(ones == d.level(k + 1).size());
    CHECK(direct == ones);
  }
}

TEST_CASE("dimension data reports full column ranks for thue-morse") {
  const LanguageTable t = tm_table();
  const BratteliDiagram d = build_bratteli(t, 4);
  const DimensionData data = dimension_data(t, d);
  REQUIRE(data.per_level.size() == 3);
  for (const auto& lv : data.per_level) {
    CHECK(lv.snf_certified);
    CHECK(lv.composite_rank == lv.vertex_count);
    for (const Int& f : lv.elementary_divisors) CHECK(f == 1);
    for (const Int& u : lv.order_unit) CHECK(u == 1);
  }
  // Ranks cannot grow as the composition gets longer.
  for (std::size_t i = 0; i + 1 < data.per_level.size(); ++i)
    CHECK(data.per_level[i].composite_rank <= data.per_level[i + 1].composite_rank);

  // Independent rank oracle on the longest composite.
  IntMatrix composite = inclusion_matrix(t, d, 1);
  for (int k = 2; k < 4; ++k) composite = inclusion_matrix(t, d, k) * composite;
  CHECK(oracle::rational_rank(composite) == data.per_level[0].composite_rank);
}

TEST_CASE("one-letter loop diagram has rank one") {
  Window w;
  w.radius = 64;
  w.symbols = std::string(128, '0');
  const LanguageTable t = LanguageTable::build(w, 10);
  const BratteliDiagram d = build_bratteli(t, 3);
  CHECK(d.level(1) == std::vector<Word>{"00"});
  const DimensionData data = dimension_data(t, d);
  CHECK(data.per_level[0].composite_rank == 1);
  CHECK(data.per_level[0].elementary_divisors == std::vector<Int>{1});
}

TEST_CASE("measure decomposes along the inclusions") {
  const LanguageTable t = tm_table();
  const FrequencyMeasure m = FrequencyMeasure::exact_from_substitution(
      thue_morse_substitution(), 10);
  const BratteliDiagram d = build_bratteli(t, 4);
  for (int k = 1; k < 4; ++k) {
    for (const Word& u : d.level(k)) {
      Rational total(0);
      for (const auto& [a, ap] : t.level(1))
        for (const auto& [b, bp] : t.level(1)) total += m.value(a + u + b);
      CHECK(total == m.value(u));
    }
  }
}

TEST_CASE("dot export is deterministic and byte-stable") {
  const LanguageTable t = tm_table();
  const BratteliDiagram d = build_bratteli(t, 2);
  const std::string a = export_dot(t, d);
  CHECK(a == export_dot(t, d));
  CHECK(a.rfind("digraph bratteli {", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t p = a.find("->"); p != std::string::npos; p = a.find("->", p + 1)) ++arrows;
  CHECK(arrows == d.level(2).size());
  // Vertex labels appear once in their rank line plus once per edge end.
  for (int k = 1; k <= 2; ++k)
    for (const Word& w : d.level(k)) {
      const std::string label = "\"L" + std::to_string(k) + ":" + w + "\"";
      CHECK(a.find(label) != std::string::npos);
    }

  const BratteliDiagram empty = build_bratteli(t, 0);
  const std::string header_only = export_dot(t, empty);
  CHECK(header_only.find("->") == std::string::npos);
  CHECK(header_only.rfind("digraph bratteli {", 0) == 0);
}
