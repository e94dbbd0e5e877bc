#include <doctest.h>

#include "oracles.hpp"
#include "subshift/ktheory.hpp"

using namespace subshift;

namespace {

LanguageTable tm_table(long radius = 2048, int depth = 16) {
  const auto src = SequenceSource::fixed_point(thue_morse_substitution(), '1', '0', 2);
  return LanguageTable::build(src.window(radius), depth);
}

LanguageTable periodic_table() {
  return LanguageTable::build(SequenceSource::periodic("01").window(512), 12);
}

}  // namespace

TEST_CASE("the level-one map sends chi_0 to chi_10 minus chi_01") {
  const LanguageTable t = tm_table();
  const PhiLevelMap m = phi_map(t, 1);
  REQUIRE(m.source_basis == std::vector<Word>{"0", "1"});
  REQUIRE(m.target_basis == std::vector<Word>{"00", "01", "10", "11"});
  // column of chi_0: chi_00 + chi_10 - chi_00 - chi_01
  CHECK(m.one_minus_phi.at(0, 0) == 0);
  CHECK(m.one_minus_phi.at(1, 0) == -1);
  CHECK(m.one_minus_phi.at(2, 0) == 1);
  CHECK(m.one_minus_phi.at(3, 0) == 0);

  const PhiLevelMap p = phi_map(periodic_table(), 1);
  REQUIRE(p.target_basis == std::vector<Word>{"01", "10"});
  CHECK(p.one_minus_phi.at(0, 0) == -1);
  CHECK(p.one_minus_phi.at(1, 0) == 1);
}

TEST_CASE("columns only touch one-letter extensions, with unit entries") {
  const LanguageTable t = tm_table();
  for (int l = 1; l <= 6; ++l) {
    const PhiLevelMap m = phi_map(t, l);
    for (std::size_t j = 0; j < m.source_basis.size(); ++j)
      for (std::size_t i = 0; i < m.target_basis.size(); ++i) {
        const Int& e = m.one_minus_phi.at(i, j);
        CHECK((e == -1 || e == 0 || e == 1));
        if (e != 0) {
          const Word& x = m.target_basis[i];
          const Word& w = m.source_basis[j];
          CHECK((x.substr(1) == w || x.substr(0, w.size()) == w));
        }
      }
  }
}

TEST_CASE("the indicator of the whole space lies in the kernel") {
  const LanguageTable t = tm_table();
  for (int l = 1; l <= 10; ++l) CHECK(k1_witness(phi_map(t, l)));
  const LanguageTable p = periodic_table();
  for (int l = 1; l <= 8; ++l) CHECK(k1_witness(phi_map(p, l)));
}

TEST_CASE("a dropped word breaks the kernel witness") {
  const LanguageTable broken = tm_table().with_word_removed("011");
  CHECK(!k1_witness(phi_map(broken, 3)));
}

TEST_CASE("refinement squares commute exactly") {
  const LanguageTable t = tm_table();
  for (int l = 1; l <= 8; ++l) {
    const auto rep = naturality_check(t, l);
    CAPTURE(l);
    CHECK(rep.pass);
  }
  for (int l = 1; l <= 6; ++l) CHECK(naturality_check(periodic_table(), l).pass);

  const LanguageTable broken = tm_table().with_word_removed("011");
  const auto rep = naturality_check(broken, 2);
  CHECK(!rep.pass);
  CHECK(!rep.witness.empty());
}

TEST_CASE("snf reports carry certified kernel and cokernel data") {
  const LanguageTable t = tm_table();
  for (int l = 1; l <= 8; ++l) {
    const SNFReport rep = snf_report(phi_map(t, l));
    CAPTURE(l);
    CHECK(rep.certified);
    CHECK(rep.kernel_rank >= 1);
    CHECK(rep.kernel_rank + rep.rank == rep.cols);
    CHECK(rep.coker_free_rank + rep.rank == rep.rows);
    CHECK(rep.rank == oracle::rational_rank(phi_map(t, l).one_minus_phi));
  }
  // Level-2 regression fixture.
  const SNFReport l2 = snf_report(phi_map(t, 2));
  CHECK(l2.rows == 6);
  CHECK(l2.cols == 4);
  CHECK(l2.rank == 3);
  CHECK(l2.kernel_rank == 1);
  CHECK(l2.coker_free_rank == 3);
  CHECK(l2.invariant_factors == std::vector<Int>{1, 1, 1});
  CHECK(l2.coker_torsion.empty());
}

TEST_CASE("zero map has full kernel and full free cokernel") {
  PhiLevelMap zero;
  zero.level = 1;
  zero.source_basis = {"0", "1"};
  zero.target_basis = {"00", "01", "10"};
  zero.one_minus_phi = IntMatrix(3, 2);
  const SNFReport rep = snf_report(zero);
  CHECK(rep.kernel_rank == 2);
  CHECK(rep.coker_free_rank == 3);
  CHECK(rep.rank == 0);
}

TEST_CASE("k0 truncation data agrees along both routes") {
  const LanguageTable t = tm_table();
  const K0Report rep = k0_stabilization(t, 4, 10);
  CHECK(rep.connecting_well_defined);
  CHECK(rep.routes_agree);
  REQUIRE(rep.per_level.size() == 7);
  for (const auto& lv : rep.per_level) CHECK(lv.torsion.empty());
  CHECK(rep.connecting_in_snf_coords.size() == 6);

  const K0Report single = k0_stabilization(t, 5, 5);
  CHECK(single.stable);
  CHECK(single.routes_agree);

  const K0Report per = k0_stabilization(periodic_table(), 2, 6);
  CHECK(per.stable);
  CHECK(per.routes_agree);
  for (const auto& lv : per.per_level) CHECK(lv.free_rank == 1);
}
