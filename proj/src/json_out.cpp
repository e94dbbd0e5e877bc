#include "subshift/json_out.hpp"

namespace subshift {

namespace {

std::string int_str(const Int& v) { return v.str(); }

Json factors_json(const std::vector<Int>& fs) {
  Json arr = Json::array();
  for (const Int& f : fs) arr.push_back(int_str(f));
  return arr;
}

}  // namespace

Json to_json(const RecurrenceReport& r) {
  return Json{{"word", r.word}, {"max_gap", r.max_gap}, {"occurrences", r.occurrence_count}};
}

Json to_json(const DisagreeabilityReport& r) {
  Json per = Json::object();
  for (const auto& [w, p] : r.per_word)
    per[w] = Json{{"power", p.power}, {"capped", p.capped}};
  return Json{{"len_bound", r.len_bound},
              {"power_ceiling", r.power_ceiling},
              {"pass", r.pass},
              {"witness", r.witness},
              {"per_word", per}};
}

Json to_json(const AxiomReport& r) {
  return Json{{"axiom", r.axiom},
              {"level", r.level},
              {"pass", r.pass},
              {"counterexample", r.counterexample},
              {"detail", r.detail}};
}

Json to_json(const std::vector<AxiomReport>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr;
}

Json to_json(const CofinalityCertificate& c) {
  Json cover = Json::array();
  for (const auto& [u, s] : c.cover) cover.push_back(Json{{"word", u}, {"suffix", s}});
  return Json{{"word", c.word},       {"span", c.span},   {"pass", c.pass},
              {"window_relative", true}, {"paths", c.paths}, {"witness", c.failing_witness},
              {"cover", cover}};
}

Json to_json(const CheckReport& r) {
  return Json{
      {"check", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"witnesses", r.witnesses}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const DimensionData& d) {
  Json arr = Json::array();
  for (const auto& lv : d.per_level) {
    arr.push_back(Json{{"level", lv.level},
                       {"vertices", lv.vertex_count},
                       {"composite_rank", lv.composite_rank},
                       {"elementary_divisors", factors_json(lv.elementary_divisors)},
                       {"order_unit", factors_json(lv.order_unit)},
                       {"snf_certified", lv.snf_certified}});
  }
  return Json{{"truncation_data", true}, {"per_level", arr}};
}

Json to_json(const SNFReport& r) {
  return Json{{"level", r.level},
              {"rows", r.rows},
              {"cols", r.cols},
              {"rank", r.rank},
              {"kernel_rank", r.kernel_rank},
              {"coker_free_rank", r.coker_free_rank},
              {"invariant_factors", factors_json(r.invariant_factors)},
              {"coker_torsion", factors_json(r.coker_torsion)},
              {"certified", r.certified}};
}

Json to_json(const NaturalityReport& r) {
  return Json{{"level", r.level}, {"pass", r.pass}, {"witness", r.witness}};
}

Json to_json(const K0Report& r) {
  Json per = Json::array();
  for (const auto& lv : r.per_level)
    per.push_back(Json{{"level", lv.level},
                       {"free_rank", lv.free_rank},
                       {"torsion", factors_json(lv.torsion)}});
  Json maps = Json::array();
  for (const auto& m : r.connecting_in_snf_coords) maps.push_back(to_json(m));
  return Json{{"truncation_data", true},
              {"first_level", r.first_level},
              {"last_level", r.last_level},
              {"per_level", per},
              {"connecting_well_defined", r.connecting_well_defined},
              {"routes_agree", r.routes_agree},
              {"stable", r.stable},
              {"connecting_in_snf_coords", maps}};
}

Json to_json(const MeasureCheckReport& r) {
  return Json{{"check", r.name},
              {"pass", r.pass},
              {"cases", r.cases},
              {"max_defect", r.max_defect},
              {"witnesses", r.witnesses}};
}

}  // namespace subshift
