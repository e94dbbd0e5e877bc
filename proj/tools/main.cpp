// Command line front end: every analysis writes deterministic JSON/CSV/DOT
// artifacts into the configured output directory.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
// configuration error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "subshift/bratteli.hpp"
#include "subshift/config.hpp"
#include "subshift/json_out.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/measure.hpp"

namespace fs = std::filesystem;
using namespace subshift;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Session {
  RunConfig cfg;
  std::optional<SequenceSource> source;
  std::optional<Window> window;
  std::optional<LanguageTable> table;
  std::optional<FrequencyMeasure> measure;

  const SequenceSource& src() {
    if (!source) source = cfg.make_source();
    return *source;
  }
  const Window& win() {
    if (!window) window = src().window(cfg.window);
    return *window;
  }
  const LanguageTable& tab() {
    if (!table) table = LanguageTable::build(win(), cfg.depth);
    return *table;
  }
  // The invariant measure in its best available mode.
  const FrequencyMeasure& meas() {
    if (!measure) {
      switch (cfg.kind) {
        case RunConfig::Kind::substitution:
          measure = FrequencyMeasure::exact_from_substitution(*src().substitution(),
                                                              cfg.measure_depth);
          break;
        case RunConfig::Kind::periodic:
          measure = FrequencyMeasure::exact_from_periodic(cfg.pattern, cfg.measure_depth);
          break;
        case RunConfig::Kind::morse:
          measure = FrequencyMeasure::empirical(src().window(cfg.empirical_window),
                                                cfg.measure_depth);
          break;
      }
    }
    return *measure;
  }

  fs::path out_dir() const { return fs::path(cfg.out_dir); }

  void write_text(const std::string& name, const std::string& text) const {
    fs::create_directories(out_dir());
    std::ofstream f(out_dir() / name, std::ios::binary);
    if (!f) fail(Errc::bad_config, "cannot write " + (out_dir() / name).string());
    f << text;
  }
  void write_json(const std::string& name, Json j) const {
    j[kSchemaKey] = "subshift/" + name + "/1";
    write_text(name + ".json", j.dump(2) + "\n");
  }
};

int cmd_gen(Session& s) {
  s.write_text("window.txt", s.win().dotted() + "\n");
  std::cout << "wrote window.txt (" << 2 * s.cfg.window << " symbols)\n";
  return 0;
}

int cmd_lang(Session& s) {
  const LanguageTable& t = s.tab();
  std::ostringstream csv;
  t.write_csv(csv);
  s.write_text("language.csv", csv.str());
  Json counts = Json::array();
  for (int n = 1; n <= t.max_len(); ++n) counts.push_back(t.complexity(n));
  s.write_json("language", Json{{"depth", t.max_len()},
                                {"scan_lo", t.scan_lo()},
                                {"scan_hi", t.scan_hi()},
                                {"complexity", counts},
                                {"window_relative", true}});
  std::cout << "factor table to depth " << t.max_len() << "\n";
  return 0;
}

int cmd_recurrence(Session& s, const std::string& word) {
  const auto rep = s.tab().max_gap(word);
  s.write_json("recurrence", to_json(rep));
  std::cout << word << ": max gap " << rep.max_gap << " over " << rep.occurrence_count
            << " occurrences\n";
  return 0;
}

int cmd_disagree(Session& s) {
  const auto rep = s.tab().disagreeability(s.cfg.disagree_len, s.cfg.disagree_ceiling);
  s.write_json("disagree", to_json(rep));
  std::cout << "disagreeable up to length " << s.cfg.disagree_len << ": "
            << (rep.pass ? "yes" : ("no, witness " + rep.witness)) << "\n";
  return rep.pass ? 0 : kExitFail;
}

int cmd_axioms(Session& s) {
  const auto reports = verify_axioms(s.tab(), s.cfg.axiom_levels);
  s.write_json("axioms", Json{{"max_level", s.cfg.axiom_levels}, {"reports", to_json(reports)}});
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  std::cout << "representation axioms to level " << s.cfg.axiom_levels << ": "
            << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_cofinal(Session& s, const std::string& word, int span) {
  const LanguageTable& t = s.tab();
  if (span == 0)
    span = static_cast<int>(t.max_gap(word).max_gap) + static_cast<int>(word.size());
  const auto cert = strong_cofinality_certificate(t, word, span);
  s.write_json("cofinal", to_json(cert));
  std::cout << "cofinality certificate for " << word << " at span " << span << ": "
            << (cert.pass ? "pass" : "FAIL") << "\n";
  return cert.pass ? 0 : kExitFail;
}

int cmd_bratteli(Session& s) {
  const LanguageTable& t = s.tab();
  const BratteliDiagram d = build_bratteli(t, s.cfg.bratteli_levels);
  s.write_text("bratteli.dot", export_dot(t, d));
  Json sizes = Json::array();
  for (int k = 1; k <= d.depth; ++k) sizes.push_back(d.level(k).size());
  Json j{{"levels", sizes}};
  if (d.depth >= 2) j["dimension_data"] = to_json(dimension_data(t, d));
  s.write_json("bratteli", j);
  std::cout << "bratteli diagram to level " << d.depth << "\n";
  return 0;
}

int cmd_phi(Session& s, int level) {
  const PhiLevelMap m = phi_map(s.tab(), level);
  const SNFReport snf = snf_report(m);
  s.write_json("phi", Json{{"level", level},
                           {"source_basis", m.source_basis},
                           {"target_basis", m.target_basis},
                           {"matrix", to_json(m.one_minus_phi)},
                           {"k1_witness", k1_witness(m)},
                           {"snf", to_json(snf)}});
  std::cout << "phi map at level " << level << ", rank " << snf.rank << "\n";
  return 0;
}

int cmd_k(Session& s) {
  const LanguageTable& t = s.tab();
  bool ok = true;
  Json k1 = Json::array();
  for (int l = 1; l <= s.cfg.k1_levels; ++l) {
    const bool w = k1_witness(phi_map(t, l));
    ok = ok && w;
    k1.push_back(Json{{"level", l}, {"pass", w}});
  }
  Json nat = Json::array();
  for (int l = 1; l <= s.cfg.naturality_levels; ++l) {
    const auto rep = naturality_check(t, l);
    ok = ok && rep.pass;
    nat.push_back(to_json(rep));
  }
  Json snfs = Json::array();
  for (int l = 1; l <= s.cfg.k1_levels; ++l) {
    const auto rep = snf_report(phi_map(t, l));
    ok = ok && rep.certified;
    snfs.push_back(to_json(rep));
  }
  const K0Report k0 = k0_stabilization(t, s.cfg.k0_from, s.cfg.k0_to);
  ok = ok && k0.connecting_well_defined && k0.routes_agree;
  s.write_json("ktheory", Json{{"k1_witness", k1},
                               {"naturality", nat},
                               {"snf_per_level", snfs},
                               {"k0", to_json(k0)}});
  std::cout << "k-data: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_freq(Session& s) {
  const FrequencyMeasure& m = s.meas();
  std::ostringstream csv;
  m.write_csv(csv);
  s.write_text("freq.csv", csv.str());
  const char* mode = m.mode() == FrequencyMeasure::Mode::exact ? "exact"
                     : m.mode() == FrequencyMeasure::Mode::certified_interval
                         ? "certified_interval"
                         : "empirical";
  Json j{{"mode", mode}, {"depth", m.depth()}};
  if (m.mode() == FrequencyMeasure::Mode::empirical) {
    j["scan_length"] = m.scan_length();
    j["consistency_defect"] = m.consistency_defect(std::min(5, m.depth() - 1));
  } else {
    j["consistency_defect"] = 0.0;
  }
  if (m.mode() == FrequencyMeasure::Mode::certified_interval) j["precision"] = m.precision();
  s.write_json("freq", j);
  std::cout << "frequencies in " << mode << " mode\n";
  return 0;
}

int cmd_trace(Session& s, const std::string& alpha, const std::string& nu,
              const std::string& beta) {
  const GeneratorSymbol g{alpha, nu, beta};
  Json j{{"alpha", alpha}, {"nu", nu}, {"beta", beta}};
  if (s.meas().is_exact() || s.meas().mode() == FrequencyMeasure::Mode::certified_interval) {
    const Rational v = trace_eval(g, s.meas());
    j["value"] = v.numerator().str() + "/" + v.denominator().str();
    j["approx"] = s.meas().value_approx(nu + alpha) * (alpha == beta ? 1.0 : 0.0);
  } else {
    j["approx"] = alpha == beta ? s.meas().value_approx(nu + alpha) : 0.0;
  }
  s.write_json("trace", j);
  std::cout << "trace artifact written\n";
  return 0;
}

int cmd_verify_all(Session& s) {
  const LanguageTable& t = s.tab();
  Json checks = Json::array();
  bool ok = true;
  const auto add = [&](const std::string& name, bool pass, Json detail = Json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    checks.push_back(detail);
    ok = ok && pass;
    std::cout << (pass ? "  ok   " : "  FAIL ") << name << "\n";
  };

  {  // language sanity: closure, extendability, monotone complexity
    bool sane = true;
    for (int n = 1; n < t.max_len() && sane; ++n) {
      sane = t.complexity(n) <= t.complexity(n + 1) &&
             t.complexity(n + 1) <= t.complexity(1) * t.complexity(n);
      for (const auto& [w, pos] : t.level(n + 1))
        if (!t.contains(w.substr(0, w.size() - 1)) || !t.contains(w.substr(1))) sane = false;
    }
    add("language-sanity", sane);
  }

  if (s.cfg.kind == RunConfig::Kind::morse) {
    // Finite-level certificate that the two-sided language matches the
    // one-sided product language.
    bool contained = true;
    const Word x = morse_prefix(MorseSpec(s.cfg.blocks, s.cfg.blocks_cycle),
                                std::min(s.cfg.window * 2, 1L << 18));
    for (int n = 1; n <= std::min(t.max_len(), 12) && contained; ++n)
      for (const auto& [w, pos] : t.level(n))
        if (x.find(w) == std::string::npos) {
          contained = false;
          break;
        }
    add("morse-two-sided-language", contained, Json{{"window_relative", true}});
  }

  {
    const auto rep = t.disagreeability(s.cfg.disagree_len, s.cfg.disagree_ceiling);
    add("disagreeability", rep.pass, Json{{"witness", rep.witness}});
  }
  {
    const auto reports = verify_axioms(t, s.cfg.axiom_levels);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    add("representation-axioms", pass);
  }
  {
    const auto rep = verify_tprime(t, s.cfg.tprime_len);
    add("tprime", rep.pass, Json{{"cases", rep.cases}});
  }
  {
    const auto rep = verify_conjugation(t, s.cfg.conjugation_len);
    add("conjugation", rep.pass, Json{{"cases", rep.cases}});
  }
  {
    const auto rep = verify_partition_axiom(t, s.cfg.partition_len);
    add("partition", rep.pass, Json{{"cases", rep.cases}});
  }
  {
    bool pass = true;
    for (const auto& [a, pos] : t.level(1))
      pass = pass && verify_generator_laws(t, a[0], s.cfg.partition_len).pass;
    add("generator-laws", pass);
  }
  {
    const BratteliDiagram d = build_bratteli(t, s.cfg.bratteli_levels);
    bool pass = true;
    for (int k = 1; k <= d.depth; ++k)
      pass = pass && d.level(k).size() == t.complexity(2 * k);
    for (int k = 1; k < d.depth; ++k) {
      const IntMatrix m = inclusion_matrix(t, d, k);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Int sum = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j);
        if (sum != 1) pass = false;
      }
    }
    if (d.depth >= 2) {
      const DimensionData dd = dimension_data(t, d);
      for (const auto& lv : dd.per_level) pass = pass && lv.snf_certified;
    }
    add("bratteli-structure", pass);
  }

  const FrequencyMeasure& m = s.meas();
  if (m.is_exact()) {
    bool pass = true;
    for (int n = 1; n < m.depth(); ++n) pass = pass && m.consistency_defect(n) == 0.0;
    // Support must agree with the scanned window language.
    for (int n = 1; n <= std::min(m.depth(), t.max_len()) && pass; ++n) {
      for (const auto& [w, pos] : t.level(n))
        if (m.value(w) == Rational(0)) pass = false;
    }
    add("measure-consistency", pass);

    const BratteliDiagram d = build_bratteli(t, s.cfg.bratteli_levels);
    bool compat = true;
    for (int k = 1; k < d.depth; ++k)
      for (const Word& u : d.level(k)) {
        Rational total(0);
        for (const auto& [a, ap] : t.level(1))
          for (const auto& [b, bp] : t.level(1)) total += m.value(a + u + b);
        if (total != m.value(u)) compat = false;
      }
    add("measure-bratteli-compatibility", compat);

    const auto rep = tracial_property_check(t, m, s.cfg.trace_len);
    add("tracial-property", rep.pass, Json{{"cases", rep.cases}});
    add("trace-normalization",
        trace_eval({"", "", ""}, m) == Rational(1) &&
            trace_eval({"0", "", "1"}, m) == Rational(0));
  } else {
    const double bound =
        2.0 * static_cast<double>(m.depth()) / static_cast<double>(m.scan_length());
    const double defect = m.consistency_defect(std::min(5, m.depth() - 1));
    add("measure-consistency", defect <= bound, Json{{"defect", defect}, {"bound", bound}});
  }
  {
    const auto rep = shift_invariance_check(t, m, s.cfg.shift_invariance_len);
    add("shift-invariance", rep.pass, Json{{"max_defect", rep.max_defect}});
  }
  {
    bool pass = true;
    for (int l = 1; l <= s.cfg.k1_levels; ++l) pass = pass && k1_witness(phi_map(t, l));
    add("k1-witness", pass);
  }
  {
    bool pass = true;
    for (int l = 1; l <= s.cfg.naturality_levels; ++l)
      pass = pass && naturality_check(t, l).pass;
    add("naturality", pass);
  }
  {
    bool pass = true;
    for (int l = 1; l <= s.cfg.k1_levels; ++l) pass = pass && snf_report(phi_map(t, l)).certified;
    add("snf-certificates", pass);
  }
  {
    const K0Report rep = k0_stabilization(t, s.cfg.k0_from, s.cfg.k0_to);
    add("k0-two-routes", rep.connecting_well_defined && rep.routes_agree,
        Json{{"stable", rep.stable}});
  }

  s.write_json("verify_all", Json{{"pass", ok}, {"checks", checks}});
  std::cout << (ok ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of minimal subshift labeled spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  long window_override = 0;
  int depth_override = 0;
  app.add_option("-c,--config", config_path, "key = value configuration file")->required();
  app.add_option("--out", out_override, "output directory override");
  app.add_option("--window", window_override, "window radius override");
  app.add_option("--depth", depth_override, "language depth override");

  auto* gen = app.add_subcommand("gen", "write the two-sided window");
  auto* lang = app.add_subcommand("lang", "factor table and complexity");
  auto* recurrence = app.add_subcommand("recurrence", "max gap of one word");
  std::string rec_word;
  recurrence->add_option("--word", rec_word, "factor to report")->required();
  auto* disagree = app.add_subcommand("disagree", "repeatable-path certificate");
  auto* axioms = app.add_subcommand("axioms", "representation axiom checks");
  auto* cofinal = app.add_subcommand("cofinal", "strong cofinality certificate");
  std::string cof_word;
  int cof_span = 0;
  cofinal->add_option("--word", cof_word, "generalized vertex word")->required();
  cofinal->add_option("--span", cof_span, "factor length to cover (default: gap bound)");
  auto* bratteli = app.add_subcommand("bratteli", "diagram of the gauge-fixed core");
  auto* phi = app.add_subcommand("phi", "one level of the (1-Phi) map");
  int phi_level = 1;
  phi->add_option("--level", phi_level, "basis level")->required();
  auto* k = app.add_subcommand("k", "kernel, cokernel and stabilization data");
  auto* freq = app.add_subcommand("freq", "invariant measure frequencies");
  auto* trace = app.add_subcommand("trace", "trace of one generator symbol");
  std::string tr_alpha, tr_nu, tr_beta;
  trace->add_option("--alpha", tr_alpha, "isometry label");
  trace->add_option("--nu", tr_nu, "past extension");
  trace->add_option("--beta", tr_beta, "co-isometry label");
  auto* verify = app.add_subcommand("verify-all", "run the whole invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Session s;
    s.cfg = RunConfig::load(config_path);
    if (const char* env = std::getenv("SUBSHIFT_OUT")) s.cfg.out_dir = env;
    if (!out_override.empty()) s.cfg.out_dir = out_override;
    if (window_override > 0) s.cfg.window = window_override;
    if (depth_override > 0) s.cfg.depth = depth_override;
    s.cfg.validate();

    if (gen->parsed()) return cmd_gen(s);
    if (lang->parsed()) return cmd_lang(s);
    if (recurrence->parsed()) return cmd_recurrence(s, rec_word);
    if (disagree->parsed()) return cmd_disagree(s);
    if (axioms->parsed()) return cmd_axioms(s);
    if (cofinal->parsed()) return cmd_cofinal(s, cof_word, cof_span);
    if (bratteli->parsed()) return cmd_bratteli(s);
    if (phi->parsed()) return cmd_phi(s, phi_level);
    if (k->parsed()) return cmd_k(s);
    if (freq->parsed()) return cmd_freq(s);
    if (trace->parsed()) return cmd_trace(s, tr_alpha, tr_nu, tr_beta);
    if (verify->parsed()) return cmd_verify_all(s);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUsage;
  }
}
