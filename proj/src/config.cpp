#include "subshift/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace subshift {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(Errc::bad_config, "bad integer for " + key + ": " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(Errc::bad_config, "bad boolean for " + key + ": " + value);
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_config, "cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(Errc::bad_config, "expected key = value: " + line);
    c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "kind") {
    if (value == "substitution")
      kind = Kind::substitution;
    else if (value == "morse")
      kind = Kind::morse;
    else if (value == "periodic")
      kind = Kind::periodic;
    else
      fail(Errc::bad_config, "unknown kind: " + value);
  } else if (key.rfind("rule.", 0) == 0 && key.size() == 6) {
    rules[key[5]] = value;
  } else if (key == "seed.left") {
    if (value.size() != 1) fail(Errc::bad_config, "seed.left must be one symbol");
    seed_left = value[0];
  } else if (key == "seed.right") {
    if (value.size() != 1) fail(Errc::bad_config, "seed.right must be one symbol");
    seed_right = value[0];
  } else if (key == "power") {
    power = static_cast<int>(parse_long(key, value));
  } else if (key == "blocks") {
    blocks.clear();
    std::istringstream items(value);
    std::string item;
    while (std::getline(items, item, ',')) {
      item = trim(item);
      if (!item.empty()) blocks.push_back(item);
    }
  } else if (key == "blocks.cycle") {
    blocks_cycle = parse_bool(key, value);
  } else if (key == "pattern") {
    pattern = value;
  } else if (key == "window") {
    window = parse_long(key, value);
  } else if (key == "depth") {
    depth = static_cast<int>(parse_long(key, value));
  } else if (key == "measure.depth") {
    measure_depth = static_cast<int>(parse_long(key, value));
  } else if (key == "empirical.window") {
    empirical_window = parse_long(key, value);
  } else if (key == "axioms.levels") {
    axiom_levels = static_cast<int>(parse_long(key, value));
  } else if (key == "tprime.len") {
    tprime_len = static_cast<int>(parse_long(key, value));
  } else if (key == "conjugation.len") {
    conjugation_len = static_cast<int>(parse_long(key, value));
  } else if (key == "partition.len") {
    partition_len = static_cast<int>(parse_long(key, value));
  } else if (key == "bratteli.levels") {
    bratteli_levels = static_cast<int>(parse_long(key, value));
  } else if (key == "k1.levels") {
    k1_levels = static_cast<int>(parse_long(key, value));
  } else if (key == "naturality.levels") {
    naturality_levels = static_cast<int>(parse_long(key, value));
  } else if (key == "k0.from") {
    k0_from = static_cast<int>(parse_long(key, value));
  } else if (key == "k0.to") {
    k0_to = static_cast<int>(parse_long(key, value));
  } else if (key == "disagree.len") {
    disagree_len = static_cast<int>(parse_long(key, value));
  } else if (key == "disagree.ceiling") {
    disagree_ceiling = static_cast<int>(parse_long(key, value));
  } else if (key == "trace.len") {
    trace_len = static_cast<int>(parse_long(key, value));
  } else if (key == "shift_invariance.len") {
    shift_invariance_len = static_cast<int>(parse_long(key, value));
  } else if (key == "out") {
    out_dir = value;
  } else {
    fail(Errc::bad_config, "unknown config key: " + key);
  }
}

void RunConfig::validate() const {
  const auto need = [&](int depth_needed, const std::string& what) {
    if (depth_needed > depth)
      fail(Errc::bad_config, "depth " + std::to_string(depth) + " too shallow for " + what +
                                 " (needs " + std::to_string(depth_needed) + ")");
  };
  if (window < 4 * depth)
    fail(Errc::bad_config, "window must be at least four times the depth");
  need(axiom_levels + 2, "axioms");
  need(2 * tprime_len, "tprime");
  need(conjugation_len + 2, "conjugation");
  need(partition_len + 2, "partition");
  need(2 * bratteli_levels + 2, "bratteli");
  need(k1_levels + 1, "k1");
  need(naturality_levels + 2, "naturality");
  need(k0_to + 1, "k0");
  need(disagree_len * disagree_ceiling, "disagreeability");
  need(shift_invariance_len + 1, "shift invariance");
  if (trace_len * 3 > measure_depth)
    fail(Errc::bad_config, "measure.depth too shallow for the trace length bound");
  if (kind == Kind::substitution && rules.empty())
    fail(Errc::bad_config, "substitution kind needs rule.<symbol> entries");
  if (kind == Kind::morse && blocks.empty())
    fail(Errc::bad_config, "morse kind needs blocks");
  if (kind == Kind::periodic && pattern.empty())
    fail(Errc::bad_config, "periodic kind needs a pattern");
}

SequenceSource RunConfig::make_source() const {
  switch (kind) {
    case Kind::substitution: {
      std::string letters;
      for (const auto& [a, img] : rules) letters += a;
      Substitution sigma{Alphabet(letters), rules};
      return SequenceSource::fixed_point(std::move(sigma), seed_left, seed_right, power);
    }
    case Kind::morse:
      return SequenceSource::morse(MorseSpec(blocks, blocks_cycle));
    case Kind::periodic:
      return SequenceSource::periodic(pattern);
  }
  fail(Errc::bad_config, "unreachable kind");
}

}  // namespace subshift
