#include "subshift/substitution.hpp"

#include <set>

namespace subshift {

Substitution::Substitution(Alphabet alphabet, std::map<Symbol, Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (char a : alphabet_.symbols()) {
    auto it = rules_.find(a);
    if (it == rules_.end())
      fail(Errc::invalid_argument, std::string("substitution misses a rule for ") + a);
    if (it->second.empty())
      fail(Errc::invalid_argument, std::string("substitution image of ") + a + " is empty");
    if (!alphabet_.contains_word(it->second))
      fail(Errc::unsupported_alphabet,
           std::string("substitution image of ") + a + " leaves the alphabet");
  }
  if (rules_.size() != alphabet_.size())
    fail(Errc::invalid_argument, "substitution has rules for unknown symbols");
}

const Word& Substitution::image(Symbol a) const {
  auto it = rules_.find(a);
  if (it == rules_.end())
    fail(Errc::unsupported_alphabet, std::string("symbol not in alphabet: ") + a);
  return it->second;
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (char a : w) out += image(a);
  return out;
}

Word Substitution::iterate(Symbol a, int k) const {
  if (k < 0) fail(Errc::invalid_argument, "iterate needs k >= 0");
  Word w(1, a);
  if (!alphabet_.contains(a))
    fail(Errc::unsupported_alphabet, std::string("symbol not in alphabet: ") + a);
  for (int i = 0; i < k; ++i) w = apply(w);
  return w;
}

std::optional<int> Substitution::primitivity_witness(int kmax) const {
  if (kmax < 1) fail(Errc::invalid_argument, "primitivity_witness needs kmax >= 1");
  // occurs[a] = set of symbols occurring in sigma^k(a).
  std::map<Symbol, std::set<Symbol>> occurs;
  for (char a : alphabet_.symbols()) occurs[a] = {a};
  for (int k = 1; k <= kmax; ++k) {
    std::map<Symbol, std::set<Symbol>> next;
    for (char a : alphabet_.symbols()) {
      std::set<Symbol> acc;
      for (char b : image(a)) {
        const auto& prev = occurs[b];
        acc.insert(prev.begin(), prev.end());
      }
      next[a] = std::move(acc);
    }
    occurs = std::move(next);
    bool full = true;
    for (char a : alphabet_.symbols())
      if (occurs[a].size() != alphabet_.size()) full = false;
    if (full) return k;
  }
  return std::nullopt;
}

Substitution thue_morse_substitution() {
  return Substitution(binary_alphabet(), {{'0', "01"}, {'1', "10"}});
}

}  // namespace subshift
