#include "subshift/language.hpp"

#include <algorithm>
#include <ostream>

namespace subshift {

LanguageTable LanguageTable::build(const Window& window, int max_len) {
  if (max_len < 1) fail(Errc::invalid_argument, "max_len must be >= 1");
  const long n = window.radius;
  const long lo = -n + max_len, hi = n - max_len;
  if (hi - lo < max_len)
    fail(Errc::insufficient_window,
         "window of " + std::to_string(2 * n) + " symbols cannot host depth " +
             std::to_string(max_len) + " after trimming");
  LanguageTable t;
  t.max_len_ = max_len;
  t.lo_ = lo;
  t.hi_ = hi;
  t.levels_.resize(static_cast<std::size_t>(max_len));
  for (int len = 1; len <= max_len; ++len) {
    auto& level = t.levels_[static_cast<std::size_t>(len - 1)];
    for (long p = lo; p + len <= hi; ++p) {
      Word w = window.symbols.substr(static_cast<std::size_t>(p + n),
                                     static_cast<std::size_t>(len));
      level[std::move(w)].push_back(p);
    }
  }
  return t;
}

bool LanguageTable::contains(const Word& w) const {
  if (w.empty()) return true;
  if (static_cast<int>(w.size()) > max_len_)
    fail(Errc::depth_exceeded, "word longer than the table depth: " + w);
  const auto& level = levels_[w.size() - 1];
  return level.find(w) != level.end();
}

const std::map<Word, std::vector<long>>& LanguageTable::level(int n) const {
  if (n < 1 || n > max_len_)
    fail(Errc::depth_exceeded, "no level " + std::to_string(n) + " in the table");
  return levels_[static_cast<std::size_t>(n - 1)];
}

std::vector<Word> LanguageTable::words(int n) const {
  std::vector<Word> out;
  out.reserve(level(n).size());
  for (const auto& [w, pos] : level(n)) out.push_back(w);
  return out;
}

RecurrenceReport LanguageTable::max_gap(const Word& w) const {
  if (!contains(w) || w.empty()) fail(Errc::unknown_word, "not a factor: " + w);
  const auto& pos = level(static_cast<int>(w.size())).at(w);
  if (pos.size() < 2)
    fail(Errc::insufficient_occurrences, "need two occurrences of " + w);
  RecurrenceReport r;
  r.word = w;
  r.occurrence_count = pos.size();
  for (std::size_t i = 1; i < pos.size(); ++i)
    r.max_gap = std::max(r.max_gap, pos[i] - pos[i - 1]);
  return r;
}

MaxPowerResult LanguageTable::max_power(const Word& w) const {
  if (w.empty() || !contains(w)) fail(Errc::unknown_word, "not a factor: " + w);
  const int cap = max_len_ / static_cast<int>(w.size());
  MaxPowerResult r;
  Word rep;
  for (int k = 1; k <= cap; ++k) {
    rep += w;
    if (!contains(rep)) return r;
    r.power = k;
  }
  r.capped = true;  // w^cap still present; deeper powers invisible at this depth
  return r;
}

DisagreeabilityReport LanguageTable::disagreeability(int len_bound, int power_ceiling) const {
  if (len_bound < 1 || power_ceiling < 2)
    fail(Errc::invalid_argument, "need len_bound >= 1 and power_ceiling >= 2");
  if (len_bound * power_ceiling > max_len_)
    fail(Errc::insufficient_language,
         "table depth " + std::to_string(max_len_) + " cannot certify powers " +
             std::to_string(power_ceiling) + " of words up to length " +
             std::to_string(len_bound));
  DisagreeabilityReport rep;
  rep.len_bound = len_bound;
  rep.power_ceiling = power_ceiling;
  rep.pass = true;
  for (int len = 1; len <= len_bound; ++len) {
    for (const auto& [w, pos] : level(len)) {
      MaxPowerResult p = max_power(w);
      rep.per_word[w] = p;
      if (p.power >= power_ceiling && (rep.pass || w < rep.witness)) {
        rep.pass = false;
        rep.witness = w;
      }
    }
  }
  return rep;
}

LanguageTable LanguageTable::with_word_removed(const Word& w) const {
  if (w.empty() || static_cast<int>(w.size()) > max_len_)
    fail(Errc::invalid_argument, "cannot remove: " + w);
  LanguageTable t(*this);
  t.levels_[w.size() - 1].erase(w);
  return t;
}

void LanguageTable::write_csv(std::ostream& os) const {
  os << "word,length,count,first,last,max_gap\n";
  for (int n = 1; n <= max_len_; ++n) {
    for (const auto& [w, pos] : level(n)) {
      long gap = 0;
      for (std::size_t i = 1; i < pos.size(); ++i)
        gap = std::max(gap, pos[i] - pos[i - 1]);
      os << w << ',' << n << ',' << pos.size() << ',' << pos.front() << ',' << pos.back()
         << ',' << gap << '\n';
    }
  }
}

}  // namespace subshift
