#include "subshift/words.hpp"

#include <set>
#include <vector>

namespace subshift {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2)
    fail(Errc::unsupported_alphabet, "alphabet needs at least two symbols");
  std::set<char> seen(symbols_.begin(), symbols_.end());
  if (seen.size() != symbols_.size())
    fail(Errc::unsupported_alphabet, "alphabet has duplicate symbols");
}

bool Alphabet::contains_word(const Word& w) const {
  for (char c : w)
    if (!contains(c)) return false;
  return true;
}

std::size_t Alphabet::index_of(Symbol a) const {
  auto pos = symbols_.find(a);
  if (pos == std::string::npos)
    fail(Errc::unsupported_alphabet, std::string("symbol not in alphabet: ") + a);
  return pos;
}

const Alphabet& binary_alphabet() {
  static const Alphabet binary("01");
  return binary;
}

Word mirror(const Word& b) {
  Word out(b);
  for (char& c : out) {
    if (c == '0')
      c = '1';
    else if (c == '1')
      c = '0';
    else
      fail(Errc::unsupported_alphabet, "mirror is defined on {0,1} only");
  }
  return out;
}

Word keane_product(const Word& b, const Word& c) {
  if (b.empty() || c.empty())
    fail(Errc::invalid_argument, "keane_product needs nonempty factors");
  if (!binary_alphabet().contains_word(b) || !binary_alphabet().contains_word(c))
    fail(Errc::unsupported_alphabet, "keane_product is defined on {0,1} only");
  const Word mirrored = mirror(b);
  Word out;
  out.reserve(b.size() * c.size());
  for (char ci : c) out += (ci == '0') ? b : mirrored;
  return out;
}

std::size_t minimal_period(const Word& w) {
  if (w.empty()) return 0;
  // KMP failure function; |w| - border(|w|) is the minimal period.
  std::vector<std::size_t> border(w.size() + 1, 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = border[i];
    while (k > 0 && w[i] != w[k]) k = border[k];
    border[i + 1] = (w[i] == w[k]) ? k + 1 : 0;
  }
  return w.size() - border[w.size()];
}

}  // namespace subshift
