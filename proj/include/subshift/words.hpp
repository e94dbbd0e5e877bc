#pragma once

#include <cstddef>
#include <string>

#include "subshift/error.hpp"

namespace subshift {

// A word is a finite string of symbols; one char per symbol.
// The empty word is written "" and stands for epsilon.
using Symbol = char;
using Word = std::string;

class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  bool contains(Symbol a) const { return symbols_.find(a) != std::string::npos; }
  bool contains_word(const Word& w) const;
  std::size_t index_of(Symbol a) const;

 private:
  std::string symbols_;
};

const Alphabet& binary_alphabet();

// Bitwise complement of a binary word, same length.
Word mirror(const Word& b);

// Block product: |c| copies of b, the i-th mirrored when c[i] == '1'.
Word keane_product(const Word& b, const Word& c);

// Smallest p >= 1 with w[i] == w[i+p] for all valid i (|w| if w has no
// smaller period).
std::size_t minimal_period(const Word& w);

}  // namespace subshift
