#pragma once

#include <map>
#include <optional>

#include "subshift/words.hpp"

namespace subshift {

// A total map symbol -> nonempty word over the same alphabet.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::map<Symbol, Word> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(Symbol a) const;
  Word apply(const Word& w) const;

  // sigma^k(a); sigma^0(a) = a.
  Word iterate(Symbol a, int k) const;

  // Smallest k <= kmax such that every symbol occurs in sigma^k(a) for
  // every a, or nullopt.
  std::optional<int> primitivity_witness(int kmax) const;

 private:
  Alphabet alphabet_;
  std::map<Symbol, Word> rules_;
};

Substitution thue_morse_substitution();

}  // namespace subshift
