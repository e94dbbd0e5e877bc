#pragma once

#include <memory>
#include <vector>

#include "subshift/substitution.hpp"
#include "subshift/words.hpp"

namespace subshift {

// The symbols omega_{[-N, N)} of a two-sided sequence; index 0 is the
// first letter right of the dot.
struct Window {
  long radius = 0;      // N
  std::string symbols;  // 2N chars, omega_i at symbols[i + N]

  char at(long i) const { return symbols[static_cast<std::size_t>(i + radius)]; }
  std::string left() const { return symbols.substr(0, static_cast<std::size_t>(radius)); }
  std::string right() const { return symbols.substr(static_cast<std::size_t>(radius)); }
  std::string dotted() const { return left() + "." + right(); }
};

struct MorseSpec {
  std::vector<Word> blocks;  // b^0, b^1, ...
  bool cycle = false;        // reuse the listed blocks cyclically

  MorseSpec(std::vector<Word> blocks, bool cycle);
};

// Prefix x_{[0,n)} of the one-sided product b^0 x b^1 x b^2 x ...
Word morse_prefix(const MorseSpec& spec, long n);

class SequenceSource {
 public:
  enum class Kind { substitution_fixed_point, morse_product, explicit_periodic };

  // Two-sided fixed point of sigma^power seeded as left.right; requires
  // sigma^power(right) to start with right and sigma^power(left) to end
  // with left.
  static SequenceSource fixed_point(Substitution sigma, Symbol left, Symbol right, int power);
  static SequenceSource morse(MorseSpec spec);
  static SequenceSource periodic(Word pattern);

  Kind kind() const { return kind_; }
  Window window(long n) const;
  std::string describe() const;

  // Non-null only for the substitution kind.
  const Substitution* substitution() const { return sigma_.get(); }
  const Word* pattern() const;

 private:
  SequenceSource() = default;

  Kind kind_ = Kind::explicit_periodic;
  std::shared_ptr<const Substitution> sigma_;
  Symbol left_seed_ = 0, right_seed_ = 0;
  int power_ = 1;
  std::shared_ptr<const MorseSpec> morse_;
  Word pattern_;
};

}  // namespace subshift
