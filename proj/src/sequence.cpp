#include "subshift/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace subshift {

MorseSpec::MorseSpec(std::vector<Word> blocks_in, bool cycle_in)
    : blocks(std::move(blocks_in)), cycle(cycle_in) {
  if (blocks.empty()) fail(Errc::invalid_argument, "morse spec needs at least one block");
  for (const Word& b : blocks) {
    if (b.size() < 2) fail(Errc::invalid_argument, "morse blocks need length >= 2");
    if (!binary_alphabet().contains_word(b))
      fail(Errc::unsupported_alphabet, "morse blocks live over {0,1}");
    if (b[0] != '0') fail(Errc::invalid_argument, "morse blocks must start with 0");
  }
}

Word morse_prefix(const MorseSpec& spec, long n) {
  if (n < 0) fail(Errc::invalid_argument, "prefix length must be >= 0");
  Word x = spec.blocks[0];
  std::size_t i = 1;
  while (static_cast<long>(x.size()) < n) {
    if (i >= spec.blocks.size() && !spec.cycle)
      fail(Errc::needs_more_blocks,
           "product of the supplied blocks covers only " + std::to_string(x.size()) +
               " symbols, need " + std::to_string(n));
    x = keane_product(x, spec.blocks[i % spec.blocks.size()]);
    ++i;
  }
  return x.substr(0, static_cast<std::size_t>(n));
}

SequenceSource SequenceSource::fixed_point(Substitution sigma, Symbol left, Symbol right,
                                           int power) {
  if (power < 1) fail(Errc::invalid_argument, "power must be >= 1");
  const Word r_img = sigma.iterate(right, power);
  if (r_img[0] != right)
    fail(Errc::invalid_seed, std::string("sigma^power(") + right + ") does not start with " +
                                 right);
  const Word l_img = sigma.iterate(left, power);
  if (l_img.back() != left)
    fail(Errc::invalid_seed,
         std::string("sigma^power(") + left + ") does not end with " + left);
  if (r_img.size() < 2 && l_img.size() < 2)
    fail(Errc::invalid_seed, "seed does not grow under sigma^power");
  SequenceSource s;
  s.kind_ = Kind::substitution_fixed_point;
  s.sigma_ = std::make_shared<Substitution>(std::move(sigma));
  s.left_seed_ = left;
  s.right_seed_ = right;
  s.power_ = power;
  return s;
}

SequenceSource SequenceSource::morse(MorseSpec spec) {
  SequenceSource s;
  s.kind_ = Kind::morse_product;
  s.morse_ = std::make_shared<MorseSpec>(std::move(spec));
  return s;
}

SequenceSource SequenceSource::periodic(Word pattern) {
  if (pattern.empty()) fail(Errc::invalid_argument, "periodic pattern must be nonempty");
  SequenceSource s;
  s.kind_ = Kind::explicit_periodic;
  s.pattern_ = std::move(pattern);
  return s;
}

const Word* SequenceSource::pattern() const {
  return kind_ == Kind::explicit_periodic ? &pattern_ : nullptr;
}

Window SequenceSource::window(long n) const {
  if (n < 1) fail(Errc::invalid_argument, "window radius must be >= 1");
  Window w;
  w.radius = n;
  switch (kind_) {
    case Kind::substitution_fixed_point: {
      // Iterating sigma^power on the seeds stabilizes prefixes on the
      // right and suffixes on the left.
      Word right(1, right_seed_);
      Word left(1, left_seed_);
      int guard = 0;
      while (static_cast<long>(right.size()) < n) {
        right = sigma_->iterate(right_seed_, ++guard * power_);
        if (guard > 64) fail(Errc::invalid_seed, "right seed does not grow");
      }
      guard = 0;
      while (static_cast<long>(left.size()) < n) {
        left = sigma_->iterate(left_seed_, ++guard * power_);
        if (guard > 64) fail(Errc::invalid_seed, "left seed does not grow");
      }
      w.symbols = left.substr(left.size() - static_cast<std::size_t>(n)) +
                  right.substr(0, static_cast<std::size_t>(n));
      return w;
    }
    case Kind::morse_product: {
      // omega = x^{-1}.x : omega_{-1-i} = x_i for i >= 0.
      const Word x = morse_prefix(*morse_, n);
      Word left(x.rbegin(), x.rend());
      w.symbols = left + x;
      return w;
    }
    case Kind::explicit_periodic: {
      const long m = static_cast<long>(pattern_.size());
      w.symbols.reserve(static_cast<std::size_t>(2 * n));
      for (long i = -n; i < n; ++i) {
        long r = ((i % m) + m) % m;
        w.symbols += pattern_[static_cast<std::size_t>(r)];
      }
      return w;
    }
  }
  fail(Errc::invalid_argument, "unreachable source kind");
}

std::string SequenceSource::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::substitution_fixed_point:
      os << "substitution fixed point, seed " << left_seed_ << "." << right_seed_ << ", power "
         << power_;
      break;
    case Kind::morse_product:
      os << "generalized Morse product of " << morse_->blocks.size() << " block(s)"
         << (morse_->cycle ? " (cycled)" : "");
      break;
    case Kind::explicit_periodic:
      os << "periodic repetition of " << pattern_;
      break;
  }
  return os.str();
}

}  // namespace subshift
