#include <doctest.h>

#include "oracles.hpp"
#include "subshift/sequence.hpp"

using namespace subshift;

TEST_CASE("mirror flips every bit") {
  CHECK(mirror("01") == "10");
  CHECK(mirror("") == "");
  CHECK(mirror("0110") == "1001");
  CHECK_THROWS_AS(mirror("0a1"), Error);
}

TEST_CASE("keane product lays out plain and mirrored copies") {
  CHECK(keane_product("01", "011") == "011010");
  CHECK(keane_product("0110", "0") == "0110");
  CHECK_THROWS_AS(keane_product("", "01"), Error);
  CHECK_THROWS_AS(keane_product("01", ""), Error);
}

TEST_CASE("keane product is associative up to length 4") {
  std::vector<Word> words;
  for (int len = 1; len <= 4; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i) w += ((bits >> i) & 1) ? '1' : '0';
      words.push_back(w);
    }
  for (const Word& b : words)
    for (const Word& c : words)
      for (const Word& d : words)
        CHECK(keane_product(keane_product(b, c), d) ==
              keane_product(b, keane_product(c, d)));
}

TEST_CASE("morse window reproduces the mirrored two-sided layout") {
  const SequenceSource tm = SequenceSource::morse(MorseSpec({"01"}, true));
  const Window w8 = tm.window(8);
  CHECK(w8.left() == "10010110");
  CHECK(w8.right() == "01101001");
  CHECK(tm.window(12).right() == "011010011001");
  CHECK(tm.window(4).right() == "0110");

  // Right half is the product prefix, left half its reversal.
  const Word x = oracle::fold_keane({"01", "01", "01", "01", "01", "01", "01", "01", "01", "01"});
  REQUIRE(x.size() >= 1024);
  const Window big = tm.window(1024);
  CHECK(big.right() == x.substr(0, 1024));
  const Word prefix = x.substr(0, 1024);
  CHECK(big.left() == Word(prefix.rbegin(), prefix.rend()));
}

TEST_CASE("morse window without enough blocks fails") {
  const SequenceSource s = SequenceSource::morse(MorseSpec({"01", "011"}, false));
  CHECK(s.window(6).right() == "011010");
  try {
    s.window(8);
    FAIL("expected needs_more_blocks");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::needs_more_blocks);
  }
}

TEST_CASE("morse spec validates its blocks") {
  CHECK_THROWS_AS(MorseSpec({"0"}, true), Error);
  CHECK_THROWS_AS(MorseSpec({"10"}, true), Error);
  CHECK_THROWS_AS(MorseSpec({"02"}, true), Error);
  CHECK_THROWS_AS(MorseSpec({}, true), Error);
}

TEST_CASE("substitution iterates by letterwise concatenation") {
  const Substitution tm = thue_morse_substitution();
  CHECK(tm.iterate('0', 2) == "0110");
  CHECK(tm.iterate('0', 0) == "0");
  CHECK(tm.iterate('0', 3) == "01101001");
  // Oracle: repeated application to the whole word.
  Word w = "0";
  for (int i = 0; i < 5; ++i) w = tm.apply(w);
  CHECK(tm.iterate('0', 5) == w);
}

TEST_CASE("primitivity witness") {
  CHECK(thue_morse_substitution().primitivity_witness(8) == 1);
  const Substitution split(binary_alphabet(), {{'0', "00"}, {'1', "11"}});
  CHECK(!split.primitivity_witness(16).has_value());
  const Substitution fib(binary_alphabet(), {{'0', "01"}, {'1', "0"}});
  CHECK(fib.primitivity_witness(8) == 2);
}

TEST_CASE("substitution rules are validated") {
  CHECK_THROWS_AS(Substitution(binary_alphabet(), {{'0', "01"}}), Error);
  CHECK_THROWS_AS(Substitution(binary_alphabet(), {{'0', "01"}, {'1', ""}}), Error);
  CHECK_THROWS_AS(Substitution(binary_alphabet(), {{'0', "01"}, {'1', "2"}}), Error);
}

TEST_CASE("fixed point window grows from a verified seed") {
  const SequenceSource tm =
      SequenceSource::fixed_point(thue_morse_substitution(), '1', '0', 2);
  CHECK(tm.window(8).right() == "01101001");
  const SequenceSource swapped =
      SequenceSource::fixed_point(thue_morse_substitution(), '0', '1', 2);
  CHECK(swapped.window(4).right() == "1001");
  try {
    SequenceSource::fixed_point(thue_morse_substitution(), '0', '1', 1);
    FAIL("expected invalid_seed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_seed);
  }
}

TEST_CASE("applying the substitution to a window reproduces a superwindow") {
  const Substitution sigma = thue_morse_substitution();
  const SequenceSource tm = SequenceSource::fixed_point(sigma, '1', '0', 2);
  const Window w = tm.window(64);
  Word right_img, left_img;
  for (char c : w.right()) right_img += sigma.iterate(c, 2);
  for (char c : w.left()) left_img += sigma.iterate(c, 2);
  const Window big = tm.window(4 * 64);
  CHECK(big.right().substr(0, right_img.size()) == right_img);
  CHECK(big.left().substr(big.left().size() - left_img.size()) == left_img);
}

TEST_CASE("periodic window wraps the pattern around index zero") {
  // omega_i = pattern[i mod |pattern|], so index 0 carries pattern[0]
  // and index -1 carries the last pattern letter.
  const SequenceSource p = SequenceSource::periodic("01");
  CHECK(p.window(3).dotted() == "101.010");
  CHECK(p.window(3).at(0) == '0');
  CHECK(p.window(3).at(-1) == '1');
  CHECK(p.window(3).at(-2) == '0');
  const SequenceSource q = SequenceSource::periodic("0110");
  CHECK(minimal_period(q.window(16).symbols) == 4);
  CHECK(minimal_period(p.window(8).symbols) == 2);
  CHECK(SequenceSource::periodic("0").window(2).symbols == "0000");
  CHECK_THROWS_AS(SequenceSource::periodic(""), Error);
}

TEST_CASE("windows restrict consistently across radii") {
  const std::vector<SequenceSource> sources = {
      SequenceSource::fixed_point(thue_morse_substitution(), '1', '0', 2),
      SequenceSource::morse(MorseSpec({"01"}, true)),
      SequenceSource::morse(MorseSpec({"001", "01"}, true)),
      SequenceSource::periodic("011"),
  };
  for (const auto& s : sources) {
    const Window big = s.window(300);
    for (long n : {1L, 4L, 16L, 100L}) {
      const Window small = s.window(n);
      CHECK(small.symbols ==
            big.symbols.substr(static_cast<std::size_t>(big.radius - n),
                               static_cast<std::size_t>(2 * n)));
    }
  }
}
