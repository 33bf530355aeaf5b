#include "fricke/word.hpp"

#include <vector>

#include "doctest.h"

using namespace fricke;

TEST_CASE("parse handles exponents, inverse case, and whitespace") {
  const Word w = parse_word("a^2 b^-3 A");
  const std::vector<Syllable> expect{{Gen::A, 2}, {Gen::B, -3}, {Gen::A, -1}};
  CHECK(w.syllables() == expect);
  CHECK(parse_word("aa") == parse_word("a^2"));
  CHECK(parse_word("B") == parse_word("b^-1"));
  CHECK_THROWS_AS(parse_word("ab^0a"), WordParseError);  // zero exponent
}

TEST_CASE("adjacent inverse syllables cancel during construction") {
  CHECK(parse_word("aA").empty());
  CHECK(parse_word("ab^3 b^-3 A").empty());
  CHECK(parse_word("a^2 A") == parse_word("a"));
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(parse_word("ac"), WordParseError);
  CHECK_THROWS_AS(parse_word("a^"), WordParseError);
  CHECK_THROWS_AS(parse_word("a^x"), WordParseError);
  CHECK_THROWS_AS(parse_word("^2"), WordParseError);
  CHECK_THROWS_AS(parse_word("a^99999999999999999"), WordParseError);
}

TEST_CASE("render is the parse inverse and uses caret notation") {
  CHECK(render_word(parse_word("a^2b^3")) == "a^2b^3");
  CHECK(render_word(parse_word("abAB")) == "abAB");
  CHECK(render_word(parse_word("b^-4")) == "B^4");
  CHECK(render_word(Word{}) == "");
  const Word w = parse_word("a^3 B a b^2 A^2");
  CHECK(parse_word(render_word(w)) == w);
}

TEST_CASE("word helpers") {
  const Word w = parse_word("a^2b^-1a");
  CHECK(w.total_weight() == 4);
  CHECK(flip_inverses(w) == parse_word("A^2bA"));
  CHECK(inverse_word(w) == parse_word("Aba^-2"));
  CHECK(concat(parse_word("ab"), parse_word("Ba")) == parse_word("a^2"));
  CHECK(inverse_word(concat(w, inverse_word(w))).empty());
}

TEST_CASE("cyclic reduction merges the matching ends") {
  // matching ends fold into the front syllable, so b.a^2.b^2 -> b^3.a^2
  CHECK(cyclically_reduced(parse_word("b a^2 b^2")) == parse_word("b^3 a^2"));
  CHECK(cyclically_reduced(parse_word("A b a")) == parse_word("b"));
  CHECK(cyclically_reduced(parse_word("abAB")) == parse_word("abAB"));
}

TEST_CASE("cyclic rotations enumerate whole syllable shifts") {
  const auto rots = cyclic_rotations(parse_word("a^2b^3"));
  REQUIRE(rots.size() == 2);
  CHECK(rots[0] == parse_word("a^2b^3"));
  CHECK(rots[1] == parse_word("b^3a^2"));
}
