#include "uaw/word.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace uaw;
using L = Letter;

TEST_CASE("letter order and names") {
  CHECK(L::A < L::B);
  CHECK(L::C < L::al);
  CHECK(L::al < L::be);
  CHECK(L::be < L::ga);
  CHECK(letter_name(L::al) == std::string("al"));
  CHECK(letter_from_name("ga") == L::ga);
  CHECK_FALSE(letter_from_name("x").has_value());
  CHECK_FALSE(letter_from_name("alpha").has_value());
}

TEST_CASE("word round trip") {
  Word w{L::C, L::B, L::A};
  CHECK(word_str(w) == "CBA");
  CHECK(word_parse("CBA") == w);
  CHECK(word_parse("ABga") == Word{L::A, L::B, L::ga});
  CHECK(word_parse("") == Word{});
  CHECK(word_str(word_parse("albega")) == "albega");
  CHECK_THROWS_AS(word_parse("AxB"), std::invalid_argument);
}

TEST_CASE("inversions and irreducibility") {
  CHECK(inversions(word_parse("CBA")) == 3);
  CHECK(inversions(word_parse("ABC")) == 0);
  CHECK(inversions(word_parse("gaA")) == 1);
  CHECK(inversions(Word{}) == 0);
  CHECK(is_irreducible(word_parse("AABbe")));
  CHECK_FALSE(is_irreducible(word_parse("ABA")));
  CHECK(is_irreducible(Word{}));
}

TEST_CASE("inversion sites") {
  Word w = word_parse("ABAC");  // pair (B,A) at index 1
  CHECK(first_inversion(w) == std::size_t{1});
  CHECK(last_inversion(w) == std::size_t{1});
  Word v = word_parse("BACB");  // (B,A) at 0, (C,B) at 2
  CHECK(first_inversion(v) == std::size_t{0});
  CHECK(last_inversion(v) == std::size_t{2});
  CHECK_FALSE(first_inversion(word_parse("ABC")).has_value());
  CHECK_FALSE(last_inversion(word_parse("ABC")).has_value());
}

TEST_CASE("reduction order") {
  // shorter always smaller
  CHECK(order_less(word_parse("C"), word_parse("AB")));
  // same length: anagrams compare by inversions
  CHECK(order_less(word_parse("AB"), word_parse("BA")));
  CHECK_FALSE(order_less(word_parse("BA"), word_parse("AB")));
  // same length, different multiset: incomparable
  CHECK_FALSE(order_less(word_parse("AB"), word_parse("AC")));
  CHECK_FALSE(order_less(word_parse("AC"), word_parse("AB")));
  // irreflexive
  CHECK_FALSE(order_less(word_parse("BA"), word_parse("BA")));
}
