#include "uaw/rewrite.hpp"

#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace uaw;
using namespace uaw::testing;
using L = Letter;

namespace {

std::map<Word, RatFuncQ> scaled(const std::map<Word, RatFuncQ>& m, const RatFuncQ& c) {
  std::map<Word, RatFuncQ> out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : m) out[w] = v * c;
  return out;
}

std::map<Word, RatFuncQ> added(std::map<Word, RatFuncQ> a, const std::map<Word, RatFuncQ>& b) {
  for (const auto& [w, v] : b) {
    auto [it, fresh] = a.try_emplace(w, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 5);
  Word w(static_cast<size_t>(len(rng)));
  for (Letter& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("rule table shape") {
  const RuleSet& rs = RuleSet::standard();
  CHECK(rs.rules().size() == 15);
  for (const ReductionRule& r : rs.rules()) {
    CHECK(r.x > r.y);
    Word lhs{r.x, r.y};
    for (const auto& [w, c] : r.rhs) {
      CHECK_FALSE(c.is_zero());
      CHECK(order_less(w, lhs));
    }
  }
  CHECK(rs.find(L::B, L::A) != nullptr);
  CHECK(rs.find(L::A, L::B) == nullptr);
  CHECK(rs.find(L::A, L::A) == nullptr);
}

TEST_CASE("single rule application") {
  // BA -> q^2 AB + q(q^2-q^-2) C - q(q-q^-1) ga
  auto nf = reduce_word(word_parse("BA"));
  REQUIRE(nf.size() == 3);
  CHECK(nf[word_parse("AB")] == rq(2));
  CHECK(nf[word_parse("C")] == RatFuncQ(qdiff(3, -1)));
  CHECK(nf[word_parse("ga")] == -RatFuncQ(qdiff(2, 0)));
}

TEST_CASE("irreducible input is returned unchanged") {
  for (const char* s : {"", "A", "ABC", "AABCalbega", "Cgaga"}) {
    Word w = word_parse(s);
    auto nf = reduce_word(w);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == w);
    CHECK(nf.begin()->second.is_one());
  }
}

TEST_CASE("CBA normal form is the overlap identity") {
  // q^-1 CBA = q ABC + (q^2-q^-2)(A^2 - B^2 + C^2) - (q-q^-1)(A al - B be + C ga)
  const RatFuncQ t = rq(2) - rq(-2);
  const RatFuncQ w = rq(1) - rq(-1);
  for (Strategy st : {Strategy::leftmost, Strategy::rightmost}) {
    auto nf = reduce_word(word_parse("CBA"), st);
    REQUIRE(nf.size() == 7);
    CHECK(nf[word_parse("ABC")] == rq(2));
    CHECK(nf[word_parse("AA")] == rq(1) * t);
    CHECK(nf[word_parse("BB")] == -(rq(1) * t));
    CHECK(nf[word_parse("CC")] == rq(1) * t);
    CHECK(nf[word_parse("Aal")] == -(rq(1) * w));
    CHECK(nf[word_parse("Bbe")] == rq(1) * w);
    CHECK(nf[word_parse("Cga")] == -(rq(1) * w));
  }
}

TEST_CASE("normal forms contain only irreducible words") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 100; ++iter) {
    Word w = random_word(rng, 7);
    for (const auto& [v, c] : reduce_word(w)) {
      CHECK(is_irreducible(v));
      CHECK_FALSE(c.is_zero());
    }
  }
}

TEST_CASE("reduction is linear") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Word w1 = random_word(rng, 6);
    Word w2 = random_word(rng, 6);
    RatFuncQ c1 = random_ratfunc(rng);
    RatFuncQ c2 = random_ratfunc(rng);
    RawElement e;
    e.add(w1, c1);
    e.add(w2, c2);
    auto combined = reduce(e);
    auto separate = added(scaled(reduce_word(w1), c1), scaled(reduce_word(w2), c2));
    CHECK(combined == separate);
  }
}

TEST_CASE("leftmost and rightmost strategies agree") {
  std::mt19937_64 rng(20260816);
  for (int iter = 0; iter < 1000; ++iter) {
    Word w = random_word(rng, 8);
    CHECK(reduce_word(w, Strategy::leftmost) == reduce_word(w, Strategy::rightmost));
  }
}

TEST_CASE("ambiguity check") {
  AmbiguityReport rep = check_ambiguities();
  CHECK(rep.overlaps.size() == 20);
  CHECK(rep.inclusion_free);
  CHECK(rep.rederived_ok);
  CHECK(rep.all_resolved());
  int nontrivial = 0;
  for (const OverlapResult& o : rep.overlaps) {
    CHECK(o.resolved);
    if (o.nontrivial) {
      ++nontrivial;
      CHECK(word_str(o.overlap) == "CBA");
    }
  }
  // the only overlap built from two defining relations is CBA
  CHECK(nontrivial == 1);
}
