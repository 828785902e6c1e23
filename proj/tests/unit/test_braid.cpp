#include <doctest.h>

#include <random>

#include "qjones/braid.hpp"
#include "qjones/error.hpp"

using namespace qjones;

namespace {

BraidWord random_braid(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), coin(0, 1);
  std::vector<Crossing> word;
  for (int i = 0; i < length; ++i) word.push_back({gen(rng), coin(rng) ? 1 : -1});
  return BraidWord(strands, std::move(word));
}

}  // namespace

TEST_CASE("parse_braid") {
  const auto t = parse_braid("1 1 1");
  CHECK(t.strands() == 2);
  CHECK(t.word() == std::vector<Crossing>{{1, 1}, {1, 1}, {1, 1}});
  CHECK(t.writhe() == 3);

  const auto f = parse_braid("1 -2 1 -2");
  CHECK(f.strands() == 3);
  CHECK(f.writhe() == 0);
  CHECK(f.to_string() == "1 -2 1 -2");

  CHECK(parse_braid("", 2).length() == 0);
  CHECK(parse_braid("1", 4).strands() == 4);
}

TEST_CASE("parse_braid errors carry positions") {
  try {
    parse_braid("0 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  try {
    parse_braid("1 2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_braid("1 3", 3), ParseError);
  CHECK_THROWS_AS(parse_braid(""), ParseError);
}

TEST_CASE("closure_is_knot") {
  CHECK(closure_is_knot(parse_braid("1 1 1")));
  CHECK_FALSE(closure_is_knot(parse_braid("1 1")));
  CHECK(closure_is_knot(parse_braid("1 -2 1 -2")));
  CHECK_FALSE(closure_is_knot(parse_braid("1", 3)));
  CHECK(closure_is_knot(parse_braid("", 1)));
  CHECK_THROWS_AS(require_knot(parse_braid("1 1")), NotAKnotError);
}

TEST_CASE("markov moves") {
  const auto t = parse_braid("1 1 1");
  CHECK(markov_move(t, StabilizePositive{}) == parse_braid("1 1 1 2", 3));
  CHECK(markov_move(t, Conjugate{1}) == t);
  CHECK(markov_move(parse_braid("1"), StabilizeNegative{}) == parse_braid("1 -2", 3));
  CHECK(markov_move(parse_braid("1 -2 1 -2"), Conjugate{-1}) == parse_braid("-1 1 -2 1 -2 1", 3).freely_reduced());
  CHECK_THROWS_AS(markov_move(t, Conjugate{2}), DomainError);
  CHECK_THROWS_AS(markov_move(t, Conjugate{0}), DomainError);
}

TEST_CASE("property: knot test and writhe under Markov moves and reversal") {
  std::mt19937 rng(3);
  int knots = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 4;
    const auto b = random_braid(rng, m, 1 + trial % 9);
    const bool knot = closure_is_knot(b);
    knots += knot;
    CHECK(closure_is_knot(b.reversed()) == knot);
    const auto sp = markov_move(b, StabilizePositive{});
    const auto sn = markov_move(b, StabilizeNegative{});
    CHECK(closure_is_knot(sp) == knot);
    CHECK(closure_is_knot(sn) == knot);
    CHECK(sp.writhe() == b.writhe() + 1);
    CHECK(sn.writhe() == b.writhe() - 1);
    for (int g = 1; g < m; ++g)
      for (int s : {g, -g}) {
        const auto c = markov_move(b, Conjugate{s});
        CHECK(closure_is_knot(c) == knot);
        CHECK(c.writhe() == b.writhe());
      }
    if (knot) CHECK((b.writhe() - m + 1) % 2 == 0);
  }
  CHECK(knots > 20);
}

TEST_CASE("freely_reduced") {
  CHECK(parse_braid("1 2 -2 -1 1", 3).freely_reduced() == parse_braid("1", 3));
  CHECK(parse_braid("1 -1", 2).freely_reduced().length() == 0);
}

TEST_CASE("corpus round trip") {
  const auto& corpus = bundled_corpus();
  REQUIRE(corpus.size() >= 6);
  for (const auto& e : corpus) CHECK(closure_is_knot(e.braid()));
  const auto again = parse_corpus(corpus_to_json(corpus));
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].name == corpus[i].name);
    CHECK(again[i].braid() == corpus[i].braid());
    CHECK(again[i].alexander == corpus[i].alexander);
    CHECK(again[i].volume == corpus[i].volume);
  }
  CHECK_THROWS_AS(parse_corpus(R"([{"name": "hopf", "strands": 2, "word": "1 1"}])"), NotAKnotError);
  CHECK_THROWS_AS(parse_corpus("{"), ParseError);
}
