#include <doctest.h>

#include "desk_graphs.hpp"
#include "kshift/errors.hpp"
#include "kshift/markov.hpp"

using namespace kshift;

TEST_CASE("the alphabet lists degree-(1,..,1) morphisms in order") {
  Alphabet sig = make_alphabet(desk::flip2());
  REQUIRE(sig.size() == 4);
  CHECK(sig.name(0) == "a\xC2\xB7x");
  CHECK(sig.name(1) == "a\xC2\xB7y");
  CHECK(sig.name(2) == "b\xC2\xB7x");
  CHECK(sig.name(3) == "b\xC2\xB7y");
  CHECK(sig.index_of_name("b\xC2\xB7x") == 2);
  CHECK(sig.index_of(sig.letter(3)) == 3);
  CHECK_THROWS_AS(sig.index_of_name("zz"), Error);
  CHECK_THROWS_AS(sig.name(4), Error);

  // Rank 1: letters are single edges.
  Alphabet k1 = make_alphabet(desk::k1());
  CHECK(k1.size() == 2);
  CHECK(k1.name(0) == "a");
}

TEST_CASE("transition matrix is the source-range incidence") {
  MarkovModel flip = make_markov_model(desk::flip2());
  for (Letter i = 0; i < 4; ++i)
    for (Letter j = 0; j < 4; ++j) CHECK(flip.matrix.at(i, j));

  MarkovModel cyc = make_markov_model(desk::cycle1());
  REQUIRE(cyc.alphabet.size() == 2);
  CHECK_FALSE(cyc.matrix.at(0, 0));
  CHECK(cyc.matrix.at(0, 1));
  CHECK(cyc.matrix.at(1, 0));
  CHECK_FALSE(cyc.matrix.at(1, 1));
}

TEST_CASE("admissibility checks adjacent pairs") {
  MarkovModel cyc = make_markov_model(desk::cycle1());
  CHECK(is_admissible(cyc.matrix, {0, 1, 0, 1}));
  CHECK_FALSE(is_admissible(cyc.matrix, {0, 0}));
  CHECK(is_admissible(cyc.matrix, {1}));
  CHECK(is_admissible(cyc.matrix, {}));
  CHECK_THROWS_AS(is_admissible(cyc.matrix, {0, 7}), Error);
}

TEST_CASE("language enumerates admissible words of length m+1") {
  MarkovModel cyc = make_markov_model(desk::cycle1());
  auto l0 = language(cyc.matrix, 0);
  REQUIRE(l0.size() == 2);
  CHECK(l0[0] == Word{0});

  auto l2 = language(cyc.matrix, 2);
  REQUIRE(l2.size() == 2);
  CHECK(l2[0] == Word{0, 1, 0});
  CHECK(l2[1] == Word{1, 0, 1});

  MarkovModel flip = make_markov_model(desk::flip2());
  CHECK(language(flip.matrix, 1).size() == 16);
  CHECK(language(flip.matrix, 2).size() == 64);
}

TEST_CASE("forbidden patterns carve out exactly the inadmissible pairs") {
  MarkovModel cyc = make_markov_model(desk::cycle1());
  auto forbidden = markov_forbidden_patterns(cyc.matrix, 1);
  REQUIRE(forbidden.size() == 2);  // aa and bb

  Window good(1, 1);
  good.set(DegreeVec({0}), 0);
  good.set(DegreeVec({1}), 1);
  CHECK(excluded_by(forbidden, good));

  Window bad(1, 1);
  bad.set(DegreeVec({0}), 0);
  bad.set(DegreeVec({1}), 0);
  CHECK_FALSE(excluded_by(forbidden, bad));

  // On the full flip2 shift nothing is forbidden.
  MarkovModel flip = make_markov_model(desk::flip2());
  CHECK(markov_forbidden_patterns(flip.matrix, 2).empty());
}

TEST_CASE("a graph with no degree-(1,..,1) morphism has no alphabet") {
  // Two vertices, color-1 edge only into u, color-2 edge only into w:
  // no vertex receives both colors, so no (1,1) morphism exists.
  KGraph g = desk::build_kgraph(2, {"u", "w"},
                                {{"a", 1, "u", "u"}, {"x", 2, "w", "w"}}, {});
  CHECK_THROWS_AS(make_alphabet(g), Error);
}
