#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "desk_graphs.hpp"
#include "kshift/errors.hpp"
#include "kshift/groupoid.hpp"
#include "kshift/reconstruction.hpp"
#include "kshift/spec_io.hpp"

using namespace kshift;
using nlohmann::json;

namespace {

const char* kFlip2Json = R"({
  "rank": 2,
  "vertices": ["v"],
  "edges": [
    {"id": "a", "color": 1, "range": "v", "source": "v"},
    {"id": "b", "color": 1, "range": "v", "source": "v"},
    {"id": "x", "color": 2, "range": "v", "source": "v"},
    {"id": "y", "color": 2, "range": "v", "source": "v"}
  ],
  "squares": [
    {"colors": [1, 2], "lhs": ["a", "x"], "rhs": ["x", "b"]},
    {"colors": [1, 2], "lhs": ["a", "y"], "rhs": ["y", "b"]},
    {"colors": [1, 2], "lhs": ["b", "x"], "rhs": ["x", "a"]},
    {"colors": [1, 2], "lhs": ["b", "y"], "rhs": ["y", "a"]}
  ]
})";

}  // namespace

TEST_CASE("specs parse into validated presentations") {
  KGraph g = parse_kgraph(json::parse(kFlip2Json));
  CHECK(g.rank() == 2);
  CHECK(g.edge_count() == 4);
  CHECK(validate(g).ok);

  CHECK_THROWS_AS(parse_kgraph(json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(parse_kgraph(json::parse(R"({"rank": 1})")), Error);
  // Identifiers must be ASCII without whitespace.
  CHECK_THROWS_AS(
      parse_kgraph(json::parse(
          R"({"rank":1,"vertices":["v v"],"edges":[],"squares":[]})")),
      Error);
}

TEST_CASE("file loading distinguishes missing from malformed") {
  CHECK_THROWS_AS(load_kgraph("/nonexistent/nowhere.json"), Error);

  std::string path = "bad_spec_tmp.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_kgraph(path), Error);
  std::remove(path.c_str());
}

TEST_CASE("matrix csv freezes the letter order") {
  MarkovModel cyc = make_markov_model(desk::cycle1());
  CHECK(matrix_csv(cyc.alphabet, cyc.matrix) == "A,a,b\na,0,1\nb,1,0\n");
}

TEST_CASE("code table csv lists windows lexicographically") {
  KGraph g = desk::k1();
  MarkovModel model = make_markov_model(g);
  BlockCode c = partial_shift_code(g, model, 1);
  CHECK(code_table_csv(model.alphabet, c) ==
        "w0,w1,output\na,a,a\na,b,b\nb,a,a\nb,b,b\n");

  json j = code_table_json(model.alphabet, c);
  CHECK(j.at("anticipation") == 1);
  CHECK(j.at("rows").size() == 4);
  CHECK(j.at("rows")[0].at("window")[0] == "a");
  CHECK(j.at("rows")[0].at("output") == "a");
}

TEST_CASE("window csv walks rows by the higher coordinates") {
  ShiftSystem sys = make_shift_system(desk::flip2());
  Letter ax = sys.model.alphabet.index_of_name("a\xC2\xB7x");
  Window w = grid_window(sys, LassoWord({}, {ax}), 1);
  CHECK(window_csv(sys.model.alphabet, w) ==
        "a\xC2\xB7x,b\xC2\xB7x\n"
        "b\xC2\xB7x,a\xC2\xB7x\n");

  // Rank 1 emits a single row.
  ShiftSystem c1 = make_shift_system(desk::cycle1());
  Window v = grid_window(c1, LassoWord({}, {0, 1}), 2);
  CHECK(window_csv(c1.model.alphabet, v) == "a,b,a\n");
}

TEST_CASE("patterns, lassos and germs serialize to json") {
  ShiftSystem sys = make_shift_system(desk::flip2());
  const Alphabet& sig = sys.model.alphabet;
  Letter ax = sig.index_of_name("a\xC2\xB7x"), bx = sig.index_of_name("b\xC2\xB7x");

  Pattern p({DegreeVec({0, 0}), DegreeVec({1, 1})}, {ax, bx});
  json pj = pattern_json(sig, p);
  CHECK(pj.at("domain").size() == 2);
  CHECK(pj.at("values")[0] == "a\xC2\xB7x");

  json lj = lasso_json(sig, LassoWord({ax}, {bx, ax}));
  CHECK(lj.at("u").size() == 0);  // prefix absorbed into the cycle
  CHECK(lj.at("v") == json::array({"a\xC2\xB7x", "b\xC2\xB7x"}));

  Germ h = make_germ(sys, LassoWord({}, {ax}), DegreeVec({1, 0}),
                     DegreeVec::zero(2), LassoWord({}, {bx}));
  json gj = germ_json(sig, h);
  CHECK(gj.at("n") == json::array({1, 0}));
  CHECK(gj.at("m") == json::array({0, 0}));
  CHECK(gj.at("displacement") == json::array({1, 0}));
  CHECK(gj.at("x").at("v")[0] == "a\xC2\xB7x");
  CHECK(gj.at("y").at("v")[0] == "b\xC2\xB7x");
}

TEST_CASE("dot exports are well formed") {
  std::string sk = skeleton_dot(desk::flip2());
  CHECK(sk.rfind("digraph", 0) == 0);
  CHECK(sk.find("\"v\" -> \"v\"") != std::string::npos);
  CHECK(sk.find("label=\"a\"") != std::string::npos);

  MarkovModel model = make_markov_model(desk::k1());
  std::string cd = code_dot(model.alphabet, partial_shift_code(desk::k1(), model, 1), 1);
  CHECK(cd.rfind("digraph", 0) == 0);
  CHECK(cd.find("->") != std::string::npos);
}

TEST_CASE("word and degree parsing round trip") {
  MarkovModel model = make_markov_model(desk::flip2());
  const Alphabet& sig = model.alphabet;

  Word w = parse_word(sig, "a\xC2\xB7x,b\xC2\xB7y");
  REQUIRE(w.size() == 2);
  CHECK(sig.name(w[0]) == "a\xC2\xB7x");
  CHECK(sig.name(w[1]) == "b\xC2\xB7y");
  CHECK_THROWS_AS(parse_word(sig, "nope"), Error);

  LassoWord pure = parse_lasso(sig, "a\xC2\xB7x,b\xC2\xB7x");
  CHECK(pure.prefix().empty());
  CHECK(pure.cycle().size() == 2);
  LassoWord mixed = parse_lasso(sig, "a\xC2\xB7y|b\xC2\xB7x");
  CHECK(mixed.prefix().size() == 1);
  CHECK(mixed.cycle().size() == 1);

  CHECK(parse_degree("2,0", 2) == DegreeVec({2, 0}));
  CHECK_THROWS_AS(parse_degree("2,0", 3), Error);
  CHECK_THROWS_AS(parse_degree("2,zz", 2), Error);
  CHECK_THROWS_AS(parse_degree("-1,0", 2), Error);
}
