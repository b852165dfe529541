#include <doctest.h>

#include <algorithm>
#include <map>

#include "desk_graphs.hpp"
#include "kshift/errors.hpp"
#include "kshift/groupoid.hpp"

using namespace kshift;

namespace {

struct Flip2 {
  ShiftSystem sys = make_shift_system(desk::flip2());
  Letter ax = sys.model.alphabet.index_of_name("a\xC2\xB7x");
  Letter ay = sys.model.alphabet.index_of_name("a\xC2\xB7y");
  Letter bx = sys.model.alphabet.index_of_name("b\xC2\xB7x");
  LassoWord const_ax = LassoWord({}, {ax});
  LassoWord const_bx = LassoWord({}, {bx});
};

}  // namespace

TEST_CASE("germs require a verified witness identity") {
  Flip2 f;
  // S1 sends const ax to const bx.
  Germ h = make_germ(f.sys, f.const_ax, DegreeVec({1, 0}), DegreeVec::zero(2),
                     f.const_bx);
  CHECK(h.displacement() == std::vector<int>{1, 0});

  CHECK_THROWS_AS(make_germ(f.sys, f.const_ax, DegreeVec::zero(2),
                            DegreeVec::zero(2), f.const_bx),
                  Error);  // identity exponents but different streams
  CHECK_THROWS_AS(make_germ(f.sys, LassoWord({}, {f.ax, f.ax}),  // = const_ax
                            DegreeVec({9, 9}), DegreeVec({9, 9}), f.const_bx),
                  Error);
}

TEST_CASE("exponents reduce to a canonical representative") {
  Flip2 f;
  Germ low = make_germ(f.sys, f.const_ax, DegreeVec({1, 0}), DegreeVec::zero(2),
                       f.const_bx);
  // The same germ presented with both exponents inflated by (1,1) and (2,2).
  for (int p = 1; p <= 2; ++p) {
    DegreeVec shift({p, p});
    Germ high = make_germ(f.sys, f.const_ax, DegreeVec({1 + p, p}), shift,
                          f.const_bx);
    CHECK(high == low);
  }
  CHECK(low.n == DegreeVec({1, 0}));
  CHECK(low.m == DegreeVec::zero(2));
}

TEST_CASE("units, inverses and composition obey groupoid laws") {
  Flip2 f;
  Germ unit = unit_germ(f.sys, f.const_ax);
  CHECK(unit.n.is_zero());
  CHECK(unit.x == unit.y);

  Germ h = make_germ(f.sys, f.const_ax, DegreeVec({1, 0}), DegreeVec::zero(2),
                     f.const_bx);
  Germ hinv = invert_germ(h);
  CHECK(hinv.x == f.const_bx);
  CHECK(hinv.displacement() == std::vector<int>{-1, 0});

  CHECK(compose_germs(f.sys, h, hinv) == unit_germ(f.sys, f.const_ax));
  CHECK(compose_germs(f.sys, hinv, h) == unit_germ(f.sys, f.const_bx));
  CHECK(invert_germ(hinv) == h);

  // Left and right units are neutral.
  CHECK(compose_germs(f.sys, unit_germ(f.sys, f.const_ax), h) == h);
  CHECK(compose_germs(f.sys, h, unit_germ(f.sys, f.const_bx)) == h);

  // Units must match to compose.
  Germ k = make_germ(f.sys, f.const_ax, DegreeVec({1, 0}), DegreeVec::zero(2),
                     f.const_bx);
  CHECK_THROWS_AS(compose_germs(f.sys, h, k), Error);  // h ends at bx, k starts at ax
}

TEST_CASE("orbit samples are canonical, deduplicated and deterministic") {
  Flip2 f;
  std::vector<Germ> sample = orbit_sample(f.sys, f.const_ax, 1);
  REQUIRE(!sample.empty());
  CHECK(std::is_sorted(sample.begin(), sample.end()));
  CHECK(std::adjacent_find(sample.begin(), sample.end()) == sample.end());

  // Contains the unit and the one-step S1 germ.
  CHECK(std::find(sample.begin(), sample.end(), unit_germ(f.sys, f.const_ax)) !=
        sample.end());
  Germ h = make_germ(f.sys, f.const_ax, DegreeVec({1, 0}), DegreeVec::zero(2),
                     f.const_bx);
  CHECK(std::find(sample.begin(), sample.end(), h) != sample.end());

  // Every sampled germ starts at x and re-validates.
  for (const Germ& s : sample) {
    CHECK(s.x == f.const_ax);
    CHECK(make_germ(f.sys, s.x, s.n, s.m, s.y) == s);
  }

  CHECK(orbit_sample(f.sys, f.const_ax, 1) == sample);
  CHECK_THROWS_AS(orbit_sample(f.sys, f.const_ax, -1), Error);
}

TEST_CASE("composable triples associate") {
  Flip2 f;
  std::map<LassoWord, std::vector<Germ>> cache;
  auto sample_at = [&](const LassoWord& x) -> const std::vector<Germ>& {
    auto it = cache.find(x);
    if (it == cache.end())
      it = cache.emplace(x, orbit_sample(f.sys, x, 1)).first;
    return it->second;
  };

  // Continue each germ by germs sampled from its endpoint.
  int checked = 0;
  for (const Germ& g1 : sample_at(f.const_ax)) {
    for (const Germ& g2 : sample_at(g1.y)) {
      const std::vector<Germ>& from_z = sample_at(g2.y);
      for (size_t i = 0; i < from_z.size(); i += 3) {  // thin out for speed
        const Germ& g3 = from_z[i];
        Germ left = compose_germs(f.sys, compose_germs(f.sys, g1, g2), g3);
        Germ right = compose_germs(f.sys, g1, compose_germs(f.sys, g2, g3));
        CHECK(left == right);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("rank 1 displacements are integers in the budget range") {
  ShiftSystem sys = make_shift_system(desk::cycle1());
  LassoWord y({}, {0, 1});
  std::vector<Germ> sample = orbit_sample(sys, y, 2);
  REQUIRE(!sample.empty());
  for (const Germ& h : sample) {
    REQUIRE(h.displacement().size() == 1);
    CHECK(h.displacement()[0] >= -2);
    CHECK(h.displacement()[0] <= 2);
  }
}
