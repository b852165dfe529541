#include <doctest.h>

#include "desk_graphs.hpp"
#include "kshift/errors.hpp"
#include "kshift/reconstruction.hpp"

using namespace kshift;

namespace {

struct Flip2 {
  ShiftSystem sys = make_shift_system(desk::flip2());
  Letter ax = sys.model.alphabet.index_of_name("a\xC2\xB7x");
  Letter ay = sys.model.alphabet.index_of_name("a\xC2\xB7y");
  Letter bx = sys.model.alphabet.index_of_name("b\xC2\xB7x");
  LassoWord const_ax = LassoWord({}, {ax});
};

}  // namespace

TEST_CASE("site values tile the grid") {
  Flip2 f;
  CHECK(site_value(f.sys, f.const_ax, DegreeVec({0, 0})) == f.ax);
  CHECK(site_value(f.sys, f.const_ax, DegreeVec({1, 0})) == f.bx);
  CHECK(site_value(f.sys, f.const_ax, DegreeVec({0, 1})) == f.bx);
  CHECK(site_value(f.sys, f.const_ax, DegreeVec({1, 1})) == f.ax);
}

TEST_CASE("the grid window collects site values over the box") {
  Flip2 f;
  Window w = grid_window(f.sys, f.const_ax, 1);
  CHECK(w.rank() == 2);
  CHECK(w.horizon() == 1);
  CHECK(w.at(DegreeVec({0, 0})) == f.ax);
  CHECK(w.at(DegreeVec({1, 0})) == f.bx);
  CHECK(w.at(DegreeVec({0, 1})) == f.bx);
  CHECK(w.at(DegreeVec({1, 1})) == f.ax);

  // The diagonal of the grid returns the word itself.
  Window big = grid_window(f.sys, f.const_ax, 3);
  CHECK(restrict_diagonal(big) == f.const_ax.first(4));
}

TEST_CASE("segments rebuild the connecting morphism") {
  Flip2 f;
  const KGraph& g = f.sys.graph;
  Word diag{f.ax, f.ax, f.ax};

  PathSegment seg = reconstruct_segment(f.sys, diag, DegreeVec({1, 0}),
                                        DegreeVec({2, 1}));
  CHECK(seg.from == DegreeVec({1, 0}));
  CHECK(seg.to == DegreeVec({2, 1}));
  CHECK(word_label(g, seg.value) == "b\xC2\xB7x");

  // m == n yields an identity at the right vertex.
  PathSegment unit = reconstruct_segment(f.sys, diag, DegreeVec({1, 1}),
                                         DegreeVec({1, 1}));
  CHECK(unit.value.degree.is_zero());

  // The whole diagonal block from 0 to (1,1) is the first letter.
  PathSegment first = reconstruct_segment(f.sys, diag, DegreeVec::zero(2),
                                          DegreeVec({1, 1}));
  CHECK(f.sys.model.alphabet.index_of(first.value) == f.ax);

  CHECK_THROWS_AS(reconstruct_segment(f.sys, diag, DegreeVec({1, 0}),
                                      DegreeVec({4, 0})),
                  Error);  // diagonal too short for j = 4
  CHECK_THROWS_AS(reconstruct_segment(f.sys, diag, DegreeVec({2, 1}),
                                      DegreeVec({1, 0})),
                  Error);  // m must be dominated by n
}

TEST_CASE("the reconstruction does not depend on the depth j") {
  Flip2 f;
  LassoWord y({f.ax}, {f.bx, f.ay});
  DegreeVec m({1, 0}), n({2, 1});
  PathSegment base = reconstruct_segment(f.sys, y, m, n);
  for (int j = 2; j <= 5; ++j) {
    CHECK(reconstruct_segment_at(f.sys, y.first(static_cast<size_t>(j) + 1), m,
                                 n, j) == base);
  }
}

TEST_CASE("site values agree with one-step segments") {
  Flip2 f;
  LassoWord y({f.ax}, {f.bx, f.ay});
  for (const DegreeVec& n : box_points(2, 2)) {
    PathSegment seg = reconstruct_segment(f.sys, y, n, n + DegreeVec::ones(2));
    CHECK(f.sys.model.alphabet.index_of(seg.value) == site_value(f.sys, y, n));
  }
}

TEST_CASE("membership accepts grids and rejects tampering") {
  Flip2 f;
  Window w = grid_window(f.sys, f.const_ax, 1);
  CHECK(window_membership(f.sys, w));

  Window bad = w;
  bad.set(DegreeVec({1, 0}), f.ax);  // grid forces bx here
  CHECK_FALSE(window_membership(f.sys, bad));

  // Horizon-0 windows carry no constraint beyond a valid letter.
  Window tiny(2, 0);
  tiny.set(DegreeVec::zero(2), f.ay);
  CHECK(window_membership(f.sys, tiny));
}

TEST_CASE("grids are shift-covariant") {
  Flip2 f;
  LassoWord y({f.ay}, {f.ax, f.bx});
  for (const DegreeVec& p : box_points(2, 1))
    CHECK(verify_covariance(f.sys, y, p, 1));
}

TEST_CASE("rank 1 reconstruction degenerates to subwords") {
  ShiftSystem sys = make_shift_system(desk::cycle1());
  LassoWord y({}, {0, 1});
  for (int i = 0; i <= 3; ++i)
    CHECK(site_value(sys, y, DegreeVec({i})) == y.at(static_cast<size_t>(i)));

  PathSegment seg = reconstruct_segment(sys, y, DegreeVec({1}), DegreeVec({3}));
  CHECK(seg.value.word == std::vector<int>{y.at(1), y.at(2)});

  Window w = grid_window(sys, y, 3);
  CHECK(restrict_diagonal(w) == y.first(4));
}
