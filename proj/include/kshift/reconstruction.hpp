#pragma once

#include "kshift/automata.hpp"
#include "kshift/shift_space.hpp"

namespace kshift {

// The portion of a grid path between coordinates `from` and `to`:
// a morphism of degree to - from.
struct PathSegment {
  DegreeVec from;
  DegreeVec to;
  Morphism value;

  bool operator==(const PathSegment& o) const {
    return from == o.from && to == o.to && value == o.value;
  }
};

// Rebuild the segment (m, n) of the unique grid path whose diagonal reads
// `diag`: compose the first j = max(n) diagonal letters (their product has
// degree j.(1,...,1)), split off degree m, then split the remainder at n - m;
// the middle factor is the answer.  Requires m <= n and |diag| >= max(n)
// (WordTooShort otherwise; max(n) = 0 still needs one letter to name the
// basepoint vertex).  The result does not depend on which j >= max(n) is
// used; callers may pass a larger j explicitly via reconstruct_segment_at.
PathSegment reconstruct_segment(const ShiftSystem& sys, const Word& diag,
                                const DegreeVec& m, const DegreeVec& n);
PathSegment reconstruct_segment(const ShiftSystem& sys, const LassoWord& y,
                                const DegreeVec& m, const DegreeVec& n);
PathSegment reconstruct_segment_at(const ShiftSystem& sys, const Word& diag,
                                   const DegreeVec& m, const DegreeVec& n, int j);

// The grid value at site n: apply the coordinate automata n_i times each and
// read the first letter.  Agrees with reconstruct_segment(y, n, n+1).
Letter site_value(const ShiftSystem& sys, const LassoWord& y, const DegreeVec& n);

// The full box of site values up to the horizon.  Its diagonal restriction
// returns the first horizon+1 letters of y.
Window grid_window(const ShiftSystem& sys, const LassoWord& y, int horizon);

// Is the window the grid of the (unique) path determined by its own
// diagonal?  Horizon-0 windows trivially pass.
bool window_membership(const ShiftSystem& sys, const Window& w);

// Shift-equivariance of the grid: the window of y at horizon+max(p),
// translated by p, must equal the window of the p-shifted word at horizon.
bool verify_covariance(const ShiftSystem& sys, const LassoWord& y,
                       const DegreeVec& p, int horizon);

}  // namespace kshift
