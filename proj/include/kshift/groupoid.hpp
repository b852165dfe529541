#pragma once

#include "kshift/automata.hpp"

namespace kshift {

// An element of the transformation groupoid of the coordinate-automata
// action: a pair of points with exponents witnessing that they land on the
// same orbit point, read as "x relates to y with displacement n - m".
// Stored with the canonically reduced exponent pair: both exponents are
// lowered componentwise (axis 1 first, then axis 2, ...) as long as the
// witness identity still holds, so equal germs built from different
// representatives compare equal.
struct Germ {
  LassoWord x;
  DegreeVec n;
  DegreeVec m;
  LassoWord y;

  std::vector<int> displacement() const { return kshift::displacement(n, m); }

  bool operator==(const Germ& o) const {
    return x == o.x && n == o.n && m == o.m && y == o.y;
  }
  bool operator!=(const Germ& o) const { return !(*this == o); }
  bool operator<(const Germ& o) const {
    if (!(x == o.x)) return x < o.x;
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return y < o.y;
  }
};

// Validates the witness identity (NotComposableGerm when the two images
// differ) and canonicalizes the exponents.  Both words must be admissible.
Germ make_germ(const ShiftSystem& sys, LassoWord x, DegreeVec n, DegreeVec m,
               LassoWord y);

Germ unit_germ(const ShiftSystem& sys, const LassoWord& x);

// Defined when lhs.y == rhs.x (UnitsMismatch otherwise): exponents add,
// displacements add.
Germ compose_germs(const ShiftSystem& sys, const Germ& lhs, const Germ& rhs);

// Swap the point pair and the exponent pair; displacement negates.  The
// swapped form of a canonical germ is again canonical, so no system is
// needed.
Germ invert_germ(const Germ& h);

// All germs (x, n, m, y) with exponents componentwise <= budget and y drawn
// from a bounded census of candidate words: prefixes up to |prefix(x)| +
// budget letters and cycles up to |cycle(x)| + budget letters.  The length
// cap is a completeness heuristic: preimages needing longer representations
// are not found.  Output is sorted and duplicate-free.
std::vector<Germ> orbit_sample(const ShiftSystem& sys, const LassoWord& x,
                               int budget);

}  // namespace kshift
