#include "kshift/groupoid.hpp"

#include <algorithm>

namespace kshift {

namespace {

bool witness_holds(const ShiftSystem& sys, const LassoWord& x, const DegreeVec& n,
                   const DegreeVec& m, const LassoWord& y) {
  return apply_action(sys, n, x) == apply_action(sys, m, y);
}

// Lower both exponents along each axis in turn while the witness identity
// survives.  Once a step along an axis fails it can never succeed again
// (identities at lower exponents push forward to higher ones), so one pass
// per axis suffices.
void canonicalize(const ShiftSystem& sys, const LassoWord& x, DegreeVec& n,
                  DegreeVec& m, const LassoWord& y) {
  for (int i = 0; i < n.rank(); ++i) {
    while (n[i] > 0 && m[i] > 0) {
      DegreeVec n2 = n, m2 = m;
      --n2[i];
      --m2[i];
      if (!witness_holds(sys, x, n2, m2, y)) break;
      n = n2;
      m = m2;
    }
  }
}

}  // namespace

Germ make_germ(const ShiftSystem& sys, LassoWord x, DegreeVec n, DegreeVec m,
               LassoWord y) {
  if (!lasso_admissible(sys.model.matrix, x) || !lasso_admissible(sys.model.matrix, y))
    fail(ErrKind::InadmissibleWord, "germ endpoint leaves the language");
  if (!witness_holds(sys, x, n, m, y))
    fail(ErrKind::NotComposableGerm,
         "images under exponents " + to_string(n) + ", " + to_string(m) + " differ");
  canonicalize(sys, x, n, m, y);
  return Germ{std::move(x), std::move(n), std::move(m), std::move(y)};
}

Germ unit_germ(const ShiftSystem& sys, const LassoWord& x) {
  DegreeVec zero = DegreeVec::zero(sys.graph.rank());
  return make_germ(sys, x, zero, zero, x);
}

Germ compose_germs(const ShiftSystem& sys, const Germ& lhs, const Germ& rhs) {
  if (!(lhs.y == rhs.x))
    fail(ErrKind::UnitsMismatch, "range of the second germ is not the source of the first");
  // With s = lhs exponents and t = rhs exponents, the composite witness is
  // alpha_{s.n + t.n}(x) = alpha_{t.n}(alpha_{s.m} lhs.y) = alpha_{s.m + t.m}(z).
  return make_germ(sys, lhs.x, lhs.n + rhs.n, lhs.m + rhs.m, rhs.y);
}

Germ invert_germ(const Germ& h) { return Germ{h.y, h.m, h.n, h.x}; }

std::vector<Germ> orbit_sample(const ShiftSystem& sys, const LassoWord& x,
                               int budget) {
  if (budget < 0) fail(ErrKind::DegreeOutOfRange, "budget must be >= 0");
  const TransitionMatrix& a = sys.model.matrix;
  if (!lasso_admissible(a, x))
    fail(ErrKind::InadmissibleWord, "base word leaves the language");
  int rank = sys.graph.rank();

  // Candidate pool: admissible canonical lassos within the length cap.
  size_t cap_u = x.prefix().size() + static_cast<size_t>(budget);
  size_t cap_v = x.cycle().size() + static_cast<size_t>(budget);
  std::vector<LassoWord> pool;
  {
    std::vector<Word> prefixes{{}};
    for (size_t len = 1; len <= cap_u; ++len)
      for (const Word& w : language(a, static_cast<int>(len) - 1))
        prefixes.push_back(w);
    std::set<LassoWord> seen;
    for (const Word& u : prefixes) {
      for (size_t len = 1; len <= cap_v; ++len) {
        for (const Word& v : language(a, static_cast<int>(len) - 1)) {
          LassoWord cand(u, v);
          if (!lasso_admissible(a, cand)) continue;
          if (seen.insert(cand).second) pool.push_back(std::move(cand));
        }
      }
    }
  }

  std::vector<DegreeVec> exps =
      degrees_up_to(DegreeVec(std::vector<int>(static_cast<size_t>(rank), budget)));

  // Image of every candidate under every exponent, computed once.
  std::vector<std::vector<LassoWord>> image(exps.size());
  for (size_t mi = 0; mi < exps.size(); ++mi) {
    image[mi].reserve(pool.size());
    for (const LassoWord& y : pool) image[mi].push_back(apply_action(sys, exps[mi], y));
  }

  std::set<Germ> out;
  for (const DegreeVec& n : exps) {
    LassoWord target = apply_action(sys, n, x);
    for (size_t mi = 0; mi < exps.size(); ++mi) {
      for (size_t yi = 0; yi < pool.size(); ++yi) {
        if (!(image[mi][yi] == target)) continue;
        Germ h{x, n, exps[mi], pool[yi]};
        canonicalize(sys, h.x, h.n, h.m, h.y);
        out.insert(std::move(h));
      }
    }
  }
  return std::vector<Germ>(out.begin(), out.end());
}

}  // namespace kshift
