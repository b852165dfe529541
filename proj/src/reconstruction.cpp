#include "kshift/reconstruction.hpp"

#include <algorithm>

namespace kshift {

PathSegment reconstruct_segment_at(const ShiftSystem& sys, const Word& diag,
                                   const DegreeVec& m, const DegreeVec& n, int j) {
  const KGraph& g = sys.graph;
  if (m.rank() != g.rank() || n.rank() != g.rank())
    fail(ErrKind::LengthMismatch, "degree rank != graph rank");
  if (!dominated(m, n))
    fail(ErrKind::DegreeOutOfRange, to_string(m) + " is not <= " + to_string(n));
  if (j < n.max() || j < 1) j = std::max(n.max(), 1);
  if (static_cast<size_t>(j) > diag.size())
    fail(ErrKind::WordTooShort, "need " + std::to_string(j) + " diagonal letters, have " +
                                    std::to_string(diag.size()));
  if (!is_admissible(sys.model.matrix, diag))
    fail(ErrKind::InadmissibleWord, "diagonal word leaves the language");

  Morphism prod = sys.model.alphabet.letter(diag[0]);
  for (int t = 1; t < j; ++t)
    prod = compose(g, prod, sys.model.alphabet.letter(diag[static_cast<size_t>(t)]));

  auto [head, rest] = factorize(g, prod, m);
  auto [mid, tail] = factorize(g, rest, n - m);
  return PathSegment{m, n, mid};
}

PathSegment reconstruct_segment(const ShiftSystem& sys, const Word& diag,
                                const DegreeVec& m, const DegreeVec& n) {
  return reconstruct_segment_at(sys, diag, m, n, n.max());
}

PathSegment reconstruct_segment(const ShiftSystem& sys, const LassoWord& y,
                                const DegreeVec& m, const DegreeVec& n) {
  int j = std::max(n.max(), 1);
  return reconstruct_segment_at(sys, y.first(static_cast<size_t>(j)), m, n, j);
}

Letter site_value(const ShiftSystem& sys, const LassoWord& y, const DegreeVec& n) {
  return apply_action(sys, n, y).at(0);
}

Window grid_window(const ShiftSystem& sys, const LassoWord& y, int horizon) {
  Window w(sys.graph.rank(), horizon);
  for (const DegreeVec& n : box_points(sys.graph.rank(), horizon))
    w.set(n, site_value(sys, y, n));
  return w;
}

bool window_membership(const ShiftSystem& sys, const Window& w) {
  if (w.rank() != sys.graph.rank())
    fail(ErrKind::LengthMismatch, "window rank != graph rank");
  Word diag = restrict_diagonal(w);
  if (!is_admissible(sys.model.matrix, diag)) return false;
  DegreeVec one = DegreeVec::ones(w.rank());
  for (const DegreeVec& n : box_points(w.rank(), w.horizon())) {
    // The value at site n is the (n, n+1) segment of the path; its diagonal
    // reconstruction uses max(n)+1 <= horizon+1 letters, all available.
    PathSegment seg = reconstruct_segment(sys, diag, n, n + one);
    if (sys.model.alphabet.index_of(seg.value) != w.at(n)) return false;
  }
  return true;
}

bool verify_covariance(const ShiftSystem& sys, const LassoWord& y,
                       const DegreeVec& p, int horizon) {
  Window big = grid_window(sys, y, horizon + p.max());
  Window moved = translate(big, p);
  Window direct = grid_window(sys, apply_action(sys, p, y), horizon);
  return moved == direct;
}

}  // namespace kshift
