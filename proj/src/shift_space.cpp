#include "kshift/shift_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kshift {

Pattern::Pattern(std::vector<DegreeVec> sites, std::vector<Letter> letters) {
  if (sites.size() != letters.size())
    fail(ErrKind::LengthMismatch, "pattern sites and letters differ in count");
  if (sites.empty()) fail(ErrKind::TooShort, "pattern must pin at least one site");
  int rank = sites.front().rank();
  std::map<DegreeVec, Letter> cells;
  for (size_t i = 0; i < sites.size(); ++i) {
    if (sites[i].rank() != rank)
      fail(ErrKind::LengthMismatch, "pattern sites of mixed rank");
    auto [it, fresh] = cells.emplace(sites[i], letters[i]);
    if (!fresh && it->second != letters[i])
      fail(ErrKind::LengthMismatch,
           "pattern pins site " + to_string(sites[i]) + " twice with different letters");
  }
  for (auto& [site, letter] : cells) {
    sites_.push_back(site);
    letters_.push_back(letter);
  }
}

Window::Window(int rank, int horizon, Letter fill) : rank_(rank), horizon_(horizon) {
  if (rank < 1) fail(ErrKind::DegreeOutOfRange, "window rank must be >= 1");
  if (horizon < 0) fail(ErrKind::DegreeOutOfRange, "window horizon must be >= 0");
  size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<size_t>(horizon + 1);
  cells_.assign(n, fill);
}

size_t Window::index(const DegreeVec& n) const {
  if (n.rank() != rank_)
    fail(ErrKind::LengthMismatch, "site rank != window rank");
  size_t idx = 0;
  for (int i = 0; i < rank_; ++i) {
    if (n[i] < 0 || n[i] > horizon_)
      fail(ErrKind::DegreeOutOfRange,
           "site " + to_string(n) + " outside horizon " + std::to_string(horizon_));
    idx = idx * static_cast<size_t>(horizon_ + 1) + static_cast<size_t>(n[i]);
  }
  return idx;
}

bool occurs(const Pattern& pat, const Window& w) {
  for (const DegreeVec& base : box_points(w.rank(), w.horizon())) {
    bool match = true;
    for (int i = 0; i < pat.size() && match; ++i) {
      const DegreeVec& t = pat.sites()[static_cast<size_t>(i)];
      if (t.rank() != w.rank()) return false;  // rank mismatch: cannot occur
      bool inside = true;
      for (int c = 0; c < w.rank(); ++c)
        if (base[c] + t[c] > w.horizon()) { inside = false; break; }
      if (!inside) {
        match = false;
      } else {
        match = w.at(base + t) == pat.letters()[static_cast<size_t>(i)];
      }
    }
    if (match) return true;
  }
  return false;
}

bool excluded_by(const std::vector<Pattern>& forbidden, const Window& w) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Pattern& p) { return occurs(p, w); });
}

Word restrict_diagonal(const Window& w) {
  Word out;
  for (int t = 0; t <= w.horizon(); ++t) {
    std::vector<int> site(static_cast<size_t>(w.rank()), t);
    out.push_back(w.at(DegreeVec(site)));
  }
  return out;
}

Window translate(const Window& w, const DegreeVec& p) {
  if (p.rank() != w.rank())
    fail(ErrKind::LengthMismatch, "translate rank != window rank");
  int h = w.horizon() - p.max();
  if (h < 0)
    fail(ErrKind::DegreeOutOfRange, "translate by " + to_string(p) + " leaves no box");
  Window out(w.rank(), h);
  for (const DegreeVec& t : box_points(w.rank(), h)) out.set(t, w.at(p + t));
  return out;
}

double distance_words(const Word& a, const Word& b) {
  if (a.size() != b.size())
    fail(ErrKind::LengthMismatch, "words of length " + std::to_string(a.size()) +
                                      " and " + std::to_string(b.size()));
  if (a == b) return 0.0;
  size_t f = 0;
  while (a[f] == b[f]) ++f;
  // Largest index p with agreement at all positions <= p is f-1; disagreement
  // at the very first letter is capped at distance 1.
  if (f == 0) return 1.0;
  return std::ldexp(1.0, -static_cast<int>(f - 1));
}

double distance_windows(const Window& a, const Window& b) {
  if (a.rank() != b.rank() || a.horizon() != b.horizon())
    fail(ErrKind::LengthMismatch, "windows of different shape");
  if (a == b) return 0.0;
  // Largest box radius p such that the windows agree on {0..p}^k; capped at
  // distance 1 when they already disagree at the origin.
  int p = -1;
  for (int radius = 0; radius <= a.horizon(); ++radius) {
    bool agree = true;
    for (const DegreeVec& n : box_points(a.rank(), radius)) {
      if (a.at(n) != b.at(n)) { agree = false; break; }
    }
    if (!agree) break;
    p = radius;
  }
  if (p < 0) return 1.0;
  return std::ldexp(1.0, -p);
}

}  // namespace kshift
