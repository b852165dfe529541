#include "kshift/degree.hpp"

#include <algorithm>
#include <numeric>

namespace kshift {

namespace {

void require_same_rank(const DegreeVec& a, const DegreeVec& b) {
  if (a.rank() != b.rank())
    fail(ErrKind::LengthMismatch,
         "degree vectors have ranks " + std::to_string(a.rank()) + " and " +
             std::to_string(b.rank()));
}

}  // namespace

DegreeVec::DegreeVec(std::vector<int> entries) : v_(std::move(entries)) {
  for (int x : v_)
    if (x < 0) fail(ErrKind::DegreeOutOfRange, "negative degree entry");
}

DegreeVec DegreeVec::zero(int rank) {
  return DegreeVec(std::vector<int>(static_cast<size_t>(rank), 0));
}

DegreeVec DegreeVec::ones(int rank) {
  return DegreeVec(std::vector<int>(static_cast<size_t>(rank), 1));
}

DegreeVec DegreeVec::unit(int rank, int color) {
  if (color < 1 || color > rank)
    fail(ErrKind::ColorOutOfRange,
         "color " + std::to_string(color) + " outside 1.." + std::to_string(rank));
  DegreeVec e = zero(rank);
  e[color - 1] = 1;
  return e;
}

int DegreeVec::sum() const { return std::accumulate(v_.begin(), v_.end(), 0); }

int DegreeVec::max() const {
  return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end());
}

bool DegreeVec::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

DegreeVec DegreeVec::operator+(const DegreeVec& o) const {
  require_same_rank(*this, o);
  DegreeVec r = *this;
  for (int i = 0; i < rank(); ++i) r[i] += o[i];
  return r;
}

DegreeVec DegreeVec::operator-(const DegreeVec& o) const {
  require_same_rank(*this, o);
  if (!dominated(o, *this))
    fail(ErrKind::DegreeOutOfRange,
         "cannot subtract " + kshift::to_string(o) + " from " + kshift::to_string(*this));
  DegreeVec r = *this;
  for (int i = 0; i < rank(); ++i) r[i] -= o[i];
  return r;
}

bool dominated(const DegreeVec& a, const DegreeVec& b) {
  require_same_rank(a, b);
  for (int i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<DegreeVec> degrees_up_to(const DegreeVec& cap) {
  std::vector<DegreeVec> out;
  DegreeVec cur = DegreeVec::zero(cap.rank());
  for (;;) {
    out.push_back(cur);
    int i = cap.rank() - 1;
    while (i >= 0 && cur[i] == cap[i]) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<DegreeVec> box_points(int rank, int radius) {
  std::vector<int> cap(static_cast<size_t>(rank), radius);
  return degrees_up_to(DegreeVec(cap));
}

std::vector<int> displacement(const DegreeVec& n, const DegreeVec& m) {
  require_same_rank(n, m);
  std::vector<int> d(static_cast<size_t>(n.rank()));
  for (int i = 0; i < n.rank(); ++i) d[static_cast<size_t>(i)] = n[i] - m[i];
  return d;
}

std::string to_string(const DegreeVec& n) {
  std::string s = "(";
  for (int i = 0; i < n.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(n[i]);
  }
  return s + ")";
}

}  // namespace kshift
