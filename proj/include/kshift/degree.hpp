#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kshift/errors.hpp"

namespace kshift {

// Element of the monoid N^k.  Rank is fixed at construction; arithmetic
// between vectors of different rank is a LengthMismatch error.
class DegreeVec {
 public:
  DegreeVec() = default;
  explicit DegreeVec(std::vector<int> entries);

  static DegreeVec zero(int rank);
  static DegreeVec ones(int rank);
  // Standard generator e_color; colors are 1-based.
  static DegreeVec unit(int rank, int color);

  int rank() const { return static_cast<int>(v_.size()); }
  int operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return v_; }

  int sum() const;
  int max() const;
  bool is_zero() const;

  DegreeVec operator+(const DegreeVec& o) const;
  // Componentwise difference; requires o <= *this.
  DegreeVec operator-(const DegreeVec& o) const;

  bool operator==(const DegreeVec& o) const { return v_ == o.v_; }
  bool operator!=(const DegreeVec& o) const { return v_ != o.v_; }
  // Lexicographic; used for ordered containers and stable enumeration.
  bool operator<(const DegreeVec& o) const { return v_ < o.v_; }

 private:
  std::vector<int> v_;
};

// Componentwise partial order a <= b.
bool dominated(const DegreeVec& a, const DegreeVec& b);

// All n in N^k with n <= cap, in lexicographic order.
std::vector<DegreeVec> degrees_up_to(const DegreeVec& cap);

// All n in the box {0..radius}^rank, in lexicographic order.
std::vector<DegreeVec> box_points(int rank, int radius);

// Signed difference n - m in Z^k.
std::vector<int> displacement(const DegreeVec& n, const DegreeVec& m);

// "(n1,n2,...,nk)"
std::string to_string(const DegreeVec& n);

}  // namespace kshift
