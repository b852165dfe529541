#pragma once

#include <cstdint>
#include <vector>

#include "kshift/degree.hpp"
#include "kshift/errors.hpp"

namespace kshift {

// Letters are indices into an Alphabet (see markov.hpp); -1 marks "unset".
using Letter = int;
using Word = std::vector<Letter>;

// A finite partial configuration: letters pinned at a finite set of sites
// in N^k.  Sites are kept sorted and unique.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::vector<DegreeVec> sites, std::vector<Letter> letters);

  int size() const { return static_cast<int>(sites_.size()); }
  const std::vector<DegreeVec>& sites() const { return sites_; }
  const std::vector<Letter>& letters() const { return letters_; }

 private:
  std::vector<DegreeVec> sites_;
  std::vector<Letter> letters_;
};

// A fully filled box {0..horizon}^rank of letters, stored in lexicographic
// site order (first coordinate slowest).
class Window {
 public:
  Window() = default;
  Window(int rank, int horizon, Letter fill = -1);

  int rank() const { return rank_; }
  int horizon() const { return horizon_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }

  Letter at(const DegreeVec& n) const { return cells_[index(n)]; }
  void set(const DegreeVec& n, Letter v) { cells_[index(n)] = v; }
  const std::vector<Letter>& cells() const { return cells_; }

  bool operator==(const Window& o) const {
    return rank_ == o.rank_ && horizon_ == o.horizon_ && cells_ == o.cells_;
  }

 private:
  size_t index(const DegreeVec& n) const;

  int rank_ = 0;
  int horizon_ = -1;
  std::vector<Letter> cells_;
};

// Does some translate of the pattern lie fully inside the window and match?
// Only translates keeping every site inside the box count.
bool occurs(const Pattern& pat, const Window& w);

// Membership test against a forbidden list: true when NO pattern in the
// list occurs in the window, i.e. the window passes the exclusion test.
bool excluded_by(const std::vector<Pattern>& forbidden, const Window& w);

// The diagonal word w(0,...,0), w(1,...,1), ..., length horizon+1.
Word restrict_diagonal(const Window& w);

// The sub-window of radius w.horizon() - max(p) anchored at p:
// result(t) = w(p + t).
Window translate(const Window& w, const DegreeVec& p);

// 2^-d metric on one-sided sequences over a common alphabet: distance is
// 2^-(largest l such that the words agree at all positions < l).  Identical
// words have distance 0; words of different length are a LengthMismatch.
double distance_words(const Word& a, const Word& b);

// Box version: 2^-(largest l such that the windows agree on {0..l-1}^k).
// Windows must share rank and horizon.
double distance_windows(const Window& a, const Window& b);

}  // namespace kshift
