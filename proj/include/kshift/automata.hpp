#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kshift/markov.hpp"

namespace kshift {

// A sliding block code with anticipation a: a total table from the admissible
// words of length a+1 to letters.  Applying it to a word w produces the word
// whose letter at position t is table[(w_t, ..., w_{t+a})].
struct BlockCode {
  int anticipation = 0;
  std::map<Word, Letter> table;

  // Exact-window lookup; the window must have length anticipation+1 and be a
  // table key (InadmissibleWord otherwise).
  Letter at(const Word& window) const;

  bool operator==(const BlockCode& o) const {
    return anticipation == o.anticipation && table == o.table;
  }
};

// The anticipation-0 identity code and the anticipation-1 shift code
// (window (a, b) -> b) over a matrix's language.
BlockCode identity_code(const TransitionMatrix& a);
BlockCode shift_code(const TransitionMatrix& a);

// An eventually periodic one-sided word: prefix followed by the cycle
// repeated forever.  Always stored in canonical form: the cycle is its own
// shortest period and no trailing prefix letter can be absorbed into the
// cycle.  Equality of canonical forms decides equality of the infinite words.
class LassoWord {
 public:
  LassoWord() = default;
  LassoWord(Word prefix, Word cycle);  // canonicalizes; cycle must be nonempty

  const Word& prefix() const { return prefix_; }
  const Word& cycle() const { return cycle_; }

  Letter at(size_t i) const;
  Word first(size_t len) const;  // the first `len` letters

  bool operator==(const LassoWord& o) const {
    return prefix_ == o.prefix_ && cycle_ == o.cycle_;
  }
  bool operator!=(const LassoWord& o) const { return !(*this == o); }
  bool operator<(const LassoWord& o) const {
    if (prefix_ != o.prefix_) return prefix_ < o.prefix_;
    return cycle_ < o.cycle_;
  }

 private:
  Word prefix_;
  Word cycle_;
};

// Admissibility of the infinite word: prefix, cycle, and both junctions.
bool lasso_admissible(const TransitionMatrix& a, const LassoWord& y);

// The code of the i-th coordinate automaton: anticipation 1; for adjacent
// letters (lambda, mu) the output is the middle factor of the degree-(2,...,2)
// composite lambda.mu split at the i-th generator: lambda.mu = head.beta.tail
// with d(head) = e_i, d(beta) = (1,...,1).
BlockCode partial_shift_code(const KGraph& g, const MarkovModel& model, int color);

// Slide the code across a finite word; output length |w| - anticipation.
// TooShort if |w| < anticipation+1, InadmissibleWord on a missing key.
Word apply_code(const BlockCode& c, const Word& w);

// Pointwise image of the infinite word, re-canonicalized.  The image prefix
// never grows and the image cycle length divides the input cycle length.
LassoWord apply_code(const BlockCode& c, const LassoWord& y);

// Table of outer after inner on the full language: anticipation adds.
// InadmissibleIntermediate if some intermediate word falls outside outer's
// table.
BlockCode compose_codes(const TransitionMatrix& a, const BlockCode& outer,
                        const BlockCode& inner);

struct FactorizationReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

// Checks (a) all coordinate codes commute pairwise as anticipation-2 tables,
// and (b) their k-fold composite equals the shift: the anticipation-k
// composite sends every admissible (w_0, ..., w_k) to w_1.
FactorizationReport verify_factorization(const KGraph& g, const MarkovModel& model);

// Black-box code recovery: given an oracle computing the first output letter
// of a shift-commuting map from any sufficiently long admissible prefix, find
// the smallest anticipation a <= max_anticipation at which the output is
// determined by the first a+1 letters, and tabulate it.  Returns nullopt when
// no bound works; throws OracleInconsistent when the oracle contradicts its
// own claimed locality.
std::optional<BlockCode> recover_code(
    const TransitionMatrix& a,
    const std::function<Letter(const Word&)>& oracle, int max_anticipation);

// Everything derived from one validated graph: the Markov model plus the k
// coordinate codes, in color order.
struct ShiftSystem {
  KGraph graph;
  MarkovModel model;
  std::vector<BlockCode> codes;  // codes[i] is the color-(i+1) automaton
};

ShiftSystem make_shift_system(const KGraph& g);

// The monoid action: apply code 1 n[0] times, then code 2 n[1] times, ...
// Order across colors is immaterial once the codes commute; fixing it keeps
// results bit-stable.
LassoWord apply_action(const ShiftSystem& sys, const DegreeVec& n, const LassoWord& y);

}  // namespace kshift
