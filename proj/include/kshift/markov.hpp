#pragma once

#include <string>
#include <vector>

#include "kshift/kgraph.hpp"
#include "kshift/shift_space.hpp"

namespace kshift {

// The alphabet of the Markov presentation: all degree-(1,...,1) morphisms,
// in lexicographic normal-form order.  Letters are referred to by index.
class Alphabet {
 public:
  Alphabet() = default;

  int size() const { return static_cast<int>(letters_.size()); }
  const Morphism& letter(Letter i) const;
  const std::string& name(Letter i) const;
  Letter index_of(const Morphism& m) const;          // UnknownLetter on miss
  Letter index_of_name(const std::string& nm) const; // UnknownLetter on miss

  friend Alphabet make_alphabet(const KGraph& g);

 private:
  std::vector<Morphism> letters_;
  std::vector<std::string> names_;            // edge ids joined with U+00B7
  std::map<std::string, Letter> by_name_;
};

Alphabet make_alphabet(const KGraph& g);  // EmptyAlphabet if none exist

// 0-1 table over the alphabet: entry (i, j) is 1 exactly when
// source(letter i) == range(letter j), i.e. letter j may follow letter i.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(int size, std::vector<uint8_t> bits);

  int size() const { return size_; }
  bool at(Letter i, Letter j) const {
    return bits_[static_cast<size_t>(i) * static_cast<size_t>(size_) +
                 static_cast<size_t>(j)] != 0;
  }

 private:
  int size_ = 0;
  std::vector<uint8_t> bits_;
};

TransitionMatrix transition_matrix(const Alphabet& sigma);

// Alphabet and matrix derived together; the shared derivation for everything
// downstream of a validated graph.
struct MarkovModel {
  Alphabet alphabet;
  TransitionMatrix matrix;
};

MarkovModel make_markov_model(const KGraph& g);

// Letters must be in range (UnknownLetter); empty and single-letter words
// are admissible.
bool is_admissible(const TransitionMatrix& a, const Word& w);

// All admissible words of length m+1, lexicographic.
std::vector<Word> language(const TransitionMatrix& a, int m);

// One two-cell diagonal pattern {0 -> i, 1 -> j} per zero entry of the
// matrix; a window passes excluded_by on this list exactly when every
// diagonal-adjacent pair it contains is admissible.
std::vector<Pattern> markov_forbidden_patterns(const TransitionMatrix& a, int rank);

}  // namespace kshift
