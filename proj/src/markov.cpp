#include "kshift/markov.hpp"

namespace kshift {

const Morphism& Alphabet::letter(Letter i) const {
  if (i < 0 || i >= size())
    fail(ErrKind::UnknownLetter, "letter index " + std::to_string(i));
  return letters_[static_cast<size_t>(i)];
}

const std::string& Alphabet::name(Letter i) const {
  if (i < 0 || i >= size())
    fail(ErrKind::UnknownLetter, "letter index " + std::to_string(i));
  return names_[static_cast<size_t>(i)];
}

Letter Alphabet::index_of(const Morphism& m) const {
  for (Letter i = 0; i < size(); ++i)
    if (letters_[static_cast<size_t>(i)] == m) return i;
  fail(ErrKind::UnknownLetter, "morphism is not a letter");
}

Letter Alphabet::index_of_name(const std::string& nm) const {
  auto it = by_name_.find(nm);
  if (it == by_name_.end()) fail(ErrKind::UnknownLetter, "unknown letter " + nm);
  return it->second;
}

Alphabet make_alphabet(const KGraph& g) {
  Alphabet sigma;
  sigma.letters_ = enumerate_morphisms(g, DegreeVec::ones(g.rank()));
  if (sigma.letters_.empty())
    fail(ErrKind::EmptyAlphabet, "graph admits no degree-(1,...,1) morphism");
  for (Letter i = 0; i < sigma.size(); ++i) {
    std::string nm = word_label(g, sigma.letters_[static_cast<size_t>(i)]);
    sigma.names_.push_back(nm);
    sigma.by_name_.emplace(nm, i);
  }
  return sigma;
}

TransitionMatrix::TransitionMatrix(int size, std::vector<uint8_t> bits)
    : size_(size), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<size_t>(size) * static_cast<size_t>(size))
    fail(ErrKind::LengthMismatch, "bit table size != size^2");
}

TransitionMatrix transition_matrix(const Alphabet& sigma) {
  int n = sigma.size();
  std::vector<uint8_t> bits(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (Letter i = 0; i < n; ++i)
    for (Letter j = 0; j < n; ++j)
      if (sigma.letter(i).source == sigma.letter(j).range)
        bits[static_cast<size_t>(i) * static_cast<size_t>(n) +
             static_cast<size_t>(j)] = 1;
  return TransitionMatrix(n, std::move(bits));
}

MarkovModel make_markov_model(const KGraph& g) {
  MarkovModel model;
  model.alphabet = make_alphabet(g);
  model.matrix = transition_matrix(model.alphabet);
  return model;
}

bool is_admissible(const TransitionMatrix& a, const Word& w) {
  for (Letter l : w)
    if (l < 0 || l >= a.size())
      fail(ErrKind::UnknownLetter, "letter index " + std::to_string(l));
  for (size_t t = 0; t + 1 < w.size(); ++t)
    if (!a.at(w[t], w[t + 1])) return false;
  return true;
}

std::vector<Word> language(const TransitionMatrix& a, int m) {
  if (m < 0) fail(ErrKind::DegreeOutOfRange, "word length must be >= 1");
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == m + 1) {
      out.push_back(w);
      return;
    }
    for (Letter l = 0; l < a.size(); ++l) {
      if (!w.empty() && !a.at(w.back(), l)) continue;
      w.push_back(l);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<Pattern> markov_forbidden_patterns(const TransitionMatrix& a, int rank) {
  std::vector<Pattern> out;
  DegreeVec zero = DegreeVec::zero(rank);
  DegreeVec one = DegreeVec::ones(rank);
  for (Letter i = 0; i < a.size(); ++i)
    for (Letter j = 0; j < a.size(); ++j)
      if (!a.at(i, j)) out.push_back(Pattern({zero, one}, {i, j}));
  return out;
}

}  // namespace kshift
