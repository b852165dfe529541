#include "kshift/automata.hpp"

#include <algorithm>

namespace kshift {

namespace {

std::string word_digits(const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

// Shortest period of the cycle: the smallest divisor d of |v| with
// v[i] = v[i mod d] for all i.
Word minimal_period(const Word& v) {
  size_t n = v.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = v[i] == v[i % d];
    if (ok) return Word(v.begin(), v.begin() + static_cast<long>(d));
  }
  return v;
}

}  // namespace

Letter BlockCode::at(const Word& window) const {
  if (static_cast<int>(window.size()) != anticipation + 1)
    fail(ErrKind::LengthMismatch,
         "window of length " + std::to_string(window.size()) +
             " against anticipation " + std::to_string(anticipation));
  auto it = table.find(window);
  if (it == table.end())
    fail(ErrKind::InadmissibleWord, "window " + word_digits(window) + " not in table");
  return it->second;
}

BlockCode identity_code(const TransitionMatrix& a) {
  BlockCode c;
  c.anticipation = 0;
  for (Letter l = 0; l < a.size(); ++l) c.table[{l}] = l;
  return c;
}

BlockCode shift_code(const TransitionMatrix& a) {
  BlockCode c;
  c.anticipation = 1;
  for (const Word& w : language(a, 1)) c.table[w] = w[1];
  return c;
}

LassoWord::LassoWord(Word prefix, Word cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) fail(ErrKind::TooShort, "lasso cycle must be nonempty");
  cycle_ = minimal_period(cycle_);
  // Absorb trailing prefix letters into the cycle: u.(v)^inf = u'.(v')^inf
  // with v' a rotation.  Rotation preserves the minimal period length.
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
  }
}

Letter LassoWord::at(size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

Word LassoWord::first(size_t len) const {
  Word out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) out.push_back(at(i));
  return out;
}

bool lasso_admissible(const TransitionMatrix& a, const LassoWord& y) {
  // One cycle pass plus the wrap-around covers every adjacent pair.
  Word probe = y.first(y.prefix().size() + y.cycle().size() + 1);
  return is_admissible(a, probe);
}

BlockCode partial_shift_code(const KGraph& g, const MarkovModel& model, int color) {
  if (color < 1 || color > g.rank())
    fail(ErrKind::ColorOutOfRange, "color " + std::to_string(color));
  BlockCode c;
  c.anticipation = 1;
  DegreeVec ei = DegreeVec::unit(g.rank(), color);
  DegreeVec one = DegreeVec::ones(g.rank());
  for (const Word& w : language(model.matrix, 1)) {
    Morphism pair = compose(g, model.alphabet.letter(w[0]), model.alphabet.letter(w[1]));
    auto [head, rest] = factorize(g, pair, ei);
    auto [beta, tail] = factorize(g, rest, one);
    c.table[w] = model.alphabet.index_of(beta);
  }
  return c;
}

Word apply_code(const BlockCode& c, const Word& w) {
  if (static_cast<int>(w.size()) < c.anticipation + 1)
    fail(ErrKind::TooShort, "word of length " + std::to_string(w.size()) +
                                " shorter than anticipation+1");
  Word out;
  for (size_t t = 0; t + static_cast<size_t>(c.anticipation) < w.size(); ++t) {
    Word window(w.begin() + static_cast<long>(t),
                w.begin() + static_cast<long>(t + static_cast<size_t>(c.anticipation) + 1));
    out.push_back(c.at(window));
  }
  return out;
}

LassoWord apply_code(const BlockCode& c, const LassoWord& y) {
  size_t u = y.prefix().size(), v = y.cycle().size();
  // Positions >= u are cycle-periodic in the input, hence the outputs from
  // position u on repeat with period v.
  Word probe = y.first(u + v + static_cast<size_t>(c.anticipation));
  Word image = apply_code(c, probe);
  Word prefix(image.begin(), image.begin() + static_cast<long>(u));
  Word cycle(image.begin() + static_cast<long>(u), image.end());
  return LassoWord(std::move(prefix), std::move(cycle));
}

BlockCode compose_codes(const TransitionMatrix& a, const BlockCode& outer,
                        const BlockCode& inner) {
  BlockCode c;
  c.anticipation = outer.anticipation + inner.anticipation;
  for (const Word& w : language(a, c.anticipation)) {
    Word mid = apply_code(inner, w);
    if (!is_admissible(a, mid))
      fail(ErrKind::InadmissibleIntermediate,
           "image " + word_digits(mid) + " of " + word_digits(w) +
               " leaves the language");
    try {
      c.table[w] = outer.at(mid);
    } catch (const Error& e) {
      if (e.kind() == ErrKind::InadmissibleWord)
        fail(ErrKind::InadmissibleIntermediate, e.what());
      throw;
    }
  }
  return c;
}

FactorizationReport verify_factorization(const KGraph& g, const MarkovModel& model) {
  FactorizationReport rep;
  int k = g.rank();
  std::vector<BlockCode> codes;
  for (int i = 1; i <= k; ++i) codes.push_back(partial_shift_code(g, model, i));

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      BlockCode ij = compose_codes(model.matrix, codes[static_cast<size_t>(i)],
                                   codes[static_cast<size_t>(j)]);
      BlockCode ji = compose_codes(model.matrix, codes[static_cast<size_t>(j)],
                                   codes[static_cast<size_t>(i)]);
      if (!(ij == ji)) {
        rep.ok = false;
        for (const auto& [w, out] : ij.table) {
          Letter other = ji.table.at(w);
          if (out != other)
            rep.witnesses.push_back("codes " + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + " disagree at " +
                                    word_digits(w));
        }
      }
    }
  }

  BlockCode composite = codes.back();
  for (int i = k - 2; i >= 0; --i)
    composite = compose_codes(model.matrix, codes[static_cast<size_t>(i)], composite);
  for (const auto& [w, out] : composite.table) {
    if (out != w[1]) {
      rep.ok = false;
      rep.witnesses.push_back("composite is not the shift at " + word_digits(w));
    }
  }
  return rep;
}

std::optional<BlockCode> recover_code(
    const TransitionMatrix& a,
    const std::function<Letter(const Word&)>& oracle, int max_anticipation) {
  if (max_anticipation < 0)
    fail(ErrKind::DegreeOutOfRange, "max anticipation must be >= 0");
  // One probe length for every candidate: max_anticipation+2 letters, so that
  // even the largest candidate sees several extensions per prefix group.
  std::vector<Word> probes = language(a, max_anticipation + 1);

  std::map<Word, Letter> outputs;
  for (const Word& w : probes) {
    Letter out;
    try {
      out = oracle(w);
    } catch (const Error& e) {
      // The map reads further than any candidate anticipation allows.
      if (e.kind() == ErrKind::TooShort) return std::nullopt;
      throw;
    }
    if (out != oracle(w))
      fail(ErrKind::OracleInconsistent,
           "oracle gave two answers for " + word_digits(w));
    outputs[w] = out;
  }

  for (int cand = 0; cand <= max_anticipation; ++cand) {
    std::map<Word, Letter> table;
    bool constant = true;
    for (const auto& [w, out] : outputs) {
      Word key(w.begin(), w.begin() + cand + 1);
      auto [it, fresh] = table.emplace(key, out);
      if (!fresh && it->second != out) {
        constant = false;
        break;
      }
    }
    if (constant) {
      BlockCode c;
      c.anticipation = cand;
      c.table = std::move(table);
      return c;
    }
  }
  return std::nullopt;
}

ShiftSystem make_shift_system(const KGraph& g) {
  ShiftSystem sys;
  sys.graph = g;
  sys.model = make_markov_model(g);
  for (int i = 1; i <= g.rank(); ++i)
    sys.codes.push_back(partial_shift_code(g, sys.model, i));
  return sys;
}

LassoWord apply_action(const ShiftSystem& sys, const DegreeVec& n, const LassoWord& y) {
  if (n.rank() != sys.graph.rank())
    fail(ErrKind::LengthMismatch, "degree rank != graph rank");
  LassoWord z = y;
  for (int i = 0; i < n.rank(); ++i)
    for (int t = 0; t < n[i]; ++t) z = apply_code(sys.codes[static_cast<size_t>(i)], z);
  return z;
}

}  // namespace kshift
