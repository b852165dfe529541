#include "kshift/conformance.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "kshift/groupoid.hpp"
#include "kshift/reconstruction.hpp"

namespace kshift {

namespace {

constexpr unsigned kSeed = 0x5eed;

std::string letters_label(const Alphabet& sigma, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += sigma.name(w[i]);
  }
  return s;
}

// Deterministic small census of admissible lassos: prefixes up to one
// letter, cycles up to two letters.  If no cycle that short exists the
// cycle length grows until one does (some cycle of length <= |alphabet|
// always exists in a sourceless-free graph).
std::vector<LassoWord> sample_lassos(const TransitionMatrix& a) {
  std::set<LassoWord> seen;
  std::vector<LassoWord> out;
  std::vector<Word> prefixes{{}};
  for (const Word& u : language(a, 0)) prefixes.push_back(u);
  int max_cycle = 2;
  while (true) {
    for (const Word& u : prefixes) {
      for (int len = 0; len < max_cycle; ++len) {
        for (const Word& v : language(a, len)) {
          LassoWord cand(u, v);
          if (!lasso_admissible(a, cand)) continue;
          if (seen.insert(cand).second) out.push_back(std::move(cand));
        }
      }
    }
    if (!out.empty() || max_cycle > a.size()) break;
    ++max_cycle;
  }
  return out;
}

// Largest m <= want with |alphabet|^(m+1) staying desk-sized, and >= 1.
int bounded_depth(int want, int alphabet) {
  int depth = 1;
  long long count = static_cast<long long>(alphabet) * alphabet;
  while (depth < want && count * alphabet <= 65536) {
    count *= alphabet;
    ++depth;
  }
  return depth;
}

Window random_window(std::mt19937& rng, int rank, int horizon, int letters) {
  Window w(rank, horizon);
  std::uniform_int_distribution<int> pick(0, letters - 1);
  for (const DegreeVec& n : box_points(rank, horizon)) w.set(n, pick(rng));
  return w;
}

// Window whose every diagonal-adjacent pair mirrors an adjacent pair of the
// word: cell at n holds word[max(n)].
Window spread_window(int rank, const Word& word) {
  Window w(rank, static_cast<int>(word.size()) - 1);
  for (const DegreeVec& n : box_points(rank, w.horizon()))
    w.set(n, word[static_cast<size_t>(n.max())]);
  return w;
}

class Suite {
 public:
  void add(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.witness = body();
    } catch (const std::exception& e) {
      r.witness = std::string("error: ") + e.what();
    }
    r.ok = r.witness.empty();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_conformance(const KGraph& g, bool allow_sources) {
  Suite suite;
  int k = g.rank();

  ValidationReport vrep = validate(g, allow_sources);
  suite.add("validate", [&]() -> std::string {
    if (vrep.ok) return "";
    const Violation& v = vrep.violations.front();
    return to_string(v.kind) + ": " + v.witness;
  });
  if (!vrep.ok) return suite.take();

  ShiftSystem sys = make_shift_system(g);
  const Alphabet& sigma = sys.model.alphabet;
  const TransitionMatrix& matrix = sys.model.matrix;
  DegreeVec one = DegreeVec::ones(k);
  DegreeVec cap2 = DegreeVec(std::vector<int>(static_cast<size_t>(k), 2));
  std::vector<LassoWord> lassos = sample_lassos(matrix);

  suite.add("degree-additivity", [&]() -> std::string {
    for (const DegreeVec& d1 : degrees_up_to(one)) {
      for (const Morphism& lhs : enumerate_morphisms(g, d1)) {
        for (const DegreeVec& d2 : degrees_up_to(one)) {
          for (const Morphism& rhs : enumerate_morphisms(g, d2)) {
            if (lhs.source != rhs.range) continue;
            Morphism prod = compose(g, lhs, rhs);
            if (!(prod.degree == d1 + d2))
              return "degree of " + word_label(g, prod, ".") + " is not additive";
            if (prod.range != lhs.range || prod.source != rhs.source)
              return "endpoints of " + word_label(g, prod, ".") + " drift";
          }
        }
      }
    }
    return "";
  });

  suite.add("unique-factorization-oracle", [&]() -> std::string {
    for (const DegreeVec& d : degrees_up_to(cap2)) {
      for (const Morphism& lambda : enumerate_morphisms(g, d)) {
        for (const DegreeVec& m : degrees_up_to(d)) {
          auto census = enumerate_factorizations(g, lambda, m);
          if (census.size() != 1)
            return word_label(g, lambda, ".") + " at " + to_string(m) + " has " +
                   std::to_string(census.size()) + " factorizations";
          if (!(factorize(g, lambda, m) == census.front()))
            return word_label(g, lambda, ".") + " at " + to_string(m) +
                   ": direct factorization disagrees with census";
        }
      }
    }
    return "";
  });

  suite.add("normal-form-confluence", [&]() -> std::string {
    // Every composable raw word of length <= 3 must rewrite to exactly one
    // sorted form regardless of rewrite order.
    std::vector<std::vector<int>> words;
    for (int e = 0; e < g.edge_count(); ++e) words.push_back({e});
    for (int len = 2; len <= 3; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words) {
        if (static_cast<int>(w.size()) != len - 1) continue;
        for (int e = 0; e < g.edge_count(); ++e) {
          if (g.edge(w.back()).source != g.edge(e).range) continue;
          auto w2 = w;
          w2.push_back(e);
          next.push_back(w2);
        }
      }
      for (auto& w : next) {
        auto forms = normal_forms_all_orders(g, w);
        if (forms.size() != 1)
          return "word of length " + std::to_string(len) + " has " +
                 std::to_string(forms.size()) + " normal forms";
        words.push_back(std::move(w));
      }
    }
    return "";
  });

  suite.add("pattern-heredity", [&]() -> std::string {
    std::mt19937 rng(kSeed);
    for (int trial = 0; trial < 50; ++trial) {
      Window w = random_window(rng, k, 2, sigma.size());
      for (const DegreeVec& p : box_points(k, 1)) {
        Window sub = translate(w, p);
        // The full sub-window is itself a pattern occurring at p.
        Pattern pat(box_points(k, sub.horizon()), sub.cells());
        if (!occurs(pat, w))
          return "sub-window at " + to_string(p) + " not found in its own parent";
      }
    }
    return "";
  });

  suite.add("metric-axioms", [&]() -> std::string {
    std::mt19937 rng(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
      Window x = random_window(rng, k, 2, sigma.size());
      Window y = random_window(rng, k, 2, sigma.size());
      Window z = random_window(rng, k, 2, sigma.size());
      double dxy = distance_windows(x, y), dyx = distance_windows(y, x);
      if (dxy != dyx) return "asymmetric window distance";
      if ((dxy == 0.0) != (x == y)) return "window distance zero without equality";
      double dxz = distance_windows(x, z), dyz = distance_windows(y, z);
      if (dxz > std::max(dxy, dyz) + 1e-12) return "ultrametric inequality fails";
      Word a = restrict_diagonal(x), b = restrict_diagonal(y), c = restrict_diagonal(z);
      double wab = distance_words(a, b);
      if (wab != distance_words(b, a)) return "asymmetric word distance";
      if ((wab == 0.0) != (a == b)) return "word distance zero without equality";
      if (distance_words(a, c) > std::max(wab, distance_words(b, c)) + 1e-12)
        return "word ultrametric inequality fails";
    }
    return "";
  });

  suite.add("diagonal-contractivity", [&]() -> std::string {
    std::mt19937 rng(kSeed);
    for (int trial = 0; trial < 500; ++trial) {
      Window x = random_window(rng, k, 3, sigma.size());
      Window y = random_window(rng, k, 3, sigma.size());
      if (distance_words(restrict_diagonal(x), restrict_diagonal(y)) >
          distance_windows(x, y))
        return "diagonal restriction expanded a distance";
    }
    return "";
  });

  suite.add("forbidden-pattern-completeness", [&]() -> std::string {
    std::vector<Pattern> forbidden = markov_forbidden_patterns(matrix, k);
    int max_len = bounded_depth(2, sigma.size()) + 1;
    for (int len = 2; len <= max_len; ++len) {
      Word w(static_cast<size_t>(len), 0);
      for (;;) {
        Window induced = spread_window(k, w);
        if (is_admissible(matrix, w) != excluded_by(forbidden, induced))
          return "pattern test disagrees with admissibility on " +
                 letters_label(sigma, w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == sigma.size() - 1) {
          w[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
      }
    }
    return "";
  });

  suite.add("language-admissibility", [&]() -> std::string {
    for (int m = 0; m <= bounded_depth(3, sigma.size()); ++m) {
      auto words = language(matrix, m);
      std::set<Word> set(words.begin(), words.end());
      if (set.size() != words.size()) return "duplicate words in language";
      for (const Word& w : words)
        if (!is_admissible(matrix, w))
          return "language emitted inadmissible " + letters_label(sigma, w);
      // Count check: admissible words are exactly the language.
      size_t expect = 0;
      Word w(static_cast<size_t>(m) + 1, 0);
      for (;;) {
        if (is_admissible(matrix, w)) ++expect;
        int i = m;
        while (i >= 0 && w[static_cast<size_t>(i)] == sigma.size() - 1) {
          w[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
      }
      if (expect != words.size())
        return "language size " + std::to_string(words.size()) + " != " +
               std::to_string(expect) + " admissible words at m=" + std::to_string(m);
    }
    return "";
  });

  suite.add("pair-language-composability", [&]() -> std::string {
    for (const Word& w : language(matrix, 1)) {
      Morphism prod = compose(g, sigma.letter(w[0]), sigma.letter(w[1]));
      if (!(prod.degree == one + one))
        return "pair " + letters_label(sigma, w) + " composes to a wrong degree";
    }
    return "";
  });

  suite.add("code-shift-commutation", [&]() -> std::string {
    for (const BlockCode& c : sys.codes) {
      for (const Word& w : language(matrix, c.anticipation + 1)) {
        Word shifted(w.begin() + 1, w.end());
        Word lhs = apply_code(c, shifted);
        Word rhs = apply_code(c, w);
        rhs.erase(rhs.begin());
        if (lhs != rhs) return "code does not commute with the shift at " +
                               letters_label(sigma, w);
      }
    }
    return "";
  });

  suite.add("lasso-code-agreement", [&]() -> std::string {
    for (const BlockCode& c : sys.codes) {
      for (const LassoWord& y : lassos) {
        size_t len = y.prefix().size() + 3 * y.cycle().size();
        LassoWord image = apply_code(c, y);
        Word direct = apply_code(c, y.first(len + static_cast<size_t>(c.anticipation)));
        if (image.first(len) != direct)
          return "lasso application disagrees with sliding application";
      }
    }
    return "";
  });

  suite.add("factorization-of-the-shift", [&]() -> std::string {
    FactorizationReport rep = verify_factorization(g, sys.model);
    if (!rep.ok) return rep.witnesses.front();
    return "";
  });

  suite.add("code-recovery", [&]() -> std::string {
    // Recovery returns the least anticipation, which drops below 1 when
    // the language is follower-deterministic; the recovered code must
    // still induce the same map letter for letter.
    for (int i = 0; i < k; ++i) {
      const BlockCode& code = sys.codes[static_cast<size_t>(i)];
      auto oracle = [&](const Word& w) { return apply_code(code, w)[0]; };
      auto rec = recover_code(matrix, oracle, 3);
      if (!rec) return "no code recovered for automaton " + std::to_string(i + 1);
      if (rec->anticipation > code.anticipation)
        return "recovered anticipation exceeds 1 for automaton " + std::to_string(i + 1);
      for (const Word& w : language(matrix, 1)) {
        if (apply_code(*rec, w)[0] != oracle(w))
          return "recovered code disagrees on " + letters_label(sigma, w);
      }
    }
    return "";
  });

  suite.add("uniform-continuity-shadow", [&]() -> std::string {
    std::mt19937 rng(kSeed);
    auto words = language(matrix, bounded_depth(4, sigma.size()));
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (const BlockCode& c : sys.codes) {
      for (int trial = 0; trial < 100; ++trial) {
        const Word& x = words[pick(rng)];
        const Word& y = words[pick(rng)];
        Word ox = apply_code(c, x), oy = apply_code(c, y);
        // Agreement through p + anticipation in, agreement through p out.
        int agree_in = 0;
        while (static_cast<size_t>(agree_in) < x.size() && x[agree_in] == y[agree_in])
          ++agree_in;
        int p = agree_in - c.anticipation;
        for (int t = 0; t < p && static_cast<size_t>(t) < ox.size(); ++t)
          if (ox[static_cast<size_t>(t)] != oy[static_cast<size_t>(t)])
            return "outputs diverge inside the guaranteed prefix";
      }
    }
    return "";
  });

  suite.add("segment-j-independence", [&]() -> std::string {
    for (const LassoWord& y : lassos) {
      for (const DegreeVec& n : degrees_up_to(cap2)) {
        for (const DegreeVec& m : degrees_up_to(n)) {
          PathSegment base = reconstruct_segment(sys, y, m, n);
          for (int j = std::max(n.max(), 1); j <= n.max() + 2; ++j) {
            PathSegment alt = reconstruct_segment_at(
                sys, y.first(static_cast<size_t>(j)), m, n, j);
            if (!(alt == base))
              return "segment (" + to_string(m) + "," + to_string(n) +
                     ") depends on the truncation point";
          }
        }
      }
    }
    return "";
  });

  suite.add("two-route-agreement", [&]() -> std::string {
    for (const LassoWord& y : lassos) {
      for (const DegreeVec& n : box_points(k, 2)) {
        Letter via_codes = site_value(sys, y, n);
        PathSegment seg = reconstruct_segment(sys, y, n, n + one);
        if (via_codes != sigma.index_of(seg.value))
          return "site " + to_string(n) + " differs between code action and " +
                 "diagonal reconstruction";
      }
    }
    return "";
  });

  suite.add("action-order-independence", [&]() -> std::string {
    // All interleavings of single steps reaching n <= (1,..,1)+e_1 agree.
    for (const LassoWord& y : lassos) {
      for (const DegreeVec& n : degrees_up_to(cap2)) {
        if (n.sum() > 3) continue;
        LassoWord fixed = apply_action(sys, n, y);
        // Walk the steps in reverse color order as an alternative interleaving.
        LassoWord alt = y;
        for (int i = k - 1; i >= 0; --i)
          for (int t = 0; t < n[i]; ++t)
            alt = apply_code(sys.codes[static_cast<size_t>(i)], alt);
        if (!(alt == fixed))
          return "action at " + to_string(n) + " depends on step order";
      }
    }
    return "";
  });

  suite.add("diagonal-round-trip", [&]() -> std::string {
    for (const LassoWord& y : lassos) {
      for (int p = 0; p <= 2; ++p) {
        Window w = grid_window(sys, y, p);
        if (restrict_diagonal(w) != y.first(static_cast<size_t>(p) + 1))
          return "window diagonal does not return the source word";
        if (!window_membership(sys, w)) return "generated window rejected";
      }
    }
    return "";
  });

  suite.add("grid-injectivity", [&]() -> std::string {
    for (size_t i = 0; i < lassos.size(); ++i) {
      for (size_t j = i + 1; j < lassos.size(); ++j) {
        Word a = lassos[i].first(3), b = lassos[j].first(3);
        if (a == b) continue;
        if (grid_window(sys, lassos[i], 2) == grid_window(sys, lassos[j], 2))
          return "distinct diagonals produced identical windows";
      }
    }
    return "";
  });

  suite.add("grid-locality", [&]() -> std::string {
    int p = 1;
    size_t q = static_cast<size_t>(p * k + p);
    for (const LassoWord& y : lassos) {
      Word head = y.first(q + 1);
      // Redirect the tail: every admissible continuation cycle must leave
      // the box values untouched.
      for (Letter l1 = 0; l1 < sigma.size(); ++l1) {
        if (!matrix.at(head.back(), l1)) continue;
        Window expect = grid_window(sys, y, p);
        if (matrix.at(l1, l1) &&
            !(expect == grid_window(sys, LassoWord(head, {l1}), p)))
          return "box values read beyond the guaranteed prefix";
        for (Letter l2 = 0; l2 < sigma.size(); ++l2) {
          if (!matrix.at(l1, l2) || !matrix.at(l2, l1)) continue;
          if (!(expect == grid_window(sys, LassoWord(head, {l1, l2}), p)))
            return "box values read beyond the guaranteed prefix";
        }
      }
    }
    return "";
  });

  suite.add("covariance", [&]() -> std::string {
    for (const LassoWord& y : lassos) {
      for (const DegreeVec& p : box_points(k, 1)) {
        if (!verify_covariance(sys, y, p, 1))
          return "translation by " + to_string(p) + " does not match the action";
      }
    }
    return "";
  });

  suite.add("groupoid-axioms", [&]() -> std::string {
    LassoWord x = lassos.front();
    std::vector<Germ> germs = orbit_sample(sys, x, 1);
    for (const Germ& h : germs) {
      Germ u = compose_germs(sys, h, invert_germ(h));
      if (!(u == unit_germ(sys, h.x))) return "h.h^-1 is not the unit";
      Germ w = compose_germs(sys, invert_germ(h), h);
      if (!(w == unit_germ(sys, h.y))) return "h^-1.h is not the unit";
      if (!(invert_germ(invert_germ(h)) == h)) return "double inverse drifts";
    }
    for (const Germ& a : germs) {
      if (!(a.y == x)) continue;
      for (const Germ& b : germs) {
        Germ ab = compose_germs(sys, a, b);
        auto dsum = a.displacement();
        for (int i = 0; i < k; ++i) dsum[static_cast<size_t>(i)] += b.displacement()[static_cast<size_t>(i)];
        if (ab.displacement() != dsum) return "displacement is not additive";
        for (const Germ& c : germs) {
          if (!(b.y == c.x)) continue;
          if (!(compose_germs(sys, ab, c) == compose_germs(sys, a, compose_germs(sys, b, c))))
            return "composition is not associative";
        }
      }
    }
    return "";
  });

  return suite.take();
}

}  // namespace kshift
