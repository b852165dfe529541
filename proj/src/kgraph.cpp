#include "kshift/kgraph.hpp"

#include <algorithm>
#include <deque>

namespace kshift {

namespace {

std::string pair_label(const KGraph& g, int e1, int e2) {
  return g.edge(e1).id + "\xC2\xB7" + g.edge(e2).id;
}

std::string word_ids(const KGraph& g, const std::vector<int>& word) {
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += "\xC2\xB7";
    s += g.edge(word[i]).id;
  }
  return s;
}

// Checks s(word[t]) == r(word[t+1]) along the word.
void require_chain(const KGraph& g, const std::vector<int>& word) {
  for (size_t t = 0; t + 1 < word.size(); ++t) {
    const auto& a = g.edge(word[t]);
    const auto& b = g.edge(word[t + 1]);
    if (a.source != b.range)
      fail(ErrKind::NotComposable,
           "edges " + a.id + " and " + b.id + " do not compose: source " +
               g.vertex_id(a.source) + " != range " + g.vertex_id(b.range));
  }
}

DegreeVec word_degree(const KGraph& g, const std::vector<int>& word) {
  DegreeVec d = DegreeVec::zero(g.rank());
  for (int e : word) d[g.edge(e).color - 1] += 1;
  return d;
}

bool color_sorted(const KGraph& g, const std::vector<int>& word) {
  for (size_t t = 0; t + 1 < word.size(); ++t)
    if (g.edge(word[t]).color > g.edge(word[t + 1]).color) return false;
  return true;
}

Morphism from_checked_word(const KGraph& g, std::vector<int> word) {
  Morphism m;
  m.degree = word_degree(g, word);
  m.range = g.edge(word.front()).range;
  m.source = g.edge(word.back()).source;
  m.word = std::move(word);
  return m;
}

}  // namespace

int KGraph::vertex_index(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) fail(ErrKind::UnknownVertex, "unknown vertex " + id);
  return it->second;
}

int KGraph::edge_index(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) fail(ErrKind::UnknownEdge, "unknown edge " + id);
  return it->second;
}

const std::vector<int>& KGraph::edges_of_color(int color) const {
  if (color < 1 || color > rank_)
    fail(ErrKind::ColorOutOfRange, "color " + std::to_string(color));
  return by_color_[static_cast<size_t>(color - 1)];
}

std::optional<std::pair<int, int>> KGraph::square_forward(int f, int g) const {
  auto it = square_fwd_.find({f, g});
  if (it == square_fwd_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> KGraph::square_inverse(int g_prime, int f_prime) const {
  auto it = square_inv_.find({g_prime, f_prime});
  if (it == square_inv_.end()) return {};
  return it->second;
}

KGraph build_kgraph(int rank, const std::vector<std::string>& vertices,
                    const std::vector<EdgeRec>& edges,
                    const std::vector<SquareRec>& squares) {
  if (rank < 1) fail(ErrKind::Parse, "rank must be >= 1");
  KGraph g;
  g.rank_ = rank;

  g.vertices_ = vertices;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.vertex_by_id_.emplace(g.vertices_[i], static_cast<int>(i)).second)
      fail(ErrKind::DuplicateId, "duplicate vertex id " + g.vertices_[i]);
  }
  if (g.vertices_.empty()) fail(ErrKind::Parse, "graph has no vertices");

  std::vector<EdgeRec> recs = edges;
  std::sort(recs.begin(), recs.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  g.by_color_.resize(static_cast<size_t>(rank));
  for (const EdgeRec& r : recs) {
    if (r.color < 1 || r.color > rank)
      fail(ErrKind::ColorOutOfRange,
           "edge " + r.id + " has color " + std::to_string(r.color));
    KGraph::Edge e;
    e.id = r.id;
    e.color = r.color;
    e.range = g.vertex_index(r.range);
    e.source = g.vertex_index(r.source);
    int idx = static_cast<int>(g.edges_.size());
    if (!g.edge_by_id_.emplace(e.id, idx).second)
      fail(ErrKind::DuplicateId, "duplicate edge id " + e.id);
    g.edges_.push_back(e);
    g.by_color_[static_cast<size_t>(r.color - 1)].push_back(idx);
  }

  for (const SquareRec& s : squares) {
    if (s.color_lo < 1 || s.color_hi > rank || s.color_lo >= s.color_hi)
      fail(ErrKind::ColorOutOfRange,
           "square colors (" + std::to_string(s.color_lo) + "," +
               std::to_string(s.color_hi) + ") invalid for rank " +
               std::to_string(rank));
    int f = g.edge_index(s.f);
    int gg = g.edge_index(s.g);
    int gp = g.edge_index(s.g_prime);
    int fp = g.edge_index(s.f_prime);
    if (g.edge(f).color != s.color_lo || g.edge(gg).color != s.color_hi ||
        g.edge(gp).color != s.color_hi || g.edge(fp).color != s.color_lo)
      fail(ErrKind::Parse, "square " + s.f + "\xC2\xB7" + s.g +
                               " edge colors disagree with declared colors");
    if (!g.square_fwd_.emplace(std::make_pair(f, gg), std::make_pair(gp, fp)).second)
      fail(ErrKind::DuplicateSquareKey, "square key " + s.f + "\xC2\xB7" + s.g + " repeated");
    g.square_inv_[{gp, fp}].push_back({f, gg});
  }
  return g;
}

Morphism identity_morphism(const KGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count())
    fail(ErrKind::UnknownVertex, "vertex index " + std::to_string(vertex));
  Morphism m;
  m.degree = DegreeVec::zero(g.rank());
  m.range = m.source = vertex;
  return m;
}

Morphism morphism_from_word(const KGraph& g, const std::vector<int>& word) {
  if (word.empty())
    fail(ErrKind::TooShort, "empty word has no vertex; use identity_morphism");
  require_chain(g, word);
  if (!color_sorted(g, word))
    fail(ErrKind::NotComposable, "word " + word_ids(g, word) + " is not color-sorted");
  return from_checked_word(g, word);
}

Morphism normalize(const KGraph& g, const std::vector<int>& raw_word) {
  if (raw_word.empty())
    fail(ErrKind::TooShort, "empty word has no vertex; use identity_morphism");
  require_chain(g, raw_word);
  std::vector<int> w = raw_word;
  for (;;) {
    size_t p = 0;
    while (p + 1 < w.size() && g.edge(w[p]).color <= g.edge(w[p + 1]).color) ++p;
    if (p + 1 >= w.size()) break;
    // w[p].w[p+1] is a descent g'.f'; replace with the key f.g of the square
    // whose value it is.
    auto pre = g.square_inverse(w[p], w[p + 1]);
    if (pre.empty())
      fail(ErrKind::IncompleteSquares,
           "no square has value " + pair_label(g, w[p], w[p + 1]));
    if (pre.size() > 1)
      fail(ErrKind::AmbiguousSquares,
           "several squares share value " + pair_label(g, w[p], w[p + 1]));
    w[p] = pre[0].first;
    w[p + 1] = pre[0].second;
  }
  return from_checked_word(g, w);
}

Morphism compose(const KGraph& g, const Morphism& lhs, const Morphism& rhs) {
  if (lhs.source != rhs.range)
    fail(ErrKind::NotComposable,
         "source " + g.vertex_id(lhs.source) + " != range " + g.vertex_id(rhs.range));
  if (lhs.word.empty()) return rhs;
  if (rhs.word.empty()) return lhs;
  std::vector<int> w = lhs.word;
  w.insert(w.end(), rhs.word.begin(), rhs.word.end());
  return normalize(g, w);
}

std::pair<Morphism, Morphism> factorize(const KGraph& g, const Morphism& lambda,
                                        const DegreeVec& m) {
  if (m.rank() != g.rank())
    fail(ErrKind::LengthMismatch, "degree rank != graph rank");
  if (!dominated(m, lambda.degree))
    fail(ErrKind::DegreeOutOfRange,
         to_string(m) + " exceeds degree " + to_string(lambda.degree));

  std::vector<int> w = lambda.word;
  std::vector<int> head;
  for (int color = 1; color <= g.rank(); ++color) {
    for (int t = 0; t < m[color - 1]; ++t) {
      // First edge of this color; everything before it has lower color.
      size_t p = 0;
      while (g.edge(w[p]).color != color) ++p;
      // Pull it to the front through forward squares f.g -> g'.f'.
      while (p > 0) {
        auto val = g.square_forward(w[p - 1], w[p]);
        if (!val)
          fail(ErrKind::IncompleteSquares,
               "no square has key " + pair_label(g, w[p - 1], w[p]));
        w[p - 1] = val->first;
        w[p] = val->second;
        --p;
      }
      head.push_back(w.front());
      w.erase(w.begin());
    }
  }

  Morphism h = head.empty() ? identity_morphism(g, lambda.range)
                            : from_checked_word(g, head);
  Morphism t = w.empty() ? identity_morphism(g, h.source)
                         : from_checked_word(g, w);
  return {h, t};
}

std::vector<Morphism> enumerate_morphisms(const KGraph& g, const DegreeVec& n) {
  if (n.rank() != g.rank())
    fail(ErrKind::LengthMismatch, "degree rank != graph rank");
  std::vector<Morphism> out;
  if (n.is_zero()) {
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(identity_morphism(g, v));
    return out;
  }
  // Color schedule of the normal form: n[0] edges of color 1, then color 2, ...
  std::vector<int> schedule;
  for (int c = 1; c <= g.rank(); ++c)
    schedule.insert(schedule.end(), static_cast<size_t>(n[c - 1]), c);

  std::vector<int> word;
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == schedule.size()) {
      out.push_back(from_checked_word(g, word));
      return;
    }
    for (int e : g.edges_of_color(schedule[pos])) {
      if (!word.empty() && g.edge(word.back()).source != g.edge(e).range) continue;
      word.push_back(e);
      self(self, pos + 1);
      word.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Morphism, Morphism>> enumerate_factorizations(
    const KGraph& g, const Morphism& lambda, const DegreeVec& m) {
  if (!dominated(m, lambda.degree))
    fail(ErrKind::DegreeOutOfRange,
         to_string(m) + " exceeds degree " + to_string(lambda.degree));
  std::vector<std::pair<Morphism, Morphism>> out;
  for (const Morphism& head : enumerate_morphisms(g, m)) {
    if (head.range != lambda.range) continue;
    for (const Morphism& tail : enumerate_morphisms(g, lambda.degree - m)) {
      if (tail.range != head.source || tail.source != lambda.source) continue;
      try {
        if (compose(g, head, tail) == lambda) out.push_back({head, tail});
      } catch (const Error&) {
        // Broken square table: a pair that cannot be composed is not a
        // factorization; keep scanning so the census stays meaningful.
      }
    }
  }
  return out;
}

std::set<std::vector<int>> normal_forms_all_orders(const KGraph& g,
                                                   const std::vector<int>& raw_word) {
  require_chain(g, raw_word);
  std::set<std::vector<int>> seen;
  std::set<std::vector<int>> sorted_forms;
  std::deque<std::vector<int>> queue{raw_word};
  seen.insert(raw_word);
  while (!queue.empty()) {
    std::vector<int> w = queue.front();
    queue.pop_front();
    if (color_sorted(g, w)) sorted_forms.insert(w);
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      int ca = g.edge(w[p]).color, cb = g.edge(w[p + 1]).color;
      std::vector<std::pair<int, int>> repls;
      if (ca < cb) {
        if (auto val = g.square_forward(w[p], w[p + 1])) repls.push_back(*val);
      } else if (ca > cb) {
        for (auto& key : g.square_inverse(w[p], w[p + 1])) repls.push_back(key);
      }
      for (auto& [x, y] : repls) {
        std::vector<int> next = w;
        next[p] = x;
        next[p + 1] = y;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return sorted_forms;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::SquareEndpointMismatch: return "square-endpoint-mismatch";
    case Violation::Kind::SquareNotBijective: return "square-not-bijective";
    case Violation::Kind::HexagonFailure: return "hexagon-failure";
    case Violation::Kind::SourcelessVertex: return "sourceless-vertex";
    case Violation::Kind::UniqueFactorizationFailure:
      return "unique-factorization-failure";
  }
  return "unknown";
}

ValidationReport validate(const KGraph& g, bool allow_sources) {
  ValidationReport rep;
  auto violation = [&](Violation::Kind k, std::string w) {
    rep.violations.push_back({k, std::move(w)});
  };

  // Phase 1: per color pair, keys must cover the composable pairs exactly
  // once and values must hit the opposite-order composable pairs exactly once.
  for (int ci = 1; ci <= g.rank(); ++ci) {
    for (int cj = ci + 1; cj <= g.rank(); ++cj) {
      std::map<std::pair<int, int>, int> value_uses;
      for (int f : g.edges_of_color(ci)) {
        for (int gg : g.edges_of_color(cj)) {
          bool composable = g.edge(f).source == g.edge(gg).range;
          auto val = g.square_forward(f, gg);
          if (!composable) {
            if (val)
              violation(Violation::Kind::SquareEndpointMismatch,
                        "square key " + pair_label(g, f, gg) + " is not a composable pair");
            continue;
          }
          if (!val) {
            violation(Violation::Kind::SquareNotBijective,
                      "no square for key " + pair_label(g, f, gg));
            continue;
          }
          auto [gp, fp] = *val;
          if (g.edge(gp).source != g.edge(fp).range)
            violation(Violation::Kind::SquareEndpointMismatch,
                      "square value " + pair_label(g, gp, fp) + " is not composable");
          else if (g.edge(gp).range != g.edge(f).range ||
                   g.edge(fp).source != g.edge(gg).source)
            violation(Violation::Kind::SquareEndpointMismatch,
                      "square " + pair_label(g, f, gg) + " -> " + pair_label(g, gp, fp) +
                          " changes endpoints");
          else
            value_uses[{gp, fp}] += 1;
        }
      }
      for (int gp : g.edges_of_color(cj)) {
        for (int fp : g.edges_of_color(ci)) {
          if (g.edge(gp).source != g.edge(fp).range) continue;
          int uses = value_uses.count({gp, fp}) ? value_uses[{gp, fp}] : 0;
          if (uses == 0)
            violation(Violation::Kind::SquareNotBijective,
                      "no square has value " + pair_label(g, gp, fp));
          else if (uses > 1)
            violation(Violation::Kind::SquareNotBijective,
                      "value " + pair_label(g, gp, fp) + " used " +
                          std::to_string(uses) + " times");
        }
      }
    }
  }

  // Phase 2: every vertex must receive an edge of every color, otherwise the
  // one-sided shift has no points through that vertex.
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 1; c <= g.rank(); ++c) {
      bool has = false;
      for (int e : g.edges_of_color(c))
        if (g.edge(e).range == v) { has = true; break; }
      if (!has) {
        Violation viol{Violation::Kind::SourcelessVertex,
                       "vertex " + g.vertex_id(v) + " receives no edge of color " +
                           std::to_string(c)};
        if (allow_sources)
          rep.warnings.push_back(viol);
        else
          rep.violations.push_back(viol);
      }
    }
  }

  // Phase 3 (rank >= 3): every composable tri-colored triple must rewrite to
  // exactly one color-sorted word no matter the order squares are applied.
  if (g.rank() >= 3) {
    for (int e1 = 0; e1 < g.edge_count(); ++e1) {
      for (int e2 = 0; e2 < g.edge_count(); ++e2) {
        if (g.edge(e1).source != g.edge(e2).range) continue;
        if (g.edge(e1).color == g.edge(e2).color) continue;
        for (int e3 = 0; e3 < g.edge_count(); ++e3) {
          if (g.edge(e2).source != g.edge(e3).range) continue;
          int c1 = g.edge(e1).color, c2 = g.edge(e2).color, c3 = g.edge(e3).color;
          if (c3 == c1 || c3 == c2) continue;
          auto forms = normal_forms_all_orders(g, {e1, e2, e3});
          if (forms.size() != 1)
            violation(Violation::Kind::HexagonFailure,
                      "word " + word_ids(g, {e1, e2, e3}) + " has " +
                          std::to_string(forms.size()) + " normal forms");
        }
      }
    }
  }

  // Phase 4: unique-factorization certificate up to degree (2,...,2).
  DegreeVec cap(std::vector<int>(static_cast<size_t>(g.rank()), 2));
  for (const DegreeVec& d : degrees_up_to(cap)) {
    std::vector<Morphism> all;
    try {
      all = enumerate_morphisms(g, d);
    } catch (const Error&) {
      continue;
    }
    for (const Morphism& lambda : all) {
      for (const DegreeVec& m : degrees_up_to(d)) {
        auto census = enumerate_factorizations(g, lambda, m);
        bool unique = census.size() == 1;
        bool matches = false;
        if (unique) {
          try {
            matches = factorize(g, lambda, m) == census.front();
          } catch (const Error&) {
            matches = false;
          }
        }
        if (!unique || !matches) {
          violation(Violation::Kind::UniqueFactorizationFailure,
                    "morphism " + word_label(g, lambda) + " at " + to_string(m) +
                        ": " + std::to_string(census.size()) + " factorization(s)" +
                        (unique && !matches ? ", disagrees with square rewriting" : ""));
        }
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

std::string word_label(const KGraph& g, const Morphism& m, const std::string& sep) {
  if (m.word.empty()) return "id(" + g.vertex_id(m.range) + ")";
  std::string s;
  for (size_t i = 0; i < m.word.size(); ++i) {
    if (i) s += sep;
    s += g.edge(m.word[i]).id;
  }
  return s;
}

}  // namespace kshift
