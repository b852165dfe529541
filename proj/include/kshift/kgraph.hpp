#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kshift/degree.hpp"
#include "kshift/errors.hpp"

namespace kshift {

// Input records for building a graph; ids are resolved to dense indices.
struct EdgeRec {
  std::string id;
  int color = 0;  // 1-based
  std::string range;
  std::string source;
};

struct SquareRec {
  int color_lo = 0, color_hi = 0;      // declared colors (i, j), i < j
  std::string f, g;                    // lhs: f of color i, g of color j
  std::string g_prime, f_prime;        // rhs: g' of color j, f' of color i
};

/// Finite presentation of a rank-k graph: colored 1-skeleton plus a table of
// commuting squares.  A square with key (f, g) — f of the lower color — and
// value (g', f') asserts the relation f.g = g'.f'.  Vertices and edges are
// held in id-sorted order so index comparisons agree with id comparisons.
class KGraph {
 public:
  struct Edge {
    std::string id;
    int color = 0;  // 1-based
    int range = -1;
    int source = -1;
  };

  int rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertices_[static_cast<size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  int vertex_index(const std::string& id) const;  // UnknownVertex on miss
  int edge_index(const std::string& id) const;    // UnknownEdge on miss

  // Edge indices of one color, ascending.
  const std::vector<int>& edges_of_color(int color) const;

  // Key (f, g) -> value (g', f'); f of lower color than g.
  std::optional<std::pair<int, int>> square_forward(int f, int g) const;
  // All keys whose value is (g', f').  Empty or multi-element only when the
  // square table is broken; a valid table makes this a bijection.
  std::vector<std::pair<int, int>> square_inverse(int g_prime, int f_prime) const;

  friend KGraph build_kgraph(int rank, const std::vector<std::string>& vertices,
                             const std::vector<EdgeRec>& edges,
                             const std::vector<SquareRec>& squares);

 private:
  int rank_ = 0;
  std::vector<std::string> vertices_;          // sorted by id
  std::vector<Edge> edges_;                    // sorted by id
  std::map<std::string, int> vertex_by_id_;
  std::map<std::string, int> edge_by_id_;
  std::vector<std::vector<int>> by_color_;     // [color-1] -> edge indices
  std::map<std::pair<int, int>, std::pair<int, int>> square_fwd_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> square_inv_;
};

// Resolves ids, checks colors/endpoints, rejects duplicate ids and duplicate
// square keys.  Structural soundness of the square table (bijectivity and the
// associativity conditions) is checked by validate(), not here, so that
// deliberately broken tables can still be loaded and diagnosed.
KGraph build_kgraph(int rank, const std::vector<std::string>& vertices,
                    const std::vector<EdgeRec>& edges,
                    const std::vector<SquareRec>& squares);

// A morphism in normal form: its factorization word sorted by color
// (all color-1 edges, then color-2, ...).  The empty word is the identity of
// `range` (== `source`).
struct Morphism {
  DegreeVec degree;
  std::vector<int> word;  // edge indices
  int range = -1;
  int source = -1;

  bool operator==(const Morphism& o) const {
    return word == o.word && range == o.range;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }
  // Degree-lexicographic; within one degree this is id-lexicographic on the
  // normal-form word because edges are id-sorted.
  bool operator<(const Morphism& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (word != o.word) return word < o.word;
    return range < o.range;
  }
};

Morphism identity_morphism(const KGraph& g, int vertex);

// Morphism with the given normal-form word; checks that the word is
// composable and color-sorted.
Morphism morphism_from_word(const KGraph& g, const std::vector<int>& word);

// Rewrites a composable edge word into color-sorted normal form by repeatedly
// replacing the leftmost color descent g.f' (colors j > i) with f.g via the
// inverse square lookup.  Deterministic; errors if the needed square is
// missing (IncompleteSquares) or not unique (AmbiguousSquares).
Morphism normalize(const KGraph& g, const std::vector<int>& raw_word);

// lhs.rhs; requires source(lhs) == range(rhs) (NotComposable otherwise).
Morphism compose(const KGraph& g, const Morphism& lhs, const Morphism& rhs);

// The unique pair (head, tail) with lambda = head.tail and degree(head) == m.
// Requires m <= degree(lambda).  Works by pulling edges of each color in
// ascending color order to the front through forward squares.
std::pair<Morphism, Morphism> factorize(const KGraph& g, const Morphism& lambda,
                                        const DegreeVec& m);

// All morphisms of the given degree, sorted.  Degree zero yields one identity
// per vertex.
std::vector<Morphism> enumerate_morphisms(const KGraph& g, const DegreeVec& n);

// Brute-force census: all pairs (head, tail) with degree(head) == m composing
// to lambda.  Pairs whose composition cannot be normalized (broken square
// table) are skipped rather than reported as errors, so this stays usable as
// an independent check against factorize() even on damaged input.
std::vector<std::pair<Morphism, Morphism>> enumerate_factorizations(
    const KGraph& g, const Morphism& lambda, const DegreeVec& m);

// All color-sorted words reachable from raw_word by applying squares in any
// order and position (forward or backward).  On a sound presentation this is
// a single word; anything else witnesses broken associativity/confluence.
std::set<std::vector<int>> normal_forms_all_orders(const KGraph& g,
                                                   const std::vector<int>& raw_word);

struct Violation {
  enum class Kind {
    SquareEndpointMismatch,
    SquareNotBijective,
    HexagonFailure,
    SourcelessVertex,
    UniqueFactorizationFailure,
  };
  Kind kind;
  std::string witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // e.g. sourceless vertices when tolerated
};

std::string to_string(Violation::Kind kind);

// Four phases: (1) square-table bijectivity and endpoint coherence per color
// pair; (2) every vertex receives an edge of every color (downgraded to a
// warning when allow_sources); (3) for rank >= 3, hexagon closure on all
// tri-colored composable triples; (4) a unique-factorization certificate:
// for every morphism lambda of degree <= (2,...,2) and every m <= degree of
// lambda, the brute-force census must find exactly one factorization and it
// must equal factorize(lambda, m).
ValidationReport validate(const KGraph& g, bool allow_sources = false);

// Human-readable word like "a.b.x" built from edge ids with the given
// separator; identity morphisms render as "id(<vertex>)".
std::string word_label(const KGraph& g, const Morphism& m,
                       const std::string& sep = "\xC2\xB7");  // U+00B7

}  // namespace kshift
