#include "kshift/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace kshift {

namespace {

using nlohmann::json;

void check_id(const std::string& id, const char* what) {
  if (id.empty()) fail(ErrKind::Parse, std::string(what) + " id is empty");
  for (char ch : id)
    if (static_cast<unsigned char>(ch) > 0x7E || std::isspace(static_cast<unsigned char>(ch)))
      fail(ErrKind::Parse, std::string(what) + " id \"" + id +
                               "\" must be ASCII without whitespace");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

KGraph parse_kgraph(const json& doc) {
  try {
    if (!doc.is_object()) fail(ErrKind::Parse, "spec root must be an object");
    int rank = doc.at("rank").get<int>();
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) {
      std::string id = v.get<std::string>();
      check_id(id, "vertex");
      vertices.push_back(id);
    }
    std::vector<EdgeRec> edges;
    for (const auto& e : doc.at("edges")) {
      EdgeRec r;
      r.id = e.at("id").get<std::string>();
      check_id(r.id, "edge");
      r.color = e.at("color").get<int>();
      r.range = e.at("range").get<std::string>();
      r.source = e.at("source").get<std::string>();
      edges.push_back(r);
    }
    std::vector<SquareRec> squares;
    if (doc.contains("squares")) {
      for (const auto& s : doc.at("squares")) {
        SquareRec r;
        const auto& colors = s.at("colors");
        const auto& lhs = s.at("lhs");
        const auto& rhs = s.at("rhs");
        if (colors.size() != 2 || lhs.size() != 2 || rhs.size() != 2)
          fail(ErrKind::Parse, "square entries must be pairs");
        r.color_lo = colors[0].get<int>();
        r.color_hi = colors[1].get<int>();
        r.f = lhs[0].get<std::string>();
        r.g = lhs[1].get<std::string>();
        r.g_prime = rhs[0].get<std::string>();
        r.f_prime = rhs[1].get<std::string>();
        squares.push_back(r);
      }
    }
    return build_kgraph(rank, vertices, edges, squares);
  } catch (const json::exception& e) {
    fail(ErrKind::Parse, std::string("malformed spec: ") + e.what());
  }
}

KGraph load_kgraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::Io, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrKind::Parse, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return parse_kgraph(doc);
}

std::string matrix_csv(const Alphabet& sigma, const TransitionMatrix& a) {
  std::ostringstream out;
  out << "A";
  for (Letter j = 0; j < sigma.size(); ++j) out << "," << sigma.name(j);
  out << "\n";
  for (Letter i = 0; i < sigma.size(); ++i) {
    out << sigma.name(i);
    for (Letter j = 0; j < sigma.size(); ++j) out << "," << (a.at(i, j) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

std::string code_table_csv(const Alphabet& sigma, const BlockCode& c) {
  std::ostringstream out;
  for (int t = 0; t <= c.anticipation; ++t) out << "w" << t << ",";
  out << "output\n";
  for (const auto& [w, l] : c.table) {
    for (Letter x : w) out << sigma.name(x) << ",";
    out << sigma.name(l) << "\n";
  }
  return out.str();
}

nlohmann::json code_table_json(const Alphabet& sigma, const BlockCode& c) {
  json rows = json::array();
  for (const auto& [w, l] : c.table) {
    json window = json::array();
    for (Letter x : w) window.push_back(sigma.name(x));
    rows.push_back({{"window", window}, {"output", sigma.name(l)}});
  }
  return json{{"anticipation", c.anticipation}, {"rows", rows}};
}

std::string window_csv(const Alphabet& sigma, const Window& w) {
  std::ostringstream out;
  // Rows iterate (n_k, ..., n_2) lexicographically; rank 1 has the single
  // empty tail and hence one row.
  for (const DegreeVec& tail : box_points(w.rank() - 1, w.horizon())) {
    for (int n1 = 0; n1 <= w.horizon(); ++n1) {
      std::vector<int> site{n1};
      // Row coordinates are listed slowest-last (n_k first): reverse back
      // into (n_1, n_2, ..., n_k) site order.
      for (int i = tail.rank() - 1; i >= 0; --i) site.push_back(tail[i]);
      if (n1) out << ",";
      out << sigma.name(w.at(DegreeVec(site)));
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json pattern_json(const Alphabet& sigma, const Pattern& p) {
  json domain = json::array();
  json values = json::array();
  for (int i = 0; i < p.size(); ++i) {
    domain.push_back(p.sites()[static_cast<size_t>(i)].entries());
    values.push_back(sigma.name(p.letters()[static_cast<size_t>(i)]));
  }
  return json{{"domain", domain}, {"values", values}};
}

nlohmann::json lasso_json(const Alphabet& sigma, const LassoWord& y) {
  json u = json::array(), v = json::array();
  for (Letter l : y.prefix()) u.push_back(sigma.name(l));
  for (Letter l : y.cycle()) v.push_back(sigma.name(l));
  return json{{"u", u}, {"v", v}};
}

nlohmann::json germ_json(const Alphabet& sigma, const Germ& h) {
  return json{{"x", lasso_json(sigma, h.x)},
              {"n", h.n.entries()},
              {"m", h.m.entries()},
              {"y", lasso_json(sigma, h.y)},
              {"displacement", h.displacement()}};
}

std::string skeleton_dot(const KGraph& g) {
  // Color palette cycles for ranks beyond the prepared styles.
  static const char* kColors[] = {"black", "red3", "blue3", "green4", "orange3"};
  std::ostringstream out;
  out << "digraph skeleton {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  \"" << g.vertex_id(v) << "\";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    // Edges point source -> range so arrows follow left-to-right composition.
    out << "  \"" << g.vertex_id(ed.source) << "\" -> \"" << g.vertex_id(ed.range)
        << "\" [label=\"" << ed.id << "\", color=" << kColors[(ed.color - 1) % 5]
        << ", style=" << (ed.color == 1 ? "solid" : ed.color == 2 ? "dashed" : "dotted")
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string code_dot(const Alphabet& sigma, const BlockCode& c, int color) {
  std::ostringstream out;
  out << "digraph code" << color << " {\n";
  for (Letter i = 0; i < sigma.size(); ++i)
    out << "  \"" << sigma.name(i) << "\";\n";
  for (const auto& [w, l] : c.table) {
    out << "  \"" << sigma.name(w.front()) << "\" -> \"" << sigma.name(w.back())
        << "\" [label=\"" << sigma.name(l) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Word parse_word(const Alphabet& sigma, const std::string& text) {
  Word w;
  if (text.empty()) return w;
  for (const std::string& part : split(text, ','))
    w.push_back(sigma.index_of_name(part));
  return w;
}

LassoWord parse_lasso(const Alphabet& sigma, const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) return LassoWord({}, parse_word(sigma, text));
  Word u = parse_word(sigma, text.substr(0, bar));
  Word v = parse_word(sigma, text.substr(bar + 1));
  return LassoWord(std::move(u), std::move(v));
}

DegreeVec parse_degree(const std::string& text, int rank) {
  std::vector<int> entries;
  for (const std::string& part : split(text, ',')) {
    try {
      size_t used = 0;
      int val = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      entries.push_back(val);
    } catch (const std::exception&) {
      fail(ErrKind::Parse, "bad degree component \"" + part + "\"");
    }
  }
  if (static_cast<int>(entries.size()) != rank)
    fail(ErrKind::LengthMismatch, "degree has " + std::to_string(entries.size()) +
                                      " components, rank is " + std::to_string(rank));
  return DegreeVec(entries);
}

}  // namespace kshift
