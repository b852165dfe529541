#pragma once

#include <string>

#include <json.hpp>

#include "kshift/groupoid.hpp"
#include "kshift/reconstruction.hpp"

namespace kshift {

// Graph spec file: { "rank": k, "vertices": [ids...],
//   "edges": [{"id","color","range","source"}...],
//   "squares": [{"colors":[i,j], "lhs":[f,g], "rhs":[gp,fp]}...] }
// where lhs is the pair f.g and rhs the pair g'.f' of the relation
// f.g = g'.f'.  Ids are nonempty ASCII strings without whitespace.
// Duplicate square keys are a parse error.
KGraph parse_kgraph(const nlohmann::json& doc);
KGraph load_kgraph(const std::string& path);  // ErrKind::Io on unreadable file

// Transition matrix as CSV: header cell "A", then letter names across and
// down, entries 0/1.
std::string matrix_csv(const Alphabet& sigma, const TransitionMatrix& a);

// Code table as CSV: header w0..w<a>,output; rows in lexicographic key order.
std::string code_table_csv(const Alphabet& sigma, const BlockCode& c);
nlohmann::json code_table_json(const Alphabet& sigma, const BlockCode& c);

// Window grid as CSV of letter names: one row per tail-coordinate tuple
// (n_k, ..., n_2) in lexicographic order, cells n_1 = 0..horizon.
std::string window_csv(const Alphabet& sigma, const Window& w);

nlohmann::json pattern_json(const Alphabet& sigma, const Pattern& p);
nlohmann::json lasso_json(const Alphabet& sigma, const LassoWord& y);
nlohmann::json germ_json(const Alphabet& sigma, const Germ& h);

// DOT drawings: the colored 1-skeleton, or a code table as a labeled
// transition diagram.
std::string skeleton_dot(const KGraph& g);
std::string code_dot(const Alphabet& sigma, const BlockCode& c, int color);

// Comma-separated letter names -> word ("a·x,b·x").
Word parse_word(const Alphabet& sigma, const std::string& text);
// "u0,u1|v0,v1" or, with no '|', a purely periodic word "v0,v1".
LassoWord parse_lasso(const Alphabet& sigma, const std::string& text);
// "2,1" -> DegreeVec
DegreeVec parse_degree(const std::string& text, int rank);

}  // namespace kshift
