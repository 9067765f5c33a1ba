#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "orth/akmod.hpp"
#include "orth/generators.hpp"
#include "orth/morse.hpp"

namespace orth {

// Text records, whitespace-insensitive, '#' starts a comment:
//
//   O base=(0,0) dir=(+,0)
//   [O base=(0,0) dir=(+,+), O base=(-1,0) dir=(0,-)]      empty: [dim=2]
//   G dir=(+,0) frozen={1:3}
//   P domain=[...] pieces=[(O base=(0,0) dir=(+,0), iso=((1,0);(0,1);(+,+))), ...]
//   transposition orthants=[O ..., O ...] isos=[((..);(..);(..))] axes=(0) inverted=1
//   V 0:0 1:0 2:1   E 0 2   E 1 2
//
// An isometry (a;perm;signs) maps e_i to signs[i] e_perm[i] and then adds a.

// Raised with category "syntax-error"; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

std::string serialize(const Orthant& L);
std::string serialize(const OrthoSet& S);
std::string serialize(const Germ& g);
std::string serialize(const Isometry& iso);
std::string serialize(const PeiMap& g);
std::string serialize(const Generator& g);
std::string serialize(const ColoredGraph& g);  // one line per record, trailing newline
// one line per row: R <germ> = (c_1,...,c_k)
std::string serialize(const GermMatrix& m);

// (x1,...,xN)
Point parse_point(std::string_view text);
Orthant parse_orthant(std::string_view text);
// a single orthant record is read as a one-piece set
OrthoSet parse_set(std::string_view text);
Germ parse_germ(std::string_view text);
Isometry parse_isometry(std::string_view text);
// validated as a map; the flags say whether it is injective or bijective
PeiMap parse_pei(std::string_view text);
Generator parse_generator(std::string_view text);
ColoredGraph parse_graph(std::string_view text);

using Record = std::variant<Orthant, OrthoSet, Germ, PeiMap, ColoredGraph, Generator>;
// dispatches on the first token
Record parse_record(std::string_view text);

}  // namespace orth
