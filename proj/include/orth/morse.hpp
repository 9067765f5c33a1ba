#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orth/pei.hpp"

namespace orth {

// Number of rank-(rk S - 1) germs of S - Sf for an injection f: S -> S.
Int height(const PeiMap& f);

// f restricted to the part A of its domain
PeiMap restrict_to(const PeiMap& f, const OrthoSet& A);

// The largest orthant of S containing a representative of each maximal germ,
// grown by stepping the base backwards. Meant for sets in normal form.
std::vector<Orthant> maximal_orthants(const OrthoSet& S);
bool is_maximal_orthant(const OrthoSet& S, const Orthant& L);

// t_L: adds u_L on L, identity on S - L
PeiMap diagonal_unit_translation(const OrthoSet& S, const Orthant& L);
// the finite boundary L - L t_L
OrthoSet diagonal_boundary(const Orthant& L);

// Translation length of f at every maximal germ of its domain, or nothing
// when f is not a diagonal injection fixing those germs.
std::optional<std::map<Germ, Int>> diagonal_lengths(const PeiMap& f);
bool is_diagonal(const PeiMap& f);
// components lists, per component, the maximal orthants of the domain
bool is_superdiagonal(const PeiMap& f, const std::vector<std::vector<Orthant>>& components);

// multiplicities m_L with (prod t_L^m_L) f = f2, zero entries omitted
using MonoidWord = std::map<Orthant, Int>;
std::optional<MonoidWord> order_leq(const PeiMap& f, const PeiMap& f2);
PeiMap monoid_element(const OrthoSet& S, const MonoidWord& t);

struct MaximalBelow {
  PeiMap b;
  Orthant L;  // f = t_L b
};

// b = b' on ∂L and t_L^-1 f elsewhere; bp is an injection ∂L -> S - Sf
MaximalBelow maximal_below(const PeiMap& f, const Orthant& L, const PeiMap& bp);

struct LowerBound {
  PeiMap delta;
  std::vector<MonoidWord> witnesses;  // s_b with s_b delta = b, one per element of B
};

// δ_B for maximal elements below f; nothing when two elements share L or
// their boundary images meet
std::optional<LowerBound> common_lower_bound(const PeiMap& f, const std::vector<MaximalBelow>& B);

struct ColoredGraph {
  std::vector<int> color;  // color of each vertex, 0-based
  std::vector<std::pair<int, int>> edges;

  int vertices() const { return static_cast<int>(color.size()); }
  int colors() const;
};

ColoredGraph make_colored_graph(std::vector<int> color, std::vector<std::pair<int, int>> edges);
// conditions (1) and (2) for a bouquet of spheres, by exhaustive choice
bool bouquet_conditions(const ColoredGraph& g);
// cliques of g grouped by size - 1
std::vector<std::vector<std::vector<int>>> flag_complex(const ColoredGraph& g, std::size_t max_simplices = 5000);

struct Homology {
  std::vector<Int> betti;                 // reduced, by degree
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1, by degree
  bool free() const;
};

// reduced integral homology; simplices[d] lists the d-simplices as sorted vertex lists
Homology reduced_homology(const std::vector<std::vector<std::vector<int>>>& simplices);
// invariant factors of an integer matrix, nonzero ones only
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> m);

struct FlagHomologyReport {
  bool conditions_ok = false;
  Homology homology;
  std::optional<std::pair<int, Int>> bouquet;  // (dimension, number of spheres)
  std::size_t simplices = 0;
  std::string note;
};

FlagHomologyReport flag_homology(const ColoredGraph& g, std::size_t max_simplices = 5000);

}  // namespace orth
