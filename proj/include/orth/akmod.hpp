#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orth/pei.hpp"

namespace orth {

// Finitely supported integer matrix with rows indexed by rank-k germs and k
// columns in the axis order of each germ. Zero rows are not stored.
struct GermMatrix {
  int k = 0;
  std::map<Germ, std::vector<Int>> rows;

  Int total() const;
  bool is_zero() const { return rows.empty(); }
  bool operator==(const GermMatrix&) const = default;
};

GermMatrix operator+(const GermMatrix& a, const GermMatrix& b);
GermMatrix operator-(const GermMatrix& a);
GermMatrix matrix_from_rows(int k, const std::map<Germ, std::vector<Int>>& rows);
// the germ of the j-th copy of N^k stacked along axis k of Z^(k+1)
Germ stack_germ(int k, Int j);

// rows are the germ translations of g; needs g in C^ord(Γ^k)
GermMatrix matrix_of(const PeiMap& g, int k);

struct MatrixClass {
  bool in_D = false;  // constant rows, zero column sums
  bool in_E = false;  // zero row sums
  std::map<Germ, Int> flow_column;
};

MatrixClass classify(const GermMatrix& m);
// m + mϑ + ... + mϑ^(k-1), ϑ the cyclic column shift
GermMatrix diagonal_average(const GermMatrix& m);

struct SubmoduleInvariants {
  std::optional<Int> p;  // least p with pD <= M
  std::optional<Int> q;  // least q with qE <= M
  Int orbit_vectors = 0; // row images enumerated
};

// Invariants of the submodule generated by gens under germ permutations and
// per-row column permutations, relative to a truncation with free rows.
SubmoduleInvariants submodule_invariants(const std::vector<GermMatrix>& gens, Int orbit_budget = 200000);

}  // namespace orth
