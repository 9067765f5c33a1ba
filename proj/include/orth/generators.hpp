#pragma once

#include <string>
#include <vector>

#include "orth/pei.hpp"

namespace orth {

enum class GenKind {
  Transposition,        // (L, L') swapped by iso and its inverse
  Cycle,                // L_1 -> ... -> L_n -> L_1
  SingleOrthant,        // isometry of one orthant onto itself
  PeiTranslation,       // K -> L, L' -> K', L - K -> L' - K'
  UnitTranslation,      // face pair (F_x of L, F_x' of L')
  Endotranslation,      // K -> K' inside L
  UnitEndotranslation,  // eta_xy on L
};

// A named generator of pei(S). Realized on a domain S by `realize`.
struct Generator {
  GenKind kind = GenKind::Transposition;
  std::vector<Orthant> orthants;
  std::vector<Isometry> isos;
  std::vector<int> axes;
  bool inverted = false;

  bool operator==(const Generator&) const = default;
};

Generator transposition(const Orthant& L, const Orthant& M, const Isometry& iso);
Generator transposition(const Orthant& L, const Orthant& M);  // canonical isometry
Generator point_transposition(const Point& p, const Point& q);
Generator n_cycle(const std::vector<Orthant>& Ls, const std::vector<Isometry>& isos);
Generator single_orthant_isometry(const Orthant& L, const Isometry& iso);
// reflection of L exchanging its direction axes x and y
Generator reflection(const Orthant& L, int x, int y);
Generator pei_translation(const Orthant& L, const Orthant& K, const Orthant& M, const Orthant& KM);
Generator unit_translation(const Orthant& L, int x, const Orthant& M, int xm);
Generator endotranslation(const Orthant& L, const Orthant& K, const Orthant& K2);
Generator unit_endotranslation(const Orthant& L, int x, int y);

Generator inverse(const Generator& g);

// The bijection of S described by g, identity off its support. Each failed
// geometric precondition raises its own error category.
PeiMap realize(const Generator& g, const OrthoSet& S);
PeiMap realize_word(const std::vector<Generator>& word, const OrthoSet& S);

// Isometry of L swapping the direction axes x and y and fixing the base.
Isometry reflection_iso(const Orthant& L, int x, int y);

std::string kind_name(GenKind k);

}  // namespace orth
