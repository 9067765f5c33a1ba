#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orth/germs.hpp"

namespace orth {

struct PeiPiece {
  Orthant dom;
  Isometry iso;
  bool operator==(const PeiPiece&) const = default;
};

enum class Require { Map, Injection, Bijection };

struct PeiMap {
  OrthoSet domain;
  std::vector<PeiPiece> pieces;
  bool injective = false;
  bool bijective = false;
  bool pet = false;
  bool diagonal = false;

  int dim() const { return domain.dim(); }
};

// Canonical isometry agreeing with iso on L: axes off L are sent to the
// remaining axes in increasing order with sign +1.
Isometry normalize_on(const Orthant& L, const Isometry& iso);
bool agree_on(const Orthant& L, const Isometry& a, const Isometry& b);

PeiMap make_pei(const OrthoSet& domain, std::vector<PeiPiece> pieces, Require req);
PeiMap identity_map(const OrthoSet& domain);
// pieces given on part of the domain, identity on the rest
PeiMap extend_by_identity(const OrthoSet& domain, std::vector<PeiPiece> pieces, Require req);

OrthoSet image_set(const PeiMap& g);
Point apply(const PeiMap& g, const Point& p);
PeiMap compose(const PeiMap& g, const PeiMap& f);  // g followed by f
PeiMap compose_all(const std::vector<PeiMap>& word, const OrthoSet& domain);
// for a self-bijection the domain is kept; an injection is inverted on its image
PeiMap invert(const PeiMap& g);
bool is_bijection_onto(const PeiMap& g, const OrthoSet& target);
// order preserving on direction axes, base to base
Isometry canonical_iso(const Orthant& L, const Orthant& M);
PeiMap conjugate(const PeiMap& g, const PeiMap& h);  // h^-1 g h
PeiMap commutator(const PeiMap& a, const PeiMap& b);  // a^-1 b^-1 a b
bool equals(const PeiMap& g, const PeiMap& h);
// merge pieces carrying the same isometry where their union is an orthant
PeiMap simplify(const PeiMap& g);

OrthoSet support(const PeiMap& g);
int rank(const PeiMap& g);  // -1 for the identity

struct GermAction {
  Germ source;
  Germ image;
  Orthant rep;            // orthant of the source germ on which g is isometric
  Isometry iso;           // the piece isometry
  std::vector<int> perm;  // i-th canonical direction -> perm[i]-th direction of image
  std::vector<int> sign;  // always +1 for bijections; kept for validation
  Point translation;      // in canonical coordinates of the image coset
  bool is_translation() const;
};

GermAction germ_action(const PeiMap& g, const Germ& germ);
Int flow(const PeiMap& g, const Germ& germ);
std::map<Germ, Int> global_flow(const PeiMap& g, int k);

struct Invariants {
  int rank = -1;
  bool in_Gk = false;
  bool in_C = false;
  bool in_Cord = false;
  bool stagnant = false;
  std::optional<int> parity_germs;
  std::optional<int> parity_axes;
  bool in_altGk = false;
  bool is_pet = false;
  std::map<Germ, Int> flow;
};

Invariants invariants(const PeiMap& g, int k);

int permutation_parity(const std::vector<int>& perm);

}  // namespace orth
