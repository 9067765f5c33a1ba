#pragma once

#include <string>
#include <vector>

#include "orth/generators.hpp"

namespace orth {

struct IdentityCheck {
  std::string name;       // short label, e.g. "translation-two-transpositions"
  std::string statement;  // the identity in words
  bool passed = false;
  std::string detail;     // error text when an evaluation threw
  std::string note;       // set when the checked form corrects a commonly stated variant
};

// Evaluates the orthant-transposition, translation, reflection and
// endotranslation identities as exact element equalities in Z^3. Failures are
// reported, never thrown.
std::vector<IdentityCheck> verify_identities();

// Isometry of K onto M taking the face F_x of K onto the face F_xm of M in
// canonical order and the axis x to xm.
Isometry face_pair_iso(const Orthant& K, int x, const Orthant& M, int xm);

// e-th power; negative e uses the inverse
PeiMap power(const PeiMap& g, int e);

}  // namespace orth
