#pragma once

#include <vector>

#include "orth/pei.hpp"

namespace orth {

enum class NormalMode { Pet, Pei };

struct NormalForm {
  OrthoSet set;
  std::vector<std::vector<Orthant>> stacks;  // parallel classes of the output
  PeiMap witness;                            // domain S, image set
};

// Pei mode: one stack of h(S) rank-k orthants, k = rk S, with base (B,...,B)
// and members spread along axis k. For k = N the h(S) <= 2^N top orthants are
// quadrants with distinct sign patterns based at B times their signs.
// Pet mode: translations only; every stack whose indicator lies below the
// indicator of another stack is fed into a maximal host. Needs rk S < N.
NormalForm normal_form(const OrthoSet& s, NormalMode mode, Int B = 1);

// no orthant of one stack is parallel to a suborthant of another stack,
// and every stack consists of pairwise disjoint parallel orthants
bool no_parallel_suborthant(const std::vector<std::vector<Orthant>>& stacks);

// pei-bijection between two sets of equal rank and height, through the pei
// normal form at a common location
PeiMap pei_isomorphism(const OrthoSet& from, const OrthoSet& to);

}  // namespace orth
