#pragma once

#include <string>
#include <vector>

#include "orth/generators.hpp"

namespace orth {

// A word in the named generators whose product is g. Rank by rank from the
// top: transpositions fix the germ permutation, reflections the axis
// permutations, unit endotranslations and unit translations the germ
// translations; rank 0 ends in point transpositions.
std::vector<Generator> factor_generators(const PeiMap& g);

struct AbelianClass {
  std::vector<int> value;               // coordinates in Z_2
  std::vector<std::string> generators;  // generator type behind each coordinate
  bool word_based = false;              // some coordinate counts factor-word letters
  bool experimental = false;            // the two-germ case
};

// Image of g in the abelianization of G_k(S), by the number of rank-k germs
// of S: at least 3 gives the two parities; 2 and 1 count letters of the
// factor word.
AbelianClass abelianization_class(const PeiMap& g, int k);

}  // namespace orth
