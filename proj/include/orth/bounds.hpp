#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orth/pei.hpp"

namespace orth {

// The boundary of S at infinity in direction x: the rank-1 germs of S
// parallel to x, each recorded by its base point with coordinate x deleted.
struct BoundarySet {
  int axis = 0;
  OrthoSet set;                // in dimension N - 1
  std::vector<Orthant> lifts;  // per piece of set: the rank + 1 orthant of S above it, lowest in x
};

// needs S inside N^N
BoundarySet boundary(const OrthoSet& S, int x);
// base point of the maximal ray of S over the boundary point p
Point section_point(const OrthoSet& S, int x, const Point& p);

// action of a pet permutation of S on its rays parallel to x
PeiMap induced_boundary_map(const PeiMap& g, int x);
// g' acting on the rays over the boundary from a common height on, identity elsewhere
PeiMap section_lift(const PeiMap& gb, const OrthoSet& S, int x);

// sum of the stack heights over the link of Y: rank-n germs of S whose axes contain Y
Int link_height(const OrthoSet& S, const std::vector<int>& Y);

enum class GroupKind { Pet, Pei };

struct FlBoundsReport {
  GroupKind kind = GroupKind::Pet;
  Int lower = 0;
  std::optional<Int> upper;  // nothing: no finite upper bound known
  bool infinite = false;     // finite group, fl = infinity
  std::vector<std::string> provenance;

  bool exact() const { return !infinite && upper && *upper == lower; }
};

FlBoundsReport fl_bounds(const OrthoSet& S, GroupKind kind);
std::string to_string(const FlBoundsReport& r);

}  // namespace orth
