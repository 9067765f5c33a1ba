#pragma once

#include <map>
#include <vector>

#include "orth/orthoset.hpp"

namespace orth {

// Commensurability class of an orthant. frozen[i] holds the coordinate of a
// zero-indicator axis and is 0 on direction axes, so equality is structural.
struct Germ {
  std::vector<int> dir;
  std::vector<Int> frozen;

  int dim() const { return static_cast<int>(dir.size()); }
  int rank() const;
  std::vector<int> axes() const;  // X(γ), ordered by axis index
  Orthant representative() const;
  bool in_coset(const Point& p) const;

  auto operator<=>(const Germ&) const = default;
  bool operator==(const Germ&) const = default;
};

Germ germ_of(const Orthant& L);
bool commensurable(const Orthant& a, const Orthant& b);
bool germ_leq(const Germ& g, const Germ& h);
// germs of the pieces, deduplicated, maximal elements only
std::vector<Germ> max_germs(const OrthoSet& s);
// the maximal germs of rank rk s
std::vector<Germ> top_germs(const OrthoSet& s);
// an orthant of s representing γ, or nothing
std::optional<Orthant> represent(const OrthoSet& s, const Germ& g);

struct IndicatorData {
  std::map<std::vector<int>, Int> height;  // h_S on its support
  std::vector<std::vector<int>> maximal_indicators;  // max Γ_0^*(S_τ)
  bool quasi_normal = false;
};

IndicatorData indicator_data(const OrthoSet& s);

}  // namespace orth
