#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "orth/orthoset.hpp"

namespace orth::test {

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline Orthant random_orthant(Rng& rng, int n, Int lo, Int hi, int min_rank = 0) {
  Orthant L{Point(n), std::vector<int>(n)};
  do {
    for (int i = 0; i < n; ++i) {
      L.base[i] = uniform(rng, lo, hi);
      L.dir[i] = static_cast<int>(uniform(rng, -1, 1));
    }
  } while (L.rank() < min_rank);
  return L;
}

inline OrthoSet random_set(Rng& rng, int n, Int lo, Int hi, int max_orthants) {
  OrthoSet s(n);
  const int m = static_cast<int>(uniform(rng, 0, max_orthants));
  for (int i = 0; i < m; ++i) s = unite(s, OrthoSet::of(random_orthant(rng, n, lo, hi)));
  return s;
}

inline SignedPerm random_perm(Rng& rng, int n) {
  SignedPerm A = SignedPerm::identity(n);
  std::shuffle(A.image.begin(), A.image.end(), rng);
  for (int& s : A.sign) s = uniform(rng, 0, 1) ? 1 : -1;
  return A;
}

inline Isometry random_iso(Rng& rng, int n, Int span) {
  Isometry g{Point(n), random_perm(rng, n)};
  for (Int& a : g.shift) a = uniform(rng, -span, span);
  return g;
}

inline Point random_point(Rng& rng, int n, Int lo, Int hi) {
  Point p(n);
  for (Int& x : p) x = uniform(rng, lo, hi);
  return p;
}

// calls f on every point of the box [lo,hi]^n
inline void for_box(int n, Int lo, Int hi, const std::function<void(const Point&)>& f) {
  Point p(n, lo);
  while (true) {
    f(p);
    int i = n - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) return;
    ++p[i];
  }
}

// points far out along every ray direction of the pieces, starting from points of the box
inline std::vector<Point> tail_points(const std::vector<Orthant>& pieces, Int depth) {
  std::vector<Point> out;
  for (const Orthant& L : pieces) {
    Point p = L.base;
    for (int i = 0; i < L.dim(); ++i) p[i] += L.dir[i] * depth;
    out.push_back(p);
    for (int i : L.axes()) {
      Point q = L.base;
      q[i] += L.dir[i] * depth;
      out.push_back(q);
    }
  }
  return out;
}

inline bool pairwise_disjoint(const OrthoSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!disjoint(s.pieces()[i], s.pieces()[j])) return false;
  return true;
}

}  // namespace orth::test
