#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orth/akmod.hpp"
#include "orth/intlattice.hpp"

namespace orth::test {

// Oracle: the submodule generated inside an R-row truncation, closed under a
// generating set of the row permutations and per-row column permutations.
struct Truncation {
  int R, k;
  IntLattice L;
  Truncation(int R_, int k_) : R(R_), k(k_), L(R_ * k_) {}

  Point embed(const GermMatrix& m) const {
    Point v(R * k, 0);
    int i = 0;
    for (const auto& [g, row] : m.rows) {
      for (int j = 0; j < k; ++j) v[i * k + j] = row[j];
      ++i;
    }
    return v;
  }
  Point row_perm(const Point& v, const std::vector<int>& to) const {
    Point w(v.size());
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < k; ++j) w[to[i] * k + j] = v[i * k + j];
    return w;
  }
  Point col_perm_row0(const Point& v, const std::vector<int>& to) const {
    Point w = v;
    for (int j = 0; j < k; ++j) w[to[j]] = v[j];
    return w;
  }
  void close(const std::vector<GermMatrix>& gens) {
    for (const GermMatrix& m : gens) L.add(embed(m));
    std::vector<int> swap_r(R), cyc_r(R), swap_c(k), cyc_c(k);
    for (int i = 0; i < R; ++i) swap_r[i] = cyc_r[i] = i;
    std::swap(swap_r[0], swap_r[1]);
    for (int i = 0; i < R; ++i) cyc_r[i] = (i + 1) % R;
    for (int j = 0; j < k; ++j) swap_c[j] = cyc_c[j] = j;
    if (k > 1) std::swap(swap_c[0], swap_c[1]);
    for (int j = 0; j < k; ++j) cyc_c[j] = (j + 1) % k;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Point& b : L.basis()) {
        changed = L.add(row_perm(b, swap_r)) || changed;
        changed = L.add(row_perm(b, cyc_r)) || changed;
        changed = L.add(col_perm_row0(b, swap_c)) || changed;
        changed = L.add(col_perm_row0(b, cyc_c)) || changed;
      }
    }
  }
  std::optional<Int> q() const {
    if (k == 1) return 1;
    Point e(R * k, 0);
    e[0] = 1;
    e[1] = -1;
    return L.min_multiple(e);
  }
  std::optional<Int> p() const {
    Point d(R * k, 0);
    for (int j = 0; j < k; ++j) {
      d[j] = 1;
      d[k + j] = -1;
    }
    return L.min_multiple(d);
  }
};

}  // namespace orth::test
