#include "orth/akmod.hpp"

#include <algorithm>
#include <numeric>

#include "orth/intlattice.hpp"

namespace orth {

namespace {

void need_k(const GermMatrix& a, const GermMatrix& b) {
  if (a.k != b.k) fail("dimension-mismatch", "matrices with different column counts");
}

GermMatrix pruned(GermMatrix m) {
  for (auto it = m.rows.begin(); it != m.rows.end();) {
    if (std::all_of(it->second.begin(), it->second.end(), [](Int v) { return v == 0; }))
      it = m.rows.erase(it);
    else
      ++it;
  }
  return m;
}

// calls f on every distinct permutation of the entries of row
template <class F>
void for_permutations(Point row, Int& count, Int budget, F f) {
  std::sort(row.begin(), row.end());
  do {
    if (++count > budget) fail("budget-exhausted", "orbit budget exhausted");
    f(row);
  } while (std::next_permutation(row.begin(), row.end()));
}

}  // namespace

Int GermMatrix::total() const {
  Int t = 0;
  for (const auto& [g, row] : rows)
    for (Int v : row) t += v;
  return t;
}

GermMatrix operator+(const GermMatrix& a, const GermMatrix& b) {
  need_k(a, b);
  GermMatrix m = a;
  for (const auto& [g, row] : b.rows) {
    auto& r = m.rows[g];
    r.resize(b.k, 0);
    for (int j = 0; j < b.k; ++j) r[j] += row[j];
  }
  return pruned(std::move(m));
}

GermMatrix operator-(const GermMatrix& a) {
  GermMatrix m = a;
  for (auto& [g, row] : m.rows)
    for (Int& v : row) v = -v;
  return m;
}

GermMatrix matrix_from_rows(int k, const std::map<Germ, std::vector<Int>>& rows) {
  GermMatrix m{k, {}};
  for (const auto& [g, row] : rows) {
    if (static_cast<int>(row.size()) != k || g.rank() != k)
      fail("dimension-mismatch", "row length must equal the germ rank k");
    m.rows[g] = row;
  }
  return pruned(std::move(m));
}

Germ stack_germ(int k, Int j) {
  Orthant L{Point(k + 1, 0), std::vector<int>(k + 1, 0)};
  for (int a = 0; a < k; ++a) L.dir[a] = 1;
  L.base[k] = j;
  return germ_of(L);
}

GermMatrix matrix_of(const PeiMap& g, int k) {
  if (k < 1) fail("out-of-range", "matrix module needs k >= 1");
  GermMatrix m{k, {}};
  if (rank(g) < k) return m;
  if (!invariants(g, k).in_Cord) fail("not-ordered", "element does not lie in C^ord of the rank-k germs");
  for (const Germ& germ : top_germs(support(g))) m.rows[germ] = germ_action(g, germ).translation;
  return pruned(std::move(m));
}

MatrixClass classify(const GermMatrix& m) {
  MatrixClass c;
  c.in_E = true;
  c.in_D = true;
  std::vector<Int> colsum(m.k, 0);
  for (const auto& [g, row] : m.rows) {
    const Int s = std::accumulate(row.begin(), row.end(), Int{0});
    c.flow_column[g] = s;
    c.in_E = c.in_E && s == 0;
    c.in_D = c.in_D && std::all_of(row.begin(), row.end(), [&](Int v) { return v == row.front(); });
    for (int j = 0; j < m.k; ++j) colsum[j] += row[j];
  }
  c.in_D = c.in_D && std::all_of(colsum.begin(), colsum.end(), [](Int v) { return v == 0; });
  return c;
}

GermMatrix diagonal_average(const GermMatrix& m) {
  GermMatrix out{m.k, {}};
  for (const auto& [g, row] : m.rows) {
    // every column of the sum over cyclic shifts collects the whole row
    const Int s = std::accumulate(row.begin(), row.end(), Int{0});
    out.rows[g] = std::vector<Int>(m.k, s);
  }
  return pruned(std::move(out));
}

SubmoduleInvariants submodule_invariants(const std::vector<GermMatrix>& gens, Int orbit_budget) {
  if (gens.empty()) fail("precondition", "no generators");
  const int k = gens.front().k;
  for (const GermMatrix& m : gens) {
    if (m.k != k) fail("dimension-mismatch", "generators with different column counts");
    if (m.is_zero()) fail("precondition", "generators must be nonzero");
  }
  // M = { x : every row in P, the sum of the rows in E0 } where P is spanned
  // by the column permutations of generator rows and E0 by the generator
  // column sums and the differences σα - α
  IntLattice P(k), E0(k);
  SubmoduleInvariants out;
  for (const GermMatrix& m : gens) {
    Point colsum(k, 0);
    for (const auto& [g, row] : m.rows) {
      colsum = add(colsum, row);
      for_permutations(row, out.orbit_vectors, orbit_budget, [&](const Point& img) {
        P.add(img);
        E0.add(sub(img, row));
      });
    }
    E0.add(colsum);
  }
  if (k == 1) {
    out.q = 1;  // E is zero
  } else {
    Point e(k, 0);
    e[0] = 1;
    e[1] = -1;
    out.q = E0.min_multiple(e);
  }
  out.p = P.min_multiple(Point(k, 1));
  return out;
}

}  // namespace orth
