#include "orth/morse.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace orth {

namespace {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail("overflow", "integer overflow in Smith normal form");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail("overflow", "integer overflow in Smith normal form");
  return r;
}

Orthant step_back(const Orthant& L, int i) {
  Orthant M = L;
  M.base[i] -= L.dir[i];
  return M;
}

const std::vector<Orthant>& checked_maximal(const OrthoSet& S, const Orthant& L, std::vector<Orthant>& cache) {
  if (cache.empty()) cache = maximal_orthants(S);
  if (std::find(cache.begin(), cache.end(), L) == cache.end())
    fail("not-maximal", "orthant is not a maximal orthant of the set");
  return cache;
}

OrthoSet boundary_image(const MaximalBelow& m) { return image_set(restrict_to(m.b, diagonal_boundary(m.L))); }

}  // namespace

Int height(const PeiMap& f) {
  if (!f.injective) fail("not-injective", "height is defined for injections");
  const int n = rank_height(f.domain).rank;
  if (n <= 0) return 0;
  return height_at(subtract(f.domain, image_set(f)), n - 1);
}

PeiMap restrict_to(const PeiMap& f, const OrthoSet& A) {
  if (!subset(A, f.domain)) fail("outside-domain", "restriction to a set outside the domain");
  std::vector<PeiPiece> ps;
  for (const PeiPiece& p : f.pieces)
    for (const Orthant& Q : intersect(OrthoSet::of(p.dom), A).pieces()) ps.push_back({Q, p.iso});
  return make_pei(A, std::move(ps), f.injective ? Require::Injection : Require::Map);
}

std::vector<Orthant> maximal_orthants(const OrthoSet& S) {
  const std::vector<Germ> germs = max_germs(S);
  std::vector<Orthant> reps;
  for (const Germ& g : germs) reps.push_back(*represent(S, g));
  std::vector<Orthant> out;
  for (std::size_t j = 0; j < reps.size(); ++j) {
    Orthant L = reps[j];
    bool grew = true;
    for (int guard = 0; grew; ++guard) {
      if (guard > 100000) fail("internal", "maximal orthant does not stabilize");
      grew = false;
      for (int i : L.axes()) {
        const Orthant M = step_back(L, i);
        if (!subset(OrthoSet::of(M), S)) continue;
        bool clash = false;
        for (std::size_t o = 0; o < reps.size() && !clash; ++o) clash = o != j && !disjoint(M, reps[o]);
        if (clash) continue;
        L = M;
        grew = true;
      }
    }
    out.push_back(L);
  }
  return out;
}

bool is_maximal_orthant(const OrthoSet& S, const Orthant& L) {
  const auto all = maximal_orthants(S);
  return std::find(all.begin(), all.end(), L) != all.end();
}

OrthoSet diagonal_boundary(const Orthant& L) {
  return OrthoSet::from_pieces(L.dim(), subtract(L, L.translated(L.diagonal())), true);
}

PeiMap diagonal_unit_translation(const OrthoSet& S, const Orthant& L) {
  std::vector<Orthant> cache;
  checked_maximal(S, L, cache);
  return extend_by_identity(S, {{L, Isometry::translation(L.diagonal())}}, Require::Injection);
}

PeiMap monoid_element(const OrthoSet& S, const MonoidWord& t) {
  std::vector<Orthant> cache;
  std::vector<PeiPiece> ps;
  for (const auto& [L, m] : t) {
    checked_maximal(S, L, cache);
    if (m < 0) fail("out-of-range", "monoid multiplicities are non-negative");
    if (m > 0) ps.push_back({L, Isometry::translation(scale(L.diagonal(), m))});
  }
  return extend_by_identity(S, std::move(ps), Require::Injection);
}

std::optional<std::map<Germ, Int>> diagonal_lengths(const PeiMap& f) {
  if (!f.injective) return std::nullopt;
  std::map<Germ, Int> out;
  for (const Germ& g : max_germs(f.domain)) {
    const GermAction ga = germ_action(f, g);
    if (!ga.is_translation()) return std::nullopt;
    const Point& t = ga.translation;
    if (!t.empty() && std::any_of(t.begin(), t.end(), [&](Int v) { return v != t.front(); })) return std::nullopt;
    out[g] = t.empty() ? 0 : t.front();
  }
  return out;
}

bool is_diagonal(const PeiMap& f) { return diagonal_lengths(f).has_value(); }

bool is_superdiagonal(const PeiMap& f, const std::vector<std::vector<Orthant>>& components) {
  const auto len = diagonal_lengths(f);
  if (!len) return false;
  for (const auto& comp : components) {
    std::optional<Int> first;
    for (const Orthant& L : comp) {
      const auto it = len->find(germ_of(L));
      if (it == len->end()) fail("precondition", "component orthant is not maximal in the domain");
      if (first && *first != it->second) return false;
      first = it->second;
    }
  }
  return true;
}

std::optional<MonoidWord> order_leq(const PeiMap& f, const PeiMap& f2) {
  if (!equals(f.domain, f2.domain)) return std::nullopt;
  const auto a = diagonal_lengths(f);
  const auto b = diagonal_lengths(f2);
  if (!a || !b) return std::nullopt;
  MonoidWord t;
  for (const Orthant& L : maximal_orthants(f.domain)) {
    const Germ g = germ_of(L);
    const Int m = b->at(g) - a->at(g);
    if (m < 0) return std::nullopt;
    if (m > 0) t[L] = m;
  }
  if (!equals(compose(monoid_element(f.domain, t), f), f2)) return std::nullopt;
  return t;
}

MaximalBelow maximal_below(const PeiMap& f, const Orthant& L, const PeiMap& bp) {
  if (!f.injective || !bp.injective) fail("not-injective", "maximal elements are built from injections");
  const OrthoSet& S = f.domain;
  std::vector<Orthant> cache;
  checked_maximal(S, L, cache);
  if (!equals(bp.domain, diagonal_boundary(L))) fail("precondition", "b' must be defined on the boundary of L");
  const OrthoSet img = image_set(bp);
  if (!subset(img, S)) fail("outside-domain", "b' leaves the set");
  if (!disjoint(img, image_set(f))) fail("image-overlap", "image of b' meets the image of f");

  // b'' = t_L^-1 f on S - ∂L
  const Point u = L.diagonal();
  const OrthoSet rest = subtract(S, L);
  const Isometry back = Isometry::translation(scale(u, -1));
  std::vector<PeiPiece> ps = bp.pieces;
  for (const PeiPiece& p : f.pieces) {
    for (const Orthant& Q : intersect(OrthoSet::of(p.dom), rest).pieces()) ps.push_back({Q, p.iso});
    for (const Orthant& Q : intersect(p.dom, L)) ps.push_back({Q.translated(u), compose(back, p.iso)});
  }
  MaximalBelow out{simplify(make_pei(S, std::move(ps), Require::Injection)), L};
  if (!equals(compose(diagonal_unit_translation(S, L), out.b), f) ||
      height(out.b) + L.rank() != height(f))
    fail("internal", "maximal element failed validation");
  return out;
}

std::optional<LowerBound> common_lower_bound(const PeiMap& f, const std::vector<MaximalBelow>& B) {
  if (B.empty()) fail("precondition", "no maximal elements given");
  const OrthoSet& S = f.domain;
  std::vector<OrthoSet> imgs;
  for (const MaximalBelow& m : B) imgs.push_back(boundary_image(m));
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      if (B[i].L == B[j].L) return std::nullopt;
      if (!disjoint(imgs[i], imgs[j])) return std::nullopt;
    }

  // δ_B = b on each L_b, f on S'
  std::vector<PeiPiece> ps;
  OrthoSet rest = S;
  for (const MaximalBelow& m : B) {
    const auto part = restrict_to(m.b, OrthoSet::of(m.L)).pieces;
    ps.insert(ps.end(), part.begin(), part.end());
    rest = subtract(rest, m.L);
  }
  const auto part = restrict_to(f, rest).pieces;
  ps.insert(ps.end(), part.begin(), part.end());
  LowerBound lb{simplify(make_pei(S, std::move(ps), Require::Injection)), {}};

  for (std::size_t i = 0; i < B.size(); ++i) {
    MonoidWord s;
    for (std::size_t j = 0; j < B.size(); ++j)
      if (j != i) s[B[j].L] = 1;
    if (!equals(compose(monoid_element(S, s), lb.delta), B[i].b)) fail("internal", "δ_B is not below an element of B");
    lb.witnesses.push_back(std::move(s));
  }
  const int n = rank_height(S).rank;
  const Int h = height(lb.delta);
  if (h != height(f) - static_cast<Int>(B.size()) * n || h < height(f) - rank_height(S).height * n)
    fail("internal", "height of δ_B out of range");
  return lb;
}

int ColoredGraph::colors() const {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

ColoredGraph make_colored_graph(std::vector<int> color, std::vector<std::pair<int, int>> edges) {
  const int v = static_cast<int>(color.size());
  for (int c : color)
    if (c < 0) fail("invalid-graph", "negative color");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v) fail("invalid-graph", "edge endpoint out of range");
    if (a == b) fail("invalid-graph", "loop edge");
    if (color[a] == color[b]) fail("invalid-graph", "monochromatic edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ColoredGraph{std::move(color), std::move(edges)};
}

namespace {

std::vector<std::vector<bool>> adjacency(const ColoredGraph& g) {
  std::vector<std::vector<bool>> adj(g.vertices(), std::vector<bool>(g.vertices(), false));
  for (const auto& [a, b] : g.edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

// calls f on every m-subset of items until f returns false
template <class F>
bool all_subsets(const std::vector<int>& items, std::size_t m, F f) {
  if (m > items.size()) return true;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) pick[i] = items[idx[i]];
    if (!f(pick)) return false;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == items.size() - m + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool bouquet_conditions(const ColoredGraph& g) {
  const int h = g.colors();
  if (h == 0) return false;
  const auto adj = adjacency(g);
  for (int c = 0; c < h; ++c) {
    std::vector<int> mine, others;
    for (int v = 0; v < g.vertices(); ++v) (g.color[v] == c ? mine : others).push_back(v);
    if (mine.size() < 2) return false;
    // the condition is monotone in the chosen set, so maximal choices suffice
    const std::size_t m = std::min<std::size_t>(2 * (h - 1), others.size());
    const bool ok = all_subsets(others, m, [&](const std::vector<int>& U) {
      int common = 0;
      for (int v : mine)
        if (std::all_of(U.begin(), U.end(), [&](int u) { return adj[u][v]; })) ++common;
      return common >= 2;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> flag_complex(const ColoredGraph& g, std::size_t max_simplices) {
  const auto adj = adjacency(g);
  std::vector<std::vector<std::vector<int>>> out;
  std::size_t total = 0;
  std::vector<std::vector<int>> level;
  for (int v = 0; v < g.vertices(); ++v) level.push_back({v});
  while (!level.empty()) {
    total += level.size();
    if (total > max_simplices) fail("budget-exhausted", "flag complex exceeds the simplex budget");
    std::vector<std::vector<int>> next;
    for (const auto& c : level)
      for (int v = c.back() + 1; v < g.vertices(); ++v)
        if (std::all_of(c.begin(), c.end(), [&](int u) { return adj[u][v]; })) {
          next.push_back(c);
          next.back().push_back(v);
        }
    out.push_back(std::move(level));
    level = std::move(next);
  }
  return out;
}

std::vector<Int> smith_invariants(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    auto pick = [&]() {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return false;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      return true;
    };
    if (!pick()) break;
    while (true) {
      bool dirty = false;
      const Int p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Int q = m[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
        dirty = dirty || m[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Int q = m[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
        dirty = dirty || m[t][j] != 0;
      }
      if (dirty) {
        pick();
        continue;
      }
      // the pivot must divide the trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    out.push_back(std::llabs(m[t][t]));
  }
  return out;
}

bool Homology::free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

Homology reduced_homology(const std::vector<std::vector<std::vector<int>>>& simplices) {
  const std::size_t top = simplices.size();
  Homology out;
  if (top == 0) return out;
  // inv[d]: invariant factors of ∂_d : C_d -> C_(d-1), with C_(-1) = Z
  std::vector<std::vector<Int>> inv(top + 1);
  inv[0] = {1};
  for (std::size_t d = 1; d < top; ++d) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < simplices[d - 1].size(); ++i) index[simplices[d - 1][i]] = i;
    std::vector<std::vector<Int>> m(simplices[d - 1].size(), std::vector<Int>(simplices[d].size(), 0));
    for (std::size_t c = 0; c < simplices[d].size(); ++c) {
      const auto& s = simplices[d][c];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> face = s;
        face.erase(face.begin() + k);
        m[index.at(face)][c] = k % 2 == 0 ? 1 : -1;
      }
    }
    inv[d] = smith_invariants(std::move(m));
  }
  for (std::size_t d = 0; d < top; ++d) {
    const Int dim = static_cast<Int>(simplices[d].size());
    out.betti.push_back(dim - static_cast<Int>(inv[d].size()) - static_cast<Int>(inv[d + 1].size()));
    std::vector<Int> tors;
    for (Int v : inv[d + 1])
      if (v > 1) tors.push_back(v);
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

FlagHomologyReport flag_homology(const ColoredGraph& g, std::size_t max_simplices) {
  FlagHomologyReport r;
  r.conditions_ok = bouquet_conditions(g);
  const auto cx = flag_complex(g, max_simplices);
  for (const auto& level : cx) r.simplices += level.size();
  r.homology = reduced_homology(cx);
  const int d = g.colors() - 1;
  bool concentrated = d >= 0 && r.homology.free();
  for (std::size_t k = 0; k < r.homology.betti.size(); ++k)
    if (static_cast<int>(k) != d && r.homology.betti[k] != 0) concentrated = false;
  if (concentrated) {
    const Int b = d < static_cast<int>(r.homology.betti.size()) ? r.homology.betti[d] : 0;
    r.bouquet = std::make_pair(d, b);
    if (d >= 2) r.note = "homology-consistent with bouquet; fundamental group unchecked";
  }
  return r;
}

}  // namespace orth
