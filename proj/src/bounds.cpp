#include "orth/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orth/germs.hpp"

namespace orth {

namespace {

Point drop(const Point& p, int x) {
  Point q = p;
  q.erase(q.begin() + x);
  return q;
}

Point insert(const Point& p, int x, Int v) {
  Point q = p;
  q.insert(q.begin() + x, v);
  return q;
}

Orthant project(const Orthant& L, int x) {
  std::vector<int> d = L.dir;
  d.erase(d.begin() + x);
  return Orthant{drop(L.base, x), std::move(d)};
}

Orthant lift(const Orthant& P, int x, Int t) {
  std::vector<int> d = P.dir;
  d.insert(d.begin() + x, 1);
  return Orthant{insert(P.base, x, t), std::move(d)};
}

void require_axis(const OrthoSet& S, int x) {
  if (S.dim() < 2) fail("out-of-range", "boundary needs ambient dimension at least 2");
  if (x < 0 || x >= S.dim()) fail("out-of-range", "axis out of range");
}

void require_positive(const OrthoSet& S) {
  if (!subset(S, OrthoSet::of(Orthant::positive(S.dim()))))
    fail("not-positive", "set is not contained in the positive cone");
}

// every ray of S parallel to x lies in S from this height on
Int common_height(const OrthoSet& S, int x) {
  Int t = 0;
  for (const Orthant& L : S.pieces())
    if (L.dir[x] == 1) t = std::max(t, L.base[x]);
  return t;
}

void for_subsets(const std::vector<int>& from, std::size_t k, std::vector<int>& cur, std::size_t start,
                 std::vector<std::vector<int>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < from.size(); ++i) {
    cur.push_back(from[i]);
    for_subsets(from, k, cur, i + 1, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(const std::vector<int>& from, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for_subsets(from, k, cur, 0, out);
  return out;
}

Int binom(Int n, Int k) {
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct SkeletonShape {
  Int c = 0;
  int r = 0;
};

// S is pet-isomorphic to c copies of the n-skeleton of a rank-r orthant when
// its rank-n germs fill every n-face indicator of one rank-r indicator equally
// often and every other maximal germ is parallel to a face of one of them
std::optional<SkeletonShape> skeleton_shape(const OrthoSet& S) {
  const int n = rank_height(S).rank;
  std::map<std::vector<int>, Int> count;
  for (const Germ& g : top_germs(S)) ++count[g.dir];
  std::vector<int> sign(S.dim(), 0);
  for (const auto& [d, c] : count)
    for (int i = 0; i < S.dim(); ++i) {
      if (d[i] == 0) continue;
      if (sign[i] != 0 && sign[i] != d[i]) return std::nullopt;
      sign[i] = d[i];
    }
  const int r = static_cast<int>(std::count_if(sign.begin(), sign.end(), [](int s) { return s != 0; }));
  if (static_cast<Int>(count.size()) != binom(r, n)) return std::nullopt;
  const Int c = count.begin()->second;
  for (const auto& [d, k] : count)
    if (k != c) return std::nullopt;
  for (const Germ& g : max_germs(S)) {
    if (g.rank() == n) continue;
    const bool parallel = std::any_of(count.begin(), count.end(),
                                      [&](const auto& e) { return indicator_leq(g.dir, e.first); });
    if (!parallel) return std::nullopt;
  }
  return SkeletonShape{c, r};
}

}  // namespace

BoundarySet boundary(const OrthoSet& S, int x) {
  require_axis(S, x);
  require_positive(S);
  BoundarySet out;
  out.axis = x;
  out.set = OrthoSet(S.dim() - 1);
  for (const Orthant& L : S.pieces())
    if (L.dir[x] == 1) out.set = unite(out.set, OrthoSet::of(project(L, x)));
  const Int top = common_height(S, x);
  for (const Orthant& P : out.set.pieces()) {
    Int t = top;
    if (!subset(OrthoSet::of(lift(P, x, t)), S)) fail("internal", "rays do not reach the common height");
    while (t > 0 && subset(OrthoSet::of(lift(P, x, t - 1)), S)) --t;
    out.lifts.push_back(lift(P, x, t));
  }
  return out;
}

Point section_point(const OrthoSet& S, int x, const Point& p) {
  require_axis(S, x);
  require_positive(S);
  require_dim(S.dim() - 1, static_cast<int>(p.size()));
  Int t = common_height(S, x);
  if (!S.contains(insert(p, x, t))) fail("outside-domain", "point is not on the boundary");
  while (t > 0 && S.contains(insert(p, x, t - 1))) --t;
  return insert(p, x, t);
}

PeiMap induced_boundary_map(const PeiMap& g, int x) {
  if (!g.bijective) fail("not-bijective", "boundary action of a non-bijection");
  if (!g.pet) fail("not-pet", "boundary action needs a pet permutation");
  const BoundarySet B = boundary(g.domain, x);
  std::vector<PeiPiece> ps;
  for (const PeiPiece& p : g.pieces)
    if (p.dom.dir[x] == 1) ps.push_back({project(p.dom, x), Isometry::translation(drop(p.iso.shift, x))});
  return simplify(make_pei(B.set, std::move(ps), Require::Bijection));
}

PeiMap section_lift(const PeiMap& gb, const OrthoSet& S, int x) {
  if (!gb.bijective) fail("not-bijective", "lift of a non-bijection");
  if (!gb.pet) fail("not-pet", "lift needs a pet permutation");
  const BoundarySet B = boundary(S, x);
  if (!equals(B.set, gb.domain)) fail("domain-mismatch", "map is not defined on the boundary of S");
  const Int t = common_height(S, x);
  std::vector<PeiPiece> ps;
  for (const PeiPiece& p : gb.pieces)
    ps.push_back({lift(p.dom, x, t), Isometry::translation(insert(p.iso.shift, x, 0))});
  return extend_by_identity(S, std::move(ps), Require::Bijection);
}

Int link_height(const OrthoSet& S, const std::vector<int>& Y) {
  require_positive(S);
  const int n = rank_height(S).rank;
  if (static_cast<int>(Y.size()) != n - 1) fail("out-of-range", "Y must have rk S - 1 elements");
  for (int y : Y)
    if (y < 0 || y >= S.dim()) fail("out-of-range", "axis out of range");
  Int h = 0;
  for (const Germ& g : top_germs(S))
    if (std::all_of(Y.begin(), Y.end(), [&](int y) { return g.dir[y] != 0; })) ++h;
  return h;
}

FlBoundsReport fl_bounds(const OrthoSet& S, GroupKind kind) {
  FlBoundsReport r;
  r.kind = kind;
  const RankHeight rh = rank_height(S);
  if (rh.rank <= 0) {
    r.infinite = true;
    r.provenance.push_back("finite set: the group is finite");
    return r;
  }
  const int n = rh.rank;
  const Int h = rh.height;

  if (kind == GroupKind::Pei) {
    r.lower = h - 1;
    r.provenance.push_back("pei lower bound h(S)-1 via the diagonal subgroup");
    if (equals(S, OrthoSet::universe(S.dim())))
      r.provenance.push_back("pei(Z^n) lower bound 2^n-1");
    if (n == 1) {
      r.upper = h - 1;
      r.provenance.push_back("rank 1: Houghton group of finite index (Brown)");
    } else {
      r.provenance.push_back("pei upper bound unknown (open problem)");
    }
    return r;
  }

  bool have_lower = false;
  if (const auto sk = skeleton_shape(S)) {
    r.lower = sk->c - 1;
    have_lower = true;
    if (sk->r == n) {
      r.upper = sk->c - 1;
      r.provenance.push_back("stack of orthants: fl(pet) = h-1");
    } else {
      r.upper = sk->c * (sk->r - n + 1) - 1;
      r.provenance.push_back("stack of n-skeletons: c-1 <= fl(pet) <= c(r-n+1)-1");
    }
  }
  if (subset(S, OrthoSet::of(Orthant::positive(S.dim())))) {
    std::vector<int> axes(S.dim());
    for (int i = 0; i < S.dim(); ++i) axes[i] = i;
    std::optional<Int> best;
    for (const auto& Y : subsets(axes, n - 1)) {
      const Int lh = link_height(S, Y);
      if (lh > 0 && (!best || lh < *best)) best = lh;
    }
    if (best && (!r.upper || *best - 1 < *r.upper)) {
      r.upper = *best - 1;
      r.provenance.push_back("link bound: fl(pet) <= h(S(Lk Y))-1");
    }
  }
  if (!have_lower) r.provenance.push_back("trivial lower bound 0");
  if (!r.upper) r.provenance.push_back("pet upper bound unknown for this set");
  if (r.upper && *r.upper < r.lower) fail("internal", "inconsistent bounds");
  return r;
}

std::string to_string(const FlBoundsReport& r) {
  std::string s = std::string("group=") + (r.kind == GroupKind::Pet ? "pet" : "pei");
  if (r.infinite) {
    s += " lower=inf upper=inf exact=inf";
  } else {
    s += " lower=" + std::to_string(r.lower);
    s += " upper=" + (r.upper ? std::to_string(*r.upper) : std::string("inf"));
    s += " exact=" + (r.exact() ? std::to_string(r.lower) : std::string("none"));
  }
  for (const std::string& p : r.provenance) s += " [" + p + "]";
  return s;
}

}  // namespace orth
