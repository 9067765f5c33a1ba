#include "orth/orthoset.hpp"

#include <algorithm>
#include <limits>

namespace orth {

namespace {

constexpr Int kNeg = std::numeric_limits<Int>::min();
constexpr Int kPos = std::numeric_limits<Int>::max();
constexpr Int kMaxExpand = 4'000'000;

struct Iv {
  Int lo, hi;
  bool empty() const { return lo > hi; }
};

Iv axis_iv(const Orthant& L, int i) {
  const Int b = L.base[i];
  if (L.dir[i] == 0) return {b, b};
  if (L.dir[i] > 0) return {b, kPos};
  return {kNeg, b};
}

Iv meet(Iv a, Iv b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

using Box = std::vector<Iv>;

Box box_of(const Orthant& L) {
  Box b(L.dim());
  for (int i = 0; i < L.dim(); ++i) b[i] = axis_iv(L, i);
  return b;
}

struct Choice {
  Int base;
  int dir;
};

void expand(const Box& box, std::vector<Orthant>& out) {
  const int n = static_cast<int>(box.size());
  std::vector<std::vector<Choice>> opts(n);
  Int total = 1;
  for (int i = 0; i < n; ++i) {
    const Iv& v = box[i];
    if (v.empty()) return;
    if (v.lo == kNeg && v.hi == kPos) {
      opts[i] = {{0, 1}, {-1, -1}};
    } else if (v.lo == kNeg) {
      opts[i] = {{v.hi, -1}};
    } else if (v.hi == kPos) {
      opts[i] = {{v.lo, 1}};
    } else {
      if (v.hi - v.lo >= kMaxExpand) fail("too-large", "finite interval too long to expand");
      for (Int x = v.lo; x <= v.hi; ++x) opts[i].push_back({x, 0});
    }
    total *= static_cast<Int>(opts[i].size());
    if (total > kMaxExpand) fail("too-large", "box expansion exceeds limit");
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Orthant L;
    L.base.resize(n);
    L.dir.resize(n);
    for (int i = 0; i < n; ++i) {
      L.base[i] = opts[i][idx[i]].base;
      L.dir[i] = opts[i][idx[i]].dir;
    }
    out.push_back(std::move(L));
    int i = n - 1;
    while (i >= 0 && ++idx[i] == opts[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
}

}  // namespace

Orthant Orthant::make(Point base, std::vector<int> dir) {
  require_dim(static_cast<int>(base.size()), static_cast<int>(dir.size()));
  for (int d : dir)
    if (d < -1 || d > 1) fail("invalid-orthant", "direction entries must be -1, 0 or +1");
  return Orthant{std::move(base), std::move(dir)};
}

Orthant Orthant::point(Point p) {
  std::vector<int> d(p.size(), 0);
  return Orthant{std::move(p), std::move(d)};
}

Orthant Orthant::positive(int n) { return Orthant{Point(n, 0), std::vector<int>(n, 1)}; }

int Orthant::rank() const {
  int r = 0;
  for (int d : dir) r += d != 0;
  return r;
}

bool Orthant::contains(const Point& p) const {
  require_dim(dim(), static_cast<int>(p.size()));
  for (int i = 0; i < dim(); ++i) {
    if (dir[i] == 0 && p[i] != base[i]) return false;
    if (dir[i] > 0 && p[i] < base[i]) return false;
    if (dir[i] < 0 && p[i] > base[i]) return false;
  }
  return true;
}

std::vector<int> Orthant::axes() const {
  std::vector<int> a;
  for (int i = 0; i < dim(); ++i)
    if (dir[i]) a.push_back(i);
  return a;
}

Point Orthant::diagonal() const {
  Point u(dim(), 0);
  for (int i = 0; i < dim(); ++i) u[i] = dir[i];
  return u;
}

Orthant Orthant::translated(const Point& v) const { return Orthant{add(base, v), dir}; }

Orthant Orthant::face(const std::vector<int>& keep) const {
  Orthant F{base, std::vector<int>(dim(), 0)};
  for (int i : keep) {
    if (dir[i] == 0) fail("invalid-face", "axis is not a direction of the orthant");
    F.dir[i] = dir[i];
  }
  return F;
}

Orthant Orthant::face_without(int x) const {
  if (dir[x] == 0) fail("invalid-face", "axis is not a direction of the orthant");
  Orthant F = *this;
  F.dir[x] = 0;
  return F;
}

Orthant image(const Orthant& L, const Isometry& iso) {
  require_dim(L.dim(), iso.dim());
  Orthant M{apply(iso, L.base), std::vector<int>(L.dim(), 0)};
  for (int i = 0; i < L.dim(); ++i)
    if (L.dir[i]) M.dir[iso.rot.image[i]] = L.dir[i] * iso.rot.sign[i];
  return M;
}

bool disjoint(const Orthant& a, const Orthant& b) {
  require_dim(a.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i)
    if (meet(axis_iv(a, i), axis_iv(b, i)).empty()) return true;
  return false;
}

bool subset(const Orthant& a, const Orthant& b) {
  require_dim(a.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    Iv x = axis_iv(a, i), y = axis_iv(b, i);
    if (x.lo < y.lo || x.hi > y.hi) return false;
  }
  return true;
}

std::vector<Orthant> intersect(const Orthant& a, const Orthant& b) {
  require_dim(a.dim(), b.dim());
  Box box(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    box[i] = meet(axis_iv(a, i), axis_iv(b, i));
    if (box[i].empty()) return {};
  }
  std::vector<Orthant> out;
  expand(box, out);
  return out;
}

std::vector<Orthant> subtract(const Orthant& a, const Orthant& b) {
  if (disjoint(a, b)) return {a};
  std::vector<Orthant> out;
  Box cur = box_of(a);
  for (int i = 0; i < a.dim(); ++i) {
    const Iv I = cur[i];
    const Iv J = axis_iv(b, i);
    if (J.lo != kNeg && J.lo > I.lo) {
      Box part = cur;
      part[i] = {I.lo, std::min(I.hi, J.lo - 1)};
      expand(part, out);
    }
    if (J.hi != kPos && J.hi < I.hi) {
      Box part = cur;
      part[i] = {std::max(I.lo, J.hi + 1), I.hi};
      expand(part, out);
    }
    cur[i] = meet(I, J);
  }
  return out;
}

OrthoSet OrthoSet::from_pieces(int n, std::vector<Orthant> pieces, bool trusted) {
  for (const Orthant& L : pieces) {
    require_dim(n, L.dim());
    if (!trusted) (void)Orthant::make(L.base, L.dir);
  }
  if (!trusted) {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        if (!disjoint(pieces[i], pieces[j]))
          fail("overlapping-pieces", "pieces " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
  }
  OrthoSet s(n);
  s.pieces_ = std::move(pieces);
  return s;
}

OrthoSet OrthoSet::of(const Orthant& L) { return from_pieces(L.dim(), {L}, true); }

OrthoSet OrthoSet::universe(int n) {
  std::vector<Orthant> out;
  Box box(n, Iv{kNeg, kPos});
  expand(box, out);
  return from_pieces(n, std::move(out), true);
}

OrthoSet OrthoSet::point_set(int n, const std::vector<Point>& pts) {
  OrthoSet s(n);
  for (const Point& p : pts) {
    require_dim(n, static_cast<int>(p.size()));
    if (!s.contains(p)) s.pieces_.push_back(Orthant::point(p));
  }
  return s;
}

bool OrthoSet::contains(const Point& p) const {
  require_dim(n_, static_cast<int>(p.size()));
  for (const Orthant& L : pieces_)
    if (L.contains(p)) return true;
  return false;
}

OrthoSet subtract(const OrthoSet& s, const Orthant& t) {
  require_dim(s.dim(), t.dim());
  std::vector<Orthant> out;
  for (const Orthant& p : s.pieces()) {
    auto parts = subtract(p, t);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return OrthoSet::from_pieces(s.dim(), std::move(out), true);
}

OrthoSet subtract(const OrthoSet& s, const OrthoSet& t) {
  require_dim(s.dim(), t.dim());
  std::vector<Orthant> out;
  for (const Orthant& p : s.pieces()) {
    std::vector<Orthant> cur{p};
    for (const Orthant& q : t.pieces()) {
      std::vector<Orthant> next;
      for (const Orthant& c : cur) {
        auto parts = subtract(c, q);
        next.insert(next.end(), parts.begin(), parts.end());
      }
      cur.swap(next);
      if (cur.empty()) break;
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return OrthoSet::from_pieces(s.dim(), std::move(out), true);
}

OrthoSet intersect(const OrthoSet& s, const OrthoSet& t) {
  require_dim(s.dim(), t.dim());
  std::vector<Orthant> out;
  for (const Orthant& p : s.pieces())
    for (const Orthant& q : t.pieces()) {
      auto parts = intersect(p, q);
      out.insert(out.end(), parts.begin(), parts.end());
    }
  return OrthoSet::from_pieces(s.dim(), std::move(out), true);
}

OrthoSet unite(const OrthoSet& s, const OrthoSet& t) {
  OrthoSet extra = subtract(t, s);
  std::vector<Orthant> out = s.pieces();
  out.insert(out.end(), extra.pieces().begin(), extra.pieces().end());
  return OrthoSet::from_pieces(s.dim(), std::move(out), true);
}

OrthoSet combine(const OrthoSet& s, const OrthoSet& t, SetOp op) {
  switch (op) {
    case SetOp::Union: return unite(s, t);
    case SetOp::Intersect: return intersect(s, t);
    case SetOp::Difference: return subtract(s, t);
  }
  return OrthoSet(s.dim());
}

OrthoSet complement(const OrthoSet& s) { return subtract(OrthoSet::universe(s.dim()), s); }

bool subset(const OrthoSet& s, const OrthoSet& t) { return subtract(s, t).empty(); }

bool equals(const OrthoSet& s, const OrthoSet& t) {
  require_dim(s.dim(), t.dim());
  return subset(s, t) && subset(t, s);
}

bool disjoint(const OrthoSet& s, const OrthoSet& t) {
  for (const Orthant& p : s.pieces())
    for (const Orthant& q : t.pieces())
      if (!disjoint(p, q)) return false;
  return true;
}

OrthoSet image(const OrthoSet& s, const Isometry& iso) {
  std::vector<Orthant> out;
  out.reserve(s.size());
  for (const Orthant& L : s.pieces()) out.push_back(image(L, iso));
  return OrthoSet::from_pieces(s.dim(), std::move(out), true);
}

RankHeight rank_height(const OrthoSet& s) {
  RankHeight rh;
  for (const Orthant& L : s.pieces()) {
    const int r = L.rank();
    if (r > rh.rank) {
      rh.rank = r;
      rh.height = 1;
    } else if (r == rh.rank) {
      ++rh.height;
    }
  }
  return rh;
}

Int height_at(const OrthoSet& s, int k) {
  const RankHeight rh = rank_height(s);
  if (rh.rank > k)
    fail("rank-too-large", "set of rank " + std::to_string(rh.rank) + " has infinitely many rank-" +
                               std::to_string(k) + " germs");
  return rh.rank == k ? rh.height : 0;
}

std::optional<Orthant> merge_orthants(const Orthant& a, const Orthant& b) {
  int axis = -1;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.dir[i] == b.dir[i] && a.base[i] == b.base[i]) continue;
    if (axis >= 0) return std::nullopt;
    axis = i;
  }
  if (axis < 0) return std::nullopt;
  const Orthant* ray = &a;
  const Orthant* row = &b;
  if (a.dir[axis] == 0) std::swap(ray, row);
  if (row->dir[axis] != 0 || ray->dir[axis] == 0) return std::nullopt;
  if (row->base[axis] != ray->base[axis] - ray->dir[axis]) return std::nullopt;
  Orthant m = *ray;
  m.base[axis] = row->base[axis];
  return m;
}

bool spanning_points(const Orthant& a, const Orthant& b, std::vector<Point>& out) {
  require_dim(a.dim(), b.dim());
  const int n = a.dim();
  Box box(n);
  for (int i = 0; i < n; ++i) {
    box[i] = meet(axis_iv(a, i), axis_iv(b, i));
    if (box[i].empty()) return false;
  }
  Point corner(n);
  for (int i = 0; i < n; ++i) corner[i] = box[i].lo != kNeg ? box[i].lo : box[i].hi;
  out.clear();
  out.push_back(corner);
  for (int i = 0; i < n; ++i) {
    if (box[i].lo == box[i].hi) continue;
    Point q = corner;
    q[i] += box[i].lo != kNeg ? 1 : -1;
    out.push_back(q);
  }
  return true;
}

OrthoSet tidy(const OrthoSet& s) {
  std::vector<Orthant> ps = s.pieces();
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < ps.size() && !changed; ++j)
        if (auto m = merge_orthants(ps[i], ps[j])) {
          ps[i] = *m;
          ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
  }
  std::sort(ps.begin(), ps.end());
  return OrthoSet::from_pieces(s.dim(), std::move(ps), true);
}

std::vector<std::vector<int>> all_indicators(int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int d : {0, 1, -1}) {
        auto w = v;
        w.push_back(d);
        next.push_back(std::move(w));
      }
    out.swap(next);
  }
  return out;
}

bool indicator_leq(const std::vector<int>& d, const std::vector<int>& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0 && d[i] != e[i]) return false;
  return true;
}

namespace {

void subsets(const std::vector<int>& from, int k, std::size_t start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < from.size(); ++i) {
    cur.push_back(from[i]);
    subsets(from, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> k_subsets(const std::vector<int>& from, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets(from, k, 0, cur, out);
  return out;
}

}  // namespace

OrthoSet skeleton(const Orthant& L, int n) {
  if (n < 0 || n > L.rank()) fail("out-of-range", "skeleton rank out of range");
  OrthoSet s(L.dim());
  for (const auto& Z : k_subsets(L.axes(), n)) s = unite(s, OrthoSet::of(L.face(Z)));
  return s;
}

OrthoSet SkeletonStack::set() const {
  OrthoSet s(components.empty() ? 0 : components.front().dim());
  for (const Orthant& C : components) s = unite(s, skeleton(C, n));
  return s;
}

std::vector<Orthant> SkeletonStack::maximal_orthants() const {
  std::vector<Orthant> out;
  for (const Orthant& C : components)
    for (const auto& Z : k_subsets(C.axes(), n)) out.push_back(C.face(Z));
  return out;
}

SkeletonStack skeleton_stack(const std::vector<Orthant>& components, int n) {
  if (components.empty()) fail("invalid-stack", "skeleton stack needs a component");
  const Orthant& first = components.front();
  if (n < 0 || n > first.rank()) fail("out-of-range", "skeleton rank out of range");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].dir != first.dir) fail("invalid-stack", "components must be parallel");
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!disjoint(components[i], components[j])) fail("invalid-stack", "components must be disjoint");
  }
  return SkeletonStack{components, n};
}

OrthoSet singular_part(const std::vector<Orthant>& maximal) {
  if (maximal.empty()) return OrthoSet(0);
  OrthoSet s(maximal.front().dim());
  for (const Orthant& M : maximal) {
    auto parts = subtract(M, M.translated(M.diagonal()));
    s = unite(s, OrthoSet::from_pieces(M.dim(), std::move(parts), true));
  }
  return s;
}

RegularSplit regular_split(const SkeletonStack& s) {
  RegularSplit out;
  const int dim = s.components.front().dim();
  out.regular = OrthoSet(dim);
  std::vector<Orthant> pieces;
  for (const Orthant& M : s.maximal_orthants()) pieces.push_back(M.translated(M.diagonal()));
  out.regular_pieces = pieces;
  out.regular = OrthoSet::from_pieces(dim, std::move(pieces));
  if (s.n == 0) {
    out.singular = OrthoSet(dim);
  } else {
    out.singular = skeleton_stack(s.components, s.n - 1).set();
  }
  return out;
}

RegularSplit regular_split(const Orthant& L) {
  RegularSplit out;
  Orthant R = L.translated(L.diagonal());
  out.regular_pieces = {R};
  out.regular = OrthoSet::of(R);
  out.singular = OrthoSet::from_pieces(L.dim(), subtract(L, R), true);
  return out;
}

}  // namespace orth
