#include "orth/pei.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace orth {

namespace {

constexpr Int kNeg = std::numeric_limits<Int>::min();
constexpr Int kPos = std::numeric_limits<Int>::max();
constexpr Int kMaxFixed = 100'000;

std::vector<Orthant> domains_of(const std::vector<PeiPiece>& ps) {
  std::vector<Orthant> out;
  out.reserve(ps.size());
  for (const PeiPiece& p : ps) out.push_back(p.dom);
  return out;
}

bool same_set(const OrthoSet& a, const OrthoSet& b) {
  if (a.pieces() == b.pieces()) return true;
  return equals(a, b);
}

void set_flags(PeiMap& g) {
  g.pet = true;
  for (const PeiPiece& p : g.pieces) g.pet = g.pet && p.iso.rot.is_identity();
  g.diagonal = g.pet;
  if (!g.diagonal) return;
  const int top = rank_height(g.domain).rank;
  for (const PeiPiece& p : g.pieces) {
    if (p.dom.rank() != top) continue;
    const Point u = p.dom.diagonal();
    // shift must be c * u_L for one integer c
    Int c = 0;
    bool have = false;
    for (int i = 0; i < g.dim(); ++i) {
      if (u[i] == 0) {
        if (p.iso.shift[i] != 0) g.diagonal = false;
        continue;
      }
      const Int ci = p.iso.shift[i] * u[i];
      if (have && ci != c) g.diagonal = false;
      c = ci;
      have = true;
    }
  }
}

PeiMap assemble(OrthoSet domain, std::vector<PeiPiece> pieces, bool inj, bool bij) {
  PeiMap g;
  g.domain = std::move(domain);
  g.pieces = std::move(pieces);
  g.injective = inj;
  g.bijective = bij;
  set_flags(g);
  return g;
}

struct Iv {
  Int lo, hi;
};

// orthants covering the box given by per-axis intervals
void box_orthants(const std::vector<Iv>& box, std::size_t i, Orthant& cur, std::vector<Orthant>& out) {
  if (i == box.size()) {
    out.push_back(cur);
    return;
  }
  const Iv v = box[i];
  auto go = [&](Int b, int d) {
    cur.base[i] = b;
    cur.dir[i] = d;
    box_orthants(box, i + 1, cur, out);
  };
  if (v.lo == kNeg && v.hi == kPos) {
    go(0, 1);
    go(-1, -1);
  } else if (v.lo == kNeg) {
    go(v.hi, -1);
  } else if (v.hi == kPos) {
    go(v.lo, 1);
  } else {
    if (v.hi - v.lo > kMaxFixed) fail("too-large", "fixed set too large to enumerate");
    for (Int x = v.lo; x <= v.hi; ++x) go(x, 0);
  }
}

Iv axis_range(const Orthant& L, int i) {
  if (L.dir[i] == 0) return {L.base[i], L.base[i]};
  if (L.dir[i] > 0) return {L.base[i], kPos};
  return {kNeg, L.base[i]};
}

// values t with c + eps*t inside target
Iv solve_range(Iv target, Int c, int eps) {
  Iv r{kNeg, kPos};
  if (eps > 0) {
    if (target.lo != kNeg) r.lo = target.lo - c;
    if (target.hi != kPos) r.hi = target.hi - c;
  } else {
    if (target.hi != kPos) r.lo = c - target.hi;
    if (target.lo != kNeg) r.hi = c - target.lo;
  }
  return r;
}

// Fixed points of iso inside L as a union of orthants. Returns false when the
// fixed set contains an infinite run along a non-axis direction.
bool fixed_in(const Orthant& L, const Isometry& iso, std::vector<Orthant>& out) {
  const int n = L.dim();
  const SignedPerm& A = iso.rot;
  std::vector<bool> seen(n, false);
  // per cycle: coordinates x_{i_j} = c_j + eps_j * t, t in a range
  struct Cycle {
    std::vector<int> axes;
    std::vector<Int> c;
    std::vector<int> eps;
    Iv t;
  };
  std::vector<Cycle> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Cycle cy;
    int i = s;
    Int c = 0;
    int e = 1;
    do {
      seen[i] = true;
      cy.axes.push_back(i);
      cy.c.push_back(c);
      cy.eps.push_back(e);
      const int j = A.image[i];
      // x_j = a_j + sign_i * x_i
      c = iso.shift[j] + A.sign[i] * c;
      e = A.sign[i] * e;
      i = j;
    } while (i != s);
    // closing: t = c + e t
    if (e == 1) {
      if (c != 0) return true;  // no fixed points at all
      cy.t = {kNeg, kPos};
    } else {
      if (c % 2 != 0) return true;
      cy.t = {c / 2, c / 2};
    }
    for (std::size_t j = 0; j < cy.axes.size(); ++j) {
      Iv r = solve_range(axis_range(L, cy.axes[j]), cy.c[j], cy.eps[j]);
      cy.t.lo = std::max(cy.t.lo, r.lo);
      cy.t.hi = std::min(cy.t.hi, r.hi);
    }
    if (cy.t.lo > cy.t.hi) return true;
    cycles.push_back(std::move(cy));
  }
  std::vector<std::vector<Int>> choices;  // t values for multi-axis cycles
  std::vector<std::size_t> multi;
  Int total = 1;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (cycles[k].axes.size() == 1) continue;
    const Iv t = cycles[k].t;
    if (t.lo == kNeg || t.hi == kPos) return false;
    if (t.hi - t.lo > kMaxFixed) fail("too-large", "fixed set too large to enumerate");
    std::vector<Int> v;
    for (Int x = t.lo; x <= t.hi; ++x) v.push_back(x);
    total *= static_cast<Int>(v.size());
    if (total > kMaxFixed) fail("too-large", "fixed set too large to enumerate");
    multi.push_back(k);
    choices.push_back(std::move(v));
  }
  std::vector<std::size_t> idx(multi.size(), 0);
  while (true) {
    std::vector<Iv> box(n);
    for (const Cycle& cy : cycles)
      if (cy.axes.size() == 1) {
        const Iv t = cy.t;
        // single-axis cycle: x = c + eps t
        Iv v{kNeg, kPos};
        if (cy.eps[0] > 0) {
          v.lo = t.lo == kNeg ? kNeg : cy.c[0] + t.lo;
          v.hi = t.hi == kPos ? kPos : cy.c[0] + t.hi;
        } else {
          v.lo = t.hi == kPos ? kNeg : cy.c[0] - t.hi;
          v.hi = t.lo == kNeg ? kPos : cy.c[0] - t.lo;
        }
        box[cy.axes[0]] = v;
      }
    for (std::size_t m = 0; m < multi.size(); ++m) {
      const Cycle& cy = cycles[multi[m]];
      const Int t = choices[m][idx[m]];
      for (std::size_t j = 0; j < cy.axes.size(); ++j) {
        const Int x = cy.c[j] + cy.eps[j] * t;
        box[cy.axes[j]] = {x, x};
      }
    }
    Orthant cur{Point(n, 0), std::vector<int>(n, 0)};
    box_orthants(box, 0, cur, out);
    std::size_t m = 0;
    while (m < idx.size() && ++idx[m] == choices[m].size()) idx[m++] = 0;
    if (m == idx.size()) break;
  }
  return true;
}

}  // namespace

Isometry normalize_on(const Orthant& L, const Isometry& iso) {
  require_dim(L.dim(), iso.dim());
  const int n = L.dim();
  std::vector<bool> used(n, false);
  SignedPerm A = SignedPerm::identity(n);
  for (int i : L.axes()) {
    A.image[i] = iso.rot.image[i];
    A.sign[i] = iso.rot.sign[i];
    used[A.image[i]] = true;
  }
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (L.dir[i]) continue;
    while (used[next]) ++next;
    A.image[i] = next;
    A.sign[i] = 1;
    used[next] = true;
  }
  Isometry out{Point(n, 0), A};
  out.shift = sub(orth::apply(iso, L.base), A.apply(L.base));
  return out;
}

bool agree_on(const Orthant& L, const Isometry& a, const Isometry& b) {
  if (orth::apply(a, L.base) != orth::apply(b, L.base)) return false;
  for (int i : L.axes()) {
    Point p = L.base;
    p[i] += L.dir[i];
    if (orth::apply(a, p) != orth::apply(b, p)) return false;
  }
  return true;
}

PeiMap make_pei(const OrthoSet& domain, std::vector<PeiPiece> pieces, Require req) {
  const int n = domain.dim();
  for (PeiPiece& p : pieces) {
    require_dim(n, p.dom.dim());
    require_dim(n, p.iso.dim());
    (void)Orthant::make(p.dom.base, p.dom.dir);
    if (!p.iso.rot.valid()) fail("invalid-isometry", "rotation is not a signed permutation");
    p.iso = normalize_on(p.dom, p.iso);
  }
  OrthoSet covered = OrthoSet::from_pieces(n, domains_of(pieces));
  if (!same_set(covered, domain)) fail("not-covering", "pieces do not cover the domain exactly");
  std::vector<Orthant> imgs;
  for (const PeiPiece& p : pieces) imgs.push_back(image(p.dom, p.iso));
  bool inj = true;
  for (std::size_t i = 0; i < imgs.size() && inj; ++i)
    for (std::size_t j = i + 1; j < imgs.size(); ++j)
      if (!disjoint(imgs[i], imgs[j])) {
        inj = false;
        break;
      }
  if (req != Require::Map && !inj) fail("image-overlap", "piece images overlap");
  bool bij = false;
  if (inj) bij = equals(OrthoSet::from_pieces(n, imgs, true), domain);
  if (req == Require::Bijection && !bij) fail("not-bijective", "image differs from the domain");
  return assemble(domain, std::move(pieces), inj, bij);
}

PeiMap identity_map(const OrthoSet& domain) {
  std::vector<PeiPiece> ps;
  for (const Orthant& L : domain.pieces()) ps.push_back({L, Isometry::identity(domain.dim())});
  return assemble(domain, std::move(ps), true, true);
}

PeiMap extend_by_identity(const OrthoSet& domain, std::vector<PeiPiece> pieces, Require req) {
  OrthoSet part = OrthoSet::from_pieces(domain.dim(), domains_of(pieces));
  if (!subset(part, domain)) fail("outside-domain", "pieces leave the domain");
  for (const Orthant& L : subtract(domain, part).pieces())
    pieces.push_back({L, Isometry::identity(domain.dim())});
  return make_pei(domain, std::move(pieces), req);
}

OrthoSet image_set(const PeiMap& g) {
  std::vector<Orthant> imgs;
  for (const PeiPiece& p : g.pieces) imgs.push_back(image(p.dom, p.iso));
  if (g.injective) return OrthoSet::from_pieces(g.dim(), std::move(imgs), true);
  OrthoSet s(g.dim());
  for (const Orthant& M : imgs) s = unite(s, OrthoSet::of(M));
  return s;
}

Point apply(const PeiMap& g, const Point& p) {
  for (const PeiPiece& q : g.pieces)
    if (q.dom.contains(p)) return orth::apply(q.iso, p);
  fail("out-of-domain", "point " + to_string(p) + " is not in the domain");
}

PeiMap compose(const PeiMap& g, const PeiMap& f) {
  require_dim(g.dim(), f.dim());
  std::vector<PeiPiece> out;
  for (const PeiPiece& p : g.pieces) {
    const Orthant M = image(p.dom, p.iso);
    const Isometry back = invert(p.iso);
    std::size_t found = 0;
    for (const PeiPiece& q : f.pieces) {
      if (disjoint(M, q.dom)) continue;
      const Isometry both = compose(p.iso, q.iso);
      for (const Orthant& part : intersect(M, q.dom)) {
        const Orthant pre = image(part, back);
        out.push_back({pre, normalize_on(pre, both)});
        ++found;
      }
    }
    if (found == 0 || !subtract(OrthoSet::of(M), f.domain).empty())
      fail("domain-mismatch", "image of g leaves the domain of f");
  }
  const bool inj = g.injective && f.injective;
  const bool bij = g.bijective && f.bijective && same_set(g.domain, f.domain);
  return simplify(assemble(g.domain, std::move(out), inj, bij));
}

PeiMap compose_all(const std::vector<PeiMap>& word, const OrthoSet& domain) {
  PeiMap acc = identity_map(domain);
  for (const PeiMap& w : word) acc = compose(acc, w);
  return acc;
}

PeiMap invert(const PeiMap& g) {
  if (!g.injective) fail("not-injective", "only injections can be inverted");
  std::vector<PeiPiece> out;
  std::vector<Orthant> imgs;
  for (const PeiPiece& p : g.pieces) {
    const Orthant M = image(p.dom, p.iso);
    imgs.push_back(M);
    out.push_back({M, normalize_on(M, invert(p.iso))});
  }
  if (g.bijective) return assemble(g.domain, std::move(out), true, true);
  return assemble(OrthoSet::from_pieces(g.dim(), std::move(imgs), true), std::move(out), true, false);
}

bool is_bijection_onto(const PeiMap& g, const OrthoSet& target) {
  return g.injective && equals(image_set(g), target);
}

Isometry canonical_iso(const Orthant& L, const Orthant& M) {
  require_dim(L.dim(), M.dim());
  if (L.rank() != M.rank()) fail("rank-mismatch", "orthants of different rank");
  const auto a = L.axes();
  const auto b = M.axes();
  Isometry iso = Isometry::identity(L.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    iso.rot.image[a[i]] = b[i];
    iso.rot.sign[a[i]] = L.dir[a[i]] * M.dir[b[i]];
  }
  std::vector<bool> used(L.dim(), false);
  for (int t : b) used[t] = true;
  int next = 0;
  for (int i = 0; i < L.dim(); ++i) {
    if (L.dir[i]) continue;
    while (used[next]) ++next;
    iso.rot.image[i] = next;
    iso.rot.sign[i] = 1;
    used[next] = true;
  }
  iso.shift = sub(M.base, iso.rot.apply(L.base));
  return iso;
}

PeiMap conjugate(const PeiMap& g, const PeiMap& h) { return compose(compose(invert(h), g), h); }

PeiMap commutator(const PeiMap& a, const PeiMap& b) {
  return compose(compose(compose(invert(a), invert(b)), a), b);
}

bool equals(const PeiMap& g, const PeiMap& h) {
  require_dim(g.dim(), h.dim());
  if (!same_set(g.domain, h.domain)) return false;
  std::vector<Point> pts;
  for (const PeiPiece& p : g.pieces)
    for (const PeiPiece& q : h.pieces) {
      if (!spanning_points(p.dom, q.dom, pts)) continue;
      for (const Point& x : pts)
        if (orth::apply(p.iso, x) != orth::apply(q.iso, x)) return false;
    }
  return true;
}

PeiMap simplify(const PeiMap& g) {
  std::vector<PeiPiece> ps = g.pieces;
  std::vector<bool> alive(ps.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Orthant, std::size_t> index;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (alive[i]) index[ps[i].dom] = i;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!alive[i]) continue;
      for (int ax = 0; ax < g.dim(); ++ax) {
        const Orthant& A = ps[i].dom;
        if (A.dir[ax] == 0) continue;
        Orthant row = A;
        row.dir[ax] = 0;
        row.base[ax] = A.base[ax] - A.dir[ax];
        auto it = index.find(row);
        if (it == index.end()) continue;
        const std::size_t j = it->second;
        if (!alive[j] || j == i || !agree_on(row, ps[i].iso, ps[j].iso)) continue;
        index.erase(it);
        index.erase(ps[i].dom);
        alive[j] = false;
        ps[i].dom.base[ax] = row.base[ax];
        index[ps[i].dom] = i;
        changed = true;
      }
    }
  }
  std::vector<PeiPiece> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (alive[i]) out.push_back(ps[i]);
  std::sort(out.begin(), out.end(), [](const PeiPiece& a, const PeiPiece& b) { return a.dom < b.dom; });
  PeiMap r = g;
  r.pieces = std::move(out);
  set_flags(r);
  return r;
}

OrthoSet support(const PeiMap& g) {
  const int n = g.dim();
  OrthoSet s(n);
  for (const PeiPiece& p : simplify(g).pieces) {
    if (agree_on(p.dom, p.iso, Isometry::identity(n))) continue;
    std::vector<Orthant> fixed;
    if (!fixed_in(p.dom, p.iso, fixed)) {
      s = unite(s, OrthoSet::of(p.dom));
      continue;
    }
    OrthoSet moved = OrthoSet::of(p.dom);
    for (const Orthant& F : fixed) moved = subtract(moved, F);
    s = unite(s, moved);
  }
  return s;
}

int rank(const PeiMap& g) { return rank_height(support(g)).rank; }

bool GermAction::is_translation() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) || sign[i] != 1) return false;
  return source == image;
}

GermAction germ_action(const PeiMap& g, const Germ& germ) {
  require_dim(g.dim(), germ.dim());
  const Orthant rep = germ.representative();
  const int k = germ.rank();
  for (const PeiPiece& p : g.pieces) {
    if (disjoint(rep, p.dom)) continue;
    for (const Orthant& part : intersect(rep, p.dom)) {
      if (part.rank() != k) continue;
      GermAction ga;
      ga.source = germ;
      ga.rep = part;
      ga.iso = p.iso;
      const Orthant img = image(part, p.iso);
      ga.image = germ_of(img);
      const std::vector<int> a = germ.axes();
      const std::vector<int> b = ga.image.axes();
      ga.perm.assign(k, 0);
      ga.sign.assign(k, 1);
      for (int i = 0; i < k; ++i) {
        const int t = p.iso.rot.image[a[i]];
        ga.perm[i] = static_cast<int>(std::find(b.begin(), b.end(), t) - b.begin());
        ga.sign[i] = germ.dir[a[i]] * p.iso.rot.sign[a[i]] * img.dir[t];
      }
      const Point q = orth::apply(p.iso, germ.frozen);
      ga.translation.assign(k, 0);
      for (int j = 0; j < k; ++j) ga.translation[j] = img.dir[b[j]] * q[b[j]];
      return ga;
    }
  }
  fail("germ-not-represented", "germ is not represented in the domain");
}

Int flow(const PeiMap& g, const Germ& germ) {
  const GermAction ga = germ_action(g, germ);
  if (!(ga.image == germ)) fail("germ-not-fixed", "flow needs a germ fixed by the element");
  const int k = germ.rank();
  const OrthoSet L = OrthoSet::of(ga.rep);
  const OrthoSet Lg = OrthoSet::of(image(ga.rep, ga.iso));
  return height_at(subtract(L, Lg), k - 1) - height_at(subtract(Lg, L), k - 1);
}

std::map<Germ, Int> global_flow(const PeiMap& g, int k) {
  const OrthoSet supp = support(g);
  const int r = rank_height(supp).rank;
  std::map<Germ, Int> out;
  if (r < k) return out;
  if (r > k) fail("rank-too-large", "element has rank above k");
  for (const Germ& gm : top_germs(supp)) out[gm] = flow(g, gm);
  return out;
}

int permutation_parity(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int swaps = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t i = s;
    int len = 0;
    while (!seen[i]) {
      seen[i] = true;
      i = static_cast<std::size_t>(perm[i]);
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2;
}

Invariants invariants(const PeiMap& g, int k) {
  if (!g.bijective) fail("not-bijective", "invariants need a bijection");
  Invariants inv;
  inv.is_pet = g.pet;
  const OrthoSet supp = support(g);
  inv.rank = rank_height(supp).rank;
  inv.in_Gk = inv.rank <= k;
  if (inv.rank > k) return inv;
  if (inv.rank < k) {
    inv.in_C = inv.in_Cord = inv.stagnant = inv.in_altGk = true;
    inv.parity_germs = 0;
    inv.parity_axes = 0;
    return inv;
  }
  const std::vector<Germ> germs = top_germs(supp);
  std::map<Germ, int> pos;
  for (std::size_t i = 0; i < germs.size(); ++i) pos[germs[i]] = static_cast<int>(i);
  std::vector<int> perm(germs.size());
  int axes = 0;
  bool fixed = true, ordered = true;
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const GermAction ga = germ_action(g, germs[i]);
    auto it = pos.find(ga.image);
    if (it == pos.end()) fail("internal", "germ image outside the support germs");
    perm[i] = it->second;
    axes += permutation_parity(ga.perm);
    fixed = fixed && ga.image == germs[i];
    ordered = ordered && ga.is_translation();
  }
  inv.parity_germs = permutation_parity(perm);
  inv.parity_axes = axes % 2;
  inv.in_C = fixed;
  inv.in_Cord = fixed && ordered;
  inv.in_altGk = *inv.parity_germs == 0;
  if (fixed) {
    bool zero = true;
    for (const Germ& gm : germs) {
      const Int f = flow(g, gm);
      inv.flow[gm] = f;
      zero = zero && f == 0;
    }
    inv.stagnant = zero;
  }
  return inv;
}

}  // namespace orth
