#include "orth/germs.hpp"

#include <algorithm>
#include <set>

namespace orth {

int Germ::rank() const {
  int r = 0;
  for (int d : dir) r += d != 0;
  return r;
}

std::vector<int> Germ::axes() const {
  std::vector<int> a;
  for (int i = 0; i < dim(); ++i)
    if (dir[i]) a.push_back(i);
  return a;
}

Orthant Germ::representative() const { return Orthant{frozen, dir}; }

bool Germ::in_coset(const Point& p) const {
  for (int i = 0; i < dim(); ++i)
    if (dir[i] == 0 && p[i] != frozen[i]) return false;
  return true;
}

Germ germ_of(const Orthant& L) {
  Germ g{L.dir, Point(L.dim(), 0)};
  for (int i = 0; i < L.dim(); ++i)
    if (L.dir[i] == 0) g.frozen[i] = L.base[i];
  return g;
}

bool commensurable(const Orthant& a, const Orthant& b) {
  if (a.rank() != b.rank()) return false;
  auto parts = intersect(a, b);
  int r = -1;
  for (const Orthant& p : parts) r = std::max(r, p.rank());
  return r == a.rank();
}

bool germ_leq(const Germ& g, const Germ& h) {
  require_dim(g.dim(), h.dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (h.dir[i] == 0) {
      if (g.dir[i] != 0 || g.frozen[i] != h.frozen[i]) return false;
    } else if (g.dir[i] != 0 && g.dir[i] != h.dir[i]) {
      return false;
    }
  }
  return true;
}

std::vector<Germ> max_germs(const OrthoSet& s) {
  std::set<Germ> all;
  for (const Orthant& L : s.pieces()) all.insert(germ_of(L));
  std::vector<Germ> v(all.begin(), all.end());
  std::vector<Germ> out;
  for (const Germ& g : v) {
    bool maximal = true;
    for (const Germ& h : v)
      if (!(h == g) && germ_leq(g, h)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(g);
  }
  return out;
}

std::vector<Germ> top_germs(const OrthoSet& s) {
  const int r = rank_height(s).rank;
  std::vector<Germ> out;
  for (const Orthant& L : s.pieces())
    if (L.rank() == r) out.push_back(germ_of(L));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Orthant> represent(const OrthoSet& s, const Germ& g) {
  const Orthant rep = g.representative();
  for (const Orthant& L : s.pieces())
    for (const Orthant& part : intersect(rep, L))
      if (part.rank() == g.rank()) return part;
  return std::nullopt;
}

IndicatorData indicator_data(const OrthoSet& s) {
  IndicatorData out;
  for (const Germ& g : max_germs(s)) ++out.height[g.dir];
  std::set<std::vector<int>> inds;
  for (const Orthant& L : s.pieces()) inds.insert(L.dir);
  for (const auto& d : inds) {
    bool maximal = true;
    for (const auto& e : inds)
      if (e != d && indicator_leq(d, e)) {
        maximal = false;
        break;
      }
    if (maximal) out.maximal_indicators.push_back(d);
  }
  std::vector<std::vector<int>> supp;
  for (const auto& [d, h] : out.height)
    if (h > 0) supp.push_back(d);
  out.quasi_normal = supp == out.maximal_indicators;
  return out;
}

}  // namespace orth
