#include "orth/lattice.hpp"

#include <numeric>

namespace orth {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  p.sign.assign(n, 1);
  return p;
}

SignedPerm SignedPerm::swap(int n, int i, int j) {
  SignedPerm p = identity(n);
  p.image[i] = j;
  p.image[j] = i;
  return p;
}

SignedPerm SignedPerm::negate(int n, int i) {
  SignedPerm p = identity(n);
  p.sign[i] = -1;
  return p;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (image[i] != i || sign[i] != 1) return false;
  return true;
}

bool SignedPerm::valid() const {
  if (image.size() != sign.size()) return false;
  std::vector<char> seen(image.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] >= dim() || seen[image[i]]) return false;
    if (sign[i] != 1 && sign[i] != -1) return false;
    seen[image[i]] = 1;
  }
  return true;
}

Point SignedPerm::apply(const Point& x) const {
  require_dim(dim(), static_cast<int>(x.size()));
  Point y(x.size());
  for (int i = 0; i < dim(); ++i) y[image[i]] = sign[i] * x[i];
  return y;
}

SignedPerm SignedPerm::then(const SignedPerm& other) const {
  require_dim(dim(), other.dim());
  SignedPerm r;
  r.image.resize(dim());
  r.sign.resize(dim());
  for (int i = 0; i < dim(); ++i) {
    r.image[i] = other.image[image[i]];
    r.sign[i] = sign[i] * other.sign[image[i]];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.image.resize(dim());
  r.sign.resize(dim());
  for (int i = 0; i < dim(); ++i) {
    r.image[image[i]] = i;
    r.sign[image[i]] = sign[i];
  }
  return r;
}

std::vector<std::vector<Int>> SignedPerm::matrix() const {
  std::vector<std::vector<Int>> m(dim(), std::vector<Int>(dim(), 0));
  for (int c = 0; c < dim(); ++c) m[image[c]][c] = sign[c];
  return m;
}

Isometry Isometry::identity(int n) { return {Point(n, 0), SignedPerm::identity(n)}; }

Isometry Isometry::translation(const Point& a) {
  return {a, SignedPerm::identity(static_cast<int>(a.size()))};
}

bool Isometry::is_identity() const {
  for (Int v : shift)
    if (v != 0) return false;
  return rot.is_identity();
}

Point apply(const Isometry& iso, const Point& p) { return add(iso.shift, iso.rot.apply(p)); }

Isometry compose(const Isometry& g, const Isometry& f) {
  require_dim(g.dim(), f.dim());
  return {add(f.shift, f.rot.apply(g.shift)), g.rot.then(f.rot)};
}

Isometry invert(const Isometry& iso) {
  SignedPerm inv = iso.rot.inverse();
  return {scale(inv.apply(iso.shift), -1), inv};
}

AffineSolutionSet fixed_point_data(const Isometry& iso) {
  const int n = iso.dim();
  AffineSolutionSet out;
  if (iso.is_identity()) {
    out.kind = AffineSolutionSet::Kind::All;
    out.numer.assign(n, 0);
    for (int i = 0; i < n; ++i) out.basis.push_back(unit(n, i));
    out.has_lattice_points = true;
    return out;
  }
  // Cycle i0 -> i1 -> ... : x_{i_{j+1}} = a_{i_{j+1}} + s_j x_{i_j}.
  // Work with denominator 2 throughout; cycles with sign product -1 pin
  // their coordinates to halves of integers.
  Point num(n, 0);
  std::vector<char> done(n, 0);
  bool empty = false;
  bool lattice = true;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<int> cyc;
    for (int i = start; !done[i]; i = iso.rot.image[i]) {
      done[i] = 1;
      cyc.push_back(i);
    }
    // express x_{cyc[j]} = c_j + e_j * x_{cyc[0]}
    std::vector<Int> c(cyc.size(), 0), e(cyc.size(), 1);
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j) {
      int nxt = cyc[j + 1];
      c[j + 1] = iso.shift[nxt] + iso.rot.sign[cyc[j]] * c[j];
      e[j + 1] = iso.rot.sign[cyc[j]] * e[j];
    }
    const std::size_t last = cyc.size() - 1;
    const Int close_c = iso.shift[cyc[0]] + iso.rot.sign[cyc[last]] * c[last];
    const Int close_e = iso.rot.sign[cyc[last]] * e[last];
    if (close_e == 1) {
      if (close_c != 0) {
        empty = true;
        continue;
      }
      Point b(n, 0);
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        num[cyc[j]] = 2 * c[j];
        b[cyc[j]] = e[j];
      }
      out.basis.push_back(b);
      if (cyc.size() > 1) out.axis_parallel = false;
    } else {
      // x0 = close_c - x0  =>  x0 = close_c / 2
      const Int x0_num = close_c;
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        num[cyc[j]] = 2 * c[j] + e[j] * x0_num;
        if (num[cyc[j]] % 2 != 0) lattice = false;
      }
    }
  }
  if (empty) {
    out.kind = AffineSolutionSet::Kind::Empty;
    out.basis.clear();
    out.axis_parallel = true;
    return out;
  }
  out.kind = AffineSolutionSet::Kind::Affine;
  bool all_even = true;
  for (Int v : num)
    if (v % 2 != 0) all_even = false;
  if (all_even) {
    for (Int& v : num) v /= 2;
    out.denom = 1;
  } else {
    out.denom = 2;
  }
  out.numer = num;
  out.has_lattice_points = lattice;
  return out;
}

Point add(const Point& a, const Point& b) {
  require_dim(static_cast<int>(a.size()), static_cast<int>(b.size()));
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  require_dim(static_cast<int>(a.size()), static_cast<int>(b.size()));
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, Int s) {
  Point r(a);
  for (Int& v : r) v *= s;
  return r;
}

Point unit(int n, int i, Int s) {
  Point r(n, 0);
  r[i] = s;
  return r;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace orth
