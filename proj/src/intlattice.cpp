#include "orth/intlattice.hpp"

#include <numeric>

namespace orth {

namespace {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail("overflow", "integer overflow in lattice reduction");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail("overflow", "integer overflow in lattice reduction");
  return r;
}

// a*x + b*y
Point combo(Int a, const Point& x, Int b, const Point& y) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_add(checked_mul(a, x[i]), checked_mul(b, y[i]));
  return r;
}

// g = gcd(a, b) = s a + t b
void ext_gcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    r = s0 - q * s1;
    s0 = s1;
    s1 = r;
    r = t0 - q * t1;
    t0 = t1;
    t1 = r;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  g = a;
  s = s0;
  t = t0;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int IntLattice::rank() const {
  int r = 0;
  for (const Point& row : rows_) r += !row.empty();
  return r;
}

void IntLattice::reduce_above(int c) {
  const Point& piv = rows_[c];
  for (int a = 0; a < c; ++a) {
    if (rows_[a].empty() || rows_[a][c] == 0) continue;
    const Int q = floor_div(rows_[a][c], piv[c]);
    rows_[a] = combo(1, rows_[a], -q, piv);
  }
}

// Hermite reduction of every row against the pivots from column c on
void IntLattice::reduce_all(int c) {
  for (int d = c; d < n_; ++d)
    if (!rows_[d].empty()) reduce_above(d);
}

bool IntLattice::add(Point v) {
  require_dim(n_, static_cast<int>(v.size()));
  bool grew = false;
  for (int c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    if (rows_[c].empty()) {
      if (v[c] < 0) v = combo(-1, v, 0, v);
      rows_[c] = std::move(v);
      reduce_all(c);
      return true;
    }
    Point& b = rows_[c];
    if (v[c] % b[c] == 0) {
      v = combo(1, v, -(v[c] / b[c]), b);
      continue;
    }
    Int g, s, t;
    ext_gcd(b[c], v[c], g, s, t);
    const Point nb = combo(s, b, t, v);
    v = combo(b[c] / g, v, -(v[c] / g), b);
    b = nb;
    grew = true;
    reduce_all(c);
  }
  return grew;
}

bool IntLattice::contains(Point v) const {
  require_dim(n_, static_cast<int>(v.size()));
  for (int c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    if (rows_[c].empty() || v[c] % rows_[c][c] != 0) return false;
    v = combo(1, v, -(v[c] / rows_[c][c]), rows_[c]);
  }
  return true;
}

std::optional<Int> IntLattice::min_multiple(const Point& v) const {
  // if some multiple lies in the lattice, the product of the pivots is one
  Int bound = 1;
  for (int c = 0; c < n_; ++c)
    if (!rows_[c].empty()) bound = checked_mul(bound, rows_[c][c]);
  if (!contains(scale(v, bound))) return std::nullopt;
  for (Int m = 1; m < bound; ++m)
    if (bound % m == 0 && contains(scale(v, m))) return m;
  return bound;
}

std::vector<Point> IntLattice::basis() const {
  std::vector<Point> b;
  for (const Point& row : rows_)
    if (!row.empty()) b.push_back(row);
  return b;
}

}  // namespace orth
