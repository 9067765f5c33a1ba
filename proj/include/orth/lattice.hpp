#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "orth/error.hpp"

namespace orth {

using Int = std::int64_t;
using Point = std::vector<Int>;

// A e_i = sign[i] * e_{image[i]}.
struct SignedPerm {
  std::vector<int> image;
  std::vector<int> sign;

  static SignedPerm identity(int n);
  static SignedPerm swap(int n, int i, int j);
  static SignedPerm negate(int n, int i);

  int dim() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  bool valid() const;
  Point apply(const Point& x) const;
  // x -> other(this(x))
  SignedPerm then(const SignedPerm& other) const;
  SignedPerm inverse() const;
  // dense matrix, row-major, M[r][c] = <e_r, A e_c>
  std::vector<std::vector<Int>> matrix() const;

  auto operator<=>(const SignedPerm&) const = default;
  bool operator==(const SignedPerm&) const = default;
};

struct Isometry {
  Point shift;
  SignedPerm rot;

  static Isometry identity(int n);
  static Isometry translation(const Point& a);

  int dim() const { return static_cast<int>(shift.size()); }
  bool is_identity() const;
  bool is_translation() const { return rot.is_identity(); }

  auto operator<=>(const Isometry&) const = default;
  bool operator==(const Isometry&) const = default;
};

Point apply(const Isometry& iso, const Point& p);
// right action: the result applies g first, then f
Isometry compose(const Isometry& g, const Isometry& f);
Isometry invert(const Isometry& iso);

// Solution set of x = a + A x over Q, with the lattice points obtained by
// congruence filtering of the particular solution.
struct AffineSolutionSet {
  enum class Kind { Empty, All, Affine };
  Kind kind = Kind::Empty;
  Point numer;  // particular solution = numer / denom
  Int denom = 1;
  std::vector<Point> basis;
  bool axis_parallel = true;
  bool has_lattice_points = false;

  int dimension() const { return static_cast<int>(basis.size()); }
};

AffineSolutionSet fixed_point_data(const Isometry& iso);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, Int s);
Point unit(int n, int i, Int s = 1);

std::string to_string(const Point& p);

inline void require_dim(int a, int b) {
  if (a != b) fail("dimension-mismatch", "dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace orth
