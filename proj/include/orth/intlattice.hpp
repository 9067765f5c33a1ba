#pragma once

#include <optional>
#include <vector>

#include "orth/lattice.hpp"

namespace orth {

// Sublattice of Z^n kept as a row echelon basis in Hermite normal form.
class IntLattice {
 public:
  explicit IntLattice(int n) : n_(n), rows_(n) {}

  int dim() const { return n_; }
  int rank() const;
  // true when the lattice grew
  bool add(Point v);
  bool contains(Point v) const;
  // smallest m > 0 with m v in the lattice
  std::optional<Int> min_multiple(const Point& v) const;
  std::vector<Point> basis() const;

 private:
  void reduce_above(int c);
  void reduce_all(int c);

  int n_;
  std::vector<Point> rows_;  // rows_[c] has pivot in column c, or is empty
};

}  // namespace orth
