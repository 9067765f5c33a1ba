#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "orth/lattice.hpp"

namespace orth {

// a + sum over axes i with dir[i] != 0 of N * dir[i] e_i
struct Orthant {
  Point base;
  std::vector<int> dir;  // entries in {-1, 0, +1}

  static Orthant make(Point base, std::vector<int> dir);
  static Orthant point(Point p);
  static Orthant positive(int n);  // N^n

  int dim() const { return static_cast<int>(base.size()); }
  int rank() const;
  bool contains(const Point& p) const;
  std::vector<int> axes() const;  // direction axes in index order
  Point diagonal() const;         // u_L, the sum of the canonical basis
  Orthant translated(const Point& v) const;
  // the face spanned by the given subset of direction axes
  Orthant face(const std::vector<int>& keep) const;
  // the corank-1 face orthogonal to axis x
  Orthant face_without(int x) const;

  auto operator<=>(const Orthant&) const = default;
  bool operator==(const Orthant&) const = default;
};

Orthant image(const Orthant& L, const Isometry& iso);
bool disjoint(const Orthant& a, const Orthant& b);
bool subset(const Orthant& a, const Orthant& b);
std::vector<Orthant> intersect(const Orthant& a, const Orthant& b);
std::vector<Orthant> subtract(const Orthant& a, const Orthant& b);
// a ∪ b as a single orthant when one is the point-row just below the other's ray
std::optional<Orthant> merge_orthants(const Orthant& a, const Orthant& b);
// affinely spanning lattice points of a ∩ b; false when the intersection is empty
bool spanning_points(const Orthant& a, const Orthant& b, std::vector<Point>& out);

struct RankHeight {
  int rank = -1;  // -1 encodes the empty set
  Int height = 0;
  bool operator==(const RankHeight&) const = default;
};

class OrthoSet {
 public:
  explicit OrthoSet(int n = 0) : n_(n) {}
  // pieces must be pairwise disjoint; checked unless trusted
  static OrthoSet from_pieces(int n, std::vector<Orthant> pieces, bool trusted = false);
  static OrthoSet of(const Orthant& L);
  static OrthoSet universe(int n);
  static OrthoSet point_set(int n, const std::vector<Point>& pts);

  int dim() const { return n_; }
  const std::vector<Orthant>& pieces() const& { return pieces_; }
  std::vector<Orthant> pieces() && { return std::move(pieces_); }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }
  bool contains(const Point& p) const;

 private:
  int n_;
  std::vector<Orthant> pieces_;
};

enum class SetOp { Union, Intersect, Difference };

OrthoSet combine(const OrthoSet& s, const OrthoSet& t, SetOp op);
OrthoSet unite(const OrthoSet& s, const OrthoSet& t);
OrthoSet intersect(const OrthoSet& s, const OrthoSet& t);
OrthoSet subtract(const OrthoSet& s, const OrthoSet& t);
OrthoSet subtract(const OrthoSet& s, const Orthant& t);
OrthoSet complement(const OrthoSet& s);
bool equals(const OrthoSet& s, const OrthoSet& t);
bool subset(const OrthoSet& s, const OrthoSet& t);
bool disjoint(const OrthoSet& s, const OrthoSet& t);
OrthoSet image(const OrthoSet& s, const Isometry& iso);

RankHeight rank_height(const OrthoSet& s);
// number of rank-k germs of s; fails when rk s > k
Int height_at(const OrthoSet& s, int k);

// sort and merge point-rows into adjacent rays; used for serialization
OrthoSet tidy(const OrthoSet& s);

// all 0-based orthants of Z^n
std::vector<std::vector<int>> all_indicators(int n);
// d <= e as 0-based orthants (d is a face of e)
bool indicator_leq(const std::vector<int>& d, const std::vector<int>& e);

// rank-n skeleton of L
OrthoSet skeleton(const Orthant& L, int n);

// c parallel copies of the rank-n skeleton of a rank-r orthant
struct SkeletonStack {
  std::vector<Orthant> components;  // parallel rank-r orthants, pairwise disjoint
  int n = 0;
  int r() const { return components.empty() ? 0 : components.front().rank(); }
  OrthoSet set() const;
  // the rank-n faces of every component, in a fixed order
  std::vector<Orthant> maximal_orthants() const;
};

SkeletonStack skeleton_stack(const std::vector<Orthant>& components, int n);

struct RegularSplit {
  OrthoSet regular;
  OrthoSet singular;
  std::vector<Orthant> regular_pieces;  // t_L(L) for the maximal orthants L
};

RegularSplit regular_split(const SkeletonStack& s);
RegularSplit regular_split(const Orthant& L);
// sing of a disjoint union of rank-n orthants: union of L - t_L(L)
OrthoSet singular_part(const std::vector<Orthant>& maximal);

}  // namespace orth
