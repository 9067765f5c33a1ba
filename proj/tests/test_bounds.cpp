#include <doctest.h>

#include "orth/bounds.hpp"
#include "random_elements.hpp"

using namespace orth;
using namespace orth::test;

namespace {

Int binom(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool cites(const FlBoundsReport& r, const std::string& key) {
  return std::any_of(r.provenance.begin(), r.provenance.end(),
                     [&](const std::string& p) { return p.find(key) != std::string::npos; });
}

std::vector<Orthant> skeleton_components(int r, int c) {
  std::vector<Orthant> comps;
  for (int j = 0; j < c; ++j) {
    Orthant L{Point(r + 1, 0), std::vector<int>(r + 1, 1)};
    L.dir[r] = 0;
    L.base[r] = j;
    comps.push_back(L);
  }
  return comps;
}


}  // namespace

TEST_CASE("boundary at infinity") {
  const OrthoSet Q = OrthoSet::of(Orthant::positive(2));
  const BoundarySet b = boundary(Q, 0);
  CHECK(equals(b.set, OrthoSet::of(Orthant::positive(1))));
  REQUIRE(b.lifts.size() == 1);
  CHECK(b.lifts[0] == Orthant::positive(2));
  CHECK(section_point(Q, 0, {3}) == Point{0, 3});

  for (int h = 1; h <= 4; ++h) {
    const Stack s = make_stack(3, 2, h);
    const BoundarySet bs = boundary(s.set, 0);
    CHECK(rank_height(bs.set) == RankHeight{1, h});
  }

  // rays along axis 1 only: nothing at infinity along axis 0
  const OrthoSet rays = OrthoSet::from_pieces(2, {Orthant::make({0, 0}, {0, 1}), Orthant::make({3, 0}, {0, 1})});
  CHECK(boundary(rays, 0).set.empty());
  CHECK(rank_height(boundary(rays, 1).set) == RankHeight{0, 2});

  try {
    boundary(OrthoSet::of(Orthant::make({-1, 0}, {1, 1})), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.category() == "not-positive");
  }
}

TEST_CASE("lifts sit lowest over each boundary orthant") {
  // the ray over y = 0 starts at x = 2, the others at x = 0
  const OrthoSet S = subtract(OrthoSet::of(Orthant::positive(2)), OrthoSet::point_set(2, {{0, 0}, {1, 0}}));
  const BoundarySet b = boundary(S, 0);
  CHECK(equals(b.set, OrthoSet::of(Orthant::positive(1))));
  for (std::size_t i = 0; i < b.lifts.size(); ++i) {
    CHECK(subset(OrthoSet::of(b.lifts[i]), S));
    Orthant lower = b.lifts[i];
    lower.base[0] -= 1;
    CHECK((lower.base[0] < 0 || !subset(OrthoSet::of(lower), S)));
  }
  CHECK(section_point(S, 0, {0}) == Point{2, 0});
  CHECK(section_point(S, 0, {5}) == Point{0, 5});
}

TEST_CASE("boundary action is a split homomorphism") {
  Rng rng(71);
  std::vector<OrthoSet> sets{make_stack(3, 2, 2).set, make_stack(3, 1, 3).set,
                             skeleton_stack(skeleton_components(2, 2), 1).set()};
  for (const OrthoSet& S : sets) {
    for (int x = 0; x < 2; ++x) {
      const BoundarySet B = boundary(S, x);
      if (B.set.empty()) continue;
      CHECK(equals(induced_boundary_map(identity_map(S), x), identity_map(B.set)));
      for (int trial = 0; trial < 5; ++trial) {
        const PeiMap g = random_pet(rng, S, 3);
        const PeiMap h = random_pet(rng, S, 3);
        REQUIRE(g.pet);
        const PeiMap tg = induced_boundary_map(g, x);
        CHECK(equals(induced_boundary_map(compose(g, h), x), compose(tg, induced_boundary_map(h, x))));
        // ray germs: follow a far point
        for (const Orthant& P : B.set.pieces()) {
          const Point p = P.base;
          Point far = p;
          far.insert(far.begin() + x, 1000);
          Point img = orth::apply(g, far);
          img.erase(img.begin() + x);
          CHECK(orth::apply(tg, p) == img);
        }
        const PeiMap gb = random_pet(rng, B.set, 2);
        const PeiMap lifted = section_lift(gb, S, x);
        CHECK(lifted.pet);
        CHECK(equals(induced_boundary_map(lifted, x), gb));
        const PeiMap gb2 = random_pet(rng, B.set, 2);
        CHECK(equals(section_lift(compose(gb, gb2), S, x), compose(lifted, section_lift(gb2, S, x))));
      }
    }
  }
}

TEST_CASE("boundary action preconditions") {
  const Stack s = make_stack(3, 2, 2);
  const PeiMap refl = realize(reflection(s.members[0], 0, 1), s.set);
  try {
    induced_boundary_map(refl, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.category() == "not-pet");
  }
}

TEST_CASE("link heights of skeleton stacks") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {4, 3}, {3, 1}}) {
    for (int c = 1; c <= 2; ++c) {
      const OrthoSet S = skeleton_stack(skeleton_components(r, c), n).set();
      std::vector<int> Y;
      for (int i = 0; i < n - 1; ++i) Y.push_back(i);
      CHECK(link_height(S, Y) == c * (r - n + 1));
    }
  }
  CHECK_THROWS_AS(link_height(make_stack(3, 2, 2).set, {0, 1}), Error);
}

TEST_CASE("fl bounds for stacks of orthants") {
  for (int n = 1; n <= 3; ++n)
    for (int h = 1; h <= 4; ++h) {
      const FlBoundsReport r = fl_bounds(make_stack(n + 1, n, h).set, GroupKind::Pet);
      CHECK(r.exact());
      CHECK(r.lower == h - 1);
      CHECK(cites(r, "stack of orthants"));
    }
  const FlBoundsReport rays = fl_bounds(make_stack(2, 1, 3).set, GroupKind::Pei);
  CHECK(rays.exact());
  CHECK(rays.lower == 2);
  CHECK(cites(rays, "Houghton"));
}

TEST_CASE("fl bounds for Z^n") {
  for (int n = 1; n <= 4; ++n) {
    const FlBoundsReport r = fl_bounds(OrthoSet::universe(n), GroupKind::Pei);
    CHECK(r.lower == (Int{1} << n) - 1);
    CHECK(cites(r, "pei(Z^n)"));
    if (n >= 2) {
      CHECK_FALSE(r.upper);
      CHECK(cites(r, "unknown"));
    }
  }
}

TEST_CASE("fl bounds for skeleton stacks") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {4, 3}, {3, 1}}) {
    for (int c = 1; c <= 3; ++c) {
      const OrthoSet S = skeleton_stack(skeleton_components(r, c), n).set();
      CHECK(rank_height(S) == RankHeight{n, c * binom(r, n)});
      const FlBoundsReport rep = fl_bounds(S, GroupKind::Pet);
      CHECK(rep.lower == c - 1);
      REQUIRE(rep.upper);
      CHECK(*rep.upper == c * (r - n + 1) - 1);
      CHECK(cites(rep, "n-skeletons"));
    }
  }
}

TEST_CASE("fl bounds edge cases") {
  const FlBoundsReport fin = fl_bounds(OrthoSet::point_set(2, {{0, 0}, {1, 1}}), GroupKind::Pet);
  CHECK(fin.infinite);
  CHECK(to_string(fin) == "group=pet lower=inf upper=inf exact=inf [finite set: the group is finite]");
  const FlBoundsReport st = fl_bounds(make_stack(3, 2, 3).set, GroupKind::Pet);
  CHECK(to_string(st) ==
        "group=pet lower=2 upper=2 exact=2 [stack of orthants: fl(pet) = h-1]");
}
