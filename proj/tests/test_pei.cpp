#include <doctest.h>

#include "orth/generators.hpp"
#include "orth/pei.hpp"
#include "random_elements.hpp"

using namespace orth;
using orth::test::Rng;

namespace {

Orthant O(Point b, std::vector<int> d) { return Orthant::make(std::move(b), std::move(d)); }

std::string category_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.category();
  }
  return "";
}

const Orthant kQuad = O({0, 0}, {1, 1});

}  // namespace

TEST_CASE("make validates pieces") {
  const OrthoSet S = OrthoSet::from_pieces(3, {O({0, 0, 0}, {1, 1, 0}), O({0, 0, 1}, {1, 1, 0})});
  const PeiMap id = identity_map(S);
  CHECK(id.bijective);
  CHECK(id.pet);
  const PeiMap swap = make_pei(S,
                               {{S.pieces()[0], Isometry::translation({0, 0, 1})},
                                {S.pieces()[1], Isometry::translation({0, 0, -1})}},
                               Require::Bijection);
  CHECK(swap.bijective);
  CHECK(swap.pet);
  CHECK(category_of([&] {
          make_pei(S, {{S.pieces()[0], Isometry::identity(3)}, {S.pieces()[1], Isometry::translation({0, 0, -1})}},
                   Require::Injection);
        }) == "image-overlap");
  CHECK(category_of([&] { make_pei(S, {{S.pieces()[0], Isometry::identity(3)}}, Require::Map); }) ==
        "not-covering");
  CHECK(category_of([&] {
          make_pei(S, {{S.pieces()[0], Isometry::identity(3)}, {S.pieces()[1], Isometry::translation({0, 0, 1})}},
                   Require::Bijection);
        }) == "not-bijective");
}

TEST_CASE("compose, invert, equals") {
  const auto st = orth::test::make_stack(3, 2, 3);
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const PeiMap g = realize_word(orth::test::random_word(rng, st, 2, 4), st.set);
    const PeiMap f = realize_word(orth::test::random_word(rng, st, 2, 4), st.set);
    CHECK(equals(compose(g, invert(g)), identity_map(st.set)));
    CHECK(equals(compose(identity_map(st.set), g), g));
    const PeiMap gf = compose(g, f);
    for (int i = 0; i < 100; ++i) {
      const Orthant& L = st.members[orth::test::uniform(rng, 0, 2)];
      const Point p = orth::test::offset_in(rng, L, 12);
      CHECK(orth::apply(gf, p) == orth::apply(f, orth::apply(g, p)));
    }
  }
}

TEST_CASE("group laws and conjugation invariance of rank") {
  const auto st = orth::test::make_stack(3, 2, 3);
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const PeiMap a = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    const PeiMap b = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    const PeiMap c = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    CHECK(equals(compose(compose(a, b), c), compose(a, compose(b, c))));
    CHECK(equals(invert(compose(a, b)), compose(invert(b), invert(a))));
    CHECK(rank(conjugate(a, b)) == rank(a));
    // bijections preserve rank and height of the domain pieces they move
    const OrthoSet part = OrthoSet::of(orth::test::sub_orthant(rng, st.members[0], 1, 3));
    const OrthoSet img = image_set(make_pei(part, [&] {
      std::vector<PeiPiece> ps;
      for (const PeiPiece& p : a.pieces)
        for (const Orthant& q : intersect(OrthoSet::of(p.dom), part).pieces()) ps.push_back({q, p.iso});
      return ps;
    }(), Require::Injection));
    CHECK(rank_height(img) == rank_height(part));
  }
}

TEST_CASE("support examples") {
  const OrthoSet S = OrthoSet::of(kQuad);
  CHECK(support(identity_map(S)).empty());
  CHECK(rank(identity_map(S)) == -1);
  const PeiMap sw = realize(reflection(kQuad, 0, 1), S);
  CHECK(equals(support(sw), S));
  CHECK(rank(sw) == 2);
  // every rank-2 orthant inside N^2 is (a,b) + N^2; none of them avoids the
  // diagonal within the box [0,6]^2
  bool found = false;
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6; ++b) {
      bool hits = false;
      for (Int x = a; x <= 6; ++x)
        for (Int y = b; y <= 6; ++y) hits = hits || x == y;
      found = found || !hits;
    }
  CHECK_FALSE(found);
  // unit translation of the line Z, which is the union of two rays
  const OrthoSet line = OrthoSet::universe(1);
  const PeiMap shift = make_pei(line,
                                {{O({0}, {1}), Isometry::translation({1})},
                                 {O({-1}, {-1}), Isometry::translation({1})}},
                                Require::Bijection);
  CHECK(rank(shift) == 1);
  CHECK(equals(support(shift), line));
  // a translation along one ray of a two-ray set, rest identity
  const OrthoSet two = OrthoSet::from_pieces(2, {O({0, 0}, {1, 0}), O({0, 1}, {1, 0})});
  const PeiMap half = realize(unit_translation(two.pieces()[0], 0, two.pieces()[1], 0), two);
  CHECK(equals(support(half), two));
  const PeiMap endo = realize(endotranslation(O({0, 0}, {1, 0}), O({1, 0}, {1, 0}), O({1, 0}, {1, 0})), two);
  CHECK(rank(endo) == -1);
}

TEST_CASE("support of a pet element is exactly the moved set") {
  const auto st = orth::test::make_stack(3, 2, 2);
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    std::vector<Generator> w;
    for (int i = 0; i < 3; ++i) {
      Generator g = orth::test::random_generator(rng, st, static_cast<int>(orth::test::uniform(rng, 0, 2)));
      w.push_back(g);
    }
    const PeiMap g = realize_word(w, st.set);
    const OrthoSet supp = support(g);
    orth::test::for_box(3, -1, 7, [&](const Point& p) {
      if (!st.set.contains(p)) return;
      const bool moved = orth::apply(g, p) != p;
      if (moved) CHECK(supp.contains(p));
      if (g.pet) CHECK(supp.contains(p) == moved);
    });
  }
}

TEST_CASE("germ action") {
  const auto st = orth::test::make_stack(3, 2, 2);
  const Germ g0 = germ_of(st.members[0]);
  const Germ g1 = germ_of(st.members[1]);
  const GermAction id = germ_action(identity_map(st.set), g0);
  CHECK(id.image == g0);
  CHECK(id.is_translation());
  CHECK(id.translation == Point{0, 0});
  const PeiMap tau = realize(transposition(st.members[0], st.members[1]), st.set);
  CHECK(germ_action(tau, g0).image == g1);
  CHECK_THROWS_AS(germ_action(tau, germ_of(O({0, 0, 7}, {1, 1, 0}))), Error);
  Rng rng(34);
  for (int t = 0; t < 30; ++t) {
    const PeiMap g = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    if (!g.pet) continue;
    for (const Orthant& L : st.members) {
      const GermAction ga = germ_action(g, germ_of(L));
      CHECK(ga.image.dir == L.dir);
    }
  }
}

TEST_CASE("flow") {
  const auto st = orth::test::make_stack(3, 2, 2);
  const Orthant& L = st.members[0];
  const Orthant& M = st.members[1];
  CHECK(flow(identity_map(st.set), germ_of(L)) == 0);
  const PeiMap lam = realize(unit_translation(L, 0, M, 1), st.set);
  CHECK(flow(lam, germ_of(L)) == -1);
  CHECK(flow(lam, germ_of(M)) == 1);
  const auto gf = global_flow(lam, 2);
  CHECK(gf.size() == 2);
  const PeiMap eta = realize(unit_endotranslation(L, 0, 1), st.set);
  CHECK(flow(eta, germ_of(L)) == 0);
  const PeiMap tau = realize(transposition(L, M), st.set);
  CHECK(category_of([&] { flow(tau, germ_of(L)); }) == "germ-not-fixed");
}

TEST_CASE("invariants of generators") {
  const auto st = orth::test::make_stack(3, 2, 3);
  const Orthant& L = st.members[0];
  const Orthant& M = st.members[1];
  const Invariants t = invariants(realize(transposition(L, M), st.set), 2);
  CHECK(t.rank == 2);
  CHECK(t.in_Gk);
  CHECK(*t.parity_germs == 1);
  CHECK_FALSE(t.in_C);
  const Invariants s = invariants(realize(reflection(L, 0, 1), st.set), 2);
  CHECK(s.in_C);
  CHECK_FALSE(s.in_Cord);
  CHECK(*s.parity_axes == 1);
  CHECK(*s.parity_germs == 0);
  const Invariants u = invariants(realize(unit_translation(L, 0, M, 1), st.set), 2);
  CHECK(u.in_Cord);
  CHECK_FALSE(u.stagnant);
  CHECK(*u.parity_germs == 0);
  CHECK(*u.parity_axes == 0);
  const Invariants e = invariants(realize(unit_endotranslation(L, 0, 1), st.set), 2);
  CHECK(e.in_Cord);
  CHECK(e.stagnant);
  const Invariants low = invariants(realize(transposition(L, M), st.set), 1);
  CHECK_FALSE(low.in_Gk);
  CHECK_FALSE(low.parity_germs.has_value());
}

TEST_CASE("unit endotranslation matches its explicit description") {
  const OrthoSet S = OrthoSet::of(kQuad);
  const PeiMap eta = realize(unit_endotranslation(kQuad, 0, 1), S);
  // on L t_x the diagonal shift by e_y - e_x, on F_x the reflection onto F_y
  const PeiMap hand = make_pei(S,
                               {{O({1, 0}, {1, 1}), Isometry::translation({-1, 1})},
                                {O({0, 0}, {0, 1}), Isometry{{0, 0}, SignedPerm::swap(2, 0, 1)}}},
                               Require::Bijection);
  CHECK(equals(eta, hand));
  const PeiMap sigma = realize(reflection(kQuad, 0, 1), S);
  const PeiMap sigma_t = realize(reflection(O({0, 1}, {1, 1}), 0, 1), S);
  CHECK(equals(eta, compose(sigma, sigma_t)));
}

TEST_CASE("generator preconditions") {
  const auto st = orth::test::make_stack(3, 2, 3);
  const Orthant& L = st.members[0];
  const Orthant& M = st.members[1];
  const Orthant& P = st.members[2];
  const Isometry c01 = canonical_iso(L, M), c12 = canonical_iso(M, P);
  Isometry bad = compose(canonical_iso(P, L), reflection_iso(L, 0, 1));
  CHECK(category_of([&] { realize(n_cycle({L, M, P}, {c01, c12, bad}), st.set); }) == "cycle-not-closed");
  CHECK(category_of([&] {
          realize(pei_translation(L, L.translated({1, 0, 0}), M, M.translated({1, 1, 0})), st.set);
        }) == "height-mismatch");
  CHECK(category_of([&] { realize(transposition(L, L), st.set); }) == "not-disjoint");
  CHECK(category_of([&] { realize(unit_endotranslation(L, 0, 2), st.set); }) == "invalid-axis");
  CHECK(category_of([&] { realize(transposition(L, O({0, 0, 9}, {1, 1, 0})), st.set); }) == "outside-domain");
  CHECK_NOTHROW(realize(n_cycle({L, M, P}, {c01, c12, canonical_iso(P, L)}), st.set));
}

TEST_CASE("generator inverses") {
  const auto st = orth::test::make_stack(3, 2, 3);
  Rng rng(35);
  for (int t = 0; t < 60; ++t) {
    const Generator g = orth::test::random_generator(rng, st, static_cast<int>(orth::test::uniform(rng, 0, 2)));
    CHECK(equals(compose(realize(g, st.set), realize(inverse(g), st.set)), identity_map(st.set)));
  }
}

TEST_CASE("total flow vanishes and parities are homomorphisms") {
  const auto st = orth::test::make_stack(3, 2, 3);
  Rng rng(36);
  for (int t = 0; t < 30; ++t) {
    const PeiMap a = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    const PeiMap b = realize_word(orth::test::random_word(rng, st, 2, 3), st.set);
    const Invariants ia = invariants(a, 2), ib = invariants(b, 2), iab = invariants(compose(a, b), 2);
    CHECK((*ia.parity_germs + *ib.parity_germs) % 2 == *iab.parity_germs);
    CHECK((*ia.parity_axes + *ib.parity_axes) % 2 == *iab.parity_axes);
    if (ia.in_C) {
      Int sum = 0;
      for (const auto& [g, f] : ia.flow) sum += f;
      CHECK(sum == 0);
    }
    // g_gamma is the identity exactly when rk g < rk gamma
    const OrthoSet supp = support(a);
    for (const Orthant& L : st.members) {
      const GermAction ga = germ_action(a, germ_of(L));
      const bool trivial = ga.image == germ_of(L) && ga.is_translation() && ga.translation == Point{0, 0};
      if (rank(a) < 2) CHECK(trivial);
    }
    if (rank(a) == 2)
      for (const Germ& g : top_germs(supp)) {
        const GermAction ga = germ_action(a, g);
        CHECK_FALSE((ga.image == g && ga.is_translation() && ga.translation == Point{0, 0}));
      }
  }
}
