#include "orth/generators.hpp"

#include "orth/normal_form.hpp"

namespace orth {

namespace {

void need_disjoint(const Orthant& a, const Orthant& b) {
  if (!disjoint(a, b)) fail("not-disjoint", "orthants must be disjoint");
}

void need_onto(const Orthant& L, const Isometry& iso, const Orthant& M) {
  if (!(image(L, iso) == M)) fail("not-onto", "isometry does not map the orthant onto its partner");
}

void need_axis(const Orthant& L, int x) {
  if (x < 0 || x >= L.dim() || L.dir[x] == 0) fail("invalid-axis", "axis is not a direction of the orthant");
}

void need_suborthant(const Orthant& K, const Orthant& L) {
  if (K.dir != L.dir || !subset(K, L)) fail("not-commensurable", "expected a commensurable suborthant");
}

Isometry shift(const Orthant& from, const Orthant& to) { return Isometry::translation(sub(to.base, from.base)); }

void append_iso(std::vector<PeiPiece>& ps, const OrthoSet& from, const OrthoSet& to) {
  if (from.empty() && to.empty()) return;
  const PeiMap m = pei_isomorphism(from, to);
  ps.insert(ps.end(), m.pieces.begin(), m.pieces.end());
}

std::vector<PeiPiece> pieces_of(const Generator& g) {
  const auto& O = g.orthants;
  const auto& I = g.isos;
  const int n = O.empty() ? 0 : O.front().dim();
  std::vector<PeiPiece> ps;
  auto need = [&](std::size_t no, std::size_t ni, std::size_t na) {
    if (O.size() != no || I.size() != ni || g.axes.size() != na)
      fail("precondition", "generator " + kind_name(g.kind) + " has the wrong number of arguments");
  };
  switch (g.kind) {
    case GenKind::Transposition: {
      need(2, 1, 0);
      need_disjoint(O[0], O[1]);
      need_onto(O[0], I[0], O[1]);
      ps.push_back({O[0], I[0]});
      ps.push_back({O[1], invert(I[0])});
      break;
    }
    case GenKind::Cycle: {
      if (O.size() < 2 || I.size() != O.size() || !g.axes.empty())
        fail("precondition", "a cycle needs at least two orthants and one isometry per orthant");
      for (std::size_t i = 0; i < O.size(); ++i) {
        need_onto(O[i], I[i], O[(i + 1) % O.size()]);
        for (std::size_t j = i + 1; j < O.size(); ++j) need_disjoint(O[i], O[j]);
      }
      Isometry prod = Isometry::identity(n);
      for (const Isometry& f : I) prod = compose(prod, f);
      if (!agree_on(O[0], prod, Isometry::identity(n)))
        fail("cycle-not-closed", "the cycle isometries do not compose to the identity");
      for (std::size_t i = 0; i < O.size(); ++i) ps.push_back({O[i], I[i]});
      break;
    }
    case GenKind::SingleOrthant: {
      need(1, 1, 0);
      need_onto(O[0], I[0], O[0]);
      ps.push_back({O[0], I[0]});
      break;
    }
    case GenKind::PeiTranslation: {
      need(4, 0, 0);
      const Orthant &L = O[0], &K = O[1], &M = O[2], &KM = O[3];
      need_disjoint(L, M);
      if (L.rank() != M.rank()) fail("rank-mismatch", "pei-translation needs orthants of equal rank");
      need_suborthant(K, L);
      need_suborthant(KM, M);
      const OrthoSet from = subtract(OrthoSet::of(L), K);
      const OrthoSet to = subtract(OrthoSet::of(M), KM);
      const int k = L.rank();
      if (height_at(from, k - 1) != height_at(to, k - 1))
        fail("height-mismatch", "h(L - K) differs from h(L' - K')");
      ps.push_back({K, shift(K, L)});
      append_iso(ps, from, to);
      ps.push_back({M, shift(M, KM)});
      break;
    }
    case GenKind::UnitTranslation: {
      need(2, 0, 2);
      const Orthant &L = O[0], &M = O[1];
      const int x = g.axes[0], xm = g.axes[1];
      need_disjoint(L, M);
      if (L.rank() != M.rank()) fail("rank-mismatch", "unit translation needs orthants of equal rank");
      need_axis(L, x);
      need_axis(M, xm);
      const Orthant K = L.translated(unit(n, x, L.dir[x]));
      ps.push_back({K, Isometry::translation(unit(n, x, -L.dir[x]))});
      ps.push_back({L.face_without(x), canonical_iso(L.face_without(x), M.face_without(xm))});
      ps.push_back({M, Isometry::translation(unit(n, xm, M.dir[xm]))});
      break;
    }
    case GenKind::Endotranslation: {
      need(3, 0, 0);
      const Orthant &L = O[0], &K = O[1], &K2 = O[2];
      need_suborthant(K, L);
      need_suborthant(K2, L);
      const OrthoSet from = subtract(OrthoSet::of(L), K);
      const OrthoSet to = subtract(OrthoSet::of(L), K2);
      const int k = L.rank();
      if (k == 0 || height_at(from, k - 1) != height_at(to, k - 1))
        fail("height-mismatch", "h(L - K) differs from h(L - K')");
      ps.push_back({K, shift(K, K2)});
      append_iso(ps, from, to);
      break;
    }
    case GenKind::UnitEndotranslation: {
      need(1, 0, 2);
      const Orthant& L = O[0];
      const int x = g.axes[0], y = g.axes[1];
      need_axis(L, x);
      need_axis(L, y);
      if (x == y) fail("invalid-axis", "unit endotranslation needs two different axes");
      const Point v = add(unit(n, x, -L.dir[x]), unit(n, y, L.dir[y]));
      ps.push_back({L.translated(unit(n, x, L.dir[x])), Isometry::translation(v)});
      ps.push_back({L.face_without(x), reflection_iso(L, x, y)});
      break;
    }
  }
  return ps;
}

}  // namespace

Generator transposition(const Orthant& L, const Orthant& M, const Isometry& iso) {
  return Generator{GenKind::Transposition, {L, M}, {iso}, {}, false};
}

Generator transposition(const Orthant& L, const Orthant& M) { return transposition(L, M, canonical_iso(L, M)); }

Generator point_transposition(const Point& p, const Point& q) {
  return transposition(Orthant::point(p), Orthant::point(q), Isometry::translation(sub(q, p)));
}

Generator n_cycle(const std::vector<Orthant>& Ls, const std::vector<Isometry>& isos) {
  return Generator{GenKind::Cycle, Ls, isos, {}, false};
}

Generator single_orthant_isometry(const Orthant& L, const Isometry& iso) {
  return Generator{GenKind::SingleOrthant, {L}, {iso}, {}, false};
}

Generator reflection(const Orthant& L, int x, int y) { return single_orthant_isometry(L, reflection_iso(L, x, y)); }

Generator pei_translation(const Orthant& L, const Orthant& K, const Orthant& M, const Orthant& KM) {
  return Generator{GenKind::PeiTranslation, {L, K, M, KM}, {}, {}, false};
}

Generator unit_translation(const Orthant& L, int x, const Orthant& M, int xm) {
  return Generator{GenKind::UnitTranslation, {L, M}, {}, {x, xm}, false};
}

Generator endotranslation(const Orthant& L, const Orthant& K, const Orthant& K2) {
  return Generator{GenKind::Endotranslation, {L, K, K2}, {}, {}, false};
}

Generator unit_endotranslation(const Orthant& L, int x, int y) {
  return Generator{GenKind::UnitEndotranslation, {L}, {}, {x, y}, false};
}

Generator inverse(const Generator& g) {
  Generator h = g;
  switch (g.kind) {
    case GenKind::Transposition:
      return h;
    case GenKind::UnitTranslation:
      std::swap(h.orthants[0], h.orthants[1]);
      std::swap(h.axes[0], h.axes[1]);
      return h;
    case GenKind::UnitEndotranslation:
      std::swap(h.axes[0], h.axes[1]);
      return h;
    case GenKind::SingleOrthant:
      h.isos[0] = invert(g.isos[0]);
      return h;
    default:
      h.inverted = !g.inverted;
      return h;
  }
}

Isometry reflection_iso(const Orthant& L, int x, int y) {
  need_axis(L, x);
  need_axis(L, y);
  const int n = L.dim();
  Isometry iso = Isometry::identity(n);
  iso.rot.image[x] = y;
  iso.rot.image[y] = x;
  iso.rot.sign[x] = iso.rot.sign[y] = L.dir[x] * L.dir[y];
  iso.shift = sub(L.base, iso.rot.apply(L.base));
  return iso;
}

PeiMap realize(const Generator& g, const OrthoSet& S) {
  for (const Orthant& L : g.orthants) require_dim(S.dim(), L.dim());
  PeiMap m = extend_by_identity(S, pieces_of(g), Require::Bijection);
  return g.inverted ? invert(m) : m;
}

PeiMap realize_word(const std::vector<Generator>& word, const OrthoSet& S) {
  PeiMap acc = identity_map(S);
  for (const Generator& g : word) acc = compose(acc, realize(g, S));
  return acc;
}

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::Transposition: return "transposition";
    case GenKind::Cycle: return "cycle";
    case GenKind::SingleOrthant: return "single";
    case GenKind::PeiTranslation: return "pei-translation";
    case GenKind::UnitTranslation: return "unit-translation";
    case GenKind::Endotranslation: return "endotranslation";
    case GenKind::UnitEndotranslation: return "unit-endotranslation";
  }
  return "unknown";
}

}  // namespace orth
