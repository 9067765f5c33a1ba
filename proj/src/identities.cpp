#include "orth/identities.hpp"

#include <functional>

namespace orth {

namespace {

using Check = std::function<bool()>;

void run(std::vector<IdentityCheck>& out, std::string name, std::string statement, const Check& f,
         std::string note = {}) {
  IdentityCheck c{std::move(name), std::move(statement), false, {}, std::move(note)};
  try {
    c.passed = f();
  } catch (const Error& e) {
    c.detail = e.category() + ": " + e.what();
  }
  out.push_back(std::move(c));
}

PeiMap mul(std::initializer_list<PeiMap> fs) {
  auto it = fs.begin();
  PeiMap acc = *it;
  for (++it; it != fs.end(); ++it) acc = compose(acc, *it);
  return acc;
}

// g restricted to the given disjoint orthants by one isometry, identity elsewhere
PeiMap restricted(const OrthoSet& S, const std::vector<Orthant>& part, const Isometry& iso) {
  std::vector<PeiPiece> ps;
  for (const Orthant& P : part) ps.push_back({P, iso});
  return extend_by_identity(S, std::move(ps), Require::Bijection);
}

std::vector<Orthant> face_union(const Orthant& L, int x, int y) {
  std::vector<Orthant> u{L.face_without(x)};
  for (const Orthant& P : subtract(OrthoSet::of(L.face_without(y)), L.face_without(x)).pieces()) u.push_back(P);
  return u;
}

// points of the box [lo,hi]^n inside L are moved by v
bool shifts_on(const PeiMap& g, const Orthant& L, const Point& v, Int lo, Int hi) {
  bool ok = true;
  Point p(L.dim(), lo);
  while (true) {
    if (L.contains(p)) ok = ok && orth::apply(g, p) == add(p, v);
    int i = L.dim() - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) return ok;
    ++p[i];
  }
}

void part_a(std::vector<IdentityCheck>& out) {
  const int n = 3;
  std::vector<Orthant> st;
  for (Int j = 0; j < 3; ++j) st.push_back(Orthant::make({0, 0, j}, {1, 1, 0}));
  const OrthoSet S = OrthoSet::from_pieces(n, st);
  const Orthant &K = st[0], &L = st[1], &M = st[2];

  run(out, "transposition-inverse", "alpha = (alpha tau) tau", [&] {
    const PeiMap alpha = realize(single_orthant_isometry(K, reflection_iso(K, 0, 1)), S);
    const PeiMap tau = realize(transposition(K, L), S);
    return equals(alpha, mul({alpha, tau, tau}));
  });
  run(
      out, "twisted-transposition", "tau_alpha tau = alpha (alpha^tau)^-1 for tau_alpha = (L, L') with isometry alpha then tau",
      [&] {
        Isometry a = Isometry::identity(n);
        a.rot.image = {1, 0, 2};
        a.shift = sub(K.base, a.rot.apply(K.base));
        const PeiMap alpha = realize(single_orthant_isometry(K, a), S);
        const PeiMap tau = realize(transposition(K, L), S);
        const PeiMap ta = realize(transposition(K, L, compose(a, canonical_iso(K, L))), S);
        return equals(compose(ta, tau), compose(alpha, invert(conjugate(alpha, tau))));
      },
      "alpha tau is not a 2-cycle unless alpha = 1; a product of two transpositions of L, L' "
      "is alpha on L and a conjugate of alpha^-1 on L'");
  run(out, "reflection-pair", "sigma sigma' = [sigma, tau] for reflections of L, L' and tau = (L, L')", [&] {
    const PeiMap s = realize(reflection(K, 0, 1), S);
    const PeiMap s2 = realize(reflection(L, 0, 1), S);
    const PeiMap tau = realize(transposition(K, L), S);
    return equals(compose(s, s2), commutator(s, tau));
  });

  // unit translation from K to L moving F_0(K) onto F_1(L)
  const PeiMap lam = realize(unit_translation(K, 0, L, 1), S);
  const PeiMap tau = realize(transposition(K, L, face_pair_iso(K, 0, L, 1)), S);
  const Orthant Lt = L.translated(unit(n, 1, 1));
  const PeiMap tau2 = realize(transposition(K, Lt, face_pair_iso(K, 0, Lt, 1)), S);
  run(out, "translation-two-transpositions", "lambda = tau tau'", [&] { return equals(lam, compose(tau, tau2)); });
  run(out, "translation-square-conjugate", "lambda^2 = tau tau^lambda", [&] {
    return equals(power(lam, 2), compose(tau, conjugate(tau, lam)));
  });
  run(out, "translation-square-commutator", "lambda^2 = [tau, lambda]", [&] { return equals(power(lam, 2), commutator(tau, lam)); });
  run(out, "translation-commutator", "lambda = [mu, tau] for a unit translation mu and a transposition tau", [&] {
    // mu moves points from M into K along the axis 0 faces
    const PeiMap mu = realize(unit_translation(M, 0, K, 0), S);
    return equals(lam, commutator(mu, tau));
  });
  run(out, "pei-translation-product", "a pei-translation is a product of unit translations modulo G_{k-1}", [&] {
    const Point v{2, 1, 0}, w{0, 3, 0};
    const Orthant KK = K.translated(v), LK = L.translated(w);
    const std::vector<int> xs{0, 0, 1}, ys{1, 1, 1};
    PeiMap prod = identity_map(S);
    for (std::size_t j = 0; j < xs.size(); ++j) prod = compose(prod, realize(unit_translation(K, xs[j], L, ys[j]), S));
    const PeiMap lamg = realize(pei_translation(K, KK, L, LK), S);
    return shifts_on(prod, KK, scale(v, -1), -2, 8) && shifts_on(prod, L, w, -2, 8) &&
           rank(compose(lamg, invert(prod))) < 2;
  });
}

void part_b(std::vector<IdentityCheck>& out) {
  const int n = 3;
  const Orthant L = Orthant::positive(n);
  const Orthant M = Orthant::make({-1, 0, 0}, {-1, 1, 1});
  const OrthoSet S = OrthoSet::from_pieces(n, {L, M});
  const int x = 0, y = 1, z = 2;
  auto eta = [&](int a, int b) { return realize(unit_endotranslation(L, a, b), S); };
  auto sig = [&](int a, int b) { return realize(reflection(L, a, b), S); };
  const PeiMap sxy = sig(x, y);
  const PeiMap exy = eta(x, y);
  const Orthant Lty = L.translated(unit(n, y, 1));
  const PeiMap sxy_fxfy = restricted(S, face_union(L, x, y), reflection_iso(L, x, y));
  // unit translation from M into L inducing t_y on L
  const PeiMap lam = realize(unit_translation(M, x, L, y), S);

  run(out, "endotranslation-product", "an endotranslation is a product of unit endotranslations modulo G_{k-1}", [&] {
    const Point v{2, 0, 1}, w{0, 1, 2};
    const Orthant K = L.translated(v), K2 = L.translated(w);
    const PeiMap prod = mul({eta(x, y), eta(x, z)});
    const PeiMap e = realize(endotranslation(L, K, K2), S);
    return shifts_on(prod, K, sub(w, v), -2, 7) && rank(compose(e, invert(prod))) < 3;
  });
  run(out, "unit-endotranslation-definition", "eta_xy = sigma_xy sigma_xy^{t_y}", [&] {
    return equals(exy, compose(sxy, realize(reflection(Lty, x, y), S)));
  });
  run(out, "endotranslation-conjugate", "eta_xy^{sigma_xy} = eta_yx", [&] { return equals(conjugate(exy, sxy), eta(y, x)); });
  run(out, "endotranslation-inverse", "eta_yx = eta_xy^-1", [&] { return equals(eta(y, x), invert(exy)); });
  run(out, "reflection-endotranslation-commutator", "[sigma_xy, eta_xy] = eta_xy^2", [&] { return equals(commutator(sxy, exy), power(exy, 2)); });
  run(out, "endotranslation-face-swap", "eta_xy eta_yx^{t_y} = sigma_xy restricted to F_x u F_y", [&] {
    return equals(compose(exy, realize(unit_endotranslation(Lty, y, x), S)), sxy_fxfy);
  });
  run(out, "endotranslation-commutator", "eta_xy = [sigma_xy, lambda]", [&] { return equals(exy, commutator(sxy, lam)); });
  run(
      out, "face-swap-commutator", "sigma_xy restricted to F_x u F_y = [eta_yx, lambda]",
      [&] { return equals(sxy_fxfy, commutator(eta(y, x), lam)); },
      "the variant with eta_xy fails: [eta_xy, lambda] swaps F_y t_x and F_x t_y instead");
  run(out, "three-cycle-xyz", "eta_xy eta_yz eta_zx = sigma_yz restricted to F_x", [&] {
    const Orthant Fx = L.face_without(x);
    return equals(mul({exy, eta(y, z), eta(z, x)}), restricted(S, {Fx}, reflection_iso(L, y, z)));
  });
  run(
      out, "three-cycle-xzy", "eta_xz eta_zy eta_yx = sigma_yz restricted to F_x",
      [&] {
        const Orthant Fx = L.face_without(x);
        return equals(mul({eta(x, z), eta(z, y), eta(y, x)}), restricted(S, {Fx}, reflection_iso(L, y, z)));
      },
      "the ordering eta_xz eta_yx eta_zy = sigma_yz on F_x u F_y fails; that product is not an involution, and no "
      "product of three unit endotranslations swaps F_x and F_y");
}

}  // namespace

Isometry face_pair_iso(const Orthant& K, int x, const Orthant& M, int xm) {
  const int n = K.dim();
  require_dim(n, M.dim());
  if (K.rank() != M.rank()) fail("rank-mismatch", "face pair of orthants of different rank");
  if (K.dir[x] == 0 || M.dir[xm] == 0) fail("invalid-axis", "axis is not a direction of the orthant");
  std::vector<int> from, to, ffrom, fto;
  for (int a = 0; a < n; ++a) {
    if (K.dir[a] != 0 && a != x) from.push_back(a);
    if (M.dir[a] != 0 && a != xm) to.push_back(a);
    if (K.dir[a] == 0) ffrom.push_back(a);
    if (M.dir[a] == 0) fto.push_back(a);
  }
  Isometry iso = Isometry::identity(n);
  auto set = [&](int a, int b, int s) {
    iso.rot.image[a] = b;
    iso.rot.sign[a] = s;
  };
  set(x, xm, K.dir[x] * M.dir[xm]);
  for (std::size_t i = 0; i < from.size(); ++i) set(from[i], to[i], K.dir[from[i]] * M.dir[to[i]]);
  for (std::size_t i = 0; i < ffrom.size(); ++i) set(ffrom[i], fto[i], 1);
  iso.shift = sub(M.base, iso.rot.apply(K.base));
  return iso;
}

PeiMap power(const PeiMap& g, int e) {
  const PeiMap b = e < 0 ? invert(g) : g;
  PeiMap acc = identity_map(g.domain);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = compose(acc, b);
  return acc;
}

std::vector<IdentityCheck> verify_identities() {
  std::vector<IdentityCheck> out;
  part_a(out);
  part_b(out);
  return out;
}

}  // namespace orth
