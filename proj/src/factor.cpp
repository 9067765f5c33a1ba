#include "orth/factor.hpp"

#include <algorithm>

namespace orth {

namespace {

// slide A along its diagonal until it misses B; A and B have different germs
Orthant push_apart(Orthant A, const Orthant& B) {
  const Point u = A.diagonal();
  while (!disjoint(A, B)) A = A.translated(u);
  return A;
}

Orthant rep(const OrthoSet& S, const Germ& g) {
  const auto r = represent(S, g);
  if (!r) fail("internal", "germ of the support not represented in the domain");
  return *r;
}

class Reducer {
 public:
  explicit Reducer(const PeiMap& g) : S_(g.domain), r_(g) {}

  void push(const Generator& h) {
    r_ = compose(r_, realize(h, S_));
    killers_.push_back(h);
  }

  // h^m, using the inverse for negative m
  void push_power(const Generator& h, Int m) {
    const Generator b = m < 0 ? inverse(h) : h;
    for (Int i = 0; i < (m < 0 ? -m : m); ++i) push(b);
  }

  // change of the germ translation at γ caused by h
  Point effect(const Generator& h, const Germ& g) const { return germ_action(realize(h, S_), g).translation; }

  void germ_permutation(const std::vector<Germ>& tops, int k) {
    for (const Germ& g : tops) {
      const Germ d = germ_action(r_, g).image;
      if (d == g) continue;
      const Orthant B = rep(S_, g);
      const Orthant A = push_apart(rep(S_, d), B);
      push(k == 0 ? point_transposition(A.base, B.base) : transposition(A, B));
    }
  }

  void axis_permutations(const std::vector<Germ>& tops) {
    for (const Germ& g : tops) {
      const Orthant A = rep(S_, g);
      const auto ax = A.axes();
      while (true) {
        const auto perm = germ_action(r_, g).perm;
        std::size_t i = 0;
        while (i < perm.size() && perm[i] == static_cast<int>(i)) ++i;
        if (i == perm.size()) break;
        push(reflection(A, ax[i], ax[perm[i]]));
      }
    }
  }

  void translations(const std::vector<Germ>& tops, int k) {
    const Germ& g0 = tops.front();
    const Orthant A0 = rep(S_, g0);
    auto order = tops;
    std::rotate(order.begin(), order.begin() + 1, order.end());  // γ0 last
    for (const Germ& g : order) {
      const Orthant A = rep(S_, g);
      const auto ax = A.axes();
      for (int j = 1; j < k; ++j) {
        const Int c = germ_action(r_, g).translation[j];
        if (c == 0) continue;
        const Generator eta = unit_endotranslation(A, ax[j], ax[0]);
        push_power(eta, -c * effect(eta, g)[j]);
      }
      if (g == g0) continue;
      const Int c = germ_action(r_, g).translation[0];
      if (c == 0) continue;
      const Orthant B = push_apart(A0, A);
      const Generator lam = unit_translation(A, ax[0], B, B.axes()[0]);
      push_power(lam, -c * effect(lam, g)[0]);
    }
  }

  std::vector<Generator> run() {
    while (true) {
      const OrthoSet T = support(r_);
      if (T.empty()) break;
      const int k = rank_height(T).rank;
      const auto tops = top_germs(T);
      germ_permutation(tops, k);
      if (k > 0) {
        axis_permutations(tops);
        translations(tops, k);
      }
      if (rank(r_) >= k) fail("internal", "factorization did not lower the rank");
    }
    // g h_1 ... h_m = 1, so g = h_m^-1 ... h_1^-1
    std::vector<Generator> word;
    for (auto it = killers_.rbegin(); it != killers_.rend(); ++it) word.push_back(inverse(*it));
    return word;
  }

 private:
  OrthoSet S_;
  PeiMap r_;
  std::vector<Generator> killers_;
};

int generator_rank(const Generator& h) { return h.orthants.front().rank(); }

int count_mod2(const std::vector<Generator>& word, int k, std::initializer_list<GenKind> kinds) {
  int c = 0;
  for (const Generator& h : word)
    if (generator_rank(h) == k && std::find(kinds.begin(), kinds.end(), h.kind) != kinds.end()) ++c;
  return c % 2;
}

}  // namespace

std::vector<Generator> factor_generators(const PeiMap& g) {
  if (!g.bijective) fail("not-bijective", "only bijections of the domain factor into generators");
  return Reducer(g).run();
}

AbelianClass abelianization_class(const PeiMap& g, int k) {
  if (!g.bijective) fail("not-bijective", "abelianization class of a non-bijection");
  const RankHeight rh = rank_height(g.domain);
  if (k < 0 || k > rh.rank) fail("out-of-range", "k must lie between 0 and the rank of the domain");
  if (rank(g) > k) fail("rank-too-large", "element does not lie in G_k");
  const Invariants inv = invariants(g, k);
  const Int germs = k < rh.rank ? -1 : rh.height;  // -1: infinitely many
  AbelianClass a;
  if (germs == -1 || germs >= 3) {
    a.value = {*inv.parity_germs, *inv.parity_axes};
    a.generators = {"transposition", "single"};
    return a;
  }
  const auto word = factor_generators(g);
  a.word_based = true;
  if (germs == 2) {
    a.experimental = true;
    a.value = {*inv.parity_germs, *inv.parity_axes,
               count_mod2(word, k, {GenKind::UnitTranslation, GenKind::PeiTranslation})};
    a.generators = {"transposition", "single", "unit-translation"};
    return a;
  }
  a.value = {*inv.parity_axes, count_mod2(word, k, {GenKind::UnitEndotranslation})};
  a.generators = {"single", "unit-endotranslation"};
  return a;
}

}  // namespace orth
