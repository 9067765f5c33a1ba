#include "orth/normal_form.hpp"

#include <algorithm>
#include <map>

namespace orth {

namespace {

// Hilbert hotel move on the current image set D: the sub-orthant C of a host
// slides one step along x and the placed orthant M fills the freed face.
PeiMap absorb(const OrthoSet& D, const Orthant& M, const Orthant& C, int x) {
  const int n = D.dim();
  const Orthant F = C.face_without(x);
  std::vector<PeiPiece> ps;
  ps.push_back({M, canonical_iso(M, F)});
  ps.push_back({C, Isometry::translation(unit(n, x, C.dir[x]))});
  for (const Orthant& R : subtract(subtract(D, M), C).pieces()) ps.push_back({R, Isometry::identity(n)});
  return make_pei(D, std::move(ps), Require::Injection);
}

PeiMap placement(const OrthoSet& s, const std::vector<Orthant>& targets) {
  std::vector<PeiPiece> ps;
  for (std::size_t i = 0; i < targets.size(); ++i)
    ps.push_back({s.pieces()[i], canonical_iso(s.pieces()[i], targets[i])});
  return make_pei(s, std::move(ps), Require::Injection);
}

// full rank: rank-N orthants with equal directions always meet, so the h <= 2^N
// top pieces go to quadrants with distinct sign patterns (pattern j negates the
// axes of the set bits of j) based at Q times the signs
Orthant quadrant(int n, std::size_t j, Int Q) {
  Orthant T{Point(n, 0), std::vector<int>(n, 1)};
  for (int a = 0; a < n; ++a) {
    if ((j >> a) & 1U) T.dir[a] = -1;
    T.base[a] = T.dir[a] * Q;
  }
  return T;
}

NormalForm pei_mode(const OrthoSet& s, Int B) {
  const int n = s.dim();
  const RankHeight rh = rank_height(s);
  const int k = rh.rank;
  const bool full = k == n;
  std::size_t nlower = 0;
  for (const Orthant& L : s.pieces()) nlower += L.rank() < k;
  // for full rank the lower pieces wait in the slab |x_{N-1}| < Q
  const Int Q = B + static_cast<Int>(nlower);
  std::vector<Orthant> targets(s.size());
  std::vector<Orthant> stack;
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Orthant& L = s.pieces()[i];
    Orthant T{Point(n, B), std::vector<int>(n, 0)};
    if (L.rank() == k && full) {
      T = quadrant(n, stack.size(), Q);
      stack.push_back(T);
    } else if (L.rank() == k) {
      for (int a = 0; a < k; ++a) T.dir[a] = 1;
      T.base[k] = B + static_cast<Int>(stack.size());
      stack.push_back(T);
    } else {
      const Int c = -(B + static_cast<Int>(lower.size()));
      T.base.assign(n, c);
      if (full) T.base[n - 1] = static_cast<Int>(lower.size());
      for (int a = 0; a < L.rank(); ++a) T.dir[a] = -1;
      lower.push_back(i);
    }
    targets[i] = T;
  }
  PeiMap w = placement(s, targets);
  OrthoSet cur = image_set(w);
  const Orthant& H = stack.front();
  for (std::size_t i : lower) {
    const Orthant& M = targets[i];
    const int r = M.rank();
    Orthant C{H.base, std::vector<int>(n, 0)};
    for (int a = 0; a <= r; ++a) C.dir[a] = H.dir[a];
    w = compose(w, absorb(cur, M, C, r));
    cur = subtract(cur, M);
  }
  NormalForm nf;
  if (full) {
    // slide the quadrants back to the canonical offset B
    std::vector<PeiPiece> ps;
    for (std::size_t j = 0; j < stack.size(); ++j) {
      const Orthant T = quadrant(n, j, B);
      ps.push_back({stack[j], canonical_iso(stack[j], T)});
      stack[j] = T;
      nf.stacks.push_back({T});
    }
    w = compose(w, make_pei(cur, std::move(ps), Require::Injection));
  } else {
    nf.stacks = {stack};
  }
  nf.set = OrthoSet::from_pieces(n, stack, true);
  nf.witness = std::move(w);
  return nf;
}

NormalForm pet_mode(const OrthoSet& s, Int B) {
  const int n = s.dim();
  const RankHeight rh = rank_height(s);
  if (rh.rank >= n) fail("precondition", "pet normal form needs rank below the ambient dimension");
  std::map<std::vector<int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < s.size(); ++i) classes[s.pieces()[i].dir].push_back(i);
  Int D = 1;
  for (const auto& [d, members] : classes) D = std::max<Int>(D, static_cast<Int>(members.size()) + 1);
  const Int far = B + static_cast<Int>(classes.size()) * D;
  std::vector<Orthant> targets(s.size());
  std::map<std::vector<int>, std::vector<Orthant>> placed;
  Int c = 0;
  for (const auto& [d, members] : classes) {
    const int stack_axis = static_cast<int>(std::find(d.begin(), d.end(), 0) - d.begin());
    for (std::size_t j = 0; j < members.size(); ++j) {
      Orthant T{Point(n, 0), d};
      for (int a = 0; a < n; ++a) T.base[a] = d[a] == 0 ? B + c * D : d[a] * far;
      T.base[stack_axis] += static_cast<Int>(j);
      targets[members[j]] = T;
      placed[d].push_back(T);
    }
    ++c;
  }
  PeiMap w = placement(s, targets);
  OrthoSet cur = image_set(w);
  std::vector<std::vector<int>> maximal;
  for (const auto& [d, members] : classes) {
    bool top = true;
    for (const auto& [e, others] : classes)
      if (e != d && indicator_leq(d, e)) top = false;
    if (top) maximal.push_back(d);
  }
  for (const auto& [d, members] : placed) {
    if (std::find(maximal.begin(), maximal.end(), d) != maximal.end()) continue;
    const std::vector<int>* host = nullptr;
    for (const auto& e : maximal)
      if (indicator_leq(d, e)) {
        host = &e;
        break;
      }
    const Orthant& H = placed[*host].front();
    int x = 0;
    while (!(H.dir[x] != 0 && d[x] == 0)) ++x;
    Orthant C{H.base, d};
    C.dir[x] = H.dir[x];
    for (const Orthant& M : members) {
      w = compose(w, absorb(cur, M, C, x));
      cur = subtract(cur, M);
    }
  }
  NormalForm nf;
  std::vector<Orthant> all;
  for (const auto& d : maximal) {
    nf.stacks.push_back(placed[d]);
    all.insert(all.end(), placed[d].begin(), placed[d].end());
  }
  nf.set = OrthoSet::from_pieces(n, std::move(all), true);
  nf.witness = std::move(w);
  return nf;
}

}  // namespace

NormalForm normal_form(const OrthoSet& s, NormalMode mode, Int B) {
  if (s.empty()) fail("precondition", "normal form of the empty set");
  if (B < 1) fail("out-of-range", "stack location must be positive");
  return mode == NormalMode::Pei ? pei_mode(s, B) : pet_mode(s, B);
}

bool no_parallel_suborthant(const std::vector<std::vector<Orthant>>& stacks) {
  for (const auto& st : stacks) {
    if (st.empty()) return false;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i].dir != st.front().dir) return false;
      for (std::size_t j = i + 1; j < st.size(); ++j)
        if (!disjoint(st[i], st[j])) return false;
    }
  }
  for (std::size_t a = 0; a < stacks.size(); ++a)
    for (std::size_t b = 0; b < stacks.size(); ++b) {
      if (a == b) continue;
      if (indicator_leq(stacks[a].front().dir, stacks[b].front().dir)) return false;
      for (const Orthant& L : stacks[a])
        for (const Orthant& M : stacks[b])
          if (!disjoint(L, M)) return false;
    }
  return true;
}

PeiMap pei_isomorphism(const OrthoSet& from, const OrthoSet& to) {
  require_dim(from.dim(), to.dim());
  if (!(rank_height(from) == rank_height(to)))
    fail("height-mismatch", "sets differ in rank or height");
  if (from.empty()) return make_pei(from, {}, Require::Injection);
  const NormalForm a = normal_form(from, NormalMode::Pei);
  const NormalForm b = normal_form(to, NormalMode::Pei);
  return compose(a.witness, invert(b.witness));
}

}  // namespace orth
