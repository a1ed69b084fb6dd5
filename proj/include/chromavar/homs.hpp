#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chromavar/fp.hpp"
#include "chromavar/group.hpp"

namespace chromavar {

// Homomorphism F_p^n -> G stored by basis images. The images pairwise
// commute and have order dividing p, which is exactly the condition for the
// basis assignment to extend.
struct GroupHom {
  int n = 0;
  int p = 2;
  std::vector<int> images;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.n == b.n && a.p == b.p && a.images == b.images;
  }
};

// Evaluate on an exponent vector.
inline int hom_eval(const FiniteGroup& G, const GroupHom& h,
                    const std::vector<uint8_t>& e) {
  int r = G.identity;
  for (int i = 0; i < h.n; ++i) r = G.mul(r, G.pow(h.images[i], e[i]));
  return r;
}

// h composed with a linear map given by an n x j matrix: F^j -> F^n -> G.
inline GroupHom hom_precompose(const FiniteGroup& G, const GroupHom& h,
                               const FpMat& m) {
  if (m.rows != h.n || m.p != h.p) throw internal_error("hom_precompose: shape");
  GroupHom r;
  r.n = m.cols;
  r.p = h.p;
  r.images.resize(m.cols);
  std::vector<uint8_t> col(m.rows);
  for (int j = 0; j < m.cols; ++j) {
    for (int i = 0; i < m.rows; ++i) col[i] = m.at(i, j);
    r.images[j] = hom_eval(G, h, col);
  }
  return r;
}

inline GroupHom hom_conjugate(const FiniteGroup& G, const GroupHom& h, int g) {
  GroupHom r = h;
  for (int& x : r.images) x = G.conj(g, x);
  return r;
}

namespace detail {

// n-tuples of pairwise commuting elements drawn from `pool`, lexicographic
// on image tuples.
inline std::vector<GroupHom> commuting_tuples(const FiniteGroup& G, int n, int p,
                                              const std::vector<int>& pool,
                                              const Caps& caps) {
  long long bound = 1;
  for (int i = 0; i < n; ++i) {
    bound *= std::max<long long>(G.order, 1);
    if (bound > caps.max_enum)
      throw cap_exceeded("hom enumeration |G|^n exceeds cap");
  }
  std::vector<GroupHom> out;
  GroupHom cur{n, p, std::vector<int>(n, 0)};
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == n) {
      out.push_back(cur);
      return;
    }
    for (int x : pool) {
      bool ok = true;
      for (int y : chosen)
        if (!G.commute(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.images[slot] = x;
      chosen.push_back(x);
      self(self, slot + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// All homomorphisms F_p^n -> G: tuples of pairwise commuting elements of
// order dividing p. Includes the trivial hom; n = 0 yields exactly one.
inline std::vector<GroupHom> enumerate_homs(int n, int p, const FiniteGroup& G,
                                            const Caps& caps = {}) {
  if (n < 0) throw input_error("rank must be nonnegative");
  ensure_prime(p);
  std::vector<int> pool;
  for (int x = 0; x < G.order; ++x)
    if (x == G.identity || G.element_order(x) == p) pool.push_back(x);
  return detail::commuting_tuples(G, n, p, pool, caps);
}

// All n-tuples of pairwise commuting elements of p-power order (order 1
// included); the finite model of continuous homs from the p-adic lattice.
inline std::vector<GroupHom> commuting_p_power_tuples(int n, int p,
                                                      const FiniteGroup& G,
                                                      const Caps& caps = {}) {
  if (n < 0) throw input_error("rank must be nonnegative");
  ensure_prime(p);
  std::vector<int> pool;
  for (int x = 0; x < G.order; ++x) {
    int o = G.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) pool.push_back(x);
  }
  return detail::commuting_tuples(G, n, p, pool, caps);
}

struct RepOrbits {
  std::vector<GroupHom> homs;
  QuotientWitness classes;
  std::map<std::vector<int>, int> index_of;  // image tuple -> hom index

  int hom_index(const GroupHom& h) const {
    auto it = index_of.find(h.images);
    if (it == index_of.end()) throw internal_error("hom not in enumeration");
    return it->second;
  }

  int class_of_hom(const GroupHom& h) const { return classes.class_of[hom_index(h)]; }
};

// Rep(F^n, G): homs modulo simultaneous conjugation. Representatives are the
// lexicographically least tuples (hom enumeration is lexicographic).
inline RepOrbits rep_orbits(int n, int p, const FiniteGroup& G, const Caps& caps = {}) {
  RepOrbits R;
  R.homs = enumerate_homs(n, p, G, caps);
  for (size_t i = 0; i < R.homs.size(); ++i)
    R.index_of[R.homs[i].images] = static_cast<int>(i);
  DisjointSets ds(static_cast<int>(R.homs.size()));
  for (size_t i = 0; i < R.homs.size(); ++i)
    for (int g = 0; g < G.order; ++g) {
      GroupHom c = hom_conjugate(G, R.homs[i], g);
      ds.join(static_cast<int>(i), R.index_of.at(c.images));
    }
  R.classes = quotient_from(ds);
  return R;
}

// Subgroup generated by a tuple's images (not necessarily elementary
// abelian: p-power tuples generate abelian p-groups).
inline std::vector<int> tuple_image_subgroup(const FiniteGroup& G,
                                             const GroupHom& h) {
  std::set<int> span{G.identity};
  std::vector<int> members{G.identity};
  for (int x : h.images) {
    if (span.count(x)) continue;
    span.insert(x);
    members.push_back(x);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j <= i; ++j)
        for (int y : {G.mul(members[i], members[j]), G.mul(members[j], members[i])})
          if (span.insert(y).second) members.push_back(y);
  }
  return std::vector<int>(span.begin(), span.end());
}

}  // namespace chromavar
