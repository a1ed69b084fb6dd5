#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chromavar/fp.hpp"
#include "chromavar/group.hpp"

namespace chromavar {

// An elementary abelian p-subgroup with a chosen basis. `elements` is sorted;
// `coords[i]` is the exponent vector of elements[i] over the basis and
// `by_coords` inverts it (mixed-radix index c_0 + c_1*p + ...).
struct ElemAbSubgroup {
  std::vector<int> elements;
  std::vector<int> basis;
  int rank = 0;
  int prime = 2;
  std::vector<std::vector<uint8_t>> coords;
  std::vector<int> by_coords;

  int size() const { return static_cast<int>(elements.size()); }

  int position_of(int elt) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), elt);
    if (it == elements.end() || *it != elt)
      throw internal_error("element not in subgroup");
    return static_cast<int>(it - elements.begin());
  }

  bool contains(int elt) const {
    return std::binary_search(elements.begin(), elements.end(), elt);
  }

  int element_from_coords(const std::vector<uint8_t>& c) const {
    int idx = 0;
    for (int i = rank - 1; i >= 0; --i) idx = idx * prime + c[i];
    return by_coords[idx];
  }
};

namespace detail {

// Fill coords/by_coords for a sorted elementary abelian element set with the
// given basis, by enumerating all exponent vectors.
inline void index_subgroup(const FiniteGroup& G, ElemAbSubgroup& E) {
  int p = E.prime, r = E.rank;
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  E.by_coords.assign(static_cast<size_t>(total), -1);
  E.coords.assign(E.elements.size(), {});
  std::vector<uint8_t> c(r, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    int elt = G.identity;
    for (int i = 0; i < r; ++i) {
      c[i] = static_cast<uint8_t>(t % p);
      t /= p;
      elt = G.mul(elt, G.pow(E.basis[i], c[i]));
    }
    int pos = E.position_of(elt);
    if (!E.coords[pos].empty())
      throw internal_error("basis does not span uniquely");
    E.coords[pos] = c;
    E.by_coords[idx] = elt;
  }
}

}  // namespace detail

// Canonical basis of a sorted elementary abelian element set: greedy over
// ascending element index.
inline ElemAbSubgroup make_elem_ab_subgroup(const FiniteGroup& G, int p,
                                            std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  ElemAbSubgroup E;
  E.prime = p;
  E.elements = std::move(elements);
  std::set<int> span{G.identity};
  for (int x : E.elements) {
    if (span.count(x)) continue;
    E.basis.push_back(x);
    std::set<int> bigger;
    for (int s : span)
      for (int k = 0; k < p; ++k) bigger.insert(G.mul(s, G.pow(x, k)));
    span = std::move(bigger);
  }
  E.rank = static_cast<int>(E.basis.size());
  if (span.size() != E.elements.size() ||
      !std::equal(span.begin(), span.end(), E.elements.begin()))
    throw internal_error("element set is not the span of its basis");
  detail::index_subgroup(G, E);
  return E;
}

inline void validate_elem_ab_subgroup(const FiniteGroup& G, const ElemAbSubgroup& E) {
  long long expect = 1;
  for (int i = 0; i < E.rank; ++i) expect *= E.prime;
  if (static_cast<long long>(E.elements.size()) != expect)
    throw internal_error("subgroup size is not p^rank");
  for (int x : E.elements) {
    if (x != G.identity && G.element_order(x) != E.prime)
      throw internal_error("non-identity element of order != p");
    for (int y : E.elements) {
      if (!G.commute(x, y)) throw internal_error("subgroup not abelian");
      if (!E.contains(G.mul(x, y))) throw internal_error("subgroup not closed");
    }
  }
}

// All elementary abelian p-subgroups, including the trivial one, ordered by
// rank then lexicographically on the element set. Grown rank by rank from
// commuting order-p extensions.
inline std::vector<ElemAbSubgroup> elem_abelian_subgroups(const FiniteGroup& G, int p) {
  ensure_prime(p);
  std::vector<int> order_p;
  for (int x = 0; x < G.order; ++x)
    if (x != G.identity && G.element_order(x) == p) order_p.push_back(x);

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer{{G.identity}};
  seen.insert({G.identity});
  std::vector<std::vector<int>> all{{G.identity}};
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& S : layer) {
      for (int x : order_p) {
        if (std::binary_search(S.begin(), S.end(), x)) continue;
        bool commutes = true;
        for (int s : S)
          if (!G.commute(s, x)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<int> bigger;
        bigger.reserve(S.size() * p);
        for (int s : S)
          for (int k = 0; k < p; ++k) bigger.push_back(G.mul(s, G.pow(x, k)));
        std::sort(bigger.begin(), bigger.end());
        if (seen.insert(bigger).second) next.push_back(bigger);
      }
    }
    for (const auto& S : next) all.push_back(S);
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<ElemAbSubgroup> out;
  out.reserve(all.size());
  for (auto& S : all) out.push_back(make_elem_ab_subgroup(G, p, std::move(S)));
  return out;
}

}  // namespace chromavar
