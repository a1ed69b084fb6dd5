#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "chromavar/group.hpp"

namespace chromavar {

// Finite 1-dimensional G-complex: vertices, undirected edges, and a G-action
// by graph automorphisms. Admissible: an element fixing an edge setwise
// fixes both endpoints, so fixed subcomplexes are genuine subcomplexes.
struct GComplex {
  std::string name;
  int n_vertices = 0;
  std::vector<std::string> vlabels;
  std::vector<std::pair<int, int>> edges;        // first < second, sorted
  std::vector<std::vector<int>> action;          // per group element

  int act(int g, int v) const { return action[g][v]; }
};

inline void validate_gcomplex(const FiniteGroup& G, const GComplex& X) {
  if (static_cast<int>(X.action.size()) != G.order)
    throw input_error("complex action rows do not match group order");
  std::set<std::pair<int, int>> edge_set(X.edges.begin(), X.edges.end());
  if (edge_set.size() != X.edges.size()) throw input_error("duplicate edges");
  for (auto [u, v] : X.edges)
    if (u < 0 || v < 0 || u >= X.n_vertices || v >= X.n_vertices || u >= v)
      throw input_error("bad edge");
  for (int g = 0; g < G.order; ++g) {
    if (!is_permutation(X.action[g]))
      throw input_error("action of an element is not a vertex permutation");
    for (auto [u, v] : X.edges) {
      int a = X.act(g, u), b = X.act(g, v);
      int lo = std::min(a, b), hi = std::max(a, b);
      if (!edge_set.count({lo, hi}))
        throw input_error("action does not preserve edges");
      if (lo == u && hi == v && a != u)
        throw input_error("inadmissible action: an edge is inverted");
    }
  }
  // the assignment must be a genuine action
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < G.order; ++h) {
      int gh = G.mul(g, h);
      for (int v = 0; v < X.n_vertices; ++v)
        if (X.act(g, X.act(h, v)) != X.act(gh, v))
          throw input_error("vertex assignment is not a group action");
    }
}

// Extend generator actions to the whole group along the BFS word
// decomposition, then validate.
inline GComplex build_gcomplex(const FiniteGroup& G, std::vector<std::string> vlabels,
                               std::vector<std::pair<int, int>> edges,
                               const std::vector<std::vector<int>>& generator_actions,
                               const std::string& name = "") {
  GComplex X;
  X.name = name;
  X.n_vertices = static_cast<int>(vlabels.size());
  X.vlabels = std::move(vlabels);
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  X.edges = std::move(edges);
  if (generator_actions.size() != G.generators.size())
    throw input_error("need one action row per group generator");
  X.action.assign(G.order, {});
  std::vector<int> identity(X.n_vertices);
  std::iota(identity.begin(), identity.end(), 0);
  X.action[G.identity] = identity;
  for (int i = 0; i < G.order; ++i) {
    if (i == G.identity) continue;
    // left-to-right over the BFS word: elem = prev * gen
    int prev = G.word_prev[i], gen = G.word_gen[i];
    if (prev < 0 || X.action[prev].empty())
      throw internal_error("word decomposition out of order");
    const auto& ga = generator_actions[gen];
    if (static_cast<int>(ga.size()) != X.n_vertices)
      throw input_error("action row has wrong length");
    X.action[i].resize(X.n_vertices);
    for (int v = 0; v < X.n_vertices; ++v) X.action[i][v] = X.action[prev][ga[v]];
  }
  validate_gcomplex(G, X);
  return X;
}

inline GComplex point_complex(const FiniteGroup& G) {
  GComplex X;
  X.name = "pt";
  X.n_vertices = 1;
  X.vlabels = {"*"};
  X.action.assign(G.order, std::vector<int>{0});
  return X;
}

// Subcomplex of vertices fixed pointwise by a set of group elements; keeps
// the parent's vertex ids. The centralizer of the set acts on it through the
// parent action.
struct Subcomplex {
  std::vector<int> vertices;                 // sorted parent ids
  std::vector<std::pair<int, int>> edges;    // parent ids

  int position_of(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
      throw internal_error("vertex not in subcomplex");
    return static_cast<int>(it - vertices.begin());
  }
};

inline Subcomplex fixed_subcomplex(const GComplex& X, const std::vector<int>& S) {
  Subcomplex sub;
  for (int v = 0; v < X.n_vertices; ++v) {
    bool fixed = true;
    for (int s : S)
      if (X.act(s, v) != v) {
        fixed = false;
        break;
      }
    if (fixed) sub.vertices.push_back(v);
  }
  std::set<int> fixed(sub.vertices.begin(), sub.vertices.end());
  for (auto [u, v] : X.edges)
    if (fixed.count(u) && fixed.count(v)) sub.edges.push_back({u, v});
  return sub;
}

inline Subcomplex whole_complex(const GComplex& X) {
  Subcomplex sub;
  sub.vertices.resize(X.n_vertices);
  std::iota(sub.vertices.begin(), sub.vertices.end(), 0);
  sub.edges = X.edges;
  return sub;
}

// Connected components via union-find on edges; class ids in vertex order.
inline QuotientWitness pi0(const Subcomplex& X) {
  DisjointSets ds(static_cast<int>(X.vertices.size()));
  for (auto [u, v] : X.edges) ds.join(X.position_of(u), X.position_of(v));
  return quotient_from(ds);
}

inline QuotientWitness pi0(const GComplex& X) { return pi0(whole_complex(X)); }

}  // namespace chromavar
