#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chromavar/common.hpp"

namespace chromavar {

// Permutation of {0..deg-1} as an image list.
using Perm = std::vector<int>;

inline bool is_permutation(const Perm& g) {
  std::vector<char> seen(g.size(), 0);
  for (int x : g) {
    if (x < 0 || x >= static_cast<int>(g.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// (f*g)(x) = f(g(x))
inline Perm perm_compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
  return r;
}

// Cycle notation on 1-based points; identity prints as "e".
inline std::string cycle_label(const Perm& g) {
  std::string s;
  std::vector<char> done(g.size(), 0);
  for (size_t i = 0; i < g.size(); ++i) {
    if (done[i] || g[i] == static_cast<int>(i)) continue;
    s += '(';
    int x = static_cast<int>(i);
    bool first = true;
    do {
      if (!first) s += ' ';
      s += std::to_string(x + 1);
      done[x] = 1;
      x = g[x];
      first = false;
    } while (x != static_cast<int>(i));
    s += ')';
  }
  return s.empty() ? "e" : s;
}

// A finite group as a full Cayley table. Element 0 is the identity; the
// element order is breadth-first over generator words, ties by generator
// index, so identical input always yields identical indexing.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = i*j
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;
  std::vector<int> generators;  // element indices
  // BFS word decomposition: element i (> 0 reachable) arose as
  // elems[word_prev[i]] * generators[word_gen[i]]; identity has -1s.
  std::vector<int> word_prev;
  std::vector<int> word_gen;

  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const { return inverse[i]; }
  int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); }

  int pow(int x, int e) const {
    int r = identity;
    for (int i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

  int element_order(int x) const {
    int r = x, n = 1;
    while (r != identity) {
      r = mul(r, x);
      ++n;
    }
    return n;
  }

  bool commute(int x, int y) const { return mul(x, y) == mul(y, x); }
};

namespace detail {

// BFS closure of generator words; fills word decomposition as it goes.
template <typename Elem, typename Mul>
void bfs_closure(const std::vector<Elem>& gens, Elem id, Mul mul, int cap,
                 std::vector<Elem>& elems, std::vector<int>& word_prev,
                 std::vector<int>& word_gen) {
  elems = {id};
  word_prev = {-1};
  word_gen = {-1};
  std::map<Elem, int> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      Elem next = mul(elems[i], gens[j]);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        word_prev.push_back(static_cast<int>(i));
        word_gen.push_back(static_cast<int>(j));
        if (static_cast<int>(elems.size()) > cap)
          throw cap_exceeded("group closure exceeds cap " + std::to_string(cap));
      }
    }
  }
}

inline void fill_inverses_identity(FiniteGroup& G) {
  G.inverse.assign(G.order, -1);
  for (int i = 0; i < G.order; ++i) {
    for (int j = 0; j < G.order; ++j)
      if (G.table[i][j] == G.identity && G.table[j][i] == G.identity) {
        G.inverse[i] = j;
        break;
      }
    if (G.inverse[i] < 0) throw input_error("element without two-sided inverse");
  }
}

}  // namespace detail

// Group axioms, exhaustively for small orders. Associativity is scanned in
// full up to order 256 (the battery scale); Latin-square, identity and
// inverse laws are always checked.
inline void validate_group(const FiniteGroup& G) {
  if (G.order <= 0 || static_cast<int>(G.table.size()) != G.order)
    throw input_error("bad table size");
  for (const auto& row : G.table) {
    if (static_cast<int>(row.size()) != G.order) throw input_error("ragged table");
    for (int v : row)
      if (v < 0 || v >= G.order) throw input_error("table entry out of range");
  }
  for (int i = 0; i < G.order; ++i) {
    if (G.table[G.identity][i] != i || G.table[i][G.identity] != i)
      throw input_error("identity law fails");
    if (G.table[i][G.inverse[i]] != G.identity || G.table[G.inverse[i]][i] != G.identity)
      throw input_error("inverse law fails");
    std::vector<char> seen(G.order, 0);
    for (int j = 0; j < G.order; ++j) {
      if (seen[G.table[i][j]]) throw input_error("table row is not a permutation");
      seen[G.table[i][j]] = 1;
    }
  }
  if (G.order <= 256) {
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b)
        for (int c = 0; c < G.order; ++c)
          if (G.table[G.table[a][b]][c] != G.table[a][G.table[b][c]])
            throw input_error("associativity fails at (" + std::to_string(a) +
                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }
  // generators generate
  std::set<int> span{G.identity};
  std::vector<int> todo{G.identity};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int g : G.generators) {
      int y = G.table[x][g];
      if (span.insert(y).second) todo.push_back(y);
    }
  }
  if (static_cast<int>(span.size()) != G.order)
    throw input_error("generators do not generate the group");
}

inline FiniteGroup group_from_perm_generators(int degree, std::vector<Perm> gens,
                                              const std::string& name = "",
                                              const Caps& caps = {}) {
  if (degree < 1) throw input_error("degree must be positive");
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw input_error("generator is not a permutation of the stated degree");
  }
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  FiniteGroup G;
  G.name = name;
  std::vector<Perm> elems;
  detail::bfs_closure(gens, id, perm_compose, caps.max_group_order, elems,
                      G.word_prev, G.word_gen);
  G.order = static_cast<int>(elems.size());
  std::map<Perm, int> index;
  for (int i = 0; i < G.order; ++i) index[elems[i]] = i;
  G.table.assign(G.order, std::vector<int>(G.order));
  for (int i = 0; i < G.order; ++i)
    for (int j = 0; j < G.order; ++j)
      G.table[i][j] = index.at(perm_compose(elems[i], elems[j]));
  G.identity = 0;
  detail::fill_inverses_identity(G);
  G.labels.reserve(G.order);
  for (const auto& e : elems) G.labels.push_back(cycle_label(e));
  G.generators.clear();
  for (const auto& g : gens) G.generators.push_back(index.at(g));
  validate_group(G);
  return G;
}

inline FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels = {},
                                    const std::string& name = "",
                                    const Caps& caps = {}) {
  FiniteGroup G;
  G.name = name;
  G.order = static_cast<int>(table.size());
  if (G.order > caps.max_group_order)
    throw cap_exceeded("table order exceeds cap");
  G.table = std::move(table);
  if (G.order == 0) throw input_error("empty table");
  for (const auto& row : G.table) {
    if (static_cast<int>(row.size()) != G.order) throw input_error("ragged table");
    for (int v : row)
      if (v < 0 || v >= G.order) throw input_error("table entry out of range");
  }
  // locate the identity
  G.identity = -1;
  for (int i = 0; i < G.order; ++i) {
    bool ok = true;
    for (int j = 0; j < G.order && ok; ++j)
      ok = G.table[i][j] == j && G.table[j][i] == j;
    if (ok) {
      G.identity = i;
      break;
    }
  }
  if (G.identity < 0) throw input_error("table has no identity element");
  detail::fill_inverses_identity(G);
  if (labels.empty()) {
    for (int i = 0; i < G.order; ++i) G.labels.push_back("g" + std::to_string(i));
  } else {
    if (static_cast<int>(labels.size()) != G.order)
      throw input_error("label count does not match order");
    G.labels = std::move(labels);
  }
  // greedy generating set, ascending element index
  std::set<int> span{G.identity};
  std::vector<int> members{G.identity};
  for (int x = 0; x < G.order && static_cast<int>(span.size()) < G.order; ++x) {
    if (span.count(x)) continue;
    G.generators.push_back(x);
    span.insert(x);
    members.push_back(x);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j <= i; ++j)
        for (int y : {G.table[members[i]][members[j]], G.table[members[j]][members[i]]})
          if (span.insert(y).second) members.push_back(y);
  }
  // word decomposition w.r.t. the greedy generators
  std::vector<int> elems;
  auto mul = [&G](int a, int b) { return G.table[a][b]; };
  detail::bfs_closure(G.generators, G.identity, mul, caps.max_group_order, elems,
                      G.word_prev, G.word_gen);
  if (static_cast<int>(elems.size()) != G.order)
    throw internal_error("generator closure mismatch");
  // reorder word decomposition to element indexing
  std::vector<int> wp(G.order, -1), wg(G.order, -1);
  for (size_t i = 0; i < elems.size(); ++i) {
    wp[elems[i]] = G.word_prev[i] < 0 ? -1 : elems[G.word_prev[i]];
    wg[elems[i]] = G.word_gen[i];
  }
  G.word_prev = std::move(wp);
  G.word_gen = std::move(wg);
  validate_group(G);
  return G;
}

// Centralizer of a set of elements; always a subgroup containing the center.
inline std::vector<int> centralizer(const FiniteGroup& G, const std::vector<int>& S) {
  for (int s : S)
    if (s < 0 || s >= G.order) throw input_error("centralizer: index out of range");
  std::vector<int> out;
  for (int g = 0; g < G.order; ++g) {
    bool ok = true;
    for (int s : S)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

inline std::vector<int> center(const FiniteGroup& G) {
  std::vector<int> all(G.order);
  std::iota(all.begin(), all.end(), 0);
  return centralizer(G, all);
}

}  // namespace chromavar
