#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chromavar/fp.hpp"

namespace chromavar {

// Contravariant finite-set-valued functor on F_p-vector spaces of dimension
// <= d. Level k holds a finite set; a k x j matrix m (the morphism
// F^j -> F^k) restricts level k to level j via rest[k][j][index_of(m)].
struct FinitePresheaf {
  int p = 2;
  int d = 0;
  std::vector<int> level_size;
  std::vector<std::vector<std::string>> labels;  // optional, may be empty
  std::vector<std::vector<std::vector<std::vector<int>>>> rest;

  const std::vector<int>& rmap(int k, int j, long long mi) const {
    return rest[k][j][static_cast<size_t>(mi)];
  }

  int apply(int k, int j, long long mi, int x) const {
    return rest[k][j][static_cast<size_t>(mi)][x];
  }

  std::string label(int k, int x) const {
    if (k < static_cast<int>(labels.size()) && x < static_cast<int>(labels[k].size()))
      return labels[k][x];
    return std::to_string(x);
  }
};

// Build a presheaf by evaluating `eval(k, j, m, x)` on every restriction,
// where m is the k x j matrix and x runs over level k.
inline FinitePresheaf make_presheaf(
    int p, int d, std::vector<int> sizes,
    const std::function<int(int, int, const FpMat&, int)>& eval) {
  FinitePresheaf F;
  F.p = p;
  F.d = d;
  F.level_size = std::move(sizes);
  F.rest.assign(d + 1, {});
  for (int k = 0; k <= d; ++k) {
    F.rest[k].assign(d + 1, {});
    for (int j = 0; j <= d; ++j) {
      long long n = hom_count(p, k, j);
      F.rest[k][j].assign(static_cast<size_t>(n), {});
      for (long long mi = 0; mi < n; ++mi) {
        FpMat m = mat_of_index(p, k, j, mi);
        auto& row = F.rest[k][j][static_cast<size_t>(mi)];
        row.resize(F.level_size[k]);
        for (int x = 0; x < F.level_size[k]; ++x) {
          int y = eval(k, j, m, x);
          if (y < 0 || y >= F.level_size[j])
            throw internal_error("restriction image out of range");
          row[x] = y;
        }
      }
    }
  }
  return F;
}

// Terminal presheaf: all levels singletons.
inline FinitePresheaf terminal_presheaf(int p, int d) {
  return make_presheaf(p, d, std::vector<int>(d + 1, 1),
                       [](int, int, const FpMat&, int) { return 0; });
}

// hom(-, F^r): level k is all r x k matrices, restriction is precomposition.
inline FinitePresheaf representable(int p, int d, int r, const Caps& caps = {}) {
  ensure_prime(p);
  if (r < 0) throw input_error("representable: negative rank");
  std::vector<int> sizes(d + 1);
  for (int k = 0; k <= d; ++k)
    sizes[k] = static_cast<int>(hom_count(p, r, k, caps.max_enum));
  FinitePresheaf F = make_presheaf(
      p, d, sizes, [p, r](int k, int, const FpMat& m, int x) {
        return static_cast<int>(index_of_mat(fp_mul(mat_of_index(p, r, k, x), m)));
      });
  F.labels.assign(d + 1, {});
  for (int k = 0; k <= d; ++k)
    for (int x = 0; x < sizes[k]; ++x)
      F.labels[k].push_back(mat_entries_string(mat_of_index(p, r, k, x)));
  return F;
}

struct FunctorialityViolation {
  int k = 0, j = 0, i = 0;        // levels: maps F^j -> F^k and F^i -> F^j
  long long outer = 0, inner = 0;  // matrix indices (k x j and j x i)
  int element = 0;                 // witness element of level k
};

struct FunctorialityReport {
  bool pass = true;
  std::vector<FunctorialityViolation> violations;
};

// Exhaustive scan of identity and composition laws over all composable
// matrix pairs.
inline FunctorialityReport check_functoriality(const FinitePresheaf& F,
                                               int max_violations = 8) {
  FunctorialityReport rep;
  for (int k = 0; k <= F.d && rep.pass; ++k) {
    long long idk = index_of_mat(fp_identity(F.p, k));
    for (int x = 0; x < F.level_size[k]; ++x)
      if (F.apply(k, k, idk, x) != x) {
        rep.pass = false;
        rep.violations.push_back({k, k, k, idk, idk, x});
        break;
      }
  }
  for (int k = 0; k <= F.d; ++k)
    for (int j = 0; j <= F.d; ++j)
      for (int i = 0; i <= F.d; ++i) {
        long long nkj = hom_count(F.p, k, j), nji = hom_count(F.p, j, i);
        for (long long a = 0; a < nkj; ++a) {
          FpMat A = mat_of_index(F.p, k, j, a);
          for (long long b = 0; b < nji; ++b) {
            FpMat B = mat_of_index(F.p, j, i, b);
            long long ab = index_of_mat(fp_mul(A, B));
            for (int x = 0; x < F.level_size[k]; ++x) {
              int direct = F.apply(k, i, ab, x);
              int stepped = F.apply(j, i, b, F.apply(k, j, a, x));
              if (direct != stepped) {
                rep.pass = false;
                rep.violations.push_back({k, j, i, a, b, x});
                if (static_cast<int>(rep.violations.size()) >= max_violations)
                  return rep;
              }
            }
          }
        }
      }
  return rep;
}

// Levelwise map of presheaves. Naturality is a property, not a guarantee of
// the type; check_naturality verifies it.
struct PresheafMap {
  int p = 2;
  int d = 0;
  std::vector<std::vector<int>> components;
};

inline bool check_naturality(const FinitePresheaf& F, const FinitePresheaf& G,
                             const PresheafMap& phi) {
  if (F.p != G.p || F.d != G.d) return false;
  for (int k = 0; k <= F.d; ++k) {
    if (static_cast<int>(phi.components[k].size()) != F.level_size[k]) return false;
    for (int y : phi.components[k])
      if (y < 0 || y >= G.level_size[k]) return false;
  }
  for (int k = 0; k <= F.d; ++k)
    for (int j = 0; j <= F.d; ++j) {
      long long n = hom_count(F.p, k, j);
      for (long long mi = 0; mi < n; ++mi)
        for (int x = 0; x < F.level_size[k]; ++x)
          if (phi.components[j][F.apply(k, j, mi, x)] !=
              G.apply(k, j, mi, phi.components[k][x]))
            return false;
    }
  return true;
}

inline bool levelwise_injective(const FinitePresheaf& G, const PresheafMap& phi) {
  for (int k = 0; k <= phi.d; ++k) {
    std::vector<char> hit(G.level_size[k], 0);
    for (int y : phi.components[k]) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

inline bool levelwise_surjective(const FinitePresheaf& G, const PresheafMap& phi) {
  for (int k = 0; k <= phi.d; ++k) {
    std::vector<char> hit(G.level_size[k], 0);
    for (int y : phi.components[k]) hit[y] = 1;
    for (char h : hit)
      if (!h) return false;
  }
  return true;
}

// Levelwise product with diagonal restrictions; element (x, y) has index
// x * |G_k| + y.
inline FinitePresheaf product_presheaf(const FinitePresheaf& F,
                                       const FinitePresheaf& G) {
  if (F.p != G.p || F.d != G.d)
    throw input_error("product: presheaves disagree on p or d");
  std::vector<int> sizes(F.d + 1);
  for (int k = 0; k <= F.d; ++k) sizes[k] = F.level_size[k] * G.level_size[k];
  FinitePresheaf P = make_presheaf(
      F.p, F.d, sizes, [&F, &G](int k, int j, const FpMat& m, int xy) {
        long long mi = index_of_mat(m);
        int x = xy / G.level_size[k], y = xy % G.level_size[k];
        return F.apply(k, j, mi, x) * G.level_size[j] + G.apply(k, j, mi, y);
      });
  P.labels.assign(F.d + 1, {});
  for (int k = 0; k <= F.d; ++k)
    for (int x = 0; x < F.level_size[k]; ++x)
      for (int y = 0; y < G.level_size[k]; ++y)
        P.labels[k].push_back("(" + F.label(k, x) + "," + G.label(k, y) + ")");
  return P;
}

inline PresheafMap product_projection_first(const FinitePresheaf& F,
                                            const FinitePresheaf& G) {
  PresheafMap phi{F.p, F.d, {}};
  phi.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k)
    for (int x = 0; x < F.level_size[k]; ++x)
      for (int y = 0; y < G.level_size[k]; ++y)
        phi.components[k].push_back(x);
  return phi;
}

inline PresheafMap product_diagonal(const FinitePresheaf& F) {
  PresheafMap phi{F.p, F.d, {}};
  phi.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k)
    for (int x = 0; x < F.level_size[k]; ++x)
      phi.components[k].push_back(x * F.level_size[k] + x);
  return phi;
}

}  // namespace chromavar
