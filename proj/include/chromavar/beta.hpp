#pragma once

#include <vector>

#include "chromavar/presheaf.hpp"

namespace chromavar {

// n >= d (or the INT_MAX sentinel) means the identity regime.
inline int clamp_beta_level(int n, int d) {
  if (n < 0) throw input_error("beta level must be nonnegative");
  return n > d ? d : n;
}

struct BetaResult {
  FinitePresheaf presheaf;
  std::vector<QuotientWitness> levels;
  PresheafMap projection;  // canonical F -> beta_n F, levelwise surjective
};

// Quotient identifying sections with equal restrictions along every map out
// of a space of dimension <= n. At levels k <= n the identity map is among
// the tests, so the quotient is trivial there.
inline BetaResult beta_quotient(const FinitePresheaf& F, int n) {
  int m_top = clamp_beta_level(n, F.d);
  BetaResult R;
  R.levels.resize(F.d + 1);
  std::vector<std::vector<int>> profile_class(F.d + 1);
  for (int k = 0; k <= F.d; ++k) {
    std::vector<std::vector<int>> profiles(F.level_size[k]);
    for (int x = 0; x < F.level_size[k]; ++x) {
      auto& prof = profiles[x];
      for (int m = 0; m <= m_top; ++m) {
        long long nm = hom_count(F.p, k, m);
        for (long long mi = 0; mi < nm; ++mi) prof.push_back(F.apply(k, m, mi, x));
      }
    }
    R.levels[k] = quotient_by_key(profiles);
  }

  std::vector<int> sizes(F.d + 1);
  for (int k = 0; k <= F.d; ++k) sizes[k] = R.levels[k].classes();
  const auto& lv = R.levels;
  R.presheaf = make_presheaf(
      F.p, F.d, sizes, [&F, &lv](int k, int j, const FpMat& m, int c) {
        int x = lv[k].representative[c];
        return lv[j].class_of[F.apply(k, j, index_of_mat(m), x)];
      });
  // the induced maps must not depend on representatives
  for (int k = 0; k <= F.d; ++k)
    for (int j = 0; j <= F.d; ++j) {
      long long nm = hom_count(F.p, k, j);
      for (long long mi = 0; mi < nm; ++mi)
        for (int x = 0; x < F.level_size[k]; ++x)
          if (R.presheaf.apply(k, j, mi, lv[k].class_of[x]) !=
              lv[j].class_of[F.apply(k, j, mi, x)])
            throw internal_error("beta quotient restriction ill-defined");
    }
  R.presheaf.labels.assign(F.d + 1, {});
  for (int k = 0; k <= F.d; ++k)
    for (int c = 0; c < sizes[k]; ++c)
      R.presheaf.labels[k].push_back(F.label(k, R.levels[k].representative[c]));

  R.projection.p = F.p;
  R.projection.d = F.d;
  R.projection.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k) R.projection.components[k] = R.levels[k].class_of;
  return R;
}

// The natural surjection beta_{n+1} F -> beta_n F; precomposed with the
// canonical map from F it recovers F -> beta_n F.
inline PresheafMap tower_surjection(const FinitePresheaf& F, int n) {
  if (n + 1 > F.d) throw input_error("tower_surjection needs n+1 <= d");
  BetaResult hi = beta_quotient(F, n + 1);
  BetaResult lo = beta_quotient(F, n);
  PresheafMap phi{F.p, F.d, {}};
  phi.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k) {
    phi.components[k].resize(hi.levels[k].classes());
    for (int c = 0; c < hi.levels[k].classes(); ++c)
      phi.components[k][c] = lo.levels[k].class_of[hi.levels[k].representative[c]];
    // surjection is well-defined: the coarser classes refine consistently
    for (int x = 0; x < F.level_size[k]; ++x)
      if (phi.components[k][hi.levels[k].class_of[x]] != lo.levels[k].class_of[x])
        throw internal_error("tower surjection ill-defined");
  }
  return phi;
}

// Canonical comparison beta_n(F x G) -> beta_n F x beta_n G is a bijection
// at every level.
inline bool beta_product_check(const FinitePresheaf& F, const FinitePresheaf& G,
                               int n) {
  FinitePresheaf P = product_presheaf(F, G);
  BetaResult bp = beta_quotient(P, n);
  BetaResult bf = beta_quotient(F, n);
  BetaResult bg = beta_quotient(G, n);
  for (int k = 0; k <= F.d; ++k) {
    if (bp.levels[k].classes() != bf.levels[k].classes() * bg.levels[k].classes())
      return false;
    std::vector<int> image(bp.levels[k].classes(), -1);
    for (int x = 0; x < F.level_size[k]; ++x)
      for (int y = 0; y < G.level_size[k]; ++y) {
        int src = bp.levels[k].class_of[x * G.level_size[k] + y];
        int dst = bf.levels[k].class_of[x] * bg.levels[k].classes() +
                  bg.levels[k].class_of[y];
        if (image[src] < 0)
          image[src] = dst;
        else if (image[src] != dst)
          return false;  // not well-defined: product classes split
      }
    std::vector<char> hit(bp.levels[k].classes(), 0);
    for (int v : image) {
      if (v < 0) return false;
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

}  // namespace chromavar
