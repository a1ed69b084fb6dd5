#pragma once

#include <optional>
#include <vector>

#include "chromavar/beta.hpp"
#include "chromavar/presheaf.hpp"

namespace chromavar {

// Finite right End(F_p^d)-set. act[a][s] is s.a for the d x d matrix with
// enumeration index a.
struct EndMSet {
  int p = 2;
  int d = 0;
  int carrier = 0;
  std::vector<std::vector<int>> act;
  std::vector<std::string> labels;

  int action(long long a, int s) const { return act[static_cast<size_t>(a)][s]; }

  std::string label(int s) const {
    return s < static_cast<int>(labels.size()) ? labels[s] : std::to_string(s);
  }
};

inline void validate_endmset(const EndMSet& S) {
  long long n = hom_count(S.p, S.d, S.d);
  if (static_cast<long long>(S.act.size()) != n)
    throw internal_error("endmset action table has wrong size");
  long long id = index_of_mat(fp_identity(S.p, S.d));
  for (int s = 0; s < S.carrier; ++s)
    if (S.action(id, s) != s) throw internal_error("endmset identity law fails");
  for (long long a = 0; a < n; ++a) {
    FpMat A = mat_of_index(S.p, S.d, S.d, a);
    for (long long b = 0; b < n; ++b) {
      FpMat B = mat_of_index(S.p, S.d, S.d, b);
      long long ab = index_of_mat(fp_mul(A, B));
      for (int s = 0; s < S.carrier; ++s)
        if (S.action(b, S.action(a, s)) != S.action(ab, s))
          throw internal_error("endmset associativity fails");
    }
  }
}

// Evaluation at the top level: carrier F(F^d), action s.a = F(a)(s).
inline EndMSet e_d_evaluate(const FinitePresheaf& F) {
  EndMSet S;
  S.p = F.p;
  S.d = F.d;
  S.carrier = F.level_size[F.d];
  long long n = hom_count(F.p, F.d, F.d);
  S.act.assign(static_cast<size_t>(n), {});
  for (long long a = 0; a < n; ++a) S.act[static_cast<size_t>(a)] = F.rmap(F.d, F.d, a);
  if (F.d < static_cast<int>(F.labels.size())) S.labels = F.labels[F.d];
  return S;
}

inline EndMSet singleton_endmset(int p, int d) {
  EndMSet S;
  S.p = p;
  S.d = d;
  S.carrier = 1;
  S.act.assign(static_cast<size_t>(hom_count(p, d, d)), std::vector<int>{0});
  return S;
}

// End(F^d) acting on itself by right multiplication.
inline EndMSet free_orbit_endmset(int p, int d) {
  EndMSet S;
  S.p = p;
  S.d = d;
  long long n = hom_count(p, d, d);
  S.carrier = static_cast<int>(n);
  S.act.assign(static_cast<size_t>(n), std::vector<int>(S.carrier));
  for (long long a = 0; a < n; ++a) {
    FpMat A = mat_of_index(p, d, d, a);
    for (int s = 0; s < S.carrier; ++s)
      S.act[static_cast<size_t>(a)][s] =
          static_cast<int>(index_of_mat(fp_mul(mat_of_index(p, d, d, s), A)));
  }
  return S;
}

// Left adjoint of e_d: level k is (carrier x Hom(F^k, F^d)) modulo
// (s.a, h) ~ (s, a o h), with restriction by precomposition. Keeps the
// ambient indexing (s * |Hom| + h) and per-level witnesses so the counit can
// be evaluated.
struct InducedPresheaf {
  FinitePresheaf presheaf;
  int raw_carrier = 0;                  // carrier of the inducing EndMSet
  std::vector<QuotientWitness> levels;  // over carrier x Hom(F^k, F^d)
  std::vector<long long> hom_sizes;     // |Hom(F^k, F^d)| per level

  int class_of_pair(int k, int s, long long h) const {
    return levels[k].class_of[static_cast<size_t>(s) * hom_sizes[k] + h];
  }
};

inline InducedPresheaf i_d_induce(const EndMSet& S) {
  InducedPresheaf R;
  R.raw_carrier = S.carrier;
  int p = S.p, d = S.d;
  long long n_end = hom_count(p, d, d);
  R.levels.resize(d + 1);
  R.hom_sizes.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    long long nh = hom_count(p, d, k);  // d x k matrices: F^k -> F^d
    R.hom_sizes[k] = nh;
    DisjointSets ds(static_cast<int>(S.carrier * nh));
    for (int s = 0; s < S.carrier; ++s)
      for (long long a = 0; a < n_end; ++a) {
        FpMat A = mat_of_index(p, d, d, a);
        int sa = S.action(a, s);
        for (long long h = 0; h < nh; ++h) {
          long long ah = index_of_mat(fp_mul(A, mat_of_index(p, d, k, h)));
          ds.join(static_cast<int>(sa * nh + h), static_cast<int>(s * nh + ah));
        }
      }
    R.levels[k] = quotient_from(ds);
  }
  std::vector<int> sizes(d + 1);
  for (int k = 0; k <= d; ++k) sizes[k] = R.levels[k].classes();
  const auto& lv = R.levels;
  const auto& hs = R.hom_sizes;
  R.presheaf = make_presheaf(
      p, d, sizes, [&lv, &hs, p, d](int k, int j, const FpMat& m, int c) {
        long long pair = lv[k].representative[c];
        long long s = pair / hs[k], h = pair % hs[k];
        long long hm = index_of_mat(fp_mul(mat_of_index(p, d, k, h), m));
        return lv[j].class_of[s * hs[j] + hm];
      });
  // restrictions must be constant on classes
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= d; ++j) {
      long long nm = hom_count(p, k, j);
      for (long long mi = 0; mi < nm; ++mi) {
        FpMat m = mat_of_index(p, k, j, mi);
        for (int s = 0; s < S.carrier; ++s)
          for (long long h = 0; h < R.hom_sizes[k]; ++h) {
            long long hm = index_of_mat(fp_mul(mat_of_index(p, d, k, h), m));
            if (R.presheaf.apply(k, j, mi, R.class_of_pair(k, s, h)) !=
                R.levels[j].class_of[s * R.hom_sizes[j] + hm])
              throw internal_error("i_d restriction ill-defined");
          }
      }
    }
  return R;
}

// Counit i_d e_d F -> F: class of (s, h) evaluates to F(h)(s).
inline PresheafMap counit_map(const FinitePresheaf& F, const InducedPresheaf& I) {
  PresheafMap phi{F.p, F.d, {}};
  phi.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k) {
    phi.components[k].assign(I.levels[k].classes(), -1);
    for (int s = 0; s < F.level_size[F.d]; ++s)
      for (long long h = 0; h < I.hom_sizes[k]; ++h) {
        int c = I.class_of_pair(k, s, h);
        int v = F.apply(F.d, k, h, s);
        if (phi.components[k][c] < 0)
          phi.components[k][c] = v;
        else if (phi.components[k][c] != v)
          throw internal_error("counit ill-defined on a class");
      }
  }
  return phi;
}

// Key-Lemma instance: the counit is levelwise injective.
inline bool counit_is_mono(const FinitePresheaf& F) {
  InducedPresheaf I = i_d_induce(e_d_evaluate(F));
  PresheafMap eps = counit_map(F, I);
  if (!check_naturality(I.presheaf, F, eps))
    throw internal_error("counit is not natural");
  return levelwise_injective(F, eps);
}

// beta_n on an End(F^d)-set: s ~ s' iff s.a = s'.a for every endomorphism of
// rank <= n. Mirrors the factorization of maps out of small spaces through
// F^d; validated against i_d by id_beta_commute_check.
inline std::pair<EndMSet, QuotientWitness> beta_endmset(const EndMSet& S, int n) {
  int nn = clamp_beta_level(n, S.d);
  long long n_end = hom_count(S.p, S.d, S.d);
  std::vector<long long> low_rank;
  for (long long a = 0; a < n_end; ++a)
    if (fp_rank(mat_of_index(S.p, S.d, S.d, a)) <= nn) low_rank.push_back(a);
  std::vector<std::vector<int>> profiles(S.carrier);
  for (int s = 0; s < S.carrier; ++s)
    for (long long a : low_rank) profiles[s].push_back(S.action(a, s));
  QuotientWitness w = quotient_by_key(profiles);
  EndMSet Q;
  Q.p = S.p;
  Q.d = S.d;
  Q.carrier = w.classes();
  Q.act.assign(static_cast<size_t>(n_end), std::vector<int>(Q.carrier));
  for (long long a = 0; a < n_end; ++a)
    for (int c = 0; c < Q.carrier; ++c)
      Q.act[static_cast<size_t>(a)][c] = w.class_of[S.action(a, w.representative[c])];
  for (long long a = 0; a < n_end; ++a)
    for (int s = 0; s < S.carrier; ++s)
      if (Q.act[static_cast<size_t>(a)][w.class_of[s]] != w.class_of[S.action(a, s)])
        throw internal_error("beta on endmset ill-defined");
  return {Q, w};
}

// Canonical comparison i_d(beta_n S) -> beta_n(i_d S): well-defined and
// bijective at every level.
inline bool id_beta_commute_check(const EndMSet& S, int n) {
  auto [Q, w] = beta_endmset(S, n);
  InducedPresheaf iQ = i_d_induce(Q);
  InducedPresheaf iS = i_d_induce(S);
  BetaResult b = beta_quotient(iS.presheaf, n);
  for (int k = 0; k <= S.d; ++k) {
    std::vector<int> image(iQ.levels[k].classes(), -1);
    for (int s = 0; s < S.carrier; ++s)
      for (long long h = 0; h < iS.hom_sizes[k]; ++h) {
        int src = iQ.class_of_pair(k, w.class_of[s], h);
        int dst = b.levels[k].class_of[iS.class_of_pair(k, s, h)];
        if (image[src] < 0)
          image[src] = dst;
        else if (image[src] != dst)
          return false;
      }
    if (iQ.levels[k].classes() != b.levels[k].classes()) return false;
    std::vector<char> hit(b.levels[k].classes(), 0);
    for (int v : image) {
      if (v < 0 || hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

// Equivariant maps S -> T by backtracking with incremental constraint
// checks; enumeration order is deterministic.
inline std::vector<std::vector<int>> enumerate_equivariant_maps(const EndMSet& S,
                                                                const EndMSet& T) {
  long long n_end = hom_count(S.p, S.d, S.d);
  std::vector<std::vector<int>> out;
  std::vector<int> f(S.carrier, -1);
  auto consistent = [&](int s) {
    for (long long a = 0; a < n_end; ++a) {
      int sa = S.action(a, s);
      if (f[sa] >= 0 && f[sa] != T.action(a, f[s])) return false;
      // constraints through earlier-assigned sources landing on s
      for (int t = 0; t < S.carrier; ++t)
        if (f[t] >= 0 && S.action(a, t) == s && T.action(a, f[t]) != f[s])
          return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int s) -> void {
    if (s == S.carrier) {
      out.push_back(f);
      return;
    }
    for (int y = 0; y < T.carrier; ++y) {
      f[s] = y;
      if (consistent(s)) self(self, s + 1);
      f[s] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// Natural maps i_dS -> F. A natural map is determined by its top component
// (every lower-level class is a restriction of a top one), so enumerate
// End-equivariant top assignments and keep those whose forced extension is
// well-defined; naturality of the result is rechecked.
inline std::vector<PresheafMap> enumerate_maps_from_induced(const InducedPresheaf& I,
                                                            const FinitePresheaf& F) {
  const FinitePresheaf& P = I.presheaf;
  std::vector<PresheafMap> out;
  EndMSet top = e_d_evaluate(P);
  EndMSet tgt = e_d_evaluate(F);
  for (const auto& f_top : enumerate_equivariant_maps(top, tgt)) {
    PresheafMap phi{P.p, P.d, {}};
    phi.components.assign(P.d + 1, {});
    bool ok = true;
    for (int k = 0; k <= P.d && ok; ++k) {
      phi.components[k].assign(P.level_size[k], -1);
      // every class at level k is a restriction of a top-level class: the
      // ambient pair (s, h) descends from the class of (s, id)
      long long id_d = index_of_mat(fp_identity(P.p, P.d));
      for (int s = 0; s < I.raw_carrier && ok; ++s) {
        int top_class = I.class_of_pair(P.d, s, id_d);
        for (long long h = 0; h < I.hom_sizes[k]; ++h) {
          int c = I.class_of_pair(k, s, h);
          int v = F.apply(F.d, k, h, f_top[top_class]);
          if (phi.components[k][c] < 0)
            phi.components[k][c] = v;
          else if (phi.components[k][c] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok)
        for (int v : phi.components[k])
          if (v < 0) ok = false;
    }
    if (ok && check_naturality(P, F, phi)) out.push_back(std::move(phi));
  }
  return out;
}

// The adjunction on finite data: equivariant maps S -> e_dF correspond
// bijectively to natural maps i_dS -> F, via phi |-> ((s,h) |-> F(h)(phi(s)))
// with inverse given by evaluation at (s, id). Verified by enumerating both
// sides independently.
inline bool adjunction_check(const EndMSet& S, const FinitePresheaf& F) {
  InducedPresheaf I = i_d_induce(S);
  EndMSet edF = e_d_evaluate(F);
  auto eq_maps = enumerate_equivariant_maps(S, edF);
  auto nat_maps = enumerate_maps_from_induced(I, F);
  if (eq_maps.size() != nat_maps.size()) return false;
  long long id_d = index_of_mat(fp_identity(S.p, S.d));

  // unit s |-> class(s, id) must be bijective
  std::vector<int> unit(S.carrier);
  {
    std::vector<char> hit(I.levels[S.d].classes(), 0);
    if (I.levels[S.d].classes() != S.carrier) return false;
    for (int s = 0; s < S.carrier; ++s) {
      unit[s] = I.class_of_pair(S.d, s, id_d);
      if (hit[unit[s]]) return false;
      hit[unit[s]] = 1;
    }
  }

  // transpose each equivariant map and find it among the natural maps
  std::vector<char> used(nat_maps.size(), 0);
  for (const auto& f : eq_maps) {
    PresheafMap phi{S.p, S.d, {}};
    phi.components.assign(S.d + 1, {});
    bool ok = true;
    for (int k = 0; k <= S.d && ok; ++k) {
      phi.components[k].assign(I.levels[k].classes(), -1);
      for (int s = 0; s < S.carrier && ok; ++s)
        for (long long h = 0; h < I.hom_sizes[k]; ++h) {
          int c = I.class_of_pair(k, s, h);
          int v = F.apply(F.d, k, h, f[s]);
          if (phi.components[k][c] < 0)
            phi.components[k][c] = v;
          else if (phi.components[k][c] != v) {
            ok = false;
            break;
          }
        }
    }
    if (!ok || !check_naturality(I.presheaf, F, phi)) return false;
    bool found = false;
    for (size_t i = 0; i < nat_maps.size(); ++i)
      if (!used[i] && nat_maps[i].components == phi.components) {
        used[i] = 1;
        found = true;
        break;
      }
    if (!found) return false;
    // round trip: evaluating the transpose at (s, id) recovers f
    for (int s = 0; s < S.carrier; ++s)
      if (phi.components[S.d][unit[s]] != f[s]) return false;
  }
  for (char u : used)
    if (!u) return false;
  return true;
}

}  // namespace chromavar
