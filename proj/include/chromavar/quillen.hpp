#pragma once

#include <map>
#include <set>
#include <vector>

#include "chromavar/beta.hpp"
#include "chromavar/homs.hpp"
#include "chromavar/iso.hpp"
#include "chromavar/presheaf.hpp"
#include "chromavar/subgroups.hpp"

namespace chromavar {

// Injective group homomorphism between elementary abelian subgroups, stored
// as the image list on the source's sorted elements. `matrix` is the same
// map in the chosen bases (rank(target) x rank(source)); `realizers` lists
// every g with m(x) = g x g^-1 (empty for morphisms that are not globally
// conjugation-induced).
struct CatMorphism {
  std::vector<int> image;
  FpMat matrix;
  std::vector<int> realizers;
};

struct CategoryInstance {
  int p = 2;
  std::vector<ElemAbSubgroup> objects;
  // morphisms[src][dst], deduplicated as set maps, sorted by image list
  std::vector<std::vector<std::vector<CatMorphism>>> morphisms;

  int find_morphism(int src, int dst, const std::vector<int>& image) const {
    const auto& v = morphisms[src][dst];
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i].image == image) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline FpMat morphism_matrix(const ElemAbSubgroup& src, const ElemAbSubgroup& dst,
                             const std::vector<int>& image) {
  FpMat m(src.prime, dst.rank, src.rank);
  for (int c = 0; c < src.rank; ++c) {
    int img = image[src.position_of(src.basis[c])];
    const auto& coords = dst.coords[dst.position_of(img)];
    for (int r = 0; r < dst.rank; ++r) m.at(r, c) = coords[r];
  }
  // the matrix and the image list must agree on every element
  for (size_t i = 0; i < src.elements.size(); ++i) {
    std::vector<uint8_t> v = src.coords[i];
    if (dst.element_from_coords(fp_apply(m, v)) != image[i])
      throw internal_error("morphism matrix disagrees with image list");
  }
  return m;
}

inline bool is_injective_hom(const FiniteGroup& G, const ElemAbSubgroup& src,
                             const ElemAbSubgroup& dst, const std::vector<int>& image) {
  std::set<int> targets;
  for (size_t i = 0; i < src.elements.size(); ++i) {
    if (!dst.contains(image[i])) return false;
    if (!targets.insert(image[i]).second) return false;
  }
  for (size_t i = 0; i < src.elements.size(); ++i)
    for (size_t j = 0; j < src.elements.size(); ++j) {
      int prod = G.mul(src.elements[i], src.elements[j]);
      if (G.mul(image[i], image[j]) != image[src.position_of(prod)]) return false;
    }
  return true;
}

}  // namespace detail

// Quillen category: objects the elementary abelian p-subgroups, morphisms
// the conjugation-then-inclusion maps, deduplicated as set maps.
inline CategoryInstance build_quillen_category(const FiniteGroup& G, int p) {
  CategoryInstance C;
  C.p = p;
  C.objects = elem_abelian_subgroups(G, p);
  int n = static_cast<int>(C.objects.size());
  C.morphisms.assign(n, std::vector<std::vector<CatMorphism>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& E1 = C.objects[i];
      const auto& E2 = C.objects[j];
      std::map<std::vector<int>, std::vector<int>> maps;  // image -> realizers
      for (int g = 0; g < G.order; ++g) {
        std::vector<int> image(E1.elements.size());
        bool inside = true;
        for (size_t t = 0; t < E1.elements.size(); ++t) {
          image[t] = G.conj(g, E1.elements[t]);
          if (!E2.contains(image[t])) {
            inside = false;
            break;
          }
        }
        if (inside) maps[image].push_back(g);
      }
      for (auto& [image, realizers] : maps)
        C.morphisms[i][j].push_back(
            {image, detail::morphism_matrix(E1, E2, image), realizers});
    }
  return C;
}

// Green-Leary category: same objects; morphisms the injective homomorphisms
// phi such that the restriction of phi to every subgroup of rank <= n is
// induced by conjugation. Quantifying over rank <= n subgroups is equivalent
// to quantifying over homs F^n -> V, which realize exactly those images.
inline CategoryInstance build_green_leary_category(const FiniteGroup& G, int p, int n) {
  if (n < 0) throw input_error("green-leary level must be nonnegative");
  CategoryInstance C;
  C.p = p;
  C.objects = elem_abelian_subgroups(G, p);
  int nobj = static_cast<int>(C.objects.size());
  C.morphisms.assign(nobj, std::vector<std::vector<CatMorphism>>(nobj));

  // rank <= n subgroups of each object, as element lists
  std::vector<std::vector<std::vector<int>>> small_subs(nobj);
  for (int i = 0; i < nobj; ++i) {
    const auto& V = C.objects[i];
    std::set<std::vector<int>> subs;
    std::vector<std::vector<int>> layer{{G.identity}};
    subs.insert({G.identity});
    for (int r = 0; r < n; ++r) {
      std::vector<std::vector<int>> next;
      for (const auto& S : layer)
        for (int x : V.elements) {
          if (x == G.identity || std::binary_search(S.begin(), S.end(), x)) continue;
          std::vector<int> bigger;
          for (int s : S)
            for (int k = 0; k < p; ++k) bigger.push_back(G.mul(s, G.pow(x, k)));
          std::sort(bigger.begin(), bigger.end());
          bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
          if (subs.insert(bigger).second) next.push_back(bigger);
        }
      layer = std::move(next);
    }
    small_subs[i].assign(subs.begin(), subs.end());
  }

  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      const auto& V = C.objects[i];
      const auto& W = C.objects[j];
      if (W.rank < V.rank) continue;
      // candidate injective homs: independent images of the basis
      std::vector<int> pick(V.rank, 0);
      std::set<std::vector<int>> accepted;
      auto try_candidate = [&](const std::vector<int>& basis_images) {
        std::vector<int> image(V.elements.size());
        std::set<int> span;
        for (size_t t = 0; t < V.elements.size(); ++t) {
          int img = G.identity;
          for (int b = 0; b < V.rank; ++b)
            img = G.mul(img, G.pow(basis_images[b], V.coords[t][b]));
          image[t] = img;
          span.insert(img);
        }
        if (span.size() != V.elements.size()) return;  // not injective
        if (!detail::is_injective_hom(G, V, W, image)) return;
        // local conjugation condition on every rank <= n subgroup
        for (const auto& U : small_subs[i]) {
          bool realized = false;
          for (int g = 0; g < G.order && !realized; ++g) {
            bool ok = true;
            for (int u : U)
              if (image[V.position_of(u)] != G.conj(g, u)) {
                ok = false;
                break;
              }
            realized = ok;
          }
          if (!realized) return;
        }
        accepted.insert(image);
      };
      auto rec = [&](auto&& self, int slot, std::vector<int>& basis_images) -> void {
        if (slot == V.rank) {
          try_candidate(basis_images);
          return;
        }
        for (int w : W.elements) {
          basis_images[slot] = w;
          self(self, slot + 1, basis_images);
        }
      };
      std::vector<int> basis_images(V.rank);
      rec(rec, 0, basis_images);
      for (const auto& image : accepted) {
        // record global realizers when they exist
        std::vector<int> realizers;
        for (int g = 0; g < G.order; ++g) {
          bool ok = true;
          for (size_t t = 0; t < V.elements.size(); ++t)
            if (G.conj(g, V.elements[t]) != image[t]) {
              ok = false;
              break;
            }
          if (ok) realizers.push_back(g);
        }
        C.morphisms[i][j].push_back(
            {image, detail::morphism_matrix(V, W, image), realizers});
      }
    }
  return C;
}

// Identity presence, composition closure, injectivity of every morphism.
inline void validate_category(const FiniteGroup& G, const CategoryInstance& C) {
  int n = static_cast<int>(C.objects.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> id(C.objects[i].elements);
    if (C.find_morphism(i, i, id) < 0) throw internal_error("identity missing");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& m : C.morphisms[i][j]) {
        if (!detail::is_injective_hom(G, C.objects[i], C.objects[j], m.image))
          throw internal_error("stored morphism is not an injective hom");
        for (int k = 0; k < n; ++k)
          for (const auto& m2 : C.morphisms[j][k]) {
            std::vector<int> comp(m.image.size());
            for (size_t t = 0; t < m.image.size(); ++t)
              comp[t] = m2.image[C.objects[j].position_of(m.image[t])];
            if (C.find_morphism(i, k, comp) < 0)
              throw internal_error("composition not closed");
          }
      }
}

// Contravariant finite-set functor on a category instance.
struct FiniteSetFunctor {
  std::vector<int> value_size;
  std::vector<std::vector<std::string>> value_labels;
  // maps[src][dst][mi] : value(dst) -> value(src), contravariant
  std::vector<std::vector<std::vector<std::vector<int>>>> maps;
};

inline FiniteSetFunctor constant_singleton(const CategoryInstance& C) {
  FiniteSetFunctor F;
  int n = static_cast<int>(C.objects.size());
  F.value_size.assign(n, 1);
  F.maps.assign(n, std::vector<std::vector<std::vector<int>>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      F.maps[i][j].assign(C.morphisms[i][j].size(), std::vector<int>{0});
  return F;
}

inline void validate_functor(const CategoryInstance& C, const FiniteSetFunctor& F) {
  int n = static_cast<int>(C.objects.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> id(C.objects[i].elements);
    int mi = C.find_morphism(i, i, id);
    for (int x = 0; x < F.value_size[i]; ++x)
      if (F.maps[i][i][mi][x] != x) throw internal_error("functor identity law fails");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t a = 0; a < C.morphisms[i][j].size(); ++a)
        for (int k = 0; k < n; ++k)
          for (size_t b = 0; b < C.morphisms[j][k].size(); ++b) {
            std::vector<int> comp(C.objects[i].elements.size());
            for (size_t t = 0; t < comp.size(); ++t)
              comp[t] = C.morphisms[j][k][b]
                            .image[C.objects[j].position_of(C.morphisms[i][j][a].image[t])];
            int ci = C.find_morphism(i, k, comp);
            if (ci < 0) throw internal_error("composition not closed");
            for (int x = 0; x < F.value_size[k]; ++x)
              if (F.maps[i][j][a][F.maps[j][k][b][x]] != F.maps[i][k][ci][x])
                throw internal_error("functor composition law fails");
          }
}

// One level of a coend: the quotient of the disjoint union over objects E of
// F(E) x Hom(F^k, E) by (F(j)(s), m) ~ (s, j o m).
struct CoendLevel {
  QuotientWitness classes;
  std::vector<long long> offset;     // ambient offset per object
  std::vector<long long> hom_count;  // |Hom(F^k, E)| per object

  long long ambient_index(int obj, int s, long long m) const {
    return offset[obj] + s * hom_count[obj] + m;
  }
};

inline CoendLevel coend_evaluate(const CategoryInstance& C, const FiniteSetFunctor& F,
                                 int k, const Caps& caps = {}) {
  int n = static_cast<int>(C.objects.size());
  CoendLevel L;
  L.offset.resize(n);
  L.hom_count.resize(n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    L.offset[i] = total;
    L.hom_count[i] = hom_count(C.p, C.objects[i].rank, k, caps.max_enum);
    total += F.value_size[i] * L.hom_count[i];
    if (total > caps.max_enum) throw cap_exceeded("coend ambient set exceeds cap");
  }
  DisjointSets ds(static_cast<int>(total));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t a = 0; a < C.morphisms[i][j].size(); ++a) {
        const FpMat& jm = C.morphisms[i][j][a].matrix;
        for (int s = 0; s < F.value_size[j]; ++s) {
          int fs = F.maps[i][j][a][s];  // F(j)(s) in value(i)
          for (long long m = 0; m < L.hom_count[i]; ++m) {
            FpMat mm = mat_of_index(C.p, C.objects[i].rank, k, m);
            long long jm_m = index_of_mat(fp_mul(jm, mm));
            ds.join(static_cast<int>(L.ambient_index(i, fs, m)),
                    static_cast<int>(L.ambient_index(j, s, jm_m)));
          }
        }
      }
  L.classes = quotient_from(ds);
  return L;
}

// All coend levels 0..d assembled into a presheaf; restriction along
// A: F^j -> F^k sends (s, m) to (s, m o A). Well-definedness on classes is
// checked exhaustively.
inline FinitePresheaf coend_presheaf(const CategoryInstance& C, const FiniteSetFunctor& F,
                                     int d, const Caps& caps = {}) {
  std::vector<CoendLevel> levels;
  levels.reserve(d + 1);
  for (int k = 0; k <= d; ++k) levels.push_back(coend_evaluate(C, F, k, caps));
  int nobj = static_cast<int>(C.objects.size());

  auto decompose = [&](int k, long long ambient) {
    int obj = nobj - 1;
    while (levels[k].offset[obj] > ambient) --obj;
    long long rel = ambient - levels[k].offset[obj];
    return std::tuple<int, int, long long>(
        obj, static_cast<int>(rel / levels[k].hom_count[obj]),
        rel % levels[k].hom_count[obj]);
  };

  std::vector<int> sizes(d + 1);
  for (int k = 0; k <= d; ++k) sizes[k] = levels[k].classes.classes();
  FinitePresheaf P = make_presheaf(
      C.p, d, sizes, [&](int k, int j, const FpMat& A, int c) {
        auto [obj, s, m] = decompose(k, levels[k].classes.representative[c]);
        FpMat mm = mat_of_index(C.p, C.objects[obj].rank, k, m);
        long long mA = index_of_mat(fp_mul(mm, A));
        return levels[j].classes.class_of[levels[j].ambient_index(obj, s, mA)];
      });
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= d; ++j) {
      long long nm = hom_count(C.p, k, j);
      for (long long mi = 0; mi < nm; ++mi) {
        FpMat A = mat_of_index(C.p, k, j, mi);
        for (long long amb = 0; amb < levels[k].classes.ambient; ++amb) {
          auto [obj, s, m] = decompose(k, amb);
          FpMat mm = mat_of_index(C.p, C.objects[obj].rank, k, m);
          long long mA = index_of_mat(fp_mul(mm, A));
          if (P.apply(k, j, mi, levels[k].classes.class_of[amb]) !=
              levels[j].classes.class_of[levels[j].ambient_index(obj, s, mA)])
            throw internal_error("coend restriction ill-defined");
        }
      }
    }
  P.labels.assign(d + 1, {});
  for (int k = 0; k <= d; ++k)
    for (int c = 0; c < sizes[k]; ++c) {
      auto [obj, s, m] = decompose(k, levels[k].classes.representative[c]);
      P.labels[k].push_back("[E" + std::to_string(obj) + ";" + std::to_string(s) +
                            ";" + mat_entries_string(mat_of_index(
                                      C.p, C.objects[obj].rank, k, m)) + "]");
    }
  return P;
}

// Rep(-, G) as a presheaf: level k is rep_orbits(k, p, G), restriction by
// precomposition on representatives.
inline FinitePresheaf rep_presheaf(const FiniteGroup& G, int p, int d,
                                   const Caps& caps = {}) {
  std::vector<RepOrbits> R;
  R.reserve(d + 1);
  for (int k = 0; k <= d; ++k) R.push_back(rep_orbits(k, p, G, caps));
  std::vector<int> sizes(d + 1);
  for (int k = 0; k <= d; ++k) sizes[k] = R[k].classes.classes();
  FinitePresheaf P = make_presheaf(
      p, d, sizes, [&R, &G](int k, int j, const FpMat& m, int c) {
        const GroupHom& rep = R[k].homs[R[k].classes.representative[c]];
        return R[j].class_of_hom(hom_precompose(G, rep, m));
      });
  // restriction must not depend on the orbit representative
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= d; ++j) {
      long long nm = hom_count(p, k, j);
      for (long long mi = 0; mi < nm; ++mi) {
        FpMat m = mat_of_index(p, k, j, mi);
        for (size_t h = 0; h < R[k].homs.size(); ++h)
          if (P.apply(k, j, mi, R[k].classes.class_of[h]) !=
              R[j].class_of_hom(hom_precompose(G, R[k].homs[h], m)))
            throw internal_error("rep restriction ill-defined");
      }
    }
  P.labels.assign(d + 1, {});
  for (int k = 0; k <= d; ++k)
    for (int c = 0; c < sizes[k]; ++c) {
      const GroupHom& rep = R[k].homs[R[k].classes.representative[c]];
      std::string s = "(";
      for (int t = 0; t < rep.n; ++t)
        s += (t ? "," : "") + G.labels[rep.images[t]];
      P.labels[k].push_back(s + ")");
    }
  return P;
}

// colim over the Green-Leary category of hom(-, W), level by level: the
// disjoint union of Hom(F^k, W) glued along postcomposition with category
// morphisms.
inline FinitePresheaf gl_colimit_presheaf(const FiniteGroup& G, int p, int n, int d,
                                          const Caps& caps = {}) {
  CategoryInstance C = build_green_leary_category(G, p, n);
  FiniteSetFunctor one = constant_singleton(C);
  return coend_presheaf(C, one, d, caps);
}

// The spec-level comparison: colim over the Green-Leary category against
// beta_n of Rep(-, G).
inline bool compare_gl_beta(const FiniteGroup& G, int p, int n, int d,
                            const Caps& caps = {}) {
  FinitePresheaf lhs = gl_colimit_presheaf(G, p, n, d, caps);
  FinitePresheaf rhs = beta_quotient(rep_presheaf(G, p, d, caps), n).presheaf;
  return presheaf_iso_check(lhs, rhs, caps).isomorphic;
}

}  // namespace chromavar
