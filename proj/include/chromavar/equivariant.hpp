#pragma once

#include <map>
#include <vector>

#include "chromavar/gcomplex.hpp"
#include "chromavar/homs.hpp"
#include "chromavar/quillen.hpp"

namespace chromavar {

// F_X over the Quillen category: value(E) = pi_0(X^E) / C_G(E). Each value
// element remembers a representative vertex so coend classes can be traced
// back into Y_n.
struct FxFunctor {
  FiniteSetFunctor fn;
  std::vector<Subcomplex> fixed;                  // X^E per object
  std::vector<QuotientWitness> components;        // pi_0(X^E)
  std::vector<QuotientWitness> comp_orbits;       // components mod C_G(E)
  std::vector<std::vector<int>> rep_vertex;       // per value element

  int value_of_vertex(int obj, int v) const {
    return comp_orbits[obj].class_of[components[obj].class_of[fixed[obj].position_of(v)]];
  }
};

inline FxFunctor fx_functor(const FiniteGroup& G, const CategoryInstance& C,
                            const GComplex& X) {
  int nobj = static_cast<int>(C.objects.size());
  FxFunctor FX;
  FX.fixed.resize(nobj);
  FX.components.resize(nobj);
  FX.comp_orbits.resize(nobj);
  FX.rep_vertex.resize(nobj);
  FX.fn.value_size.resize(nobj);
  FX.fn.value_labels.resize(nobj);
  for (int i = 0; i < nobj; ++i) {
    FX.fixed[i] = fixed_subcomplex(X, C.objects[i].elements);
    FX.components[i] = pi0(FX.fixed[i]);
    // centralizer action on components
    std::vector<int> cent = centralizer(G, C.objects[i].elements);
    DisjointSets ds(FX.components[i].classes());
    for (int c : cent)
      for (size_t pos = 0; pos < FX.fixed[i].vertices.size(); ++pos) {
        int v = FX.fixed[i].vertices[pos];
        int cv = X.act(c, v);  // stays fixed by E since c centralizes E
        ds.join(FX.components[i].class_of[pos],
                FX.components[i].class_of[FX.fixed[i].position_of(cv)]);
      }
    FX.comp_orbits[i] = quotient_from(ds);
    FX.fn.value_size[i] = FX.comp_orbits[i].classes();
    for (int c = 0; c < FX.comp_orbits[i].classes(); ++c) {
      int comp = FX.comp_orbits[i].representative[c];
      int vpos = FX.components[i].representative[comp];
      FX.rep_vertex[i].push_back(FX.fixed[i].vertices[vpos]);
      FX.fn.value_labels[i].push_back("[" + X.vlabels[FX.rep_vertex[i].back()] + "]");
    }
  }
  // structure maps: for a morphism realized by g (g E1 g^-1 <= E2), the map
  // value(E2) -> value(E1) is induced by x |-> g^-1 x; every realizer must
  // induce the same map on orbits.
  FX.fn.maps.assign(nobj, std::vector<std::vector<std::vector<int>>>(nobj));
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j)
      for (const auto& m : C.morphisms[i][j]) {
        if (m.realizers.empty())
          throw internal_error("fx_functor needs conjugation-realized morphisms");
        std::vector<int> map_ij(FX.fn.value_size[j], -1);
        for (int g : m.realizers) {
          int ginv = G.inv(g);
          for (int s = 0; s < FX.fn.value_size[j]; ++s) {
            int v = FX.rep_vertex[j][s];
            int target = FX.value_of_vertex(i, X.act(ginv, v));
            if (map_ij[s] < 0)
              map_ij[s] = target;
            else if (map_ij[s] != target)
              throw internal_error("fx structure map depends on the realizer");
          }
        }
        FX.fn.maps[i][j].push_back(std::move(map_ij));
      }
  return FX;
}

// An element of Y_n: a hom F^n -> G together with a component of the fixed
// complex of its image.
struct YnElement {
  int hom = 0;        // index into the hom enumeration
  int component = 0;  // pi_0 class of X^{Im}
};

struct YnSet {
  std::vector<GroupHom> homs;
  std::map<std::vector<int>, int> hom_index;
  std::vector<Subcomplex> fixed;            // per hom
  std::vector<QuotientWitness> components;  // per hom
  std::vector<YnElement> elements;
  std::vector<int> first_element;  // per hom, index of its first element
  std::vector<std::vector<int>> g_action;    // per group element
  std::vector<std::vector<int>> aut_action;  // per Aut(F^n) element
  std::vector<long long> aut_indices;        // GL(n, F_p) matrix indices

  int element_index(int hom, int component) const {
    return first_element[hom] + component;
  }
};

inline YnSet yn_set(const FiniteGroup& G, int p, int n, const GComplex& X,
                    const Caps& caps = {}) {
  YnSet Y;
  Y.homs = enumerate_homs(n, p, G, caps);
  for (size_t i = 0; i < Y.homs.size(); ++i)
    Y.hom_index[Y.homs[i].images] = static_cast<int>(i);
  Y.fixed.resize(Y.homs.size());
  Y.components.resize(Y.homs.size());
  Y.first_element.resize(Y.homs.size());
  for (size_t i = 0; i < Y.homs.size(); ++i) {
    Y.first_element[i] = static_cast<int>(Y.elements.size());
    Y.fixed[i] = fixed_subcomplex(X, tuple_image_subgroup(G, Y.homs[i]));
    Y.components[i] = pi0(Y.fixed[i]);
    for (int c = 0; c < Y.components[i].classes(); ++c)
      Y.elements.push_back({static_cast<int>(i), c});
  }

  // left G-action: g.(alpha, [x]) = (g alpha g^-1, [g x])
  Y.g_action.assign(G.order, std::vector<int>(Y.elements.size()));
  for (int g = 0; g < G.order; ++g)
    for (size_t e = 0; e < Y.elements.size(); ++e) {
      const auto& el = Y.elements[e];
      GroupHom conj = hom_conjugate(G, Y.homs[el.hom], g);
      int ch = Y.hom_index.at(conj.images);
      int vpos = Y.components[el.hom].representative[el.component];
      int v = Y.fixed[el.hom].vertices[vpos];
      int gv = X.act(g, v);
      int comp = Y.components[ch].class_of[Y.fixed[ch].position_of(gv)];
      Y.g_action[g][e] = Y.element_index(ch, comp);
    }

  // right Aut(F^n)-action: (alpha, [x]).phi = (alpha o phi, [x]); the image
  // subgroup is unchanged, so the component index carries over.
  Y.aut_indices = enumerate_gl_indices(p, n, caps);
  Y.aut_action.assign(Y.aut_indices.size(), std::vector<int>(Y.elements.size()));
  for (size_t a = 0; a < Y.aut_indices.size(); ++a) {
    FpMat phi = mat_of_index(p, n, n, Y.aut_indices[a]);
    for (size_t e = 0; e < Y.elements.size(); ++e) {
      const auto& el = Y.elements[e];
      GroupHom comp = hom_precompose(G, Y.homs[el.hom], phi);
      int ch = Y.hom_index.at(comp.images);
      Y.aut_action[a][e] = Y.element_index(ch, el.component);
    }
  }
  return Y;
}

// Orbits of Y_n under the left G-action, with the residual right
// Aut(F^n)-action on orbits.
struct YnOrbits {
  YnSet set;
  QuotientWitness orbits;
  std::vector<std::vector<int>> aut_on_orbits;  // per Aut element
};

inline YnOrbits yn_mod_g(const FiniteGroup& G, int p, int n, const GComplex& X,
                         const Caps& caps = {}) {
  YnOrbits R{yn_set(G, p, n, X, caps), {}, {}};
  DisjointSets ds(static_cast<int>(R.set.elements.size()));
  for (int g = 0; g < G.order; ++g)
    for (size_t e = 0; e < R.set.elements.size(); ++e)
      ds.join(static_cast<int>(e), R.set.g_action[g][e]);
  R.orbits = quotient_from(ds);
  R.aut_on_orbits.assign(R.set.aut_indices.size(),
                         std::vector<int>(R.orbits.classes()));
  for (size_t a = 0; a < R.set.aut_indices.size(); ++a) {
    for (int c = 0; c < R.orbits.classes(); ++c)
      R.aut_on_orbits[a][c] =
          R.orbits.class_of[R.set.aut_action[a][R.orbits.representative[c]]];
    // residual action must be constant on orbits
    for (size_t e = 0; e < R.set.elements.size(); ++e)
      if (R.aut_on_orbits[a][R.orbits.class_of[e]] !=
          R.orbits.class_of[R.set.aut_action[a][e]])
        throw internal_error("aut action not constant on G-orbits");
  }
  return R;
}

// The combinatorial core of the Borel-model statement: the canonical map
// from the coend of F_X evaluated at F^n to Y_n/G, (s, m) |-> (incl o m,
// component of s), is a well-defined Aut(F^n)-equivariant bijection.
inline bool hurewicz_model_check(const FiniteGroup& G, int p, int n, const GComplex& X,
                                 const Caps& caps = {}) {
  CategoryInstance C = build_quillen_category(G, p);
  FxFunctor FX = fx_functor(G, C, X);
  CoendLevel L = coend_evaluate(C, FX.fn, n, caps);
  YnOrbits Y = yn_mod_g(G, p, n, X, caps);

  if (L.classes.classes() != Y.orbits.classes()) return false;
  std::vector<int> image(L.classes.classes(), -1);
  for (int obj = 0; obj < static_cast<int>(C.objects.size()); ++obj) {
    const auto& E = C.objects[obj];
    for (int s = 0; s < FX.fn.value_size[obj]; ++s)
      for (long long m = 0; m < L.hom_count[obj]; ++m) {
        // alpha = incl o m : images of the basis of F^n inside E, then G
        FpMat mm = mat_of_index(p, E.rank, n, m);
        GroupHom alpha{n, p, {}};
        alpha.images.resize(n);
        std::vector<uint8_t> col(E.rank);
        for (int c = 0; c < n; ++c) {
          for (int r = 0; r < E.rank; ++r) col[r] = mm.at(r, c);
          alpha.images[c] = E.element_from_coords(col);
        }
        int hi = Y.set.hom_index.at(alpha.images);
        // the fixed complex of Im(alpha) contains X^E, so the value's
        // representative vertex lies in it
        int v = FX.rep_vertex[obj][s];
        int comp = Y.set.components[hi].class_of[Y.set.fixed[hi].position_of(v)];
        int dst = Y.orbits.class_of[Y.set.element_index(hi, comp)];
        int src = L.classes.class_of[L.ambient_index(obj, s, m)];
        if (image[src] < 0)
          image[src] = dst;
        else if (image[src] != dst)
          return false;  // canonical map not constant on coend classes
      }
  }
  std::vector<char> hit(Y.orbits.classes(), 0);
  for (int v : image) {
    if (v < 0 || hit[v]) return false;
    hit[v] = 1;
  }
  // Aut(F^n)-equivariance: precomposition upstairs matches the residual
  // action downstairs.
  for (size_t a = 0; a < Y.set.aut_indices.size(); ++a) {
    FpMat phi = mat_of_index(p, n, n, Y.set.aut_indices[a]);
    for (int obj = 0; obj < static_cast<int>(C.objects.size()); ++obj)
      for (int s = 0; s < FX.fn.value_size[obj]; ++s)
        for (long long m = 0; m < L.hom_count[obj]; ++m) {
          FpMat mm = mat_of_index(p, C.objects[obj].rank, n, m);
          long long mphi = index_of_mat(fp_mul(mm, phi));
          int src = L.classes.class_of[L.ambient_index(obj, s, m)];
          int src_phi = L.classes.class_of[L.ambient_index(obj, s, mphi)];
          if (image[src_phi] != Y.aut_on_orbits[a][image[src]]) return false;
        }
  }
  return true;
}

// Number of G-orbits of pairs (commuting p-power tuple a, component of
// X^{Im a}); the free rank of the generalized class-function module.
inline int hkr_rank(const FiniteGroup& G, int p, int n, const GComplex& X,
                    const Caps& caps = {}) {
  std::vector<GroupHom> tuples = commuting_p_power_tuples(n, p, G, caps);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < tuples.size(); ++i)
    index[tuples[i].images] = static_cast<int>(i);
  std::vector<Subcomplex> fixed(tuples.size());
  std::vector<QuotientWitness> comps(tuples.size());
  std::vector<int> first(tuples.size());
  int total = 0;
  for (size_t i = 0; i < tuples.size(); ++i) {
    first[i] = total;
    fixed[i] = fixed_subcomplex(X, tuple_image_subgroup(G, tuples[i]));
    comps[i] = pi0(fixed[i]);
    total += comps[i].classes();
  }
  DisjointSets ds(total);
  for (int g = 0; g < G.order; ++g)
    for (size_t i = 0; i < tuples.size(); ++i) {
      GroupHom conj = hom_conjugate(G, tuples[i], g);
      int ci = index.at(conj.images);
      for (int c = 0; c < comps[i].classes(); ++c) {
        int v = fixed[i].vertices[comps[i].representative[c]];
        int gv = X.act(g, v);
        int cc = comps[ci].class_of[fixed[ci].position_of(gv)];
        ds.join(first[i] + c, first[ci] + cc);
      }
    }
  return quotient_from(ds).classes();
}

}  // namespace chromavar
