#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chromavar/beta.hpp"
#include "chromavar/endmset.hpp"
#include "chromavar/equivariant.hpp"
#include "chromavar/io.hpp"
#include "chromavar/iso.hpp"
#include "chromavar/quillen.hpp"

namespace chromavar {

struct RunConfig {
  std::optional<int> p;
  std::optional<int> n;
  std::optional<int> d;
  Caps caps;
  std::string format = "json";  // json | tsv
};

struct CheckResult {
  std::string group;
  int p = 0;
  int n = -1;  // -1 prints as "-"
  int d = 0;
  std::string name;
  std::string statement;
  std::string inputs;
  bool pass = false;
  std::string detail;  // witness or counterexample
  long long wall_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int failed() const {
    int f = 0;
    for (const auto& c : checks)
      if (!c.pass) ++f;
    return f;
  }
};

// ---- builtin battery -------------------------------------------------------

inline FiniteGroup make_trivial_group() {
  return group_from_perm_generators(1, {}, "trivial");
}

inline FiniteGroup make_cyclic_group(int m, const std::string& name) {
  Perm g(m);
  for (int i = 0; i < m; ++i) g[i] = (i + 1) % m;
  return group_from_perm_generators(m, {g}, name);
}

inline FiniteGroup make_sym3() {
  return group_from_perm_generators(3, {{1, 0, 2}, {1, 2, 0}}, "s3");
}

inline FiniteGroup make_d4() {
  return group_from_perm_generators(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}, "d4");
}

// Quaternion group via the left-regular representation on e,-e,i,-i,j,-j,k,-k.
inline FiniteGroup make_q8() {
  Perm gi = {2, 3, 1, 0, 6, 7, 5, 4};
  Perm gj = {4, 5, 7, 6, 1, 0, 2, 3};
  FiniteGroup G = group_from_perm_generators(8, {gi, gj}, "q8");
  std::vector<std::string> names = {"e", "-e", "i", "-i", "j", "-j", "k", "-k"};
  // relabel by the point the permutation sends 0 to (regular action)
  for (int x = 0; x < G.order; ++x) {
    // reconstruct the permutation of x from the word decomposition
    Perm perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> word;
    int cur = x;
    while (cur != G.identity) {
      word.push_back(G.word_gen[cur]);
      cur = G.word_prev[cur];
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      perm = perm_compose(perm, *it == 0 ? gi : gj);
    G.labels[x] = names[perm[0]];
  }
  return G;
}

inline FiniteGroup make_a4() {
  return group_from_perm_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "a4");
}

// 2-point swap for Z/2.
inline GComplex make_swap_complex(const FiniteGroup& z2) {
  return build_gcomplex(z2, {"a", "b"}, {}, {{1, 0}}, "swap2");
}

// Natural permutation action of S_3 on three isolated vertices.
inline GComplex make_three_points_complex(const FiniteGroup& s3) {
  return build_gcomplex(s3, {"v1", "v2", "v3"}, {},
                        {{1, 0, 2}, {1, 2, 0}}, "three-points");
}

// Path a-b-c with the flip through the sign character; the middle vertex
// subdivides the would-be inverted edge, keeping the action admissible.
inline GComplex make_path3_complex(const FiniteGroup& s3) {
  return build_gcomplex(s3, {"a", "b", "c"}, {{0, 1}, {1, 2}},
                        {{2, 1, 0}, {0, 1, 2}}, "path3");
}

// Square with subdivided edges (corners 0..3, midpoints 4..7) so that the
// reflections of D_4 act without edge inversions.
inline GComplex make_square_complex(const FiniteGroup& d4) {
  std::vector<std::string> v = {"c1", "c2", "c3", "c4", "m12", "m23", "m34", "m41"};
  std::vector<std::pair<int, int>> e = {{0, 4}, {4, 1}, {1, 5}, {5, 2},
                                        {2, 6}, {6, 3}, {3, 7}, {7, 0}};
  std::vector<int> rot = {1, 2, 3, 0, 5, 6, 7, 4};
  std::vector<int> ref = {2, 1, 0, 3, 5, 4, 7, 6};  // the (1 3) reflection
  return build_gcomplex(d4, v, e, {rot, ref}, "square");
}

struct BatteryEntry {
  FiniteGroup G;
  int p = 2;
  int d_quillen = 2;  // truncation for the coend/Rep comparison
  std::vector<GComplex> complexes;  // pt is always added
};

inline std::vector<BatteryEntry> builtin_battery() {
  std::vector<BatteryEntry> out;
  FiniteGroup z2 = make_cyclic_group(2, "z2");
  FiniteGroup z3 = make_cyclic_group(3, "z3");
  FiniteGroup s3 = make_sym3();
  FiniteGroup d4 = make_d4();
  FiniteGroup q8 = make_q8();
  FiniteGroup a4 = make_a4();
  out.push_back({z2, 2, 2, {make_swap_complex(z2)}});
  out.push_back({z3, 3, 2, {}});
  out.push_back({s3, 2, 2, {make_three_points_complex(s3), make_path3_complex(s3)}});
  out.push_back({s3, 3, 2, {make_three_points_complex(s3), make_path3_complex(s3)}});
  out.push_back({d4, 2, 2, {make_square_complex(d4)}});
  out.push_back({q8, 2, 2, {}});
  out.push_back({a4, 2, 3, {}});
  out.push_back({a4, 3, 2, {}});
  return out;
}

// ---- reusable check bodies -------------------------------------------------

// beta_n phi for a natural map phi: F -> G, checked well-defined on classes.
inline PresheafMap beta_map(const FinitePresheaf& F, const PresheafMap& phi,
                            const BetaResult& bF, const BetaResult& bG) {
  PresheafMap out{F.p, F.d, {}};
  out.components.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k) {
    out.components[k].assign(bF.levels[k].classes(), -1);
    for (int x = 0; x < F.level_size[k]; ++x) {
      int src = bF.levels[k].class_of[x];
      int dst = bG.levels[k].class_of[phi.components[k][x]];
      if (out.components[k][src] < 0)
        out.components[k][src] = dst;
      else if (out.components[k][src] != dst)
        throw internal_error("beta of a natural map is ill-defined");
    }
  }
  return out;
}

// The criterion-2 bundle for one presheaf and one level.
inline bool beta_calculus_check(const FinitePresheaf& F, int n, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  BetaResult b1 = beta_quotient(F, n);
  if (check_functoriality(b1.presheaf).pass == false) return fail("beta image not functorial");
  if (!check_naturality(F, b1.presheaf, b1.projection)) return fail("projection not natural");
  if (!levelwise_surjective(b1.presheaf, b1.projection))
    return fail("canonical map not surjective");
  for (int k = 0; k <= std::min(n, F.d); ++k)
    if (b1.levels[k].classes() != F.level_size[k])
      return fail("canonical map not bijective at level " + std::to_string(k));
  BetaResult b2 = beta_quotient(b1.presheaf, n);
  for (int k = 0; k <= F.d; ++k)
    if (b2.levels[k].classes() != b1.levels[k].classes())
      return fail("beta not idempotent at level " + std::to_string(k));
  if (n + 1 <= F.d) {
    BetaResult bhi = beta_quotient(F, n + 1);
    PresheafMap tower = tower_surjection(F, n);
    if (!check_naturality(bhi.presheaf, b1.presheaf, tower))
      return fail("tower map not natural");
    if (!levelwise_surjective(b1.presheaf, tower)) return fail("tower map not surjective");
    for (int k = 0; k <= F.d; ++k)
      for (int x = 0; x < F.level_size[k]; ++x)
        if (tower.components[k][bhi.levels[k].class_of[x]] != b1.levels[k].class_of[x])
          return fail("tower triangle does not commute");
  }
  // preservation of injections and surjections: diagonal and projection
  FinitePresheaf FF = product_presheaf(F, F);
  BetaResult bFF = beta_quotient(FF, n);
  PresheafMap diag = product_diagonal(F);
  PresheafMap proj = product_projection_first(F, F);
  if (!levelwise_injective(FF, diag) || !levelwise_surjective(F, proj))
    throw internal_error("diagonal/projection sanity");
  PresheafMap bdiag = beta_map(F, diag, b1, bFF);
  PresheafMap bproj = beta_map(FF, proj, bFF, b1);
  if (!levelwise_injective(bFF.presheaf, bdiag))
    return fail("beta does not preserve the diagonal injection");
  if (!levelwise_surjective(b1.presheaf, bproj))
    return fail("beta does not preserve the projection surjection");
  return true;
}

// Independent double count of hkr_rank for X = pt: Burnside over
// conjugation-fixed tuples.
inline long long hkr_burnside_point_count(const FiniteGroup& G, int p, int n,
                                          const Caps& caps = {}) {
  std::vector<GroupHom> tuples = commuting_p_power_tuples(n, p, G, caps);
  long long fixed_total = 0;
  for (int g = 0; g < G.order; ++g)
    for (const auto& t : tuples) {
      bool fixed = true;
      for (int x : t.images)
        if (G.conj(g, x) != x) {
          fixed = false;
          break;
        }
      if (fixed) ++fixed_total;
    }
  if (fixed_total % G.order != 0)
    throw internal_error("Burnside count is not integral");
  return fixed_total / G.order;
}

// ---- the battery runner ----------------------------------------------------

namespace detail {

struct CheckTimer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

inline std::string level_sizes_string(const FinitePresheaf& F) {
  std::string s = "[";
  for (int k = 0; k <= F.d; ++k) s += (k ? "," : "") + std::to_string(F.level_size[k]);
  return s + "]";
}

}  // namespace detail

// Runs the full statement battery for one (G, p); d_std governs everything
// except the Quillen comparison which runs at d_quillen.
inline void run_entry_checks(const BatteryEntry& entry, int d_std,
                             const Caps& caps, std::vector<CheckResult>& out) {
  const FiniteGroup& G = entry.G;
  int p = entry.p;

  auto push = [&](int n, int d, const std::string& name, const std::string& statement,
                  const std::string& inputs, bool pass, const std::string& detail,
                  long long ms) {
    out.push_back({G.name, p, n, d, name, statement, inputs, pass, detail, ms});
  };

  // Quillen: coend of the constant singleton against Rep(-, G)
  {
    detail::CheckTimer timer;
    CategoryInstance C = build_quillen_category(G, p);
    FiniteSetFunctor one = constant_singleton(C);
    FinitePresheaf coend = coend_presheaf(C, one, entry.d_quillen, caps);
    FinitePresheaf rep = rep_presheaf(G, p, entry.d_quillen, caps);
    IsoResult iso = presheaf_iso_check(coend, rep, caps);
    push(-1, entry.d_quillen, "quillen-coend-rep-iso", "isomorphisms of functors in G^op",
         "coend(singleton) vs Rep(-,G)", iso.isomorphic,
         detail::level_sizes_string(rep), timer.ms());
  }

  FinitePresheaf rep = rep_presheaf(G, p, d_std, caps);
  FinitePresheaf rep1 = representable(p, d_std, 1, caps);
  FinitePresheaf rep2 = representable(p, d_std, 2, caps);
  FinitePresheaf prod = product_presheaf(rep1, rep);
  for (const FinitePresheaf* F : {&rep, &rep1, &rep2, &prod})
    for (int sz : F->level_size)
      if (sz > caps.max_level)
        throw cap_exceeded("battery presheaf level size " + std::to_string(sz) +
                           " exceeds --cap-level " + std::to_string(caps.max_level));

  {
    detail::CheckTimer timer;
    bool pass = check_functoriality(rep).pass;
    push(-1, d_std, "rep-functoriality", "contravariant functor laws", "Rep(-,G)",
         pass, detail::level_sizes_string(rep), timer.ms());
  }

  std::vector<std::pair<std::string, const FinitePresheaf*>> battery_presheaves = {
      {"rep1", &rep1}, {"rep2", &rep2}, {"Rep", &rep}, {"rep1xRep", &prod}};

  for (int n = 0; n <= 2; ++n) {
    detail::CheckTimer timer;
    bool pass = true;
    std::string detail_s;
    for (auto& [label, F] : battery_presheaves) {
      std::string why;
      if (!beta_calculus_check(*F, n, &why)) {
        pass = false;
        detail_s = label + ": " + why;
        break;
      }
    }
    push(n, d_std, "beta-calculus", "there is a natural surjection",
         "rep1, rep2, Rep, rep1xRep", pass, detail_s, timer.ms());
  }

  for (int n = 0; n <= 2; ++n) {
    detail::CheckTimer timer;
    bool pass = beta_product_check(rep1, rep1, n) && beta_product_check(rep1, rep, n) &&
                beta_product_check(rep, rep, n);
    push(n, d_std, "beta-product", "commutes with finite products",
         "(rep1,rep1), (rep1,Rep), (Rep,Rep)", pass, "", timer.ms());
  }

  {
    detail::CheckTimer timer;
    bool pass = true;
    std::string detail_s;
    for (auto& [label, F] : battery_presheaves)
      if (!counit_is_mono(*F)) {
        pass = false;
        detail_s = label;
        break;
      }
    push(-1, d_std, "key-lemma-counit", "is a monomorphism",
         "i_d e_d F -> F for battery presheaves", pass, detail_s, timer.ms());
  }

  std::vector<std::pair<std::string, EndMSet>> msets = {
      {"singleton", singleton_endmset(p, d_std)},
      {"e_d(rep1)", e_d_evaluate(rep1)},
      {"e_d(rep2)", e_d_evaluate(rep2)},
      {"e_d(Rep)", e_d_evaluate(rep)}};
  EndMSet free = free_orbit_endmset(p, d_std);
  if (free.carrier <= caps.max_level) msets.push_back({"free", free});

  {
    detail::CheckTimer timer;
    bool pass = true;
    std::string detail_s;
    int pairs = 0;
    for (auto& [slabel, S] : msets) {
      if (S.carrier > 8) continue;
      for (auto& [flabel, F] : battery_presheaves) {
        if (F->level_size[d_std] > 8) continue;
        ++pairs;
        if (!adjunction_check(S, *F)) {
          pass = false;
          detail_s = slabel + " vs " + flabel;
          break;
        }
      }
      if (!pass) break;
    }
    push(-1, d_std, "ed-id-adjunction", "admits a left adjoint",
         "carriers <= 8, " + std::to_string(pairs) + " pairs", pass, detail_s,
         timer.ms());
  }

  for (int n = 0; n <= 2; ++n) {
    detail::CheckTimer timer;
    bool pass = true;
    std::string detail_s;
    for (auto& [slabel, S] : msets)
      if (!id_beta_commute_check(S, n)) {
        pass = false;
        detail_s = slabel;
        break;
      }
    push(n, d_std, "id-beta-commute", "there is a natural isomorphism",
         "battery EndMSets", pass, detail_s, timer.ms());
  }

  for (int n = 1; n <= 2; ++n) {
    detail::CheckTimer timer;
    bool pass = compare_gl_beta(G, p, n, d_std, caps);
    push(n, d_std, "green-leary-colimit", "natural isomorphism in G^op",
         "colim over A_n(G) vs beta_n Rep(-,G)", pass, "", timer.ms());
  }

  std::vector<GComplex> complexes = {point_complex(G)};
  for (const auto& X : entry.complexes) complexes.push_back(X);
  for (const auto& X : complexes)
    for (int n = 0; n <= 2; ++n) {
      detail::CheckTimer timer;
      bool pass = hurewicz_model_check(G, p, n, X, caps);
      push(n, d_std, "borel-model[" + X.name + "]",
           "isomorphism of right Aut(F^n)-sets", "coend(F_X)(F^n) vs Y_n/G", pass,
           "", timer.ms());
    }

  GComplex pt = point_complex(G);
  for (int n = 1; n <= 2; ++n) {
    detail::CheckTimer timer;
    int rank = hkr_rank(G, p, n, pt, caps);
    long long oracle = hkr_burnside_point_count(G, p, n, caps);
    push(n, d_std, "hkr-rank-burnside", "indexed over the orbits", "X = pt",
         rank == oracle,
         "rank=" + std::to_string(rank) + " burnside=" + std::to_string(oracle),
         timer.ms());
  }
}

inline VerificationReport run_battery(const std::vector<BatteryEntry>& battery,
                                      const Caps& caps,
                                      const std::vector<std::pair<std::string, FinitePresheaf>>&
                                          file_presheaves = {}) {
  VerificationReport report;
  for (const auto& entry : battery) run_entry_checks(entry, 2, caps, report.checks);
  for (const auto& [name, F] : file_presheaves) {
    detail::CheckTimer timer;
    FunctorialityReport fr = check_functoriality(F);
    std::string detail_s;
    if (!fr.pass) {
      const auto& v = fr.violations.front();
      detail_s = "violated at outer " + restriction_key(v.k, v.j, mat_of_index(F.p, v.k, v.j, v.outer)) +
                 " inner " + restriction_key(v.j, v.i, mat_of_index(F.p, v.j, v.i, v.inner)) +
                 " element " + std::to_string(v.element);
    }
    report.checks.push_back({name, F.p, -1, F.d, "presheaf-functoriality",
                             "contravariant functor laws", name, fr.pass, detail_s,
                             timer.ms()});
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     auto ka = std::tie(a.group, a.p, a.n, a.d, a.name);
                     auto kb = std::tie(b.group, b.p, b.n, b.d, b.name);
                     return ka < kb;
                   });
  return report;
}

// ---- rendering -------------------------------------------------------------

inline std::string report_to_tsv(const VerificationReport& report) {
  std::ostringstream os;
  os << "group\tp\tn\td\tcheck\tstatement\tverdict\tdetail\n";
  for (const auto& c : report.checks) {
    os << c.group << '\t' << c.p << '\t';
    if (c.n < 0)
      os << '-';
    else
      os << c.n;
    os << '\t' << c.d << '\t' << c.name << '\t' << c.statement << '\t'
       << (c.pass ? "pass" : "fail") << '\t' << c.detail << '\n';
  }
  return os.str();
}

inline json report_to_json(const VerificationReport& report) {
  json j;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e;
    e["group"] = c.group;
    e["p"] = c.p;
    if (c.n >= 0) e["n"] = c.n;
    e["d"] = c.d;
    e["check"] = c.name;
    e["statement"] = c.statement;
    e["inputs"] = c.inputs;
    e["verdict"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["passed"] = static_cast<int>(report.checks.size()) - report.failed();
  j["failed"] = report.failed();
  return j;
}

}  // namespace chromavar
