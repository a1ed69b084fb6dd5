// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chromavar/verify.hpp"
#include "oracles.hpp"

using namespace chromavar;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

int g_failed = 0;

void finish(Criterion& c, double elapsed_s) {
  if (elapsed_s > c.limit_s) {
    c.pass = false;
    c.failures.push_back("runtime " + std::to_string(elapsed_s) + "s exceeds " +
                         std::to_string(c.limit_s) + "s");
  }
  std::printf("[%s] criterion %d: %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", c.id,
              c.title.c_str(), elapsed_s);
  for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
  if (!c.pass) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Pin {
  FiniteGroup G;
  int p;
  int d;
};

std::vector<Pin> battery_pins() {
  return {{make_cyclic_group(2, "z2"), 2, 2}, {make_cyclic_group(3, "z3"), 3, 2},
          {make_sym3(), 2, 2},              {make_sym3(), 3, 2},
          {make_d4(), 2, 2},                {make_q8(), 2, 2},
          {make_a4(), 2, 3},                {make_a4(), 3, 2}};
}

std::vector<std::pair<std::string, FinitePresheaf>> battery_presheaves(
    const FiniteGroup& G, int p, int d) {
  FinitePresheaf rep = rep_presheaf(G, p, d);
  FinitePresheaf r0 = representable(p, d, 0);
  FinitePresheaf r1 = representable(p, d, 1);
  FinitePresheaf r2 = representable(p, d, 2);
  FinitePresheaf prod = product_presheaf(r1, rep);
  return {{"rep0", r0}, {"rep1", r1}, {"rep2", r2},
          {"Rep", rep}, {"rep1xRep", prod}};
}

std::string tag(const Pin& pin) {
  return pin.G.name + ",p=" + std::to_string(pin.p) + ",d=" + std::to_string(pin.d);
}

}  // namespace

int main() {
  Caps caps;

  // 1. Quillen isomorphism at the pinned truncations
  {
    Criterion c{1, "Quillen isomorphism: coend(singleton) == Rep(-,G)", 10.0};
    auto t0 = std::chrono::steady_clock::now();
    for (const Pin& pin : battery_pins()) {
      CategoryInstance cat = build_quillen_category(pin.G, pin.p);
      FinitePresheaf coend = coend_presheaf(cat, constant_singleton(cat), pin.d, caps);
      FinitePresheaf rep = rep_presheaf(pin.G, pin.p, pin.d, caps);
      IsoResult iso = presheaf_iso_check(coend, rep, caps);
      c.expect(iso.isomorphic && iso.witness.has_value(), tag(pin));
    }
    finish(c, seconds_since(t0));
  }

  // 2. beta-calculus suite over battery presheaves
  {
    Criterion c{2, "beta calculus: idempotence, tower, products, preservation", 30.0};
    auto t0 = std::chrono::steady_clock::now();
    for (const Pin& pin : battery_pins()) {
      auto presheaves = battery_presheaves(pin.G, pin.p, pin.d);
      for (int n = 0; n <= 2; ++n) {
        for (auto& [label, F] : presheaves) {
          std::string why;
          if (!beta_calculus_check(F, n, &why))
            c.expect(false, tag(pin) + " " + label + " n=" + std::to_string(n) +
                                ": " + why);
        }
        c.expect(beta_product_check(presheaves[1].second, presheaves[3].second, n),
                 tag(pin) + " product rep1 x Rep, n=" + std::to_string(n));
        c.expect(beta_product_check(presheaves[3].second, presheaves[3].second, n),
                 tag(pin) + " product Rep x Rep, n=" + std::to_string(n));
      }
    }
    finish(c, seconds_since(t0));
  }

  // 3. Key Lemma + adjunction at d=2
  {
    Criterion c{3, "Key Lemma counit, e_d/i_d adjunction, i_d beta commutation", 60.0};
    auto t0 = std::chrono::steady_clock::now();
    for (const Pin& pin : battery_pins()) {
      auto presheaves = battery_presheaves(pin.G, pin.p, 2);
      for (auto& [label, F] : presheaves)
        c.expect(counit_is_mono(F), tag(pin) + " counit " + label);

      std::vector<std::pair<std::string, EndMSet>> msets;
      msets.push_back({"singleton", singleton_endmset(pin.p, 2)});
      for (auto& [label, F] : presheaves)
        msets.push_back({"e_2(" + label + ")", e_d_evaluate(F)});
      msets.push_back({"free", free_orbit_endmset(pin.p, 2)});

      for (auto& [slabel, S] : msets) {
        if (S.carrier <= 8)
          for (auto& [flabel, F] : presheaves)
            if (F.level_size[2] <= 8)
              c.expect(adjunction_check(S, F),
                       tag(pin) + " adjunction " + slabel + " -> " + flabel);
        for (int n = 0; n <= 2; ++n)
          c.expect(id_beta_commute_check(S, n),
                   tag(pin) + " i_d beta " + slabel + " n=" + std::to_string(n));
      }
    }
    finish(c, seconds_since(t0));
  }

  // 4. Green-Leary colimit theorem
  {
    Criterion c{4, "Green-Leary colimit: colim hom(-,W) == beta_n Rep(-,G)", 60.0};
    auto t0 = std::chrono::steady_clock::now();
    for (const Pin& pin : battery_pins())
      for (int n = 1; n <= 2; ++n)
        c.expect(compare_gl_beta(pin.G, pin.p, n, 2, caps),
                 tag(pin) + " n=" + std::to_string(n));
    finish(c, seconds_since(t0));
  }

  // 5. Borel model
  {
    Criterion c{5, "Borel model: coend(F_X)(F^n) == Y_n/G", 30.0};
    auto t0 = std::chrono::steady_clock::now();
    FiniteGroup z2 = make_cyclic_group(2, "z2");
    FiniteGroup s3 = make_sym3();
    FiniteGroup d4 = make_d4();
    std::vector<std::pair<FiniteGroup, GComplex>> pairs = {
        {z2, make_swap_complex(z2)},
        {s3, make_three_points_complex(s3)},
        {s3, make_path3_complex(s3)},
        {d4, make_square_complex(d4)}};
    for (const Pin& pin : battery_pins())
      pairs.push_back({pin.G, point_complex(pin.G)});
    for (auto& [G, X] : pairs)
      for (int n = 0; n <= 2; ++n)
        c.expect(hurewicz_model_check(G, 2, n, X, caps),
                 G.name + " X=" + X.name + " n=" + std::to_string(n));
    // the s3 complexes at p=3 as well
    for (int n = 0; n <= 2; ++n) {
      c.expect(hurewicz_model_check(s3, 3, n, make_three_points_complex(s3), caps),
               "s3(p=3) X=three-points n=" + std::to_string(n));
      c.expect(hurewicz_model_check(s3, 3, n, make_path3_complex(s3), caps),
               "s3(p=3) X=path3 n=" + std::to_string(n));
    }
    finish(c, seconds_since(t0));
  }

  // 6. HKR rank against the Burnside oracle
  {
    Criterion c{6, "HKR rank equals the Burnside double count", 10.0};
    auto t0 = std::chrono::steady_clock::now();
    for (const Pin& pin : battery_pins()) {
      GComplex pt = point_complex(pin.G);
      for (int n = 1; n <= 2; ++n) {
        int rank = hkr_rank(pin.G, pin.p, n, pt, caps);
        // oracle implemented test-side, structurally unlike the orbit scan
        std::vector<GroupHom> tuples = commuting_p_power_tuples(n, pin.p, pin.G, caps);
        long long fixed = 0;
        for (int g = 0; g < pin.G.order; ++g)
          for (const auto& t : tuples) {
            bool f = true;
            for (int x : t.images)
              if (pin.G.conj(g, x) != x) {
                f = false;
                break;
              }
            if (f) ++fixed;
          }
        long long oracle = fixed / pin.G.order;
        c.expect(rank == oracle, tag(pin) + " n=" + std::to_string(n) + " rank=" +
                                     std::to_string(rank) + " oracle=" +
                                     std::to_string(oracle));
      }
    }
    FiniteGroup s3 = make_sym3();
    GComplex pt = point_complex(s3);
    c.expect(hkr_rank(s3, 2, 1, pt, caps) == 2, "spot value s3 p=2 n=1");
    c.expect(hkr_rank(s3, 2, 2, pt, caps) == 4, "spot value s3 p=2 n=2");
    finish(c, seconds_since(t0));
  }

  // 7. determinism of the verify report
  {
    Criterion c{7, "byte-identical verify reports", 120.0};
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport a = run_battery(builtin_battery(), caps);
    VerificationReport b = run_battery(builtin_battery(), caps);
    c.expect(report_to_tsv(a) == report_to_tsv(b), "tsv reports differ");
    c.expect(report_to_json(a).dump(2) == report_to_json(b).dump(2),
             "json reports differ");
    c.expect(a.failed() == 0, "battery has failures");
    finish(c, seconds_since(t0));
  }

  std::printf("%s: %d criterion(s) failed\n", g_failed == 0 ? "OK" : "FAILED",
              g_failed);
  return g_failed;
}
