#include <doctest.h>

#include "chromavar/beta.hpp"
#include "chromavar/iso.hpp"
#include "chromavar/quillen.hpp"
#include "chromavar/verify.hpp"

using namespace chromavar;

TEST_CASE("beta leaves representables alone for n >= 1") {
  for (int p : {2, 3})
    for (int r : {0, 1, 2}) {
      FinitePresheaf F = representable(p, 2, r);
      for (int n : {1, 2}) {
        BetaResult B = beta_quotient(F, n);
        CHECK(B.presheaf.level_size == F.level_size);
        CHECK(presheaf_iso_check(B.presheaf, F).isomorphic);
      }
    }
}

TEST_CASE("beta at the truncation level is the identity") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  BetaResult B = beta_quotient(R, 2);
  CHECK(B.presheaf.level_size == R.level_size);
  // and so is any n >= d, including very large n
  CHECK(beta_quotient(R, 100).presheaf.level_size == R.level_size);
}

TEST_CASE("beta_0 of Rep(-,S3) collapses every level") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  BetaResult B = beta_quotient(R, 0);
  CHECK(B.presheaf.level_size == std::vector<int>{1, 1, 1});
}

TEST_CASE("canonical map is surjective and bijective at low levels") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  for (int n : {0, 1, 2}) {
    BetaResult B = beta_quotient(R, n);
    CHECK(check_naturality(R, B.presheaf, B.projection));
    CHECK(levelwise_surjective(B.presheaf, B.projection));
    for (int k = 0; k <= n && k <= 2; ++k)
      CHECK(B.levels[k].classes() == R.level_size[k]);
  }
}

TEST_CASE("beta is idempotent") {
  FiniteGroup d4 = make_d4();
  FinitePresheaf R = rep_presheaf(d4, 2, 2);
  for (int n : {0, 1, 2}) {
    BetaResult once = beta_quotient(R, n);
    BetaResult twice = beta_quotient(once.presheaf, n);
    CHECK(twice.presheaf.level_size == once.presheaf.level_size);
  }
}

TEST_CASE("tower of surjections") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  for (int n : {0, 1}) {
    BetaResult hi = beta_quotient(R, n + 1);
    BetaResult lo = beta_quotient(R, n);
    PresheafMap t = tower_surjection(R, n);
    CHECK(check_naturality(hi.presheaf, lo.presheaf, t));
    CHECK(levelwise_surjective(lo.presheaf, t));
    // triangle: tower o (R -> beta_{n+1}) equals R -> beta_n
    for (int k = 0; k <= 2; ++k)
      for (int x = 0; x < R.level_size[k]; ++x)
        CHECK(t.components[k][hi.levels[k].class_of[x]] == lo.levels[k].class_of[x]);
  }
  // class counts shrink as n does
  std::vector<int> c0 = beta_quotient(R, 0).presheaf.level_size;
  std::vector<int> c1 = beta_quotient(R, 1).presheaf.level_size;
  std::vector<int> c2 = beta_quotient(R, 2).presheaf.level_size;
  for (int k = 0; k <= 2; ++k) {
    CHECK(c0[k] <= c1[k]);
    CHECK(c1[k] <= c2[k]);
  }

  // on an all-singleton presheaf every tower map is a bijection of points
  FinitePresheaf T = terminal_presheaf(2, 2);
  PresheafMap t = tower_surjection(T, 0);
  for (auto& comp : t.components) CHECK(comp == std::vector<int>{0});

  CHECK_THROWS_AS(tower_surjection(R, 2), input_error);
}

TEST_CASE("beta commutes with finite products") {
  FinitePresheaf r1 = representable(2, 2, 1);
  CHECK(beta_product_check(r1, r1, 1));
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  for (int n : {0, 1, 2}) {
    CHECK(beta_product_check(R, r1, n));
    CHECK(beta_product_check(R, R, n));
  }
  // terminal is the unit
  FinitePresheaf T = terminal_presheaf(2, 2);
  FinitePresheaf P = product_presheaf(R, T);
  CHECK(presheaf_iso_check(P, R).isomorphic);
}

TEST_CASE("full beta calculus bundle on battery presheaves") {
  for (const FiniteGroup& G : {make_sym3(), make_q8()}) {
    FinitePresheaf R = rep_presheaf(G, 2, 2);
    FinitePresheaf r1 = representable(2, 2, 1);
    FinitePresheaf r2 = representable(2, 2, 2);
    FinitePresheaf prod = product_presheaf(r1, R);
    for (int n : {0, 1, 2})
      for (const FinitePresheaf* F : {&R, &r1, &r2, &prod}) {
        std::string why;
        CHECK_MESSAGE(beta_calculus_check(*F, n, &why), why);
      }
  }
}

TEST_CASE("beta of a corrupted functor is rejected") {
  // restriction tables that are not functorial break the well-definedness
  // scan inside beta_quotient
  FinitePresheaf F = representable(2, 2, 1);
  F.rest[2][0][0][0] = 0;  // fine: already 0 (level 0 is a point)
  F.rest[2][1][2][1] = (F.rest[2][1][2][1] + 1) % 2;
  bool threw_or_failed = false;
  try {
    threw_or_failed = !check_functoriality(F).pass;
  } catch (const internal_error&) {
    threw_or_failed = true;
  }
  CHECK(threw_or_failed);
}
