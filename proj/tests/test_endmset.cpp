#include <doctest.h>

#include "chromavar/endmset.hpp"
#include "chromavar/quillen.hpp"
#include "chromavar/verify.hpp"

using namespace chromavar;

TEST_CASE("evaluation at the top level") {
  FinitePresheaf r1 = representable(2, 1, 1);
  EndMSet S = e_d_evaluate(r1);
  CHECK(S.carrier == 2);
  validate_endmset(S);
  // the action of End(F^1) = {0, 1} is multiplication of 1x1 matrices
  for (int a = 0; a < 2; ++a)
    for (int s = 0; s < 2; ++s) CHECK(S.action(a, s) == (a * s) % 2);

  EndMSet T = e_d_evaluate(terminal_presheaf(2, 2));
  CHECK(T.carrier == 1);
  validate_endmset(T);
}

TEST_CASE("evaluation of Rep(-,S3) at d=1") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 1);
  EndMSet S = e_d_evaluate(R);
  CHECK(S.carrier == 2);
  // the zero endomorphism sends both classes to the trivial class
  CHECK(S.action(0, 0) == 0);
  CHECK(S.action(0, 1) == 0);
  // the identity fixes both
  long long idx = index_of_mat(fp_identity(2, 1));
  CHECK(S.action(idx, 0) == 0);
  CHECK(S.action(idx, 1) == 1);
}

TEST_CASE("induction from the free orbit at d=1") {
  EndMSet S = free_orbit_endmset(2, 1);
  CHECK(S.carrier == 2);
  validate_endmset(S);
  InducedPresheaf I = i_d_induce(S);
  CHECK(I.presheaf.level_size == std::vector<int>{1, 2});
  CHECK(check_functoriality(I.presheaf).pass);
}

TEST_CASE("induction of a singleton is terminal") {
  InducedPresheaf I = i_d_induce(singleton_endmset(2, 2));
  CHECK(I.presheaf.level_size == std::vector<int>{1, 1, 1});
}

TEST_CASE("counit is a levelwise monomorphism") {
  FiniteGroup s3 = make_sym3();
  FiniteGroup q8 = make_q8();
  for (const FinitePresheaf& F :
       {rep_presheaf(s3, 2, 2), rep_presheaf(q8, 2, 2), representable(2, 2, 1),
        representable(2, 2, 2), terminal_presheaf(2, 2), rep_presheaf(s3, 3, 2)})
    CHECK(counit_is_mono(F));
}

TEST_CASE("unit of the adjunction is a bijection") {
  FiniteGroup s3 = make_sym3();
  EndMSet S = e_d_evaluate(rep_presheaf(s3, 2, 2));
  InducedPresheaf I = i_d_induce(S);
  CHECK(I.levels[2].classes() == S.carrier);
}

TEST_CASE("beta on an EndMSet") {
  EndMSet S = free_orbit_endmset(2, 1);
  // rank <= 0 means only the zero endomorphism tests; s.0 = 0 for every s
  auto [Q0, w0] = beta_endmset(S, 0);
  CHECK(Q0.carrier == 1);
  auto [Q1, w1] = beta_endmset(S, 1);
  CHECK(Q1.carrier == S.carrier);
}

TEST_CASE("i_d commutes with beta") {
  FiniteGroup s3 = make_sym3();
  FiniteGroup q8 = make_q8();
  std::vector<EndMSet> battery = {
      singleton_endmset(2, 2), e_d_evaluate(representable(2, 2, 1)),
      e_d_evaluate(rep_presheaf(s3, 2, 2)), e_d_evaluate(rep_presheaf(q8, 2, 2)),
      free_orbit_endmset(2, 2)};
  for (const EndMSet& S : battery)
    for (int n : {0, 1, 2}) CHECK(id_beta_commute_check(S, n));
  // n = d is an identification on the nose
  for (const EndMSet& S : battery) CHECK(id_beta_commute_check(S, 2));
}

TEST_CASE("adjunction bijection by enumeration") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  FinitePresheaf r1 = representable(2, 2, 1);
  FinitePresheaf T = terminal_presheaf(2, 2);
  std::vector<const FinitePresheaf*> targets = {&T, &r1, &R};
  std::vector<EndMSet> sources = {singleton_endmset(2, 2), e_d_evaluate(r1),
                                  e_d_evaluate(R)};
  for (const EndMSet& S : sources)
    for (const FinitePresheaf* F : targets) {
      REQUIRE(S.carrier <= 8);
      REQUIRE(F->level_size[2] <= 8);
      CHECK(adjunction_check(S, *F));
    }
}

TEST_CASE("equivariant map enumeration matches hand counts") {
  // maps from the singleton to e_d(terminal): exactly one
  EndMSet one = singleton_endmset(2, 1);
  CHECK(enumerate_equivariant_maps(one, one).size() == 1);
  // free orbit to itself at d=1: End(F^1)-equivariant self-maps of End(F^1)
  // are left multiplications: f(s) = f(1)*s, any of the 2 choices of f(1)
  EndMSet freeS = free_orbit_endmset(2, 1);
  CHECK(enumerate_equivariant_maps(freeS, freeS).size() == 2);
}

TEST_CASE("dimension zero induction and evaluation") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 0);
  CHECK(R.level_size == std::vector<int>{1});
  EndMSet S = e_d_evaluate(R);
  CHECK(S.carrier == 1);
  InducedPresheaf I = i_d_induce(S);
  CHECK(I.presheaf.level_size == std::vector<int>{1});
  CHECK(counit_is_mono(R));
  CHECK(adjunction_check(S, R));
}
