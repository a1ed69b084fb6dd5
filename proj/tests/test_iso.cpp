#include <doctest.h>

#include "chromavar/iso.hpp"
#include "chromavar/quillen.hpp"
#include "chromavar/verify.hpp"

using namespace chromavar;

TEST_CASE("identity isomorphism") {
  FinitePresheaf F = representable(2, 2, 1);
  IsoResult r = presheaf_iso_check(F, F);
  CHECK(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(check_naturality(F, F, *r.witness));
}

TEST_CASE("size mismatch is an immediate no") {
  FinitePresheaf F = representable(2, 2, 1);
  FinitePresheaf T = terminal_presheaf(2, 2);
  CHECK(!presheaf_iso_check(F, T).isomorphic);
}

TEST_CASE("equal level sizes do not imply isomorphism") {
  // Rep(-,D4) and hom(-,F^2) = Rep(-,Klein four) both have levels [1,4,16],
  // but a rank-2 class through a Klein subgroup of D4 restricts along the
  // three lines to only two distinct classes, which never happens for an
  // independent pair in the representable.
  FiniteGroup d4 = make_d4();
  FinitePresheaf R = rep_presheaf(d4, 2, 2);
  FinitePresheaf r2 = representable(2, 2, 2);
  REQUIRE(R.level_size == r2.level_size);
  CHECK(!presheaf_iso_check(R, r2).isomorphic);
}

TEST_CASE("Rep(-,S3) at p=2 is the variety of its Sylow 2-subgroup") {
  FiniteGroup s3 = make_sym3();
  FinitePresheaf R = rep_presheaf(s3, 2, 2);
  FinitePresheaf r1 = representable(2, 2, 1);
  CHECK(presheaf_iso_check(R, r1).isomorphic);
}

TEST_CASE("coend of the singleton matches Rep") {
  FiniteGroup s3 = make_sym3();
  CategoryInstance C = build_quillen_category(s3, 2);
  FinitePresheaf coend = coend_presheaf(C, constant_singleton(C), 2);
  FinitePresheaf rep = rep_presheaf(s3, 2, 2);
  IsoResult r = presheaf_iso_check(coend, rep);
  CHECK(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(levelwise_injective(rep, *r.witness));
  CHECK(levelwise_surjective(rep, *r.witness));
}

TEST_CASE("level cap guards the search") {
  FinitePresheaf F = representable(2, 2, 2);
  Caps tight;
  tight.max_level = 10;
  CHECK_THROWS_AS(presheaf_iso_check(F, F, tight), cap_exceeded);
}

TEST_CASE("prime or truncation mismatch is an input error") {
  FinitePresheaf F = representable(2, 2, 1);
  FinitePresheaf G = representable(3, 2, 1);
  CHECK_THROWS_AS(presheaf_iso_check(F, G), input_error);
}
