#include <doctest.h>

#include "chromavar/homs.hpp"
#include "chromavar/verify.hpp"
#include "oracles.hpp"

using namespace chromavar;

TEST_CASE("hom enumeration counts against brute force") {
  FiniteGroup s3 = make_sym3();
  CHECK(enumerate_homs(1, 2, s3).size() == 4);
  CHECK(enumerate_homs(2, 2, s3).size() == 10);
  CHECK(enumerate_homs(0, 2, s3).size() == 1);
  for (int n : {1, 2})
    for (int p : {2, 3})
      CHECK((long long)enumerate_homs(n, p, s3).size() ==
            oracles::count_homs_bruteforce(s3, n, p));
  FiniteGroup d4 = make_d4();
  for (int n : {1, 2})
    CHECK((long long)enumerate_homs(n, 2, d4).size() ==
          oracles::count_homs_bruteforce(d4, n, 2));
}

TEST_CASE("hom list is lexicographic and starts with the trivial hom") {
  FiniteGroup s3 = make_sym3();
  auto homs = enumerate_homs(2, 2, s3);
  CHECK(homs.front().images == std::vector<int>{0, 0});
  for (size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1].images < homs[i].images);
}

TEST_CASE("size of hom(F^1, -) counts order-p elements") {
  for (const FiniteGroup& G : {make_sym3(), make_d4(), make_q8(), make_a4()})
    for (int p : {2, 3}) {
      int order_p = 0;
      for (int x = 0; x < G.order; ++x)
        if (G.element_order(x) == p) ++order_p;
      CHECK((int)enumerate_homs(1, p, G).size() == 1 + order_p);
    }
}

TEST_CASE("enumeration cap is an error, not truncation") {
  FiniteGroup d4 = make_d4();
  Caps tight;
  tight.max_enum = 10;
  CHECK_THROWS_AS(enumerate_homs(2, 2, d4, tight), cap_exceeded);
}

TEST_CASE("rep orbits") {
  FiniteGroup s3 = make_sym3();
  RepOrbits r1 = rep_orbits(1, 2, s3);
  CHECK(r1.classes.classes() == 2);
  // trivial hom alone; the three transpositions together
  CHECK(r1.classes.class_of[0] == 0);
  CHECK(r1.classes.representative[1] == 1);

  RepOrbits r3 = rep_orbits(1, 3, s3);
  CHECK(r3.classes.classes() == 2);

  FiniteGroup q8 = make_q8();
  CHECK(rep_orbits(2, 2, q8).classes.classes() == 4);

  // n = 0 always gives exactly one class
  for (const FiniteGroup& G : {make_sym3(), make_d4(), make_q8()})
    for (int p : {2, 3}) CHECK(rep_orbits(0, p, G).classes.classes() == 1);

  // Burnside double count
  for (const FiniteGroup& G : {make_sym3(), make_d4(), make_q8(), make_a4()})
    for (int p : {2, 3})
      for (int n : {1, 2})
        CHECK((long long)rep_orbits(n, p, G).classes.classes() ==
              oracles::burnside_hom_orbits(G, n, p));
}

TEST_CASE("orbit representatives are lexicographically least") {
  FiniteGroup d4 = make_d4();
  RepOrbits r = rep_orbits(2, 2, d4);
  for (int c = 0; c < r.classes.classes(); ++c) {
    const auto& rep = r.homs[r.classes.representative[c]].images;
    for (size_t h = 0; h < r.homs.size(); ++h)
      if (r.classes.class_of[h] == c) CHECK(rep <= r.homs[h].images);
  }
}

TEST_CASE("rep orbit count is invariant under relabeling by an automorphism") {
  FiniteGroup s3 = make_sym3();
  // inner automorphism x -> g x g^-1 as a relabeling permutation
  for (int g = 0; g < s3.order; ++g) {
    std::vector<int> perm(s3.order), inv(s3.order);
    for (int x = 0; x < s3.order; ++x) perm[x] = s3.conj(g, x);
    for (int x = 0; x < s3.order; ++x) inv[perm[x]] = x;
    std::vector<std::vector<int>> table(s3.order, std::vector<int>(s3.order));
    for (int a = 0; a < s3.order; ++a)
      for (int b = 0; b < s3.order; ++b)
        table[a][b] = perm[s3.mul(inv[a], inv[b])];
    FiniteGroup relabeled = group_from_table(table, {}, "relabeled");
    for (int n : {1, 2})
      CHECK(rep_orbits(n, 2, relabeled).classes.classes() ==
            rep_orbits(n, 2, s3).classes.classes());
  }
  // the inversion automorphism of Z/3
  FiniteGroup z3 = make_cyclic_group(3, "z3");
  std::vector<std::vector<int>> table(3, std::vector<int>(3));
  std::vector<int> perm = {0, 2, 1};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) table[a][b] = perm[z3.mul(perm[a], perm[b])];
  FiniteGroup flipped = group_from_table(table, {}, "z3-fleuipped");
  CHECK(rep_orbits(1, 3, flipped).classes.classes() ==
        rep_orbits(1, 3, z3).classes.classes());
}

TEST_CASE("commuting p-power tuples") {
  FiniteGroup s3 = make_sym3();
  CHECK(commuting_p_power_tuples(1, 2, s3).size() == 4);
  CHECK(commuting_p_power_tuples(2, 2, s3).size() == 10);
  FiniteGroup z4 = group_from_table(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {}, "z4");
  CHECK(commuting_p_power_tuples(1, 2, z4).size() == 4);
  // all of Z/4 has 2-power order but only e, r^2 have order dividing 2
  CHECK(enumerate_homs(1, 2, z4).size() == 2);
}

TEST_CASE("tuple image subgroups") {
  FiniteGroup z4 = group_from_table(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {}, "z4");
  GroupHom h{1, 2, {1}};
  CHECK(tuple_image_subgroup(z4, h).size() == 4);
  GroupHom e{1, 2, {0}};
  CHECK(tuple_image_subgroup(z4, e).size() == 1);
}
