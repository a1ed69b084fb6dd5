#include <doctest.h>

#include "chromavar/group.hpp"
#include "chromavar/io.hpp"
#include "chromavar/subgroups.hpp"
#include "chromavar/verify.hpp"
#include "oracles.hpp"

using namespace chromavar;

TEST_CASE("closure from permutation generators") {
  FiniteGroup s3 = make_sym3();
  CHECK(s3.order == 6);
  CHECK(s3.order == (int)oracles::perm_closure(3, {{1, 0, 2}, {1, 2, 0}}).size());
  CHECK(s3.identity == 0);
  CHECK(s3.labels[0] == "e");

  FiniteGroup triv = group_from_perm_generators(1, {});
  CHECK(triv.order == 1);

  FiniteGroup d4 = make_d4();
  CHECK(d4.order == 8);
  CHECK(d4.order == (int)oracles::perm_closure(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}).size());

  FiniteGroup q8 = make_q8();
  CHECK(q8.order == 8);
  // a single involution, labelled -e
  int involutions = 0;
  for (int x = 0; x < q8.order; ++x)
    if (q8.element_order(x) == 2) {
      ++involutions;
      CHECK(q8.labels[x] == "-e");
    }
  CHECK(involutions == 1);

  FiniteGroup a4 = make_a4();
  CHECK(a4.order == 12);
}

TEST_CASE("closure is deterministic") {
  FiniteGroup a = make_sym3();
  FiniteGroup b = make_sym3();
  CHECK(a.table == b.table);
  CHECK(a.labels == b.labels);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(group_from_perm_generators(3, {{0, 0, 1}}), input_error);
  CHECK_THROWS_AS(group_from_perm_generators(3, {{1, 0}}), input_error);
  Caps tight;
  tight.max_group_order = 4;
  CHECK_THROWS_AS(group_from_perm_generators(3, {{1, 0, 2}, {1, 2, 0}}, "", tight),
                  cap_exceeded);
  // 2x2 table without identity
  CHECK_THROWS_AS(group_from_table({{1, 0}, {1, 0}}), input_error);
  // non-associative Latin square (an order-5 loop)
  CHECK_THROWS_AS(group_from_table({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}}),
                  input_error);
}

TEST_CASE("group from a table") {
  FiniteGroup z4 = group_from_table(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {}, "z4");
  CHECK(z4.order == 4);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.generators.size() == 1);
  validate_group(z4);
}

TEST_CASE("centralizers") {
  FiniteGroup s3 = make_sym3();
  int t12 = 1;  // BFS puts (1 2) right after e
  CHECK(s3.labels[t12] == "(1 2)");
  auto c = centralizer(s3, {t12});
  CHECK(c.size() == 2);
  CHECK(centralizer(s3, {s3.identity}).size() == 6);

  FiniteGroup q8 = make_q8();
  int minus_e = -1;
  for (int x = 0; x < q8.order; ++x)
    if (q8.labels[x] == "-e") minus_e = x;
  CHECK(centralizer(q8, {minus_e}).size() == 8);

  CHECK_THROWS_AS(centralizer(s3, {17}), input_error);

  // orbit-stabilizer: |class(x)| * |C(x)| = |G|
  for (const FiniteGroup& G : {make_sym3(), make_d4(), make_q8(), make_a4()})
    for (int x = 0; x < G.order; ++x) {
      std::set<int> cls;
      for (int g = 0; g < G.order; ++g) cls.insert(G.conj(g, x));
      CHECK((int)cls.size() * (int)centralizer(G, {x}).size() == G.order);
    }

  // centralizer is a subgroup containing the center
  FiniteGroup d4 = make_d4();
  auto z = center(d4);
  CHECK(z.size() == 2);
  for (int x = 0; x < d4.order; ++x) {
    auto cx = centralizer(d4, {x});
    for (int zz : z) CHECK(std::count(cx.begin(), cx.end(), zz) == 1);
    std::set<int> members(cx.begin(), cx.end());
    CHECK(members.count(d4.identity) == 1);
    for (int a : cx) {
      CHECK(members.count(d4.inv(a)) == 1);
      for (int b : cx) CHECK(members.count(d4.mul(a, b)) == 1);
    }
  }
}

TEST_CASE("elementary abelian subgroup enumeration") {
  FiniteGroup s3 = make_sym3();
  auto subs = elem_abelian_subgroups(s3, 2);
  CHECK(subs.size() == 4);
  CHECK(subs.size() == (size_t)oracles::count_elem_ab_subgroups(s3, 2));
  CHECK(elem_abelian_subgroups(s3, 5).size() == 1);

  FiniteGroup q8 = make_q8();
  auto qsubs = elem_abelian_subgroups(q8, 2);
  CHECK(qsubs.size() == 2);
  CHECK(qsubs.size() == (size_t)oracles::count_elem_ab_subgroups(q8, 2));

  FiniteGroup d4 = make_d4();
  auto dsubs = elem_abelian_subgroups(d4, 2);
  CHECK(dsubs.size() == (size_t)oracles::count_elem_ab_subgroups(d4, 2));
  CHECK(dsubs.size() == 8);  // trivial + 5 of order 2 + 2 Klein fours

  FiniteGroup a4 = make_a4();
  CHECK(elem_abelian_subgroups(a4, 2).size() ==
        (size_t)oracles::count_elem_ab_subgroups(a4, 2));
  CHECK(elem_abelian_subgroups(a4, 2).size() == 5);
  CHECK(elem_abelian_subgroups(a4, 3).size() == 5);

  // ordering: by rank then lexicographically on the element set
  for (size_t i = 1; i < dsubs.size(); ++i) {
    bool ordered = dsubs[i - 1].rank < dsubs[i].rank ||
                   (dsubs[i - 1].rank == dsubs[i].rank &&
                    dsubs[i - 1].elements < dsubs[i].elements);
    CHECK(ordered);
  }
}

TEST_CASE("subgroup invariants and conjugation closure") {
  for (const FiniteGroup& G : {make_sym3(), make_d4(), make_q8(), make_a4()}) {
    for (int p : {2, 3}) {
      auto subs = elem_abelian_subgroups(G, p);
      std::set<std::vector<int>> sets;
      for (const auto& E : subs) {
        validate_elem_ab_subgroup(G, E);
        sets.insert(E.elements);
      }
      for (const auto& E : subs)
        for (int g = 0; g < G.order; ++g) {
          std::vector<int> conj;
          for (int x : E.elements) conj.push_back(G.conj(g, x));
          std::sort(conj.begin(), conj.end());
          CHECK(sets.count(conj) == 1);
        }
    }
  }
}

TEST_CASE("group json handling") {
  json j = {{"name", "s3"}, {"degree", 3}, {"generators", {{2, 1, 3}, {2, 3, 1}}}};
  FiniteGroup G = group_from_json(j);
  CHECK(G.order == 6);
  CHECK(G.name == "s3");
  CHECK_THROWS_AS(group_from_json({{"degree", 3}}), input_error);
  json bad = {{"name", "x"}, {"degree", 2}, {"generators", {{3, 1}}}};
  CHECK_THROWS_AS(group_from_json(bad), input_error);
}

TEST_CASE("composite p is an input error") {
  FiniteGroup s3 = make_sym3();
  CHECK_THROWS_AS(elem_abelian_subgroups(s3, 4), input_error);
  CHECK_THROWS_AS(enumerate_homs(1, 6, s3), input_error);
  CHECK_THROWS_AS(commuting_p_power_tuples(1, 9, s3), input_error);
}
