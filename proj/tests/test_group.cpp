#include "heyde/group.hpp"

#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

using namespace heyde;
using heyde::testing::all_subgroups;
using heyde::testing::approx;
using heyde::testing::small_groups;

TEST_CASE("pairing on cyclic groups") {
  const FinGroup z3({3});
  CHECK(approx(z3.pairing({0}, {2}), {1.0, 0.0}));
  CHECK(approx(z3.pairing({1}, {1}), std::polar(1.0, 2 * std::numbers::pi / 3)));

  const FinGroup g({3, 9});
  // exponent sum 1*2/3 + 3*3/9 = 2/3 + 1
  CHECK(approx(g.pairing({1, 3}, {2, 3}), std::polar(1.0, 4 * std::numbers::pi / 3)));
  CHECK(g.pairing_exponent({1, 3}, {2, 3}) == 6);  // of 9
}

TEST_CASE("pairing is bilinear (exact exponents, exhaustive)") {
  for (const FinGroup& g : small_groups()) {
    const long long l = g.exponent();
    for (long long xi = 0; xi < g.order(); ++xi)
      for (long long yi = 0; yi < g.order(); ++yi) {
        const Elem x = g.element(xi), y = g.element(yi);
        for (long long zi = 0; zi < g.order(); ++zi) {
          const Elem z = g.element(zi);
          CHECK(g.pairing_exponent(g.add(x, z), y) ==
                (g.pairing_exponent(x, y) + g.pairing_exponent(z, y)) % l);
          CHECK(g.pairing_exponent(x, g.add(y, z)) ==
                (g.pairing_exponent(x, y) + g.pairing_exponent(x, z)) % l);
        }
      }
  }
}

TEST_CASE("element indexing is lexicographic") {
  const FinGroup g({3, 9});
  CHECK(g.index_of({0, 0}) == 0);
  CHECK(g.element(1) == Elem{0, 1});
  CHECK(g.index_of({1, 0}) == 9);
  for (long long i = 0; i + 1 < g.order(); ++i) CHECK(g.element(i) < g.element(i + 1));
}

TEST_CASE("subgroup generation by closure") {
  const FinGroup z9({9});
  CHECK(subgroup_from_generators(z9, {}).members == std::vector<long long>{0});
  CHECK(subgroup_from_generators(z9, {{3}}).members == std::vector<long long>{0, 3, 6});

  const FinGroup g({3, 3});
  const Subgroup diag = subgroup_from_generators(g, {{1, 1}});
  CHECK(diag.members == std::vector<long long>{g.index_of({0, 0}), g.index_of({1, 1}),
                                               g.index_of({2, 2})});
}

TEST_CASE("subgroup order divides the group order") {
  std::mt19937_64 rng(11);
  for (const FinGroup& g : small_groups()) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(g.element(rng() % g.order()));
      const Subgroup s = subgroup_from_generators(g, gens);
      CHECK(g.order() % s.size() == 0);
    }
  }
}

TEST_CASE("annihilator examples") {
  const FinGroup z9({9});
  CHECK(annihilator(trivial_subgroup(z9)).size() == 9);
  CHECK(annihilator(full_subgroup(z9)).members == std::vector<long long>{0});
  CHECK(annihilator(subgroup_from_generators(z9, {{3}})).members ==
        std::vector<long long>{0, 3, 6});
}

TEST_CASE("annihilator agrees with the float pairing oracle") {
  for (const FinGroup& g : small_groups()) {
    for (const Subgroup& s : all_subgroups(g)) {
      const Subgroup ann = annihilator(s);
      for (long long xi = 0; xi < g.order(); ++xi) {
        bool member = true;
        for (long long yi : s.members)
          if (!approx(g.pairing(g.element(xi), g.element(yi)), {1.0, 0.0})) member = false;
        CHECK(member == ann.contains_index(xi));
      }
    }
  }
}

TEST_CASE("annihilator duality: A(A(S)) == S") {
  for (const FinGroup& g : small_groups())
    for (const Subgroup& s : all_subgroups(g)) CHECK(annihilator(annihilator(s)) == s);
}

TEST_CASE("doubling examples") {
  CHECK(doubled(full_subgroup(FinGroup({3}))).size() == 3);
  CHECK(doubled(full_subgroup(FinGroup({4}))).members == std::vector<long long>{0, 2});
  const FinGroup g({2, 3});
  const Subgroup d = doubled(full_subgroup(g));
  CHECK(d.members == std::vector<long long>{g.index_of({0, 0}), g.index_of({0, 1}),
                                            g.index_of({0, 2})});
}

TEST_CASE("density criterion: doubled(Y) == Y iff no elements of order 2") {
  for (const FinGroup& g : small_groups())
    CHECK((doubled(full_subgroup(g)) == full_subgroup(g)) == !has_order_two(g));
}

TEST_CASE("order-2 detection") {
  CHECK_FALSE(has_order_two(FinGroup({3, 9})));
  CHECK(has_order_two(FinGroup({2})));
  CHECK(has_order_two(FinGroup({6})));
}

TEST_CASE("group construction rejects bad orders") {
  CHECK_THROWS_AS(FinGroup({1}), std::invalid_argument);
  CHECK_THROWS_AS(FinGroup({0, 3}), std::invalid_argument);
  CHECK(FinGroup().order() == 1);  // trivial group
}
