#include "heyde/io.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "test_util.hpp"

using namespace heyde;

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("Z3").orders() == std::vector<int>{3});
  CHECK(parse_group_spec("z3xz9").orders() == std::vector<int>{3, 9});
  CHECK(parse_group_spec("Z5xZ5xZ25").orders() == std::vector<int>{5, 5, 25});
  CHECK(format_group_spec(parse_group_spec("z3XZ9")) == "Z3xZ9");

  CHECK_THROWS_WITH_AS(parse_group_spec("Z0"), "group spec: order must be >= 2 at 'Z0'",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("A3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z3x"), std::invalid_argument);
}

TEST_CASE("element strings") {
  const FinGroup g({3, 9});
  CHECK(parse_elem(g, "1,3") == Elem{1, 3});
  CHECK(parse_elem(g, "-1,12") == Elem{2, 3});  // reduced mod orders
  CHECK(format_elem({1, 3}) == "1,3");
  CHECK_THROWS_AS(parse_elem(g, "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem(g, "1,a"), std::invalid_argument);
  CHECK(parse_elem(FinGroup(), "") == Elem{});
}

TEST_CASE("rational strings") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("6/-8") == Rat(-3, 4));
  CHECK(format_rational(Rat(-3, 4)) == "-3/4");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("5/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("map specs: scalar shorthand and JSON matrices") {
  const FinGroup g({3, 9});
  CHECK(parse_map_spec(g, "4") == GroupMap::scalar(g, 4));
  CHECK(parse_map_spec(g, "-1") == GroupMap::scalar(g, -1));
  CHECK(parse_map_spec(g, "[[1,0],[3,1]]") == GroupMap::from_matrix(g, {{1, 0}, {3, 1}}));
  CHECK_THROWS_AS(parse_map_spec(g, "[[1,0],[1,1]]"), std::invalid_argument);  // incompatible
  CHECK_THROWS_AS(parse_map_spec(g, "pi"), std::invalid_argument);

  const auto j = map_to_json(parse_map_spec(g, "[[1,0],[3,1]]"));
  CHECK(j.dump() == "[[1,0],[3,1]]");
}

TEST_CASE("distribution JSON round trip") {
  std::mt19937_64 rng(41);
  for (const FinGroup& g : heyde::testing::small_groups()) {
    for (int t = 0; t < 5; ++t) {
      const Dist mu = random_grid_dist(g, 12, rng);
      CHECK(dist_from_json(g, dist_to_json(mu)) == mu);
    }
  }
  const FinGroup z3({3});
  CHECK_THROWS_AS(dist_from_json(z3, nlohmann::json::parse(R"({"0":"1/2","1":"1/4"})")),
                  std::invalid_argument);  // does not sum to 1
}

TEST_CASE("characteristic function JSON round trip") {
  const RGInstance fam = make_remark_family(Rat(2), Rat(1), RatComplex(Rat(7, 10)), Rat(-2));
  for (const RGCharFn& f : {fam.f1, fam.f2}) {
    const RGCharFn back = rg_charfn_from_json(f.group(), rg_charfn_to_json(f));
    CHECK(back == f);
  }
  CHECK_THROWS_AS(rg_charfn_from_json(FinGroup({2}), nlohmann::json::parse(R"({"0":
      {"kappa":["1","0"],"quad":"0","lin":"0"}})")),
                  std::invalid_argument);  // character 1 missing
}

TEST_CASE("characteristic function CSV export") {
  const FinGroup g({2, 2});
  const CharFn phi = fourier(Dist::point(g, {1, 0}));
  const std::string csv = charfn_to_csv(phi);
  CHECK(csv.rfind("y,re,im\n", 0) == 0);
  CHECK(csv.find("\"1,1\",") != std::string::npos);  // element strings stay quoted
  CHECK(csv.find("-1") != std::string::npos);        // the pairing hits -1
}
