#include "heyde/dist.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace heyde;
using heyde::testing::approx;
using heyde::testing::small_groups;

TEST_CASE("distribution validation") {
  const FinGroup g({3});
  CHECK_THROWS_AS(Dist(g, {Rat(1), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(Dist(g, {Rat(2), Rat(-1), Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(Dist(g, {Rat(1, 2), Rat(1, 4), Rat(1, 8)}), std::invalid_argument);
}

TEST_CASE("transforms of canonical distributions") {
  const FinGroup g({9});
  const CharFn at_zero = fourier(Dist::point(g, g.zero()));
  for (const auto& v : at_zero.values) CHECK(approx(v, {1.0, 0.0}));

  const CharFn of_uniform = fourier(Dist::uniform(g));
  CHECK(approx(of_uniform.values[0], {1.0, 0.0}));
  for (long long y = 1; y < 9; ++y) CHECK(approx(of_uniform.values[y], {0.0, 0.0}));

  // Haar on a subgroup transforms to the indicator of its annihilator.
  const Subgroup k = subgroup_from_generators(g, {{3}});
  const Subgroup ann = annihilator(k);
  const CharFn of_haar = fourier(haar_on(k));
  for (long long y = 0; y < 9; ++y)
    CHECK(approx(of_haar.values[y], ann.contains_index(y) ? 1.0 : 0.0));
}

TEST_CASE("inverse transform examples") {
  const FinGroup g({5});
  CharFn flat{g, std::vector<std::complex<double>>(5, {1.0, 0.0})};
  CHECK(inverse_fourier(flat) == Dist::point(g, g.zero()));

  std::vector<std::complex<double>> ind(5, {0.0, 0.0});
  ind[0] = 1.0;
  CHECK(inverse_fourier(CharFn{g, ind}) == Dist::uniform(g));
}

TEST_CASE("transform round trip on random grid distributions") {
  std::mt19937_64 rng(5);
  for (const FinGroup& g : small_groups())
    for (int t = 0; t < 25; ++t) {
      const Dist mu = random_grid_dist(g, 12, rng);
      CHECK(inverse_fourier(fourier(mu)) == mu);
    }
}

TEST_CASE("convolution basics and the convolution theorem") {
  const FinGroup g({9});
  std::mt19937_64 rng(6);
  const Dist mu = random_grid_dist(g, 12, rng);
  CHECK(convolve(mu, Dist::point(g, g.zero())) == mu);
  CHECK(convolve(Dist::point(g, {2}), Dist::point(g, {8})) == Dist::point(g, {1}));

  for (int t = 0; t < 10; ++t) {
    const Dist a = random_grid_dist(g, 12, rng), b = random_grid_dist(g, 12, rng);
    const CharFn pa = fourier(a), pb = fourier(b), pc = fourier(convolve(a, b));
    for (long long y = 0; y < g.order(); ++y)
      CHECK(approx(pc.values[y], pa.values[y] * pb.values[y]));
    CHECK(convolve(a, b) == convolve(b, a));
    const Dist c = random_grid_dist(g, 12, rng);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
}

TEST_CASE("shifts and reflections") {
  const FinGroup g({15});
  CHECK(reflect(Dist::point(g, {4})) == Dist::point(g, {11}));

  std::mt19937_64 rng(7);
  const Dist mu = random_grid_dist(g, 12, rng);
  const Dist sym = convolve(mu, reflect(mu));  // symmetric by construction
  CHECK(reflect(sym) == sym);

  const CharFn phi = fourier(mu), phir = fourier(reflect(mu));
  for (long long y = 0; y < g.order(); ++y)
    CHECK(approx(phir.values[y], std::conj(phi.values[y])));

  // Its transform is |mu_hat|^2 >= 0.
  const CharFn psym = fourier(sym);
  for (long long y = 0; y < g.order(); ++y) {
    CHECK(psym.values[y].imag() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(psym.values[y].real() >= -1e-9);
    CHECK(approx(psym.values[y], std::norm(phi.values[y])));
  }
}

TEST_CASE("haar distributions are idempotent") {
  for (const FinGroup& g : small_groups())
    for (const Subgroup& s : heyde::testing::all_subgroups(g)) {
      const Dist h = haar_on(s);
      CHECK(convolve(h, h) == h);
    }
}

TEST_CASE("unimodular level sets") {
  const FinGroup g({9});

  SUBCASE("point mass") {
    const Elem a{3};
    const auto sets = unimodular_sets(Dist::point(g, a));
    CHECK(sets.unimodular == full_subgroup(g));
    CHECK(sets.fixed_one == annihilator(subgroup_from_generators(g, {a})));
    REQUIRE(sets.witness.has_value());
    CHECK(*sets.witness == a);
  }

  SUBCASE("uniform") {
    const auto sets = unimodular_sets(Dist::uniform(g));
    CHECK(sets.fixed_one == trivial_subgroup(g));
    CHECK(sets.unimodular == trivial_subgroup(g));
    REQUIRE(sets.witness.has_value());
    CHECK(*sets.witness == g.zero());
  }

  SUBCASE("haar") {
    const Subgroup k = subgroup_from_generators(g, {{3}});
    const auto sets = unimodular_sets(haar_on(k));
    CHECK(sets.fixed_one == annihilator(k));
    CHECK(sets.unimodular == annihilator(k));
    REQUIRE(sets.witness.has_value());
    CHECK(*sets.witness == g.zero());
  }
}

TEST_CASE("support is contained in the annihilator of the fixed-one set") {
  std::mt19937_64 rng(8);
  for (const FinGroup& g : small_groups())
    for (int t = 0; t < 10; ++t) {
      const Dist mu = random_grid_dist(g, 6, rng);
      const auto sets = unimodular_sets(mu);
      const Subgroup carrier = annihilator(sets.fixed_one);
      for (long long i : mu.support()) CHECK(carrier.contains_index(i));
    }
}

TEST_CASE("nonvanishing detection") {
  const FinGroup z3({3});
  CHECK(is_nonvanishing(Dist::point(z3, {2})));
  CHECK_FALSE(is_nonvanishing(Dist::uniform(z3)));
  CHECK(is_nonvanishing(Dist(z3, {Rat(1, 2), Rat(1, 4), Rat(1, 4)})));
}

TEST_CASE("grid enumeration and sampling") {
  const FinGroup z3({3});
  CHECK(enumerate_grid_dists(z3, 6).size() == 28);  // C(8, 2)
  CHECK(enumerate_grid_dists(z3, 1).size() == 3);

  std::mt19937_64 a(42), b(42);
  for (int t = 0; t < 5; ++t)
    CHECK(random_grid_dist(z3, 12, a) == random_grid_dist(z3, 12, b));

  const Subgroup k = subgroup_from_generators(FinGroup({9}), {{3}});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    const Dist mu = random_grid_dist_on(k, 12, rng);
    for (long long i : mu.support()) CHECK(k.contains_index(i));
  }
}
