#include "heyde/cyclotomic.hpp"

#include <random>

#include "doctest.h"
#include "heyde/dist.hpp"
#include "test_util.hpp"

using namespace heyde;
using heyde::testing::approx;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("root sums: rational values recognized, irrational rejected") {
  // 1 + z + z^2 = 0 at the cube root of unity.
  std::vector<RatComplex> ones(3, RatComplex(Rat(1)));
  auto v = root_sum_value(3, ones);
  REQUIRE(v.has_value());
  CHECK(v->is_zero());

  // z_4 = i is a complex rational.
  std::vector<RatComplex> i4(4);
  i4[1] = RatComplex(Rat(1));
  v = root_sum_value(4, i4);
  REQUIRE(v.has_value());
  CHECK(*v == RatComplex(Rat(0), Rat(1)));

  // z_3 alone has irrational imaginary part.
  std::vector<RatComplex> z3(3);
  z3[1] = RatComplex(Rat(1));
  CHECK_FALSE(root_sum_value(3, z3).has_value());
}

TEST_CASE("exact character values match the float transform where rational") {
  const FinGroup g({9});
  // Masses constant on unit-multiplication orbits {0}, {3,6}, {1,2,4,5,7,8}
  // have rational transforms.
  std::vector<Rat> mass(9, Rat(1, 18));
  mass[0] = Rat(4, 18);
  mass[3] = mass[6] = Rat(4, 18);
  const Dist mu(g, mass);
  const CharFn phi = fourier(mu);
  for (long long h = 0; h < 9; ++h) {
    auto exact = exact_char_value(g, mu.mass(), g.element(h));
    REQUIRE(exact.has_value());
    CHECK(approx(exact->to_complex(), phi.values[h], 1e-12));
  }

  // A generic point mass has irrational character values.
  const Dist point = Dist::point(g, {1});
  CHECK_FALSE(exact_char_value(g, point.mass(), {1}).has_value());
}

TEST_CASE("exact inverse transform round-trips rational spectra") {
  const FinGroup g({9});
  std::vector<Rat> mass(9, Rat(0));
  mass[0] = Rat(1, 2);
  mass[3] = mass[6] = Rat(1, 8);
  mass[1] = mass[2] = mass[4] = mass[5] = mass[7] = mass[8] = Rat(1, 24);
  std::vector<RatComplex> kappa(9);
  for (long long h = 0; h < 9; ++h) {
    auto v = exact_char_value(g, mass, g.element(h));
    REQUIRE(v.has_value());
    kappa[h] = *v;
  }
  auto inv = exact_inverse_transform(g, kappa);
  REQUIRE(inv.has_value());
  for (long long x = 0; x < 9; ++x) {
    CHECK((*inv)[x].is_real());
    CHECK((*inv)[x].re == mass[x]);
  }
}

TEST_CASE("inverse transform rejects spectra with irrational preimages") {
  const FinGroup g({3});
  // Hermitian but not the transform of any rational measure.
  std::vector<RatComplex> kappa{RatComplex(Rat(1)), RatComplex(Rat(1, 2)),
                                RatComplex(Rat(1, 3))};
  CHECK_FALSE(exact_inverse_transform(g, kappa).has_value());
}
