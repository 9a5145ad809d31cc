// Shared helpers for the unit suites.

#ifndef HEYDE_TEST_UTIL_HPP_
#define HEYDE_TEST_UTIL_HPP_

#include <complex>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "heyde/dist.hpp"
#include "heyde/group.hpp"

namespace heyde::testing {

inline bool approx(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

// Small groups the exhaustive properties run over (orders <= 81).
inline std::vector<FinGroup> small_groups() {
  return {FinGroup({3}),    FinGroup({4}),    FinGroup({5}),    FinGroup({6}),
          FinGroup({9}),    FinGroup({15}),   FinGroup({2, 4}), FinGroup({3, 3}),
          FinGroup({3, 9}), FinGroup({2, 3})};
}

inline std::vector<FinGroup> odd_groups() {
  return {FinGroup({3}), FinGroup({5}), FinGroup({9}), FinGroup({15}), FinGroup({3, 3})};
}

// Full subgroup lattice by breadth-first closure; fine at these orders.
inline std::vector<Subgroup> all_subgroups(const FinGroup& g) {
  std::set<std::vector<long long>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> queue{trivial_subgroup(g)};
  seen.insert(queue.front().members);
  while (!queue.empty()) {
    Subgroup s = std::move(queue.back());
    queue.pop_back();
    for (long long e = 0; e < g.order(); ++e) {
      if (s.contains_index(e)) continue;
      std::vector<long long> seed = s.members;
      seed.push_back(e);
      Subgroup bigger = subgroup_closure(g, std::move(seed));
      if (seen.insert(bigger.members).second) queue.push_back(bigger);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Nonvanishing random grid distribution, by rejection.
inline Dist random_nonvanishing(const FinGroup& g, int denom, std::mt19937_64& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Dist mu = random_grid_dist(g, denom, rng);
    if (is_nonvanishing(mu)) return mu;
  }
  return Dist::point(g, g.zero());
}

// Distribution supported in `carrier` with masses constant on the orbits of
// multiplication by units mod the exponent; such distributions have rational
// transforms, so they embed exactly into rational characteristic data.
inline Dist orbit_symmetric_dist(const FinGroup& g, const Subgroup& carrier,
                                 std::mt19937_64& rng) {
  std::vector<std::vector<long long>> orbits;
  std::vector<char> seen(g.order(), 0);
  for (long long i : carrier.members) {
    if (seen[i]) continue;
    std::vector<long long> orbit;
    for (long long u = 1; u < g.exponent(); ++u) {
      if (std::gcd(u, g.exponent()) != 1) continue;
      long long j = g.index_of(g.scale(u, g.element(i)));
      if (!seen[j]) {
        seen[j] = 1;
        orbit.push_back(j);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::vector<Rat> mass(g.order(), Rat(0));
  long long total = 0;
  std::vector<long long> weights(orbits.size());
  for (size_t k = 0; k < orbits.size(); ++k) {
    weights[k] = 1 + static_cast<long long>(rng() % 6);
    total += weights[k] * static_cast<long long>(orbits[k].size());
  }
  for (size_t k = 0; k < orbits.size(); ++k)
    for (long long j : orbits[k]) mass[j] = Rat(weights[k], total);
  return Dist(g, std::move(mass));
}

// Same, rejecting draws whose transform vanishes somewhere (equal orbit
// weights can cancel).
inline Dist orbit_symmetric_nonvanishing(const FinGroup& g, const Subgroup& carrier,
                                         std::mt19937_64& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Dist mu = orbit_symmetric_dist(g, carrier, rng);
    if (is_nonvanishing(mu)) return mu;
  }
  return Dist::point(g, g.zero());
}

}  // namespace heyde::testing

#endif  // HEYDE_TEST_UTIL_HPP_
