#include "heyde/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heyde {

namespace {

// Table of the N-th roots of unity at the group exponent; pairing values are
// looked up by exact exponent so repeated transforms stay cheap.
std::vector<std::complex<double>> root_table(const FinGroup& g) {
  const long long level = g.exponent();
  std::vector<std::complex<double>> roots(level);
  for (long long e = 0; e < level; ++e)
    roots[e] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                   static_cast<double>(level));
  return roots;
}

}  // namespace

Dist::Dist(FinGroup group, std::vector<Rat> mass)
    : group_(std::move(group)), mass_(std::move(mass)) {
  if (static_cast<long long>(mass_.size()) != group_.order())
    throw std::invalid_argument("mass vector must have one entry per element");
  Rat total(0);
  for (const Rat& m : mass_) {
    if (m < Rat(0)) throw std::invalid_argument("negative mass");
    total += m;
  }
  if (total != Rat(1)) throw std::invalid_argument("masses must sum to 1");
}

Dist Dist::point(const FinGroup& g, const Elem& x) {
  if (!g.valid(x)) throw std::invalid_argument("point mass outside the group");
  std::vector<Rat> mass(g.order(), Rat(0));
  mass[g.index_of(x)] = Rat(1);
  return Dist(g, std::move(mass));
}

Dist Dist::uniform(const FinGroup& g) {
  std::vector<Rat> mass(g.order(), Rat(1, g.order()));
  return Dist(g, std::move(mass));
}

std::vector<long long> Dist::support() const {
  std::vector<long long> s;
  for (long long i = 0; i < group_.order(); ++i)
    if (mass_[i] != Rat(0)) s.push_back(i);
  return s;
}

Dist haar_on(const Subgroup& k) {
  std::vector<Rat> mass(k.group.order(), Rat(0));
  for (long long idx : k.members) mass[idx] = Rat(1, k.size());
  return Dist(k.group, std::move(mass));
}

CharFn fourier(const Dist& mu) {
  const FinGroup& g = mu.group();
  const auto roots = root_table(g);
  const auto supp = mu.support();
  std::vector<std::complex<double>> values(g.order());
  std::vector<Elem> supp_elems;
  std::vector<double> supp_mass;
  for (long long i : supp) {
    supp_elems.push_back(g.element(i));
    supp_mass.push_back(to_double(mu.at_index(i)));
  }
  for (long long yi = 0; yi < g.order(); ++yi) {
    const Elem y = g.element(yi);
    std::complex<double> acc = 0;
    for (size_t s = 0; s < supp_elems.size(); ++s)
      acc += supp_mass[s] * roots[g.pairing_exponent(supp_elems[s], y)];
    values[yi] = acc;
  }
  return CharFn{g, std::move(values)};
}

Dist inverse_fourier(const CharFn& phi, double tol) {
  const FinGroup& g = phi.group;
  const long long n = g.order();
  if (static_cast<long long>(phi.values.size()) != n)
    throw std::invalid_argument("characteristic function has wrong size");
  const auto roots = root_table(g);
  std::vector<Rat> mass(n);
  Rat total(0);
  for (long long xi = 0; xi < n; ++xi) {
    const Elem x = g.element(xi);
    std::complex<double> acc = 0;
    for (long long yi = 0; yi < n; ++yi) {
      long long e = g.pairing_exponent(x, g.element(yi));
      acc += std::conj(roots[e]) * phi.values[yi];
    }
    acc /= static_cast<double>(n);
    if (std::fabs(acc.imag()) > tol)
      throw std::invalid_argument("inverse transform is not real-valued");
    if (acc.real() < -tol) throw std::domain_error("not positive-definite");
    double m = std::max(acc.real(), 0.0);
    auto r = rationalize(m, tol);
    if (!r) throw std::invalid_argument("mass is not rational within tolerance");
    mass[xi] = *r;
    total += mass[xi];
  }
  if (total != Rat(1)) {
    // Tiny rounding slack concentrates here; rescale exactly when plausible.
    if (std::fabs(to_double(total) - 1.0) > 8 * tol * static_cast<double>(n))
      throw std::invalid_argument("masses do not sum to 1");
    for (auto& m : mass) m /= total;
  }
  return Dist(g, std::move(mass));
}

Dist convolve(const Dist& mu, const Dist& nu) {
  if (mu.group() != nu.group()) throw std::invalid_argument("convolving over different groups");
  const FinGroup& g = mu.group();
  std::vector<Rat> mass(g.order(), Rat(0));
  for (long long i : mu.support()) {
    const Elem x = g.element(i);
    for (long long j : nu.support()) {
      const Elem z = g.add(x, g.element(j));
      mass[g.index_of(z)] += mu.at_index(i) * nu.at_index(j);
    }
  }
  return Dist(g, std::move(mass));
}

Dist shift(const Dist& mu, const Elem& x) { return convolve(mu, Dist::point(mu.group(), x)); }

Dist reflect(const Dist& mu) {
  const FinGroup& g = mu.group();
  std::vector<Rat> mass(g.order());
  for (long long i = 0; i < g.order(); ++i)
    mass[g.index_of(g.neg(g.element(i)))] = mu.at_index(i);
  return Dist(g, std::move(mass));
}

UnimodularSets unimodular_sets(const Dist& mu, double tol) {
  const FinGroup& g = mu.group();
  const CharFn phi = fourier(mu);
  std::vector<long long> ones, unim;
  for (long long yi = 0; yi < g.order(); ++yi) {
    const std::complex<double>& v = phi.values[yi];
    if (std::abs(v - std::complex<double>(1.0, 0.0)) <= tol) ones.push_back(yi);
    if (std::fabs(std::abs(v) - 1.0) <= tol) unim.push_back(yi);
  }
  const auto is_closed = [&](const std::vector<long long>& set) {
    std::vector<char> in(g.order(), 0);
    for (long long i : set) in[i] = 1;
    for (long long i : set)
      for (long long j : set)
        if (!in[g.index_of(g.add(g.element(i), g.element(j)))]) return false;
    return true;
  };
  if (!is_closed(ones) || !is_closed(unim))
    throw std::runtime_error("unimodular level set is not a subgroup (tolerance misconfigured)");
  UnimodularSets out{Subgroup{g, std::move(ones)}, Subgroup{g, std::move(unim)}, std::nullopt};

  // Lexicographically smallest x acting as mu_hat on the unimodular set.
  for (long long xi = 0; xi < g.order() && !out.witness; ++xi) {
    const Elem x = g.element(xi);
    bool matches = true;
    for (long long yi : out.unimodular.members) {
      const Elem y = g.element(yi);
      if (std::abs(phi.values[yi] - g.pairing(x, y)) > tol) {
        matches = false;
        break;
      }
    }
    if (matches) out.witness = x;
  }
  return out;
}

bool is_nonvanishing(const Dist& mu, double tol) {
  const CharFn phi = fourier(mu);
  for (const auto& v : phi.values)
    if (std::abs(v) <= tol) return false;
  return true;
}

namespace {

// Uniform draw over the compositions of `denom` into `parts` via a random
// stars-and-bars pattern. Avoids std::uniform_int_distribution to keep
// results identical across standard libraries.
std::vector<int> random_composition(int parts, int denom, std::mt19937_64& rng) {
  const auto below = [&rng](long long bound) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(bound));
  };
  const int slots = parts - 1 + denom;
  std::vector<int> bars;  // positions of the parts-1 separators
  // Floyd's algorithm for a uniform (parts-1)-subset of [0, slots).
  std::vector<char> taken(slots, 0);
  for (int i = slots - (parts - 1); i < slots; ++i) {
    long long t = below(i + 1);
    if (taken[t]) t = i;
    taken[t] = 1;
    bars.push_back(static_cast<int>(t));
  }
  std::sort(bars.begin(), bars.end());
  std::vector<int> comp(parts, 0);
  int prev = -1;
  for (int i = 0; i < parts - 1; ++i) {
    comp[i] = bars[i] - prev - 1;
    prev = bars[i];
  }
  comp[parts - 1] = slots - 1 - prev;
  return comp;
}

}  // namespace

Dist random_grid_dist(const FinGroup& g, int denom, std::mt19937_64& rng) {
  if (denom < 1) throw std::invalid_argument("denominator must be >= 1");
  const int n = static_cast<int>(g.order());
  std::vector<int> comp = n == 1 ? std::vector<int>{denom} : random_composition(n, denom, rng);
  std::vector<Rat> mass(n);
  for (int i = 0; i < n; ++i) mass[i] = Rat(comp[i], denom);
  return Dist(g, std::move(mass));
}

Dist random_grid_dist_on(const Subgroup& s, int denom, std::mt19937_64& rng) {
  const int n = static_cast<int>(s.size());
  std::vector<int> comp = n == 1 ? std::vector<int>{denom} : random_composition(n, denom, rng);
  std::vector<Rat> mass(s.group.order(), Rat(0));
  for (int i = 0; i < n; ++i) mass[s.members[i]] = Rat(comp[i], denom);
  return Dist(s.group, std::move(mass));
}

std::vector<Dist> enumerate_grid_dists(const FinGroup& g, int denom) {
  if (denom < 1) throw std::invalid_argument("denominator must be >= 1");
  const int n = static_cast<int>(g.order());
  std::vector<Dist> out;
  std::vector<int> comp(n, 0);
  comp[0] = denom;
  for (;;) {
    std::vector<Rat> mass(n);
    for (int i = 0; i < n; ++i) mass[i] = Rat(comp[i], denom);
    out.emplace_back(g, std::move(mass));
    // Next composition in colex-style order: move one unit from the first
    // nonzero entry (other than the last) rightward.
    int i = 0;
    while (i < n - 1 && comp[i] == 0) ++i;
    if (i == n - 1) break;
    int v = comp[i];
    comp[i] = 0;
    comp[0] = v - 1;
    ++comp[i + 1];
  }
  return out;
}

}  // namespace heyde
