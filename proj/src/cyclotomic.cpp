#include "heyde/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace heyde {

namespace {

// Exact division of integer polynomials, constant term first. The divisor is
// monic up to sign here (cyclotomic factors), so plain long long arithmetic
// stays exact.
std::vector<long long> poly_div_exact(const std::vector<long long>& num,
                                      const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  const long long lead = den.back();
  for (size_t i = quot.size(); i-- > 0;) {
    long long c = rem[i + den.size() - 1];
    if (c % lead != 0) throw std::logic_error("inexact polynomial division");
    quot[i] = c / lead;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= quot[i] * den[j];
  }
  for (long long c : rem)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<long long>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  std::function<std::vector<long long>(int)> phi = [&](int m) -> std::vector<long long> {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) p = poly_div_exact(p, phi(d));
    cache[m] = p;
    return p;
  };
  return phi(n);
}

std::optional<RatComplex> root_sum_value(int level, const std::vector<RatComplex>& coeffs) {
  if (static_cast<int>(coeffs.size()) != level)
    throw std::invalid_argument("coefficient vector must have one entry per power");

  // Work in Q(zeta_m) with m = lcm(level, 4) so that i itself is a root
  // power and the coefficients become plain rationals:
  //   (a + ib) * zeta_level^e  =  a * zeta_m^(e*s) + b * zeta_m^(e*s + m/4).
  const int m = std::lcm(level, 4);
  const int scale = m / level;
  const int iexp = m / 4;
  std::vector<Rat> poly(m, Rat(0));
  for (int e = 0; e < level; ++e) {
    if (coeffs[e].re != Rat(0)) poly[e * scale % m] += coeffs[e].re;
    if (coeffs[e].im != Rat(0)) poly[(e * scale + iexp) % m] += coeffs[e].im;
  }

  const std::vector<long long> phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;  // totient(m), >= 2
  const auto reduce = [&](std::vector<Rat>& p) {
    for (size_t i = p.size(); i-- > deg;) {
      const Rat c = p[i];
      if (c == Rat(0)) continue;
      for (size_t j = 0; j < phi.size(); ++j) p[i - deg + j] -= c * Rat(phi[j]);
    }
    p.resize(deg);
  };
  reduce(poly);

  // The value lies in Q + iQ exactly when the residue is a rational
  // combination of 1 and the residue of zeta_m^(m/4) = i.
  std::vector<Rat> irep(iexp + 1, Rat(0));
  irep[iexp] = Rat(1);
  if (irep.size() <= deg) irep.resize(deg, Rat(0));
  reduce(irep);

  Rat im(0);
  for (size_t t = 1; t < deg; ++t)
    if (irep[t] != Rat(0)) {
      im = poly[t] / irep[t];
      break;
    }
  for (size_t t = 1; t < deg; ++t)
    if (poly[t] != im * irep[t]) return std::nullopt;  // irrational value
  return RatComplex(poly[0] - im * irep[0], im);
}

std::optional<RatComplex> exact_char_value(const FinGroup& g, const std::vector<Rat>& mass,
                                           const Elem& y) {
  const int level = static_cast<int>(g.exponent());
  std::vector<RatComplex> coeffs(level);
  for (long long idx = 0; idx < g.order(); ++idx) {
    if (mass[idx] == Rat(0)) continue;
    long long e = g.pairing_exponent(g.element(idx), y);
    coeffs[e] = coeffs[e] + RatComplex(mass[idx]);
  }
  return root_sum_value(level, coeffs);
}

std::optional<std::vector<RatComplex>> exact_inverse_transform(
    const FinGroup& g, const std::vector<RatComplex>& kappa) {
  if (static_cast<long long>(kappa.size()) != g.order())
    throw std::invalid_argument("one value per character required");
  const int level = static_cast<int>(g.exponent());
  const Rat inv_n(1, g.order());
  std::vector<RatComplex> out(g.order());
  for (long long xi = 0; xi < g.order(); ++xi) {
    const Elem x = g.element(xi);
    std::vector<RatComplex> coeffs(level);
    for (long long yi = 0; yi < g.order(); ++yi) {
      if (kappa[yi].is_zero()) continue;
      long long e = g.pairing_exponent(x, g.element(yi));
      long long conj_e = e == 0 ? 0 : level - e;
      coeffs[conj_e] = coeffs[conj_e] + kappa[yi];
    }
    auto v = root_sum_value(level, coeffs);
    if (!v) return std::nullopt;
    out[xi] = RatComplex(v->re * inv_n, v->im * inv_n);
  }
  return out;
}

}  // namespace heyde
