#include "heyde/rg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "heyde/cyclotomic.hpp"
#include "heyde/symmetry.hpp"

namespace heyde {

RGCharFn::RGCharFn(FinGroup g, std::vector<Rat> quad, std::vector<Rat> lin,
                   std::vector<RatComplex> kappa)
    : group_(std::move(g)), quad_(std::move(quad)), lin_(std::move(lin)), kappa_(std::move(kappa)) {
  const long long n = group_.order();
  if (static_cast<long long>(quad_.size()) != n || static_cast<long long>(lin_.size()) != n ||
      static_cast<long long>(kappa_.size()) != n)
    throw std::invalid_argument("coefficient vectors must have one entry per character");
  if (!(kappa_[0] == RatComplex(Rat(1))))
    throw std::invalid_argument("kappa at the zero character must be 1");
  for (long long h = 0; h < n; ++h) {
    if (quad_[h] > Rat(0)) throw std::invalid_argument("quadratic coefficients must be <= 0");
    if (kappa_[h].norm2() > Rat(1)) throw std::invalid_argument("|kappa| must be <= 1");
    // f(-s, -h) == conj(f(s, h)): negating both s and h fixes the linear
    // coefficient, so lin is symmetric (not antisymmetric) in h.
    const long long nh = group_.index_of(group_.neg(group_.element(h)));
    if (quad_[nh] != quad_[h] || lin_[nh] != lin_[h] || !(kappa_[nh] == kappa_[h].conj()))
      throw std::invalid_argument("coefficients violate hermitian symmetry");
  }
}

std::complex<double> RGCharFn::eval(double s, long long h_index) const {
  const double q = to_double(quad_[h_index]);
  const double l = to_double(lin_[h_index]);
  return kappa_[h_index].to_complex() * std::exp(std::complex<double>(q * s * s, l * s));
}

void RGInstance::validate() const {
  if (f1.group() != f2.group() || alphaG.group() != f1.group())
    throw std::invalid_argument("instance parts live on different finite factors");
  if (a == Rat(0)) throw std::invalid_argument("real coefficient must be nonzero");
  if (!is_automorphism(alphaG))
    throw std::invalid_argument("finite part is not an automorphism");
}

bool rg_symmetry(const RGInstance& inst, RGMismatch* first_failure) {
  inst.validate();
  const FinGroup& g = inst.f1.group();
  const long long n = g.order();
  const GroupMap t = adjoint(inst.alphaG);
  const Rat& a = inst.a;
  const Rat a2 = a * a;

  const auto& q1 = inst.f1.quad();
  const auto& q2 = inst.f2.quad();
  const auto& l1 = inst.f1.lin();
  const auto& l2 = inst.f2.lin();
  const auto& k1 = inst.f1.kappa();
  const auto& k2 = inst.f2.kappa();

  const auto fail = [&](long long h1, long long h2, const char* what) {
    if (first_failure) *first_failure = RGMismatch{h1, h2, what};
    return false;
  };

  for (long long h1 = 0; h1 < n; ++h1) {
    const Elem e1 = g.element(h1);
    for (long long h2 = 0; h2 < n; ++h2) {
      const Elem e2 = g.element(h2);
      const Elem te2 = t.apply(e2);
      const long long ia = g.index_of(g.add(e1, e2));
      const long long ib = g.index_of(g.add(e1, te2));
      const long long ic = g.index_of(g.sub(e1, e2));
      const long long id = g.index_of(g.sub(e1, te2));

      if (q1[ia] + q2[ib] != q1[ic] + q2[id]) return fail(h1, h2, "s1^2");
      if (q1[ia] + a2 * q2[ib] != q1[ic] + a2 * q2[id]) return fail(h1, h2, "s2^2");
      if (q1[ia] + a * q2[ib] != -(q1[ic] + a * q2[id])) return fail(h1, h2, "s1*s2");
      if (l1[ia] + l2[ib] != l1[ic] + l2[id]) return fail(h1, h2, "s1");
      if (l1[ia] + a * l2[ib] != -(l1[ic] + a * l2[id])) return fail(h1, h2, "s2");
      if (!(k1[ia] * k2[ib] == k1[ic] * k2[id])) return fail(h1, h2, "constant");
    }
  }
  return true;
}

bool rg_symmetry(const RGInstance& inst) { return rg_symmetry(inst, nullptr); }

namespace {

// Exact inverse transform of a kappa vector into a probability distribution
// on G; nullopt when the preimage is irrational, non-real or signed.
std::optional<Dist> marginal_distribution(const FinGroup& g,
                                          const std::vector<RatComplex>& kappa) {
  auto inv = exact_inverse_transform(g, kappa);
  if (!inv) return std::nullopt;
  std::vector<Rat> mass(g.order());
  for (long long i = 0; i < g.order(); ++i) {
    if (!(*inv)[i].is_real() || (*inv)[i].re < Rat(0)) return std::nullopt;
    mass[i] = (*inv)[i].re;
  }
  return Dist(g, std::move(mass));  // kappa[0] == 1 makes the total exactly 1
}

}  // namespace

std::optional<RGDecomposition> rg_decompose(const RGInstance& inst) {
  inst.validate();
  for (const auto* f : {&inst.f1, &inst.f2})
    for (const RatComplex& k : f->kappa())
      if (k.is_zero())
        throw std::invalid_argument("characteristic function vanishes at a character");
  if (!rg_symmetry(inst)) throw std::invalid_argument("instance is not symmetric");

  const FinGroup& g = inst.f1.group();
  const long long n = g.order();
  const Subgroup k = kernel(plus_identity(inst.alphaG, +1));

  auto m1 = marginal_distribution(g, inst.f1.kappa());
  auto m2 = marginal_distribution(g, inst.f2.kappa());
  if (!m1 || !m2) return std::nullopt;

  if (inst.a == Rat(-1)) {
    // Shifts of a single distribution supported in R x K: matching Gaussian
    // data per character and finite marginals that are kernel shifts of a
    // common distribution.
    const Rat t1 = inst.f1.lin()[0];
    const Rat t2 = inst.f2.lin()[0];
    for (long long h = 0; h < n; ++h) {
      if (inst.f1.quad()[h] != inst.f2.quad()[h]) return std::nullopt;
      if (inst.f1.lin()[h] - t1 != inst.f2.lin()[h] - t2) return std::nullopt;
    }
    // Constancy on annihilator cosets: the function depends on the character
    // only through its restriction to K.
    const Subgroup ann = annihilator(k);
    for (long long h = 0; h < n; ++h) {
      const Elem eh = g.element(h);
      for (long long d : ann.members) {
        const long long hd = g.index_of(g.add(eh, g.element(d)));
        if (inst.f1.quad()[hd] != inst.f1.quad()[h]) return std::nullopt;
        if (inst.f1.lin()[hd] != inst.f1.lin()[h]) return std::nullopt;
      }
    }
    auto match = match_kernel_shifts(*m1, *m2, k);
    if (!match) return std::nullopt;
    RGDecomposition out;
    out.real_kernel_branch = true;
    out.omega = std::move(match->omega);
    out.x1 = RGShift{t1, std::move(match->x1)};
    out.x2 = RGShift{t2, std::move(match->x2)};
    out.kernel = k;
    return out;
  }

  // Gaussian branch: the quadratic and linear data must be flat in the
  // character, the finite marginals must be kernel shifts of one omega.
  for (long long h = 1; h < n; ++h) {
    if (inst.f1.quad()[h] != inst.f1.quad()[0]) return std::nullopt;
    if (inst.f2.quad()[h] != inst.f2.quad()[0]) return std::nullopt;
    if (inst.f1.lin()[h] != inst.f1.lin()[0]) return std::nullopt;
    if (inst.f2.lin()[h] != inst.f2.lin()[0]) return std::nullopt;
  }
  auto match = match_kernel_shifts(*m1, *m2, k);
  if (!match) return std::nullopt;

  RGDecomposition out;
  out.real_kernel_branch = false;
  out.sigma1 = -inst.f1.quad()[0];
  out.sigma2 = -inst.f2.quad()[0];
  out.omega = std::move(match->omega);
  out.x1 = RGShift{inst.f1.lin()[0], std::move(match->x1)};
  out.x2 = RGShift{inst.f2.lin()[0], std::move(match->x2)};
  out.kernel = k;
  return out;
}

RGInstance make_remark_family(const Rat& sigma1, const Rat& sigma1p, const RatComplex& kappa1,
                              const Rat& a) {
  if (a >= Rat(0)) throw std::invalid_argument("constraint violated: a < 0");
  if (a == Rat(-1)) throw std::invalid_argument("constraint violated: a != -1");
  if (sigma1 <= Rat(0)) throw std::invalid_argument("constraint violated: 0 < sigma1");
  if (sigma1p <= Rat(0) || sigma1p >= sigma1)
    throw std::invalid_argument("constraint violated: 0 < sigma1' < sigma1");
  if (kappa1.is_zero()) throw std::invalid_argument("constraint violated: kappa1 != 0");
  if (!kappa1.is_real())
    throw std::invalid_argument("constraint violated: kappa1 real (hermitian symmetry on Z(2))");
  if (kappa1.norm2() > sigma1p / sigma1)
    throw std::invalid_argument("constraint violated: |kappa1|^2 <= sigma1'/sigma1");

  const FinGroup z2({2});
  const Rat sigma2 = -sigma1 / a;
  const Rat sigma2p = -sigma1p / a;
  const RatComplex kappa2 = kappa1;  // shares the bound sigma2'/sigma2 == sigma1'/sigma1

  RGCharFn f1(z2, {-sigma1, -sigma1p}, {Rat(0), Rat(0)}, {RatComplex(Rat(1)), kappa1});
  RGCharFn f2(z2, {-sigma2, -sigma2p}, {Rat(0), Rat(0)}, {RatComplex(Rat(1)), kappa2});
  return RGInstance{std::move(f1), std::move(f2), a, GroupMap::identity(z2)};
}

bool rg_positive_definite_check(const RGCharFn& f, const DensityGrid& grid, double tol,
                                double* min_density) {
  const FinGroup& g = f.group();
  const long long n = g.order();
  if (grid.points < 2) throw std::invalid_argument("grid needs at least two points");
  for (long long h = 0; h < n; ++h)
    if (f.quad()[h] >= Rat(0))
      throw std::domain_error("not integrable: quadratic coefficient must be negative");

  // Per character: kappa_h exp{q s^2 + i l s} inverts to the Gaussian
  // kappa_h * exp(-(t - l)^2 / (4|q|)) / (2 sqrt(pi |q|)).
  std::vector<double> amp(n), center(n), spread(n);
  for (long long h = 0; h < n; ++h) {
    const double q = -to_double(f.quad()[h]);
    amp[h] = 0.5 / std::sqrt(std::numbers::pi * q);
    center[h] = to_double(f.lin()[h]);
    spread[h] = 4.0 * q;
  }
  // coef[x][h] = Re(conj((x,h)) * kappa_h); hermitian symmetry makes the
  // density real.
  std::vector<double> coef(n * n);
  for (long long xi = 0; xi < n; ++xi) {
    const Elem x = g.element(xi);
    for (long long h = 0; h < n; ++h) {
      const auto v = std::conj(g.pairing(x, g.element(h))) * f.kappa()[h].to_complex();
      coef[xi * n + h] = v.real();
    }
  }

  double min_seen = std::numeric_limits<double>::infinity();
  const double dt = (grid.t_max - grid.t_min) / (grid.points - 1);
  std::vector<double> gauss(n);
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid.t_min + dt * i;
    for (long long h = 0; h < n; ++h) {
      const double d = t - center[h];
      gauss[h] = amp[h] * std::exp(-d * d / spread[h]);
    }
    for (long long xi = 0; xi < n; ++xi) {
      double dens = 0;
      for (long long h = 0; h < n; ++h) dens += coef[xi * n + h] * gauss[h];
      min_seen = std::min(min_seen, dens / static_cast<double>(n));
    }
  }
  if (min_density) *min_density = min_seen;
  return min_seen >= -tol;
}

RGCharFn gaussian_times_dist(const Rat& sigma, const Dist& omega) {
  if (sigma < Rat(0)) throw std::invalid_argument("sigma must be >= 0");
  const FinGroup& g = omega.group();
  const long long n = g.order();
  std::vector<Rat> quad(n, -sigma), lin(n, Rat(0));
  std::vector<RatComplex> kappa(n);
  for (long long h = 0; h < n; ++h) {
    auto v = exact_char_value(g, omega.mass(), g.element(h));
    if (!v)
      throw std::invalid_argument(
          "distribution has an irrational transform; not representable exactly");
    kappa[h] = *v;
  }
  return RGCharFn(g, std::move(quad), std::move(lin), std::move(kappa));
}

RGCharFn rg_shift(const RGCharFn& f, const Rat& t, const Elem& g_part) {
  const FinGroup& g = f.group();
  if (!g.valid(g_part)) throw std::invalid_argument("shift outside the finite factor");
  const long long level = g.exponent();
  std::vector<Rat> lin = f.lin();
  std::vector<RatComplex> kappa = f.kappa();
  for (long long h = 0; h < g.order(); ++h) {
    lin[h] += t;
    const long long e = g.pairing_exponent(g_part, g.element(h));
    if (4 * e % level != 0)
      throw std::invalid_argument("finite shift has an irrational pairing value");
    switch (static_cast<int>(4 * e / level % 4)) {
      case 0: break;
      case 1: kappa[h] = kappa[h] * RatComplex(Rat(0), Rat(1)); break;
      case 2: kappa[h] = -kappa[h]; break;
      case 3: kappa[h] = kappa[h] * RatComplex(Rat(0), Rat(-1)); break;
    }
  }
  return RGCharFn(g, f.quad(), std::move(lin), std::move(kappa));
}

}  // namespace heyde
