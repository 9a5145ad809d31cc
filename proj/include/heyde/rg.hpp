// The real-line extension: distributions on R x G through Gaussian-type
// characteristic functions.
//
// A characteristic function on R x G is stored per character h of the finite
// factor as  f(s, h) = kappa_h * exp{quad_h * s^2 + i * lin_h * s}  with
// exact rational coefficients. Symmetry of the conditional distribution
// becomes an exact coefficient-matching problem in (s1, s2); decomposition
// and the order-2 counterexample family operate on the same data.

#ifndef HEYDE_RG_HPP_
#define HEYDE_RG_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "heyde/dist.hpp"
#include "heyde/morphism.hpp"
#include "heyde/rational.hpp"

namespace heyde {

class RGCharFn {
 public:
  RGCharFn() = default;
  // Throws std::invalid_argument when the data violates the invariants:
  // kappa_0 == 1, quad <= 0, |kappa| <= 1, and hermitian symmetry
  // (kappa_{-h} = conj(kappa_h), quad_{-h} = quad_h, lin_{-h} = lin_h; both
  // s and h flip in f(-y) = conj(f(y)), leaving the linear term symmetric).
  RGCharFn(FinGroup g, std::vector<Rat> quad, std::vector<Rat> lin,
           std::vector<RatComplex> kappa);

  const FinGroup& group() const { return group_; }
  const std::vector<Rat>& quad() const { return quad_; }
  const std::vector<Rat>& lin() const { return lin_; }
  const std::vector<RatComplex>& kappa() const { return kappa_; }

  std::complex<double> eval(double s, long long h_index) const;

  bool operator==(const RGCharFn&) const = default;

 private:
  FinGroup group_;  // finite factor G; characters share its coordinates
  std::vector<Rat> quad_;
  std::vector<Rat> lin_;
  std::vector<RatComplex> kappa_;
};

struct RGInstance {
  RGCharFn f1;
  RGCharFn f2;
  Rat a;            // real part of the automorphism, nonzero
  GroupMap alphaG;  // finite part, an automorphism of G

  void validate() const;
};

// Exact coefficient matching of
//   f1(s1+s2, h1+h2) f2(s1+a s2, h1+t(h2)) == f1(s1-s2, h1-h2) f2(s1-a s2, h1-t(h2))
// over all character pairs (h1, h2), t = adjoint(alphaG): rational equality
// of the s1^2, s2^2, s1 s2, s1, s2 exponent coefficients and of the constant
// factors (compared multiplicatively, which absorbs the 2*pi*i ambiguity).
bool rg_symmetry(const RGInstance& inst);

// One failing coefficient comparison, for reporting.
struct RGMismatch {
  long long h1 = 0, h2 = 0;  // character indices
  const char* what = "";     // which coefficient disagreed
};
bool rg_symmetry(const RGInstance& inst, RGMismatch* first_failure);

// Shift component on R x G.
struct RGShift {
  Rat t;   // real coordinate
  Elem g;  // finite coordinate
};

struct RGDecomposition {
  // a != -1: f_j(s,h) = exp{-sigma_j s^2 + i t_j s} * (g_j, h) * omega_hat(h)
  // with omega supported in Ker(I + alphaG).
  // a == -1: mu_j are shifts of one distribution supported in R x K; sigma_j
  // are meaningless and omega is the finite-factor marginal of that
  // distribution.
  bool real_kernel_branch = false;
  Rat sigma1{0};
  Rat sigma2{0};
  Dist omega;  // on G, supported in the kernel
  RGShift x1;
  RGShift x2;
  Subgroup kernel;  // Ker(I + alphaG)
};

// Structural inversion of the theorem's conclusion. Returns nullopt when the
// characteristic functions admit no such representation ("irreducible", the
// situation the order-2 counterexample family realizes). Preconditions
// (rg_symmetry true, kappa nonvanishing) are enforced with
// std::invalid_argument.
std::optional<RGDecomposition> rg_decompose(const RGInstance& inst);

// The order-2 counterexample family on R x Z(2): real-valued characteristic
// functions with distinct Gaussian exponents on the two characters,
//   f_j(s,0) = exp{-sigma_j s^2},   f_j(s,1) = kappa_j exp{-sigma_j' s^2},
// subject to 0 < sigma_j' < sigma_j and |kappa_j|^2 <= sigma_j'/sigma_j.
// The partner coefficients are derived from sigma2 = -sigma1/a,
// sigma2' = -sigma1p/a, kappa2 = kappa1. Throws std::invalid_argument naming
// the violated constraint (requires a < 0, a != -1).
RGInstance make_remark_family(const Rat& sigma1, const Rat& sigma1p,
                              const RatComplex& kappa1, const Rat& a);

struct DensityGrid {
  double t_min = -10.0;
  double t_max = 10.0;
  int points = 4001;
};

// Numerically inverts f per character into a density on R x G and scans the
// grid; true iff the minimum is >= -tol. Requires quad_h < 0 for every h
// (integrable case); throws std::domain_error otherwise. min_density, when
// given, receives the scanned minimum.
bool rg_positive_definite_check(const RGCharFn& f, const DensityGrid& grid = {},
                                double tol = kDefaultTol, double* min_density = nullptr);

// Builds exp{-sigma s^2} * omega_hat(h) exactly. Requires omega to have a
// rational transform (e.g. masses constant on unit-multiplication orbits);
// throws std::invalid_argument otherwise.
RGCharFn gaussian_times_dist(const Rat& sigma, const Dist& omega);

// Convolution with E_{(t, g)}: multiplies the characteristic function by
// exp{i t s} * (g, h). Requires the pairing values (g, h) to be rational
// (always true when 2g = 0); throws std::invalid_argument otherwise.
RGCharFn rg_shift(const RGCharFn& f, const Rat& t, const Elem& g);

}  // namespace heyde

#endif  // HEYDE_RG_HPP_
