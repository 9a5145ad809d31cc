// Conditional symmetry of linear forms on finite Abelian groups.
//
// For independent random variables xi_1, xi_2 with distributions mu1, mu2 and
// an automorphism alpha, this module decides whether the conditional
// distribution of xi_1 + alpha(xi_2) given xi_1 + xi_2 is symmetric, and when
// it is, recovers the structural decomposition mu_j = omega * E_{x_j} with
// omega supported in Ker(I + alpha).
//
// Two independent criteria are implemented on purpose: the exact joint-mass
// check and the characteristic-function equation
//   mu1^(u+v) * mu2^(u + t(v)) == mu1^(u-v) * mu2^(u - t(v))   (t = adjoint)
// over all character pairs. Their agreement is a tested invariant, not an
// assumption.

#ifndef HEYDE_SYMMETRY_HPP_
#define HEYDE_SYMMETRY_HPP_

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "heyde/dist.hpp"
#include "heyde/morphism.hpp"

namespace heyde {

struct SymmetryInstance {
  FinGroup group;
  GroupMap alpha;  // must be an automorphism
  Dist mu1;
  Dist mu2;

  // Throws std::invalid_argument on mismatched groups or non-automorphism.
  void validate() const;
};

// Exact rational check on the joint law of (xi_1 + xi_2, xi_1 + alpha(xi_2)).
bool symmetry_direct(const SymmetryInstance& inst);

// Characteristic-function equation over all (u, v), to tolerance.
bool symmetry_fourier(const SymmetryInstance& inst, double tol = kDefaultTol);

// Same equation with the transforms supplied by the caller; lets exhaustive
// scans reuse cached transforms.
bool charfn_equation_holds(const GroupMap& alpha, const CharFn& phi1, const CharFn& phi2,
                           double tol = kDefaultTol);

// Image of (I + adjoint(alpha)) on the character group: the subgroup on
// which symmetry forces both characteristic functions to be unimodular.
Subgroup forced_unimodular_subgroup(const GroupMap& alpha);

// |mu_hat_j| == 1 within tol on forced_unimodular_subgroup(alpha), j = 1, 2.
bool unimodular_on_forced_subgroup(const SymmetryInstance& inst, double tol = kDefaultTol);

struct Decomposition {
  Dist omega;        // supported in `kernel`
  Elem x1;           // mu1 == omega * E_{x1}, exactly
  Elem x2;           // mu2 == omega * E_{x2}, exactly
  Subgroup kernel;   // Ker(I + alpha)
  // Whether the canonical shifts happen to satisfy x1 + alpha(x2) == 0.
  // Recorded, not required: the decomposition is unique only modulo
  // kernel shifts.
  bool shifts_balanced = false;
};

// Searches the support coset s1 + K for a shift x1 with
// support(mu1 * E_{-x1}) inside K = Ker(I + alpha), then matches mu2 against
// kernel shifts of the same omega. Shifts are canonicalized to the
// lexicographically smallest valid (x1, then x2). Returns nullopt when no
// decomposition exists (hypothesis violation or theorem counterexample).
std::optional<Decomposition> decompose(const SymmetryInstance& inst);

// The coset search itself, independent of any automorphism: the
// lexicographically smallest (x1, then x2) with mu1 == omega * E_{x1},
// mu2 == omega * E_{x2} and support(omega) inside k.
struct KernelShiftMatch {
  Dist omega;
  Elem x1;
  Elem x2;
};
std::optional<KernelShiftMatch> match_kernel_shifts(const Dist& mu1, const Dist& mu2,
                                                    const Subgroup& k);

// Functions on the character group, indexed like group elements.
using GroupFn = std::vector<std::complex<double>>;

// (step difference)  P -> P(. + step) - P(.)
GroupFn finite_difference(const FinGroup& g, const Elem& step, const GroupFn& p);

// True iff the n-fold difference with every step vanishes (within tol);
// on a finite group this forces P to be constant.
bool nth_differences_vanish(const FinGroup& g, const GroupFn& p, int n,
                            double tol = kDefaultTol);

// Executable transcript of the finite-difference solution of the symmetry
// equation for P = log|mu1_hat|^2, Q = log|mu2_hat|^2 in the reduced case
// where I - alpha is invertible. Verifies the base equation, the three
// difference identities obtained from the successive substitutions, and the
// conclusion that P and Q vanish on the forced subgroup.
struct DifferenceReductionReport {
  bool applicable = false;       // preconditions met
  std::string reject_reason;

  double residual_base = 0;      // P(u+v)+Q(u+tv)-P(u-v)-Q(u-tv)
  double residual_step1 = 0;     // after the first substitution
  double residual_step2 = 0;     // after the second
  double residual_step3 = 0;     // triple difference of P alone
  double residual_cube_p = 0;    // max |D_h^3 P| over h in forced subgroup
  double residual_cube_q = 0;
  double max_p_on_subgroup = 0;  // max |P| on the forced subgroup
  double max_q_on_subgroup = 0;

  // Index of the first failing identity (1..3), 0 if all hold.
  int failing_step(double tol = kDefaultTol) const;
  bool identities_hold(double tol = kDefaultTol) const { return failing_step(tol) == 0; }
  bool concluded(double tol = kDefaultTol) const;
  bool ok(double tol = kDefaultTol) const {
    return applicable && identities_hold(tol) && concluded(tol);
  }
};

DifferenceReductionReport difference_reduction(const SymmetryInstance& inst,
                                               double tol = kDefaultTol);

}  // namespace heyde

#endif  // HEYDE_SYMMETRY_HPP_
