// Exact arithmetic with roots of unity.
//
// A sum  c_0 + c_1*zeta + ... + c_{L-1}*zeta^{L-1}  (zeta the primitive L-th
// root of unity, c_e complex rationals) lies in Q + iQ exactly when its
// residue mod the L-th cyclotomic polynomial is a constant; the powers
// 1..zeta^{phi(L)-1} are a Q-basis of Q(zeta). This gives an exact decision
// procedure for Fourier sums of rational measures without ever touching
// floats.

#ifndef HEYDE_CYCLOTOMIC_HPP_
#define HEYDE_CYCLOTOMIC_HPP_

#include <optional>
#include <vector>

#include "heyde/group.hpp"
#include "heyde/rational.hpp"

namespace heyde {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

// Value of sum_e coeffs[e] * zeta_level^e when it is a complex rational;
// nullopt when the value is irrational. coeffs has size `level`.
std::optional<RatComplex> root_sum_value(int level, const std::vector<RatComplex>& coeffs);

// Exact characteristic value sum_x mass[x] * pairing(x, y) of a rational
// (signed) measure, when that value is a complex rational.
std::optional<RatComplex> exact_char_value(const FinGroup& g, const std::vector<Rat>& mass,
                                           const Elem& y);

// Exact inverse transform (1/N) sum_y conj(pairing(x, y)) * kappa[y] of a
// complex-rational character vector. Returns nullopt when some value is
// irrational, i.e. kappa is not the transform of a rational signed measure.
std::optional<std::vector<RatComplex>> exact_inverse_transform(
    const FinGroup& g, const std::vector<RatComplex>& kappa);

}  // namespace heyde

#endif  // HEYDE_CYCLOTOMIC_HPP_
