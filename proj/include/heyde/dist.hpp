// Exact probability distributions on finite Abelian groups and their
// characteristic functions.
//
// Masses are exact rationals; characteristic values are complex doubles
// compared against kDefaultTol. Probability-side identities (convolution,
// support, symmetry) therefore hold exactly, while character sums, which are
// irrational in general, are checked to tolerance.

#ifndef HEYDE_DIST_HPP_
#define HEYDE_DIST_HPP_

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "heyde/group.hpp"
#include "heyde/rational.hpp"

namespace heyde {

class Dist {
 public:
  Dist() = default;
  // Throws std::invalid_argument unless masses are >= 0 and sum to 1.
  Dist(FinGroup group, std::vector<Rat> mass);

  static Dist point(const FinGroup& g, const Elem& x);  // unit mass at x
  static Dist uniform(const FinGroup& g);

  const FinGroup& group() const { return group_; }
  const std::vector<Rat>& mass() const { return mass_; }
  const Rat& at(const Elem& x) const { return mass_[group_.index_of(x)]; }
  const Rat& at_index(long long i) const { return mass_[i]; }

  std::vector<long long> support() const;

  bool operator==(const Dist&) const = default;

 private:
  FinGroup group_;
  std::vector<Rat> mass_;
};

struct CharFn {
  FinGroup group;  // character side, same coordinates
  std::vector<std::complex<double>> values;

  const std::complex<double>& at(const Elem& y) const { return values[group.index_of(y)]; }
};

// Uniform distribution on a subgroup; idempotent under convolution.
Dist haar_on(const Subgroup& k);

// value(y) = sum_x mass(x) * pairing(x, y).
CharFn fourier(const Dist& mu);

// mass(x) = (1/N) sum_y conj(pairing(x, y)) * value(y), each mass recovered
// as an exact rational within tol. Throws std::domain_error when a mass is
// negative beyond tol ("not positive-definite") and std::invalid_argument
// when values cannot be rationalized.
Dist inverse_fourier(const CharFn& phi, double tol = kDefaultTol);

Dist convolve(const Dist& mu, const Dist& nu);
Dist shift(const Dist& mu, const Elem& x);  // mu * E_x
Dist reflect(const Dist& mu);               // mass(x) -> mass(-x)

// E: characters where the transform equals 1; B: where it has modulus 1.
struct UnimodularSets {
  Subgroup fixed_one;    // {y : mu_hat(y) == 1}
  Subgroup unimodular;   // {y : |mu_hat(y)| == 1}
  std::optional<Elem> witness;  // x with mu_hat(y) == pairing(x, y) on `unimodular`
};

// Both sets are verified to be closed under addition; failure of that check
// signals a tolerance misconfiguration and throws std::runtime_error.
UnimodularSets unimodular_sets(const Dist& mu, double tol = kDefaultTol);

bool is_nonvanishing(const Dist& mu, double tol = kDefaultTol);

// Deterministic draws used by fuzzing and the random suites. A grid
// distribution has masses k_x / denom with nonnegative integers k_x summing
// to denom, drawn uniformly over that simplex grid.
Dist random_grid_dist(const FinGroup& g, int denom, std::mt19937_64& rng);
Dist random_grid_dist_on(const Subgroup& s, int denom, std::mt19937_64& rng);

// All grid distributions with the given denominator (exhaustive suites).
std::vector<Dist> enumerate_grid_dists(const FinGroup& g, int denom);

}  // namespace heyde

#endif  // HEYDE_DIST_HPP_
