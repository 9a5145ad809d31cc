// Endomorphisms of finite Abelian groups as integer matrices.
//
// Column j of the matrix is the image of the j-th standard generator; entry
// (i, j) is stored reduced mod n_i. A matrix defines a homomorphism exactly
// when a_ij == 0 (mod n_i / gcd(n_i, n_j)) for all i, j.

#ifndef HEYDE_MORPHISM_HPP_
#define HEYDE_MORPHISM_HPP_

#include <vector>

#include "heyde/group.hpp"

namespace heyde {

using IntMatrix = std::vector<std::vector<long long>>;

class GroupMap {
 public:
  GroupMap() = default;

  // Validates the compatibility condition; throws std::invalid_argument.
  static GroupMap from_matrix(const FinGroup& g, IntMatrix m);
  static GroupMap identity(const FinGroup& g);
  static GroupMap zero(const FinGroup& g);
  // Multiplication by c (always compatible).
  static GroupMap scalar(const FinGroup& g, long long c);

  const FinGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return mat_; }

  Elem apply(const Elem& x) const;
  Elem operator()(const Elem& x) const { return apply(x); }

  bool operator==(const GroupMap&) const = default;

 private:
  FinGroup group_;
  IntMatrix mat_;  // rank x rank, row i reduced mod n_i
};

// The map t with pairing(a(x), y) == pairing(x, t(y)) for all x, y.
// Entries t_ji = a_ij * n_j / n_i, integral by compatibility.
GroupMap adjoint(const GroupMap& a);

Subgroup kernel(const GroupMap& a);

bool is_automorphism(const GroupMap& a);

GroupMap compose(const GroupMap& a, const GroupMap& b);  // x -> a(b(x))
GroupMap add_maps(const GroupMap& a, const GroupMap& b);
GroupMap negate(const GroupMap& a);
// I + sign*a, sign in {+1, -1}.
GroupMap plus_identity(const GroupMap& a, int sign);

// Smallest m >= 1 with a^m == identity; requires an automorphism.
int automorphism_order(const GroupMap& a);

// All well-defined endomorphisms, one reduced matrix each.
// Throws std::length_error when the group order exceeds max_group_order.
std::vector<GroupMap> enumerate_endomorphisms(const FinGroup& g,
                                              long long max_group_order = 100);
std::vector<GroupMap> enumerate_automorphisms(const FinGroup& g,
                                              long long max_group_order = 100);

Subgroup image_subgroup(const GroupMap& a, const Subgroup& s);
Subgroup image(const GroupMap& a);

}  // namespace heyde

#endif  // HEYDE_MORPHISM_HPP_
