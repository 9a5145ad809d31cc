// Finite Abelian groups as products of cyclic groups, with elements,
// characters, the bilinear pairing, subgroups and annihilators.
//
// A group and its character group share one coordinate system: the character
// (y_1..y_k) acts on (x_1..x_k) as exp(2*pi*i * sum x_i y_i / n_i). All
// set-level computations (annihilators, closures) are decided on the exact
// integer exponents, never on floats.

#ifndef HEYDE_GROUP_HPP_
#define HEYDE_GROUP_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "heyde/rational.hpp"

namespace heyde {

// Coordinates of a group element, coords[i] in [0, n_i).
using Elem = std::vector<int>;

class FinGroup {
 public:
  // Empty order list gives the trivial group (order 1).
  FinGroup() = default;
  explicit FinGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  long long order() const { return order_; }
  // lcm of the cyclic orders; every pairing value is a power of the
  // primitive root of unity of this order.
  long long exponent() const { return exponent_; }

  bool valid(const Elem& x) const;

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem scale(long long c, const Elem& x) const;

  // Indexing is lexicographic in the coordinates (first coordinate most
  // significant), so index order equals lexicographic element order.
  long long index_of(const Elem& x) const;
  Elem element(long long index) const;

  // Exponent e in [0, exponent()) with pairing(x, y) = zeta^e for the
  // primitive exponent()-th root of unity zeta.
  long long pairing_exponent(const Elem& x, const Elem& y) const;
  std::complex<double> pairing(const Elem& x, const Elem& y) const;
  bool pairing_trivial(const Elem& x, const Elem& y) const;

  bool operator==(const FinGroup&) const = default;

 private:
  std::vector<int> orders_;
  long long order_ = 1;
  long long exponent_ = 1;
};

// Subgroup as a canonical (sorted) set of element indices. Always contains 0.
struct Subgroup {
  FinGroup group;
  std::vector<long long> members;

  long long size() const { return static_cast<long long>(members.size()); }
  bool contains_index(long long idx) const;
  bool contains(const Elem& x) const { return contains_index(group.index_of(x)); }
  std::vector<Elem> elements() const;

  bool operator==(const Subgroup&) const = default;
};

Subgroup trivial_subgroup(const FinGroup& g);
Subgroup full_subgroup(const FinGroup& g);

// Smallest subgroup containing the generators, by closure under addition.
Subgroup subgroup_from_generators(const FinGroup& g, const std::vector<Elem>& gens);

// Closes an arbitrary element set into a subgroup.
Subgroup subgroup_closure(const FinGroup& g, std::vector<long long> seed_indices);

// Elements pairing trivially with every member of `chars` (a subgroup of the
// character side, same coordinates). Decided exactly.
Subgroup annihilator(const Subgroup& chars);

// The image {2s : s in S}.
Subgroup doubled(const Subgroup& s);

// True iff some element has order 2, i.e. some cyclic order is even.
bool has_order_two(const FinGroup& g);

}  // namespace heyde

#endif  // HEYDE_GROUP_HPP_
