#include "heyde/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace heyde {

FinGroup::FinGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 2) throw std::invalid_argument("cyclic order must be >= 2");
    order_ *= n;
    exponent_ = std::lcm<long long>(exponent_, n);
  }
}

bool FinGroup::valid(const Elem& x) const {
  if (x.size() != orders_.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= orders_[i]) return false;
  return true;
}

Elem FinGroup::add(const Elem& x, const Elem& y) const {
  Elem r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = (x[i] + y[i]) % orders_[i];
  return r;
}

Elem FinGroup::neg(const Elem& x) const {
  Elem r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) r[i] = x[i] == 0 ? 0 : orders_[i] - x[i];
  return r;
}

Elem FinGroup::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

Elem FinGroup::scale(long long c, const Elem& x) const {
  Elem r(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long v = (c % orders_[i]) * x[i] % orders_[i];
    r[i] = static_cast<int>(v < 0 ? v + orders_[i] : v);
  }
  return r;
}

long long FinGroup::index_of(const Elem& x) const {
  long long idx = 0;
  for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + x[i];
  return idx;
}

Elem FinGroup::element(long long index) const {
  Elem x(orders_.size());
  for (size_t i = orders_.size(); i-- > 0;) {
    x[i] = static_cast<int>(index % orders_[i]);
    index /= orders_[i];
  }
  return x;
}

long long FinGroup::pairing_exponent(const Elem& x, const Elem& y) const {
  long long e = 0;
  for (size_t i = 0; i < orders_.size(); ++i)
    e = (e + static_cast<long long>(x[i]) * y[i] % orders_[i] * (exponent_ / orders_[i])) %
        exponent_;
  return e;
}

std::complex<double> FinGroup::pairing(const Elem& x, const Elem& y) const {
  long long e = pairing_exponent(x, y);
  if (e == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                             static_cast<double>(exponent_));
}

bool FinGroup::pairing_trivial(const Elem& x, const Elem& y) const {
  return pairing_exponent(x, y) == 0;
}

bool Subgroup::contains_index(long long idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(members.size());
  for (long long idx : members) out.push_back(group.element(idx));
  return out;
}

Subgroup trivial_subgroup(const FinGroup& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const FinGroup& g) {
  std::vector<long long> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup subgroup_closure(const FinGroup& g, std::vector<long long> seed_indices) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<long long> frontier{0};
  for (long long s : seed_indices) {
    if (!in[s]) {
      in[s] = 1;
      frontier.push_back(s);
    }
  }
  // Closure under addition; negation follows since the group is finite.
  for (size_t i = 0; i < frontier.size(); ++i) {
    const Elem a = g.element(frontier[i]);
    for (size_t j = 0; j <= i; ++j) {
      long long s = g.index_of(g.add(a, g.element(frontier[j])));
      if (!in[s]) {
        in[s] = 1;
        frontier.push_back(s);
      }
    }
  }
  std::vector<long long> members;
  for (long long idx = 0; idx < g.order(); ++idx)
    if (in[idx]) members.push_back(idx);
  return Subgroup{g, std::move(members)};
}

Subgroup subgroup_from_generators(const FinGroup& g, const std::vector<Elem>& gens) {
  std::vector<long long> seeds;
  seeds.reserve(gens.size());
  for (const Elem& x : gens) {
    if (!g.valid(x)) throw std::invalid_argument("generator outside the group");
    seeds.push_back(g.index_of(x));
  }
  return subgroup_closure(g, std::move(seeds));
}

Subgroup annihilator(const Subgroup& chars) {
  const FinGroup& g = chars.group;
  std::vector<long long> members;
  std::vector<Elem> ys = chars.elements();
  for (long long idx = 0; idx < g.order(); ++idx) {
    const Elem x = g.element(idx);
    bool all_trivial = true;
    for (const Elem& y : ys) {
      if (!g.pairing_trivial(x, y)) {
        all_trivial = false;
        break;
      }
    }
    if (all_trivial) members.push_back(idx);
  }
  return Subgroup{g, std::move(members)};
}

Subgroup doubled(const Subgroup& s) {
  const FinGroup& g = s.group;
  std::vector<long long> image;
  for (long long idx : s.members) image.push_back(g.index_of(g.scale(2, g.element(idx))));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return Subgroup{g, std::move(image)};
}

bool has_order_two(const FinGroup& g) {
  for (int n : g.orders())
    if (n % 2 == 0) return true;
  return false;
}

}  // namespace heyde
