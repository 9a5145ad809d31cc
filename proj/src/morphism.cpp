#include "heyde/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heyde {

namespace {

long long mod_reduce(long long v, long long n) {
  v %= n;
  return v < 0 ? v + n : v;
}

// a_ij must vanish mod n_i / gcd(n_i, n_j) for the column map e_j -> column j
// to respect the order of e_j.
bool compatible(const FinGroup& g, const IntMatrix& m) {
  const auto& n = g.orders();
  for (size_t i = 0; i < n.size(); ++i)
    for (size_t j = 0; j < n.size(); ++j)
      if (m[i][j] % (n[i] / std::gcd<long long>(n[i], n[j])) != 0) return false;
  return true;
}

IntMatrix reduced(const FinGroup& g, IntMatrix m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (auto& v : m[i]) v = mod_reduce(v, g.orders()[i]);
  return m;
}

}  // namespace

GroupMap GroupMap::from_matrix(const FinGroup& g, IntMatrix m) {
  const size_t k = g.orders().size();
  if (m.size() != k) throw std::invalid_argument("matrix rank does not match the group");
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("matrix is not square");
  m = reduced(g, std::move(m));
  if (!compatible(g, m))
    throw std::invalid_argument("matrix does not define a homomorphism (compatibility)");
  GroupMap a;
  a.group_ = g;
  a.mat_ = std::move(m);
  return a;
}

GroupMap GroupMap::identity(const FinGroup& g) { return scalar(g, 1); }

GroupMap GroupMap::zero(const FinGroup& g) { return scalar(g, 0); }

GroupMap GroupMap::scalar(const FinGroup& g, long long c) {
  const size_t k = g.orders().size();
  IntMatrix m(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i) m[i][i] = mod_reduce(c, g.orders()[i]);
  GroupMap a;
  a.group_ = g;
  a.mat_ = std::move(m);
  return a;
}

Elem GroupMap::apply(const Elem& x) const {
  if (!group_.valid(x)) throw std::invalid_argument("element outside the map's domain");
  const size_t k = mat_.size();
  Elem r(k);
  for (size_t i = 0; i < k; ++i) {
    long long acc = 0;
    for (size_t j = 0; j < k; ++j) acc = (acc + mat_[i][j] * x[j]) % group_.orders()[i];
    r[i] = static_cast<int>(acc);
  }
  return r;
}

GroupMap adjoint(const GroupMap& a) {
  const FinGroup& g = a.group();
  const auto& n = g.orders();
  const size_t k = n.size();
  IntMatrix t(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      long long num = a.matrix()[i][j] * n[j];
      if (num % n[i] != 0) throw std::logic_error("adjoint entry not integral");
      t[j][i] = num / n[i];
    }
  }
  return GroupMap::from_matrix(g, std::move(t));
}

Subgroup kernel(const GroupMap& a) {
  const FinGroup& g = a.group();
  std::vector<long long> members;
  const Elem zero = g.zero();
  for (long long idx = 0; idx < g.order(); ++idx)
    if (a.apply(g.element(idx)) == zero) members.push_back(idx);
  return Subgroup{g, std::move(members)};
}

bool is_automorphism(const GroupMap& a) { return kernel(a).size() == 1; }

GroupMap compose(const GroupMap& a, const GroupMap& b) {
  if (a.group() != b.group()) throw std::invalid_argument("composing maps on different groups");
  const size_t k = a.matrix().size();
  IntMatrix m(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      long long acc = 0;
      for (size_t l = 0; l < k; ++l)
        acc = (acc + a.matrix()[i][l] * b.matrix()[l][j]) % a.group().orders()[i];
      m[i][j] = acc;
    }
  return GroupMap::from_matrix(a.group(), std::move(m));
}

GroupMap add_maps(const GroupMap& a, const GroupMap& b) {
  if (a.group() != b.group()) throw std::invalid_argument("adding maps on different groups");
  IntMatrix m = a.matrix();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) m[i][j] += b.matrix()[i][j];
  return GroupMap::from_matrix(a.group(), std::move(m));
}

GroupMap negate(const GroupMap& a) {
  IntMatrix m = a.matrix();
  for (auto& row : m)
    for (auto& v : row) v = -v;
  return GroupMap::from_matrix(a.group(), std::move(m));
}

GroupMap plus_identity(const GroupMap& a, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return add_maps(GroupMap::identity(a.group()), sign == 1 ? a : negate(a));
}

int automorphism_order(const GroupMap& a) {
  if (!is_automorphism(a)) throw std::invalid_argument("order is defined for automorphisms");
  const GroupMap id = GroupMap::identity(a.group());
  GroupMap p = a;
  int m = 1;
  while (!(p == id)) {
    p = compose(p, a);
    ++m;
  }
  return m;
}

std::vector<GroupMap> enumerate_endomorphisms(const FinGroup& g, long long max_group_order) {
  if (g.order() > max_group_order)
    throw std::length_error("group order exceeds the enumeration bound");
  const auto& n = g.orders();
  const size_t k = n.size();
  // Entry (i, j) ranges over multiples of n_i / gcd(n_i, n_j); distinct
  // reduced matrices give distinct actions, so no further deduplication.
  std::vector<long long> step(k * k), count(k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      long long gij = std::gcd<long long>(n[i], n[j]);
      step[i * k + j] = n[i] / gij;
      count[i * k + j] = gij;
    }
  std::vector<GroupMap> out;
  std::vector<long long> choice(k * k, 0);
  for (;;) {
    IntMatrix m(k, std::vector<long long>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = choice[i * k + j] * step[i * k + j];
    out.push_back(GroupMap::from_matrix(g, std::move(m)));
    size_t pos = 0;
    while (pos < k * k && ++choice[pos] == count[pos]) choice[pos++] = 0;
    if (pos == k * k) break;
  }
  return out;
}

std::vector<GroupMap> enumerate_automorphisms(const FinGroup& g, long long max_group_order) {
  std::vector<GroupMap> all = enumerate_endomorphisms(g, max_group_order);
  std::vector<GroupMap> autos;
  for (auto& a : all)
    if (is_automorphism(a)) autos.push_back(std::move(a));
  return autos;
}

Subgroup image_subgroup(const GroupMap& a, const Subgroup& s) {
  if (a.group() != s.group) throw std::invalid_argument("subgroup outside the map's domain");
  std::vector<long long> img;
  img.reserve(s.members.size());
  for (long long idx : s.members) img.push_back(a.group().index_of(a.apply(s.group.element(idx))));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Subgroup{a.group(), std::move(img)};
}

Subgroup image(const GroupMap& a) { return image_subgroup(a, full_subgroup(a.group())); }

}  // namespace heyde
