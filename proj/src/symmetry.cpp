#include "heyde/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heyde {

namespace {

struct IndexTables {
  long long n;
  std::vector<long long> add;  // n*n, add[u*n+v] = index(u+v)
  std::vector<long long> neg;  // n
};

IndexTables index_tables(const FinGroup& g) {
  const long long n = g.order();
  IndexTables t{n, std::vector<long long>(n * n), std::vector<long long>(n)};
  std::vector<Elem> elems(n);
  for (long long i = 0; i < n; ++i) elems[i] = g.element(i);
  for (long long u = 0; u < n; ++u) {
    t.neg[u] = g.index_of(g.neg(elems[u]));
    for (long long v = 0; v < n; ++v) t.add[u * n + v] = g.index_of(g.add(elems[u], elems[v]));
  }
  return t;
}

std::vector<long long> action_table(const GroupMap& a) {
  const FinGroup& g = a.group();
  std::vector<long long> t(g.order());
  for (long long i = 0; i < g.order(); ++i) t[i] = g.index_of(a.apply(g.element(i)));
  return t;
}

}  // namespace

void SymmetryInstance::validate() const {
  if (alpha.group() != group || mu1.group() != group || mu2.group() != group)
    throw std::invalid_argument("instance parts live on different groups");
  if (!is_automorphism(alpha)) throw std::invalid_argument("alpha is not an automorphism");
}

bool symmetry_direct(const SymmetryInstance& inst) {
  inst.validate();
  const FinGroup& g = inst.group;
  const long long n = g.order();
  const auto tab = index_tables(g);
  const auto atab = action_table(inst.alpha);

  // Joint law of (xi1 + xi2, xi1 + alpha(xi2)) as exact masses.
  std::vector<Rat> joint(n * n, Rat(0));
  for (long long i : inst.mu1.support()) {
    const Rat m1 = inst.mu1.at_index(i);
    for (long long j : inst.mu2.support()) {
      long long w = tab.add[i * n + j];
      long long z = tab.add[i * n + atab[j]];
      joint[w * n + z] += m1 * inst.mu2.at_index(j);
    }
  }
  for (long long w = 0; w < n; ++w)
    for (long long z = 0; z < n; ++z)
      if (joint[w * n + z] != joint[w * n + tab.neg[z]]) return false;
  return true;
}

bool charfn_equation_holds(const GroupMap& alpha, const CharFn& phi1, const CharFn& phi2,
                           double tol) {
  const FinGroup& g = alpha.group();
  const long long n = g.order();
  const auto tab = index_tables(g);
  const auto ttab = action_table(adjoint(alpha));
  for (long long u = 0; u < n; ++u) {
    for (long long v = 0; v < n; ++v) {
      const long long tv = ttab[v];
      const auto lhs = phi1.values[tab.add[u * n + v]] * phi2.values[tab.add[u * n + tv]];
      const auto rhs =
          phi1.values[tab.add[u * n + tab.neg[v]]] * phi2.values[tab.add[u * n + tab.neg[tv]]];
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

bool symmetry_fourier(const SymmetryInstance& inst, double tol) {
  inst.validate();
  return charfn_equation_holds(inst.alpha, fourier(inst.mu1), fourier(inst.mu2), tol);
}

Subgroup forced_unimodular_subgroup(const GroupMap& alpha) {
  return image(plus_identity(adjoint(alpha), +1));
}

bool unimodular_on_forced_subgroup(const SymmetryInstance& inst, double tol) {
  inst.validate();
  const Subgroup h = forced_unimodular_subgroup(inst.alpha);
  const CharFn phi1 = fourier(inst.mu1);
  const CharFn phi2 = fourier(inst.mu2);
  for (long long yi : h.members) {
    if (std::fabs(std::abs(phi1.values[yi]) - 1.0) > tol) return false;
    if (std::fabs(std::abs(phi2.values[yi]) - 1.0) > tol) return false;
  }
  return true;
}

std::optional<KernelShiftMatch> match_kernel_shifts(const Dist& mu1, const Dist& mu2,
                                                    const Subgroup& k) {
  const FinGroup& g = mu1.group();
  if (mu2.group() != g || k.group != g)
    throw std::invalid_argument("shift matching requires a common group");

  // Any admissible shift of mu1 lies in the kernel coset of any support
  // point; scan that coset in index (= lexicographic) order.
  const Elem s1 = g.element(mu1.support().front());
  std::vector<long long> candidates;
  candidates.reserve(k.members.size());
  for (long long ki : k.members) candidates.push_back(g.index_of(g.add(s1, g.element(ki))));
  std::sort(candidates.begin(), candidates.end());

  for (long long x1i : candidates) {
    const Elem x1 = g.element(x1i);
    const Dist omega = shift(mu1, g.neg(x1));
    bool inside = true;
    for (long long si : omega.support())
      if (!k.contains_index(si)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    for (long long x2i = 0; x2i < g.order(); ++x2i) {
      const Elem x2 = g.element(x2i);
      if (shift(omega, x2) == mu2) return KernelShiftMatch{omega, x1, x2};
    }
    // Other candidates produce kernel shifts of the same omega; if mu2 does
    // not match any shift of this one it matches none of them.
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Decomposition> decompose(const SymmetryInstance& inst) {
  inst.validate();
  const Subgroup k = kernel(plus_identity(inst.alpha, +1));
  auto m = match_kernel_shifts(inst.mu1, inst.mu2, k);
  if (!m) return std::nullopt;
  const FinGroup& g = inst.group;
  const bool balanced = g.add(m->x1, inst.alpha.apply(m->x2)) == g.zero();
  return Decomposition{std::move(m->omega), std::move(m->x1), std::move(m->x2), k, balanced};
}

GroupFn finite_difference(const FinGroup& g, const Elem& step, const GroupFn& p) {
  if (static_cast<long long>(p.size()) != g.order())
    throw std::invalid_argument("function must be defined on the whole group");
  GroupFn out(p.size());
  for (long long i = 0; i < g.order(); ++i)
    out[i] = p[g.index_of(g.add(g.element(i), step))] - p[i];
  return out;
}

bool nth_differences_vanish(const FinGroup& g, const GroupFn& p, int n, double tol) {
  if (n < 1) throw std::invalid_argument("difference order must be >= 1");
  for (long long hi = 0; hi < g.order(); ++hi) {
    const Elem h = g.element(hi);
    GroupFn cur = p;
    for (int r = 0; r < n; ++r) cur = finite_difference(g, h, cur);
    for (const auto& v : cur)
      if (std::abs(v) > tol) return false;
  }
  return true;
}

int DifferenceReductionReport::failing_step(double tol) const {
  if (residual_step1 > tol) return 1;
  if (residual_step2 > tol) return 2;
  if (residual_step3 > tol) return 3;
  return 0;
}

bool DifferenceReductionReport::concluded(double tol) const {
  return residual_cube_p <= tol && residual_cube_q <= tol && max_p_on_subgroup <= tol &&
         max_q_on_subgroup <= tol;
}

DifferenceReductionReport difference_reduction(const SymmetryInstance& inst, double tol) {
  inst.validate();
  DifferenceReductionReport rep;
  if (!is_automorphism(plus_identity(inst.alpha, -1))) {
    rep.reject_reason = "I - alpha is not an automorphism";
    return rep;
  }
  if (!is_nonvanishing(inst.mu1, tol) || !is_nonvanishing(inst.mu2, tol)) {
    rep.reject_reason = "characteristic function vanishes";
    return rep;
  }
  if (!symmetry_direct(inst)) {
    rep.reject_reason = "instance is not symmetric";
    return rep;
  }
  rep.applicable = true;

  const FinGroup& g = inst.group;
  const long long n = g.order();
  const auto tab = index_tables(g);
  const GroupMap t = adjoint(inst.alpha);
  const auto ttab = action_table(t);
  const auto l11 = action_table(plus_identity(t, +1));            // (I+t)k
  const auto l12 = action_table(compose(GroupMap::scalar(g, 2), t));  // 2t k
  std::vector<long long> l13(n);                                  // (t-I)k
  for (long long i = 0; i < n; ++i) l13[i] = tab.add[ttab[i] * n + tab.neg[i]];
  const auto l21 = action_table(GroupMap::scalar(g, 2));          // 2k
  const auto& l22 = l11;                                          // (I+t)k
  const auto l31 = action_table(plus_identity(t, -1));            // (I-t)k

  // P = log |mu1_hat|^2, Q = log |mu2_hat|^2; strictly positive inputs, so
  // the principal branch is unambiguous and P(0) = Q(0) = 0.
  const CharFn phi1 = fourier(inst.mu1);
  const CharFn phi2 = fourier(inst.mu2);
  std::vector<double> p(n), q(n);
  for (long long i = 0; i < n; ++i) {
    p[i] = std::log(std::norm(phi1.values[i]));
    q[i] = std::log(std::norm(phi2.values[i]));
  }

  const auto add = [&](long long a, long long b) { return tab.add[a * n + b]; };

  // Base equation: P(u+v) + Q(u+tv) - P(u-v) - Q(u-tv) = 0.
  for (long long u = 0; u < n; ++u)
    for (long long v = 0; v < n; ++v) {
      double r = p[add(u, v)] + q[add(u, ttab[v])] - p[add(u, tab.neg[v])] -
                 q[add(u, tab.neg[ttab[v]])];
      rep.residual_base = std::max(rep.residual_base, std::fabs(r));
    }

  // First substitution: D_{(I+t)k1} P(u+v) + D_{2t k1} Q(u+tv)
  //                     - D_{(t-I)k1} P(u-v) = 0.
  for (long long k1 = 0; k1 < n; ++k1)
    for (long long u = 0; u < n; ++u)
      for (long long v = 0; v < n; ++v) {
        const long long uv = add(u, v), utv = add(u, ttab[v]), umv = add(u, tab.neg[v]);
        double r = (p[add(uv, l11[k1])] - p[uv]) + (q[add(utv, l12[k1])] - q[utv]) -
                   (p[add(umv, l13[k1])] - p[umv]);
        rep.residual_step1 = std::max(rep.residual_step1, std::fabs(r));
      }

  // Second substitution eliminates the u-v term:
  // D_{2k2} D_{(I+t)k1} P(u+v) + D_{(I+t)k2} D_{2t k1} Q(u+tv) = 0.
  const auto double_diff = [&](const std::vector<double>& f, long long w, long long a,
                               long long b) {
    return f[add(add(w, a), b)] - f[add(w, a)] - f[add(w, b)] + f[w];
  };
  for (long long k1 = 0; k1 < n; ++k1)
    for (long long k2 = 0; k2 < n; ++k2)
      for (long long u = 0; u < n; ++u)
        for (long long v = 0; v < n; ++v) {
          double r = double_diff(p, add(u, v), l11[k1], l21[k2]) +
                     double_diff(q, add(u, ttab[v]), l12[k1], l22[k2]);
          rep.residual_step2 = std::max(rep.residual_step2, std::fabs(r));
        }

  // Third substitution leaves a triple difference of P alone:
  // D_{(I-t)k3} D_{2k2} D_{(I+t)k1} P(u) = 0.
  const auto triple_diff = [&](const std::vector<double>& f, long long w, long long a,
                               long long b, long long c) {
    return double_diff(f, add(w, c), a, b) - double_diff(f, w, a, b);
  };
  for (long long k1 = 0; k1 < n; ++k1)
    for (long long k2 = 0; k2 < n; ++k2)
      for (long long k3 = 0; k3 < n; ++k3)
        for (long long u = 0; u < n; ++u) {
          double r = triple_diff(p, u, l11[k1], l21[k2], l31[k3]);
          rep.residual_step3 = std::max(rep.residual_step3, std::fabs(r));
        }

  // Conclusion on the forced subgroup: D_h^3 kills P and Q there, and both
  // vanish identically (they are 0 at 0).
  const Subgroup h = image(plus_identity(t, +1));
  for (long long hi : h.members)
    for (long long u = 0; u < n; ++u) {
      double rp = triple_diff(p, u, hi, hi, hi);
      double rq = triple_diff(q, u, hi, hi, hi);
      rep.residual_cube_p = std::max(rep.residual_cube_p, std::fabs(rp));
      rep.residual_cube_q = std::max(rep.residual_cube_q, std::fabs(rq));
    }
  for (long long hi : h.members) {
    rep.max_p_on_subgroup = std::max(rep.max_p_on_subgroup, std::fabs(p[hi]));
    rep.max_q_on_subgroup = std::max(rep.max_q_on_subgroup, std::fabs(q[hi]));
  }
  return rep;
}

}  // namespace heyde
