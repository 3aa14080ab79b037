#pragma once

// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's computation paths for the quantities they check.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "qdistill/types.hpp"
#include "qdistill/zd.hpp"

namespace qdistill::testing {

// All vectors orthogonal to every basis vector of l, by exhaustive scan.
inline std::vector<ZdVec> brute_force_dual_elements(const Subspace& l) {
  const Index total = checked_pow(l.d(), 2 * l.n());
  std::vector<ZdVec> out;
  for (Index idx = 0; idx < total; ++idx) {
    const ZdVec v = ZdVec::from_index(l.d(), l.n(), idx);
    bool orthogonal = true;
    for (int r = 0; r < l.dim(); ++r)
      if (symplectic_form(v, l.basis_vector(r)) != 0) {
        orthogonal = false;
        break;
      }
    if (orthogonal) out.push_back(v);
  }
  return out;
}

inline RealVector power_iteration_stationary(const RealMatrix& transition, long long steps,
                                             RealVector start) {
  RealVector q = start / start.sum();
  for (long long i = 0; i < steps; ++i) q = transition.transpose() * q;
  return q;
}

inline Real binary_entropy_bits(Real z) {
  Real h = 0.0;
  if (z > 0.0) h -= z * std::log2(z);
  if (z < 1.0) h -= (1.0 - z) * std::log2(1.0 - z);
  return h;
}

// Dense simplex grid search for min_Q D(Q||P) + |1 - H(Q) - R|^+ at the
// given resolution (counts of 1/steps). Q is restricted to the support of P.
inline Real grid_search_exponent(Real rate, const RealVector& p, int d, int steps = 500) {
  std::vector<Real> support;
  for (Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) support.push_back(p[i]);
  const int m = static_cast<int>(support.size());
  const Real delta = 1.0 / static_cast<Real>(steps);
  const Real ln_d = std::log(static_cast<Real>(d));

  std::vector<Real> xlogx(steps + 1, 0.0);
  for (int k = 1; k <= steps; ++k) {
    const Real v = k * delta;
    xlogx[k] = v * std::log(v);
  }
  std::vector<Real> log_p(m);
  for (int i = 0; i < m; ++i) log_p[i] = std::log(support[i]);

  Real best = std::numeric_limits<Real>::infinity();
  // div/ent accumulated in nats.
  std::function<void(int, int, Real, Real)> recurse = [&](int atom, int remaining, Real div,
                                                          Real ent) {
    if (atom == m - 1) {
      const int k = remaining;
      const Real mass = k * delta;
      div += xlogx[k] - mass * log_p[atom];
      ent -= xlogx[k];
      const Real value = div / ln_d + std::max(0.0, 1.0 - ent / ln_d - rate);
      best = std::min(best, value);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      const Real mass = k * delta;
      recurse(atom + 1, remaining - k, div + xlogx[k] - mass * log_p[atom], ent - xlogx[k]);
    }
  };
  recurse(0, steps, 0.0, 0.0);
  return best;
}

}  // namespace qdistill::testing
