#pragma once

// Probability measures on (Z_d^2)^n for correlated Pauli noise: explicit
// tables, iid products, and first-order Markov chains, plus the entropy-based
// distillation-rate bounds and the error exponent E(R, P).
//
// Entropies and rates are in base-d units throughout.

#include <optional>
#include <string>
#include <vector>

#include "qdistill/types.hpp"
#include "qdistill/zd.hpp"

namespace qdistill {

// Letters of the single-system alphabet Z_d^2 are indexed as x * d + z.
class PauliDistribution {
 public:
  enum class Form { Explicit, IID, Markov };

  static PauliDistribution explicit_table(int d, int n, RealVector table);
  static PauliDistribution iid(int d, int n, RealVector single_letter);
  static PauliDistribution markov(int d, int n, RealVector initial, RealMatrix transition);

  int d() const { return d_; }
  int n() const { return n_; }
  Form form() const { return form_; }

  // Probability mass of the full label x in (Z_d^2)^n.
  Real prob(const ZdVec& x) const;
  // Flat table over all d^{2n} labels (guarded).
  RealVector to_explicit() const;
  ZdVec sample(Rng& rng) const;

  const RealVector& single_letter() const;   // IID only
  const RealVector& initial() const;         // Markov only
  const RealMatrix& transition() const;      // Markov only; rows are sources

 private:
  PauliDistribution(int d, int n, Form form);
  int d_, n_;
  Form form_;
  RealVector table_;
  RealVector single_;
  RealVector initial_;
  RealMatrix transition_;
};

// Total mass of a set of labels.
Real mass(const PauliDistribution& p, const std::vector<ZdVec>& labels);

// Communicating-class decomposition of a finite chain with one stationary
// distribution per closed class (supported on that class).
struct MarkovClass {
  std::vector<int> states;
  bool closed = false;
  RealVector stationary;  // full-length, zero off the class; empty if open
};

struct MarkovAnalysis {
  std::vector<MarkovClass> classes;
  bool irreducible = false;
  std::vector<int> class_index;  // state -> class
};

MarkovAnalysis analyze_chain(const RealMatrix& transition);
MarkovAnalysis stationary(const PauliDistribution& markov_dist);

// Entropy of a distribution in base-d units.
Real entropy(const RealVector& p, int d);
// Entropy of the transition kernel conditional on q.
Real cond_entropy(const RealMatrix& transition, const RealVector& q, int d);

// 1 - H(P), the iid distillable-rate lower bound (may be negative).
Real hashing_bound(const RealVector& single_letter, int d);
// 1 - H(P|q) for stationary q; rejects q with ||qP - q|| > 1e-8.
Real markov_bound(const RealMatrix& transition, const RealVector& q, int d);

// min over distributions Q absolutely continuous w.r.t. P of
// D(Q||P) + |1 - H(Q) - R|^+, by projected gradient descent over the simplex
// from multiple starts.
Real error_exponent(Real rate, const RealVector& single_letter, int d);

// Rate bound applicable to a distribution, resolving the chain structure.
struct BoundReport {
  bool derived = false;
  Real value = 0.0;
  bool vacuous = false;      // derived but <= 0
  std::string kind;          // "hashing" or "markov"
  std::string note;
};

BoundReport distillation_bound(const PauliDistribution& dist);

}  // namespace qdistill
