#pragma once

// The full teleportation process, its closed-form Pauli channel, discrete
// twirling, and the Choi state of a channel.
//
// System order is always T (x) A (x) B for the process; the measurement
// {|Psi'_x><Psi'_x|} acts on T (x) A and the conditioned correction N_x on B.

#include <utility>

#include "qdistill/states.hpp"
#include "qdistill/weyl.hpp"

namespace qdistill {

// Probability-weighted mixture of Weyl conjugations.
class PauliChannel {
 public:
  PauliChannel(int d, int n, RealVector probs);  // size d^{2n}, sums to 1

  int d() const { return d_; }
  int n() const { return n_; }
  const RealVector& probs() const { return probs_; }
  Real prob(const ZdVec& x) const;

 private:
  int d_, n_;
  RealVector probs_;
};

// { sqrt(P(x)) N_x } over the support of P.
KrausChannel to_kraus(const PauliChannel& ch);

// Full teleportation of rho_t through the shared state sigma_ab; returns the
// outcome-summed post-measurement state on T (x) A (x) B.
DensityMatrix teleport_full(const DensityMatrix& rho_t, const DensityMatrix& sigma_ab,
                            int d, int n);

// Closed form of the channel suffered by the teleported state: a Pauli
// channel with probabilities <Psi_x| sigma |Psi_x>.
PauliChannel teleport_channel(const DensityMatrix& sigma_ab, int d, int n);

DensityMatrix apply_pauli(const PauliChannel& ch, const DensityMatrix& rho);

// Average of (conj(N_x) (x) N_x) sigma (.)^dag over all x. Projects onto the
// Bell diagonal; idempotent.
DensityMatrix twirl(const DensityMatrix& sigma, int d, int n);
// Independent route to the same state: sum_y alpha_{y,y} |Psi_y><Psi_y|.
DensityMatrix bell_diagonal_part(const DensityMatrix& sigma, int d, int n);

// [Id (x) ch](|Psi_0><Psi_0|).
DensityMatrix choi_state(const KrausChannel& ch, int d, int n);
DensityMatrix choi_state(const PauliChannel& ch);

// Sampling mode (demo): one measurement outcome x drawn with its outcome
// probability, plus the conditional post-correction state on B.
std::pair<ZdVec, DensityMatrix> teleport_sample(const DensityMatrix& rho_t,
                                                const DensityMatrix& sigma_ab, int d, int n,
                                                Rng& rng);

// Internal building block shared with the distillation simulation: applies
// sum_x (I_{k_dim} (x) T_x) m (I_{k_dim} (x) T_x)^dag where m is a matrix
// over a k_dim-dimensional bystander system (x) (T x A) (x) B.
Matrix teleport_conjugation_sum(const Matrix& m, int d, int n, Index k_dim);

}  // namespace qdistill
