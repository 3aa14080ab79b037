#pragma once

// Density matrices, Kraus channels, partial trace, Bell-basis coefficients,
// and entanglement fidelity.

#include <vector>

#include "qdistill/types.hpp"
#include "qdistill/zd.hpp"

namespace qdistill {

// Unit-trace positive semidefinite complex matrix. Construction validates
// hermiticity and trace to 1e-10 and eigenvalues down to -1e-9 (floating
// point drift from channel application).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix pure(const Vector& v);
  static DensityMatrix maximally_mixed(Index dim);
  // projector / rank for a hermitian idempotent projector.
  static DensityMatrix projector_state(const Matrix& projector);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  Matrix mat_;
};

// Trace-preserving completely positive map in operator-sum form.
// Construction validates sum_i M_i^dag M_i = I to 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops);
  static KrausChannel identity(Index dim);

  Index dim() const { return ops_.front().rows(); }
  const std::vector<Matrix>& ops() const { return ops_; }

 private:
  std::vector<Matrix> ops_;
};

// outer applied after inner.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

// sum_i M_i rho M_i^dag.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// dims lists the tensor factor dimensions of rho; keep is the sorted list of
// factor indices retained (in their original order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<Index>& dims,
                            const std::vector<int>& keep);
Matrix partial_trace_matrix(const Matrix& m, const std::vector<Index>& dims,
                            const std::vector<int>& keep);

// Coefficients of a bipartite state in the Bell operator basis:
// alpha(y, z) = <Psi_y| sigma |Psi_z>. The diagonal entries are the
// probabilities P_n(y).
struct BellCoefficients {
  int d = 0;
  int n = 0;
  Matrix alpha;  // label-indexed
  Complex operator()(const ZdVec& y, const ZdVec& z) const;
  RealVector diagonal() const;
};

BellCoefficients bell_coefficients(const DensityMatrix& sigma, int d, int n);

// Entanglement fidelity of rho through ch, computed via a purification with
// the reference system ordered first. Purification-independent.
Real entanglement_fidelity(const DensityMatrix& rho, const KrausChannel& ch);
// Independent route: sum_i |Tr(rho M_i)|^2.
Real entanglement_fidelity_trace_formula(const DensityMatrix& rho, const KrausChannel& ch);

// Entanglement-infidelity bound (3/2) g implied by a minimum pure-state
// fidelity bound 1 - g.
Real min_pure_fidelity_bound(Real g);

}  // namespace qdistill
