#pragma once

// Weyl operators N_y and the generalized Bell bases.
//
// Conventions: omega = exp(2 pi i / d), X|j> = |j-1 mod d>, Z|j> = omega^j |j>,
// N_{(i,j)} = X^i Z^j, and N_y is the tensor product of the per-letter factors
// in label order. No extra phase normalization is applied.

#include "qdistill/types.hpp"
#include "qdistill/zd.hpp"

namespace qdistill {

struct WeylOperator {
  ZdVec label;
  Matrix matrix;  // d^n x d^n unitary
};

// X^i Z^j on C^d.
WeylOperator weyl_single(int d, int i, int j);
// N_y = N_{y_1} (x) ... (x) N_{y_n}.
WeylOperator weyl(const ZdVec& y);

// Exponent e with N_y N_y2 = omega^e N_y2 N_y; equals the symplectic form.
int commutation_phase(const ZdVec& y, const ZdVec& y2);

struct BellVector {
  enum class Kind { Psi, PsiPrime };
  ZdVec label;
  Kind kind;
  Vector vector;  // unit vector in C^{d^n} (x) C^{d^n}
};

// (1/d^{n/2}) sum_l |l> (x) N_y |l>.
BellVector bell_psi(const ZdVec& y);
// (1/d^{n/2}) sum_l N_x |l> (x) |l>.
BellVector bell_psi_prime(const ZdVec& x);

// Unitary whose columns are |Psi_y>, ordered by label index.
Matrix bell_basis_matrix(int d, int n);

}  // namespace qdistill
