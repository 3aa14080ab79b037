#include "qdistill/random.hpp"

#include "qdistill/weyl.hpp"

namespace qdistill {

namespace {

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<Real> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

}  // namespace

Vector random_pure_state(Index dim, Rng& rng) {
  std::normal_distribution<Real> normal(0.0, 1.0);
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

Matrix random_unitary(Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (Index j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

DensityMatrix random_density(Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_bell_diagonal(int d, int n, Rng& rng) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  const RealVector probs = random_simplex_point(labels, rng);
  const Matrix u = bell_basis_matrix(d, n);
  return DensityMatrix(u * probs.cast<Complex>().asDiagonal() * u.adjoint());
}

PauliChannel random_pauli_channel(int d, int n, Rng& rng) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  return PauliChannel(d, n, random_simplex_point(labels, rng));
}

KrausChannel random_kraus_channel(Index dim, int num_env, Rng& rng) {
  if (num_env < 1) throw DimensionError("random_kraus_channel: need at least one environment level");
  const Matrix u = random_unitary(dim * num_env, rng);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(num_env));
  // Isometry from the |0> environment column block of a Haar unitary.
  for (int e = 0; e < num_env; ++e) {
    Matrix m(dim, dim);
    for (Index a = 0; a < dim; ++a)
      for (Index b = 0; b < dim; ++b) m(a, b) = u(a * num_env + e, b * num_env);
    ops.push_back(std::move(m));
  }
  return KrausChannel(std::move(ops));
}

RealVector random_simplex_point(Index size, Rng& rng) {
  std::exponential_distribution<Real> expo(1.0);
  RealVector p(size);
  for (Index i = 0; i < size; ++i) p[i] = expo(rng);
  return p / p.sum();
}

}  // namespace qdistill
