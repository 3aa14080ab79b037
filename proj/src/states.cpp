#include "qdistill/states.hpp"

#include <cmath>

#include "qdistill/weyl.hpp"

namespace qdistill {

namespace {

constexpr Real kHermitianTol = 1e-10;
constexpr Real kTraceTol = 1e-10;
constexpr Real kEigenFloor = -1e-9;
constexpr Real kCompletenessTol = 1e-10;

void check_factorization(Index dim, const std::vector<Index>& dims, const std::vector<int>& keep) {
  Index prod = 1;
  for (Index f : dims) {
    if (f < 1) throw DimensionError("partial_trace: factor dims must be positive");
    prod *= f;
  }
  if (prod != dim) throw DimensionError("partial_trace: factor dims do not multiply to the matrix dim");
  int prev = -1;
  for (int k : keep) {
    if (k <= prev || k >= static_cast<int>(dims.size()))
      throw DimensionError("partial_trace: keep must be sorted factor indices in range");
    prev = k;
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw DimensionError("DensityMatrix: nonempty square matrix required");
  if ((mat_ - Matrix(mat_.adjoint())).cwiseAbs().maxCoeff() > kHermitianTol)
    throw ValidationError("DensityMatrix: not hermitian");
  if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > kTraceTol)
    throw ValidationError("DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < kEigenFloor)
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(es.eigenvalues()(0)));
}

DensityMatrix DensityMatrix::pure(const Vector& v) {
  const Real norm = v.norm();
  if (norm < 1e-12) throw ValidationError("DensityMatrix::pure: zero vector");
  Vector u = v / norm;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim < 1) throw DimensionError("maximally_mixed: dim must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<Real>(dim));
}

DensityMatrix DensityMatrix::projector_state(const Matrix& projector) {
  const Real rank = projector.trace().real();
  if (rank < 0.5) throw ValidationError("projector_state: projector has vanishing trace");
  return DensityMatrix(projector / rank);
}

KrausChannel::KrausChannel(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ValidationError("KrausChannel: empty operator list");
  const Index dim = ops_.front().rows();
  Matrix acc = Matrix::Zero(dim, dim);
  for (const Matrix& m : ops_) {
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("KrausChannel: operators must be square with equal dims");
    acc += m.adjoint() * m;
  }
  if ((acc - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kCompletenessTol)
    throw ValidationError("KrausChannel: operators do not satisfy the completeness relation");
}

KrausChannel KrausChannel::identity(Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) throw DimensionError("compose: channel dims differ");
  std::vector<Matrix> ops;
  ops.reserve(outer.ops().size() * inner.ops().size());
  for (const Matrix& a : outer.ops())
    for (const Matrix& b : inner.ops()) ops.push_back(a * b);
  return KrausChannel(std::move(ops));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw DimensionError("apply: channel and state dims differ");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& m : ch.ops()) out += m * rho.matrix() * m.adjoint();
  return DensityMatrix(std::move(out));
}

Matrix partial_trace_matrix(const Matrix& m, const std::vector<Index>& dims,
                            const std::vector<int>& keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace: square matrix required");
  check_factorization(m.rows(), dims, keep);

  std::vector<Index> strides(dims.size());
  Index s = 1;
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    strides[f] = s;
    s *= dims[f];
  }
  std::vector<int> traced;
  {
    std::vector<bool> kept(dims.size(), false);
    for (int k : keep) kept[k] = true;
    for (int f = 0; f < static_cast<int>(dims.size()); ++f)
      if (!kept[f]) traced.push_back(f);
  }
  Index out_dim = 1;
  for (int k : keep) out_dim *= dims[k];
  Index traced_dim = 1;
  for (int f : traced) traced_dim *= dims[f];

  // Flat offsets of every kept / traced digit combination.
  std::vector<Index> kept_offset(out_dim, 0);
  for (Index i = 0; i < out_dim; ++i) {
    Index rem = i;
    for (int t = static_cast<int>(keep.size()) - 1; t >= 0; --t) {
      const int f = keep[t];
      kept_offset[i] += (rem % dims[f]) * strides[f];
      rem /= dims[f];
    }
  }
  std::vector<Index> traced_offset(traced_dim, 0);
  for (Index i = 0; i < traced_dim; ++i) {
    Index rem = i;
    for (int t = static_cast<int>(traced.size()) - 1; t >= 0; --t) {
      const int f = traced[t];
      traced_offset[i] += (rem % dims[f]) * strides[f];
      rem /= dims[f];
    }
  }

  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Index i = 0; i < out_dim; ++i)
    for (Index j = 0; j < out_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (Index t = 0; t < traced_dim; ++t)
        acc += m(kept_offset[i] + traced_offset[t], kept_offset[j] + traced_offset[t]);
      out(i, j) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<Index>& dims,
                            const std::vector<int>& keep) {
  return DensityMatrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

Complex BellCoefficients::operator()(const ZdVec& y, const ZdVec& z) const {
  if (y.d() != d || z.d() != d || y.n() != n || z.n() != n)
    throw DimensionError("BellCoefficients: label does not match the decomposition");
  return alpha(y.index(), z.index());
}

RealVector BellCoefficients::diagonal() const { return alpha.diagonal().real(); }

BellCoefficients bell_coefficients(const DensityMatrix& sigma, int d, int n) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  if (sigma.dim() != labels)
    throw DimensionError("bell_coefficients: state dim is not d^{2n}");
  const Matrix u = bell_basis_matrix(d, n);
  return BellCoefficients{d, n, u.adjoint() * sigma.matrix() * u};
}

Real entanglement_fidelity(const DensityMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != ch.dim()) throw DimensionError("entanglement_fidelity: dims differ");
  const Index dim = rho.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  std::vector<Index> kept;
  for (Index i = 0; i < dim; ++i)
    if (es.eigenvalues()(i) > 1e-12) kept.push_back(i);
  const Index rank = static_cast<Index>(kept.size());
  // Purification with the reference system first.
  Vector phi = Vector::Zero(rank * dim);
  for (Index r = 0; r < rank; ++r)
    phi.segment(r * dim, dim) = std::sqrt(es.eigenvalues()(kept[r])) * es.eigenvectors().col(kept[r]);
  Matrix purified = phi * phi.adjoint();
  const Matrix id_r = Matrix::Identity(rank, rank);
  Matrix evolved = Matrix::Zero(rank * dim, rank * dim);
  for (const Matrix& m : ch.ops()) {
    const Matrix ext = kron(id_r, m);
    evolved += ext * purified * ext.adjoint();
  }
  return (phi.adjoint() * evolved * phi)(0, 0).real();
}

Real entanglement_fidelity_trace_formula(const DensityMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != ch.dim()) throw DimensionError("entanglement_fidelity: dims differ");
  Real acc = 0.0;
  for (const Matrix& m : ch.ops()) acc += std::norm((rho.matrix() * m).trace());
  return acc;
}

Real min_pure_fidelity_bound(Real g) {
  if (g < -1e-12 || g > 1.0 + 1e-12)
    throw ValidationError("min_pure_fidelity_bound: g must lie in [0, 1]");
  return 1.5 * g;
}

}  // namespace qdistill
