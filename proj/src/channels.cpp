#include "qdistill/channels.hpp"

#include <cmath>

namespace qdistill {

namespace {

constexpr Real kProbTol = 1e-12;

RealVector clamp_probs(RealVector p, const char* what) {
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] < -1e-9) throw ValidationError(std::string(what) + ": negative probability");
    if (p[i] < 0.0) p[i] = 0.0;
  }
  return p;
}

}  // namespace

PauliChannel::PauliChannel(int d, int n, RealVector probs) : d_(d), n_(n), probs_(std::move(probs)) {
  const Index labels = checked_pow(d_, 2 * n_);
  if (probs_.size() != labels)
    throw DimensionError("PauliChannel: probability table must have d^{2n} entries");
  probs_ = clamp_probs(std::move(probs_), "PauliChannel");
  if (std::abs(probs_.sum() - 1.0) > kProbTol)
    throw ValidationError("PauliChannel: probabilities sum to " + std::to_string(probs_.sum()));
}

Real PauliChannel::prob(const ZdVec& x) const {
  if (x.d() != d_ || x.n() != n_) throw DimensionError("PauliChannel::prob: label mismatch");
  return probs_[x.index()];
}

KrausChannel to_kraus(const PauliChannel& ch) {
  std::vector<Matrix> ops;
  for (Index i = 0; i < ch.probs().size(); ++i) {
    const Real p = ch.probs()[i];
    if (p <= 0.0) continue;
    ops.push_back(std::sqrt(p) * weyl(ZdVec::from_index(ch.d(), ch.n(), i)).matrix);
  }
  return KrausChannel(std::move(ops));
}

Matrix teleport_conjugation_sum(const Matrix& m, int d, int n, Index k_dim) {
  const Index dim_b = checked_pow(d, n, kDenseDimGuard);
  const Index dim_ta = dim_b * dim_b;  // d^{2n}, home of the measurement basis
  const Index total = k_dim * dim_ta * dim_b;
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("teleport_conjugation_sum: matrix does not factor as K x d^{2n} x d^n");

  const Index labels = dim_ta;
  const auto row_of = [&](Index r, Index j, Index b) { return (r * dim_ta + j) * dim_b + b; };

  Matrix out = Matrix::Zero(total, total);
  Matrix contracted_cols(total, k_dim * dim_b);
  Matrix small(k_dim * dim_b, k_dim * dim_b);
  for (Index xi = 0; xi < labels; ++xi) {
    const ZdVec x = ZdVec::from_index(d, n, xi);
    const Vector u = bell_psi_prime(x).vector;
    const Matrix nx = weyl(x).matrix;

    // contracted_cols(row, (r', b')) = sum_{j'} u(j') m(row, (r', j', b'))
    contracted_cols.setZero();
    for (Index rp = 0; rp < k_dim; ++rp)
      for (Index jp = 0; jp < dim_ta; ++jp) {
        const Complex w = u(jp);
        if (w == Complex(0.0, 0.0)) continue;
        for (Index bp = 0; bp < dim_b; ++bp)
          contracted_cols.col(rp * dim_b + bp) += w * m.col(row_of(rp, jp, bp));
      }
    // small((r, b), (r', b')) = sum_j conj(u(j)) contracted_cols((r, j, b), .)
    small.setZero();
    for (Index r = 0; r < k_dim; ++r)
      for (Index j = 0; j < dim_ta; ++j) {
        const Complex w = std::conj(u(j));
        if (w == Complex(0.0, 0.0)) continue;
        for (Index b = 0; b < dim_b; ++b)
          small.row(r * dim_b + b) += w * contracted_cols.row(row_of(r, j, b));
      }
    // Correction on B per bystander block.
    for (Index r = 0; r < k_dim; ++r)
      for (Index rp = 0; rp < k_dim; ++rp) {
        const Matrix block =
            nx * small.block(r * dim_b, rp * dim_b, dim_b, dim_b) * nx.adjoint();
        for (Index j = 0; j < dim_ta; ++j)
          for (Index jp = 0; jp < dim_ta; ++jp) {
            const Complex w = u(j) * std::conj(u(jp));
            if (w == Complex(0.0, 0.0)) continue;
            out.block(row_of(r, j, 0), row_of(rp, jp, 0), dim_b, dim_b) += w * block;
          }
      }
  }
  return out;
}

DensityMatrix teleport_full(const DensityMatrix& rho_t, const DensityMatrix& sigma_ab, int d,
                            int n) {
  const Index dim = checked_pow(d, n, kDenseDimGuard);
  checked_pow(d, 3 * n, kTeleportDimGuard);
  if (rho_t.dim() != dim) throw DimensionError("teleport_full: input state dim is not d^n");
  if (sigma_ab.dim() != dim * dim)
    throw DimensionError("teleport_full: shared state dim is not d^{2n}");
  const Matrix joint = kron(rho_t.matrix(), sigma_ab.matrix());
  return DensityMatrix(teleport_conjugation_sum(joint, d, n, 1));
}

PauliChannel teleport_channel(const DensityMatrix& sigma_ab, int d, int n) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  if (sigma_ab.dim() != labels)
    throw DimensionError("teleport_channel: shared state dim is not d^{2n}");
  RealVector probs(labels);
  for (Index yi = 0; yi < labels; ++yi) {
    const Vector psi = bell_psi(ZdVec::from_index(d, n, yi)).vector;
    probs[yi] = (psi.adjoint() * sigma_ab.matrix() * psi)(0, 0).real();
  }
  return PauliChannel(d, n, std::move(probs));
}

DensityMatrix apply_pauli(const PauliChannel& ch, const DensityMatrix& rho) {
  const Index dim = checked_pow(ch.d(), ch.n(), kDenseDimGuard);
  if (rho.dim() != dim) throw DimensionError("apply_pauli: state dim is not d^n");
  Matrix out = Matrix::Zero(dim, dim);
  for (Index xi = 0; xi < ch.probs().size(); ++xi) {
    const Real p = ch.probs()[xi];
    if (p <= 0.0) continue;
    const Matrix nx = weyl(ZdVec::from_index(ch.d(), ch.n(), xi)).matrix;
    out += p * nx * rho.matrix() * nx.adjoint();
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix twirl(const DensityMatrix& sigma, int d, int n) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  if (sigma.dim() != labels) throw DimensionError("twirl: state dim is not d^{2n}");
  Matrix acc = Matrix::Zero(labels, labels);
  for (Index xi = 0; xi < labels; ++xi) {
    const Matrix nx = weyl(ZdVec::from_index(d, n, xi)).matrix;
    // Conjugation is entrywise in the computational basis.
    const Matrix c = kron(nx.conjugate(), nx);
    acc += c * sigma.matrix() * c.adjoint();
  }
  return DensityMatrix(acc / static_cast<Real>(labels));
}

DensityMatrix bell_diagonal_part(const DensityMatrix& sigma, int d, int n) {
  const BellCoefficients coeff = bell_coefficients(sigma, d, n);
  const Matrix u = bell_basis_matrix(d, n);
  const RealVector diag = coeff.diagonal();
  return DensityMatrix(u * diag.cast<Complex>().asDiagonal() * u.adjoint());
}

DensityMatrix choi_state(const KrausChannel& ch, int d, int n) {
  const Index dim = checked_pow(d, n, kDenseDimGuard);
  if (ch.dim() != dim) throw DimensionError("choi_state: channel dim is not d^n");
  const Vector psi0 = bell_psi(ZdVec::zero(d, n)).vector;
  const Matrix base = psi0 * psi0.adjoint();
  const Matrix id = Matrix::Identity(dim, dim);
  Matrix out = Matrix::Zero(dim * dim, dim * dim);
  for (const Matrix& m : ch.ops()) {
    const Matrix ext = kron(id, m);
    out += ext * base * ext.adjoint();
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix choi_state(const PauliChannel& ch) { return choi_state(to_kraus(ch), ch.d(), ch.n()); }

std::pair<ZdVec, DensityMatrix> teleport_sample(const DensityMatrix& rho_t,
                                                const DensityMatrix& sigma_ab, int d, int n,
                                                Rng& rng) {
  const Index dim = checked_pow(d, n, kDenseDimGuard);
  checked_pow(d, 3 * n, kTeleportDimGuard);
  if (rho_t.dim() != dim || sigma_ab.dim() != dim * dim)
    throw DimensionError("teleport_sample: dims do not match d^n / d^{2n}");
  const Matrix joint = kron(rho_t.matrix(), sigma_ab.matrix());
  const Index labels = dim * dim;

  std::vector<Matrix> conditional;
  RealVector weights(labels);
  for (Index xi = 0; xi < labels; ++xi) {
    const ZdVec x = ZdVec::from_index(d, n, xi);
    const Vector u = bell_psi_prime(x).vector;
    const Matrix nx = weyl(x).matrix;
    Matrix s = Matrix::Zero(dim, dim);
    for (Index j = 0; j < labels; ++j)
      for (Index jp = 0; jp < labels; ++jp) {
        const Complex w = std::conj(u(j)) * u(jp);
        if (w == Complex(0.0, 0.0)) continue;
        s += w * joint.block(j * dim, jp * dim, dim, dim);
      }
    conditional.push_back(nx * s * nx.adjoint());
    weights[xi] = std::max(0.0, conditional.back().trace().real());
  }
  const Real total = weights.sum();
  std::uniform_real_distribution<Real> unif(0.0, total);
  Real draw = unif(rng);
  Index chosen = labels - 1;
  for (Index xi = 0; xi < labels; ++xi) {
    draw -= weights[xi];
    if (draw <= 0.0) {
      chosen = xi;
      break;
    }
  }
  const Matrix normalized = conditional[chosen] / conditional[chosen].trace().real();
  return {ZdVec::from_index(d, n, chosen), DensityMatrix(normalized)};
}

}  // namespace qdistill
