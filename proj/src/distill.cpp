#include "qdistill/distill.hpp"

#include <cmath>

namespace qdistill {

namespace {

// Purification of the normalized code projector, reference system first:
// (1/sqrt(K)) sum_j |j>_R (x) |c_j>. The same code basis serves as the
// fidelity target on R (x) B.
Vector code_purification(const SymplecticCode& code) {
  const Index dim = code.projector().rows();
  const Index k = code.code_dim();
  Vector phi = Vector::Zero(k * dim);
  const Real scale = 1.0 / std::sqrt(static_cast<Real>(k));
  for (Index j = 0; j < k; ++j) phi.segment(j * dim, dim) = scale * code.code_basis().col(j);
  return phi;
}

DistillationRun distill_dense(const DensityMatrix& sigma_ab, const SymplecticCode& code) {
  const int d = code.d();
  const int n = code.n();
  const Index dim = code.projector().rows();
  const Index k = code.code_dim();
  const Vector phi_rt = code_purification(code);
  const Matrix joint = kron(Matrix(phi_rt * phi_rt.adjoint()), sigma_ab.matrix());

  Matrix teleported = teleport_conjugation_sum(joint, d, n, k);

  const KrausChannel dec = decoder(code);
  const Index front = k * dim * dim;  // R (x) T (x) A
  Matrix decoded = Matrix::Zero(teleported.rows(), teleported.cols());
  const Matrix id_front = Matrix::Identity(front, front);
  for (const Matrix& op : dec.ops()) {
    const Matrix ext = kron(id_front, op);
    decoded += ext * teleported * ext.adjoint();
  }

  Matrix rb = partial_trace_matrix(decoded, {k, dim, dim, dim}, {0, 3});
  const Real fidelity = (phi_rt.adjoint() * rb * phi_rt)(0, 0).real();
  return DistillationRun{d, n, k, DensityMatrix(std::move(rb)), fidelity};
}

DistillationRun distill_pure(const DensityMatrix& sigma_ab, const SymplecticCode& code) {
  const int d = code.d();
  const int n = code.n();
  const Index dim = code.projector().rows();
  const Index labels = dim * dim;
  const Index k = code.code_dim();
  const Vector phi = code_purification(code);  // doubles as the R (x) B target

  // Branch operators on B per (measurement outcome, syndrome).
  std::vector<Matrix> weyl_ops(static_cast<size_t>(labels));
  for (Index xi = 0; xi < labels; ++xi) weyl_ops[xi] = weyl(ZdVec::from_index(d, n, xi)).matrix;
  const KrausChannel dec = decoder(code);

  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma_ab.matrix());

  Matrix rb = Matrix::Zero(k * dim, k * dim);
  for (Index w = 0; w < es.eigenvalues().size(); ++w) {
    const Real weight = es.eigenvalues()(w);
    if (weight <= 1e-14) continue;
    const Vector component = es.eigenvectors().col(w);  // on A (x) B

    for (Index xi = 0; xi < labels; ++xi) {
      const Vector u = bell_psi_prime(ZdVec::from_index(d, n, xi)).vector;
      // y(r, b) = sum_{t, a} conj(u(t, a)) phi(r, t) component(a, b)
      Matrix y = Matrix::Zero(k, dim);
      for (Index t = 0; t < dim; ++t)
        for (Index a = 0; a < dim; ++a) {
          const Complex coeff = std::conj(u(t * dim + a));
          if (coeff == Complex(0.0, 0.0)) continue;
          for (Index r = 0; r < k; ++r) {
            const Complex amp = phi(r * dim + t);
            if (amp == Complex(0.0, 0.0)) continue;
            y.row(r) += (coeff * amp) * component.segment(a * dim, dim).transpose();
          }
        }
      const Matrix corrected = y * weyl_ops[xi].transpose();  // N_x on the B index
      for (const Matrix& op : dec.ops()) {
        const Matrix branch = corrected * op.transpose();
        Vector gamma(k * dim);
        for (Index r = 0; r < k; ++r) gamma.segment(r * dim, dim) = branch.row(r).transpose();
        rb += weight * (gamma * gamma.adjoint());
      }
    }
  }

  const Real fidelity = (phi.adjoint() * rb * phi)(0, 0).real();
  return DistillationRun{d, n, k, DensityMatrix(Matrix(0.5 * (rb + rb.adjoint()))), fidelity};
}

}  // namespace

DistillationRun distill(const DensityMatrix& sigma_ab, const SymplecticCode& code,
                        DistillMode mode) {
  const Index dim = checked_pow(code.d(), code.n(), kDenseDimGuard);
  if (sigma_ab.dim() != dim * dim)
    throw DimensionError("distill: shared state dim is not d^{2n}");
  if (!code.has_reps()) throw ValidationError("distill: code has no coset representatives");
  const Index full = code.code_dim() * dim * dim * dim;
  if (mode == DistillMode::Auto)
    mode = full <= 512 ? DistillMode::Dense : DistillMode::PureState;
  if (mode == DistillMode::Dense && full > kTeleportDimGuard)
    throw GuardError("distill: dense simulation of dim " + std::to_string(full) +
                     " exceeds the guard; use the pure-state mode");
  return mode == DistillMode::Dense ? distill_dense(sigma_ab, code) : distill_pure(sigma_ab, code);
}

Theorem1Report theorem1_check(const DensityMatrix& sigma_ab, const SymplecticCode& code) {
  const DistillationRun run = distill(sigma_ab, code);
  const PauliChannel channel = teleport_channel(sigma_ab, code.d(), code.n());
  const PauliDistribution noise =
      PauliDistribution::explicit_table(code.d(), code.n(), channel.probs());
  const CodeFidelity fid = code_entanglement_fidelity(code, noise);
  Theorem1Report report;
  report.distilled_fidelity = run.fidelity;
  report.code_fidelity_channel = fid.via_channel;
  report.code_fidelity_mass = fid.via_distribution;
  report.gap = std::abs(run.fidelity - fid.via_channel);
  return report;
}

RateReport rate_report(const PauliDistribution& noise,
                       const std::vector<std::pair<std::string, SymplecticCode>>& codes) {
  RateReport report;
  report.asymptotic = distillation_bound(noise);
  for (const auto& [label, code] : codes) {
    RateRow row;
    row.label = label;
    row.d = code.d();
    row.n = code.n();
    row.code_dim = code.code_dim();
    row.rate = static_cast<Real>(code.n() - code.k()) / static_cast<Real>(code.n());
    row.correctable_mass = mass(noise, correctable_set(code).labels);
    row.infidelity_bound_symplectic = 1.0 - row.correctable_mass;
    row.infidelity_bound_general = min_pure_fidelity_bound(row.infidelity_bound_symplectic);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qdistill
