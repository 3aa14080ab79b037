#include "qdistill/verify.hpp"

#include <cmath>

#include "qdistill/channels.hpp"
#include "qdistill/random.hpp"
#include "qdistill/states.hpp"
#include "qdistill/weyl.hpp"

namespace qdistill {

namespace {

constexpr Real kLemma1Tol = 1e-9;
constexpr Real kTwirlTol = 1e-10;
constexpr Real kIdempotenceTol = 1e-12;
constexpr Real kChoiExactTol = 1e-12;
constexpr Real kChoiTwirlTol = 1e-10;

// Gap between the full simulation and the closed form for one shared state:
// Choi matrices of both induced channels, plus probe states through both.
Real lemma1_gap(const DensityMatrix& sigma, int d, int n, Rng& rng) {
  const Index dim = checked_pow(d, n);
  const PauliChannel closed_form = teleport_channel(sigma, d, n);

  // Choi matrix of the simulated channel: teleport the T half of a
  // maximally entangled R-T pair and reduce to R (x) B.
  const Vector psi0 = bell_psi(ZdVec::zero(d, n)).vector;
  const Matrix joint = kron(Matrix(psi0 * psi0.adjoint()), sigma.matrix());
  const Matrix evolved = teleport_conjugation_sum(joint, d, n, dim);
  const Matrix simulated_choi =
      partial_trace_matrix(evolved, {dim, dim, dim, dim}, {0, 3});
  Real gap = linf_diff(simulated_choi, choi_state(closed_form).matrix());

  // Probe states.
  std::vector<DensityMatrix> probes;
  Vector ground = Vector::Zero(dim);
  ground[0] = Complex(1.0, 0.0);
  probes.push_back(DensityMatrix::pure(ground));
  probes.push_back(DensityMatrix::pure(random_pure_state(dim, rng)));
  probes.push_back(random_density(dim, rng));
  for (const DensityMatrix& rho : probes) {
    const DensityMatrix full = teleport_full(rho, sigma, d, n);
    const DensityMatrix marginal = partial_trace(full, {dim, dim, dim}, {2});
    const DensityMatrix direct = apply_pauli(closed_form, rho);
    gap = std::max(gap, linf_diff(marginal.matrix(), direct.matrix()));
  }
  return gap;
}

}  // namespace

std::vector<CheckResult> lemma1_battery(int d, int n, std::uint64_t seed, int random_count) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  Rng rng(seed);
  std::vector<CheckResult> results;
  const auto record = [&](const std::string& scenario, Real gap) {
    results.push_back({scenario, gap, kLemma1Tol, gap < kLemma1Tol});
  };

  if (n == 1) {
    for (Index yi = 0; yi < labels; ++yi) {
      const ZdVec y = ZdVec::from_index(d, n, yi);
      const DensityMatrix sigma = DensityMatrix::pure(bell_psi(y).vector);
      record("bell" + y.str(), lemma1_gap(sigma, d, n, rng));
    }
    for (int i = 0; i < random_count; ++i)
      record("bell_mixture_" + std::to_string(i),
             lemma1_gap(random_bell_diagonal(d, n, rng), d, n, rng));
  }
  const int generic_count = n == 1 ? random_count : random_count / 2;
  for (int i = 0; i < generic_count; ++i)
    record("generic_" + std::to_string(i), lemma1_gap(random_density(labels, rng), d, n, rng));
  return results;
}

std::vector<CheckResult> twirl_battery(int d, int n, std::uint64_t seed, int count) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  Rng rng(seed);
  std::vector<CheckResult> results;
  for (int i = 0; i < count; ++i) {
    const DensityMatrix sigma = random_density(labels, rng);
    const DensityMatrix averaged = twirl(sigma, d, n);
    const DensityMatrix projected = bell_diagonal_part(sigma, d, n);
    const Real gap_routes = linf_diff(averaged.matrix(), projected.matrix());
    results.push_back({"average_vs_projection_" + std::to_string(i), gap_routes, kTwirlTol,
                       gap_routes < kTwirlTol});

    const Real gap_idem = linf_diff(twirl(averaged, d, n).matrix(), averaged.matrix());
    results.push_back(
        {"idempotence_" + std::to_string(i), gap_idem, kIdempotenceTol, gap_idem < kIdempotenceTol});

    const Real gap_channel = (teleport_channel(averaged, d, n).probs() -
                              teleport_channel(sigma, d, n).probs())
                                 .cwiseAbs()
                                 .maxCoeff();
    results.push_back({"channel_invariance_" + std::to_string(i), gap_channel, kTwirlTol,
                       gap_channel < kTwirlTol});
  }
  return results;
}

std::vector<CheckResult> choi_roundtrip_battery(int d, int n, std::uint64_t seed, int count) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  Rng rng(seed);
  std::vector<CheckResult> results;
  for (int i = 0; i < count; ++i) {
    const PauliChannel ch = random_pauli_channel(d, n, rng);
    const PauliChannel back = teleport_channel(choi_state(ch), d, n);
    const Real gap = (back.probs() - ch.probs()).cwiseAbs().maxCoeff();
    results.push_back(
        {"channel_state_channel_" + std::to_string(i), gap, kChoiExactTol, gap < kChoiExactTol});
  }
  for (int i = 0; i < count; ++i) {
    const DensityMatrix sigma = random_density(labels, rng);
    const DensityMatrix back = choi_state(to_kraus(teleport_channel(sigma, d, n)), d, n);
    const Real gap = linf_diff(back.matrix(), twirl(sigma, d, n).matrix());
    results.push_back(
        {"state_channel_state_" + std::to_string(i), gap, kChoiTwirlTol, gap < kChoiTwirlTol});
  }
  return results;
}

}  // namespace qdistill
