// Acceptance suite: end-to-end identities at pinned tolerances, one summary
// line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdistill/channels.hpp"
#include "qdistill/codes.hpp"
#include "qdistill/distill.hpp"
#include "qdistill/noise.hpp"
#include "qdistill/random.hpp"
#include "qdistill/verify.hpp"
#include "qdistill/weyl.hpp"

using namespace qdistill;

namespace {

void report_line(int criterion, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %02d [%s] %s (%s)\n", criterion, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  std::fflush(stdout);
}

std::string gap_text(Real gap) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max gap %.3e", gap);
  return buf;
}

PauliDistribution x_noise(Real eps, int n) {
  RealVector single = RealVector::Zero(4);
  single[0] = 1.0 - eps;
  single[2] = eps;
  return PauliDistribution::iid(2, n, single);
}

PauliDistribution markov_x_noise(int n) {
  RealVector initial(4);
  initial << 0.875, 0.0, 0.125, 0.0;
  RealMatrix t = RealMatrix::Zero(4, 4);
  t(0, 0) = 0.9; t(0, 2) = 0.1;
  t(1, 0) = 0.9; t(1, 2) = 0.1;
  t(2, 0) = 0.7; t(2, 2) = 0.3;
  t(3, 0) = 0.9; t(3, 2) = 0.1;
  return PauliDistribution::markov(2, n, initial, t);
}

Subspace bitflip_stabilizer() {
  return Subspace(2, 3, {ZdVec(2, {0, 1, 0, 1, 0, 0}), ZdVec(2, {0, 0, 0, 1, 0, 1})});
}

DensityMatrix bell_mixture(const PauliDistribution& dist) {
  const Matrix u = bell_basis_matrix(dist.d(), dist.n());
  const RealVector probs = dist.to_explicit();
  return DensityMatrix(u * probs.cast<Complex>().asDiagonal() * u.adjoint());
}

SymplecticCode code_for(const Subspace& l, const DensityMatrix& sigma) {
  const PauliChannel ch = teleport_channel(sigma, l.d(), l.n());
  return with_reps(build_code(l),
                   choose_reps(l, PauliDistribution::explicit_table(l.d(), l.n(), ch.probs())));
}

struct ProtocolScenario {
  std::string name;
  Real distilled = 0.0;
  Real code_fidelity = 0.0;
  Real correctable_mass = 0.0;
  Real gap = 0.0;
};

// Shared battery for the distillation-identity and bound criteria: shared
// states {perfect, Bell-diagonal, generic} against {full-space, stabilizer}
// codes at small scale, plus the three-system repetition case in pure-state
// mode.
std::vector<ProtocolScenario> protocol_battery() {
  std::vector<ProtocolScenario> rows;
  Rng rng(20240817);
  const auto add = [&rows](const std::string& name, const DensityMatrix& sigma,
                           const SymplecticCode& code) {
    const Theorem1Report rep = theorem1_check(sigma, code);
    rows.push_back(ProtocolScenario{name, rep.distilled_fidelity, rep.code_fidelity_channel,
                                    rep.code_fidelity_mass, rep.gap});
  };

  for (int d : {2, 3}) {
    const Index dim2 = static_cast<Index>(d) * d;
    const DensityMatrix perfect = DensityMatrix::pure(bell_psi(ZdVec::zero(d, 1)).vector);
    const DensityMatrix diagonal = random_bell_diagonal(d, 1, rng);
    const DensityMatrix generic = random_density(dim2, rng);
    const Subspace stab(d, 1, {ZdVec(d, {0, 1})});
    for (const auto& [tag, sigma] :
         {std::pair<std::string, const DensityMatrix*>{"perfect", &perfect},
          {"bell_diagonal", &diagonal},
          {"generic", &generic}}) {
      const std::string prefix = "d" + std::to_string(d) + "n1/" + tag;
      add(prefix + "/trivial", *sigma, trivial_code(d, 1));
      add(prefix + "/stabilizer", *sigma, code_for(stab, *sigma));
    }
  }

  {
    const DensityMatrix perfect = DensityMatrix::pure(bell_psi(ZdVec::zero(2, 2)).vector);
    const DensityMatrix diagonal = random_bell_diagonal(2, 2, rng);
    const DensityMatrix generic = random_density(16, rng);
    const Subspace zz(2, 2, {ZdVec(2, {0, 1, 0, 1})});
    for (const auto& [tag, sigma] :
         {std::pair<std::string, const DensityMatrix*>{"perfect", &perfect},
          {"bell_diagonal", &diagonal},
          {"generic", &generic}}) {
      const std::string prefix = "d2n2/" + std::string(tag);
      add(prefix + "/trivial", *sigma, trivial_code(2, 2));
      add(prefix + "/repetition", *sigma, code_for(zz, *sigma));
    }
  }

  {
    // Three-system repetition code in pure-state mode.
    const PauliDistribution noise = x_noise(0.1, 3);
    add("d2n3/x_noise/bitflip", bell_mixture(noise), build_code_ml(bitflip_stabilizer(), noise));
    const PauliDistribution correlated = markov_x_noise(3);
    add("d2n3/markov_x/bitflip", bell_mixture(correlated),
        build_code_ml(bitflip_stabilizer(), correlated));
  }
  return rows;
}

}  // namespace

TEST_CASE("criterion 1: teleportation channel closed form") {
  const auto start = std::chrono::steady_clock::now();
  Real worst = 0.0;
  bool pass = true;
  for (auto [d, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto results = lemma1_battery(d, n, 811 + d + n);
    pass = pass && all_pass(results);
    worst = std::max(worst, max_gap(results));
  }
  const Real seconds =
      std::chrono::duration<Real>(std::chrono::steady_clock::now() - start).count();
  pass = pass && worst < 1e-9 && seconds < 60.0;
  report_line(1, "full teleportation matches the closed-form channel", pass,
              gap_text(worst) + ", " + std::to_string(seconds) + " s");
  CHECK(pass);
}

TEST_CASE("criterion 2: character orthogonality") {
  Real worst = 0.0;
  for (int d : {2, 3}) {
    for (int n : {1, 2}) {
      const Index labels = checked_pow(d, 2 * n);
      for (Index ai = 1; ai < labels; ++ai)
        worst = std::max(worst, std::abs(character_sum(ZdVec::from_index(d, n, ai))));
    }
  }
  const bool pass = worst < 1e-9;
  report_line(2, "nontrivial character sums vanish", pass, gap_text(worst));
  CHECK(pass);
}

TEST_CASE("criterion 3: twirling average equals the Bell-diagonal part") {
  Real worst_routes = 0.0, worst_idem = 0.0;
  bool pass = true;
  for (auto [d, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    const auto results = twirl_battery(d, n, 31337 + d + n, 20);
    pass = pass && all_pass(results);
    for (const auto& r : results) {
      if (r.scenario.rfind("idempotence", 0) == 0) worst_idem = std::max(worst_idem, r.gap);
      else worst_routes = std::max(worst_routes, r.gap);
    }
  }
  pass = pass && worst_routes < 1e-10 && worst_idem < 1e-12;
  report_line(3, "explicit average vs projection and idempotence", pass,
              gap_text(std::max(worst_routes, worst_idem)));
  CHECK(pass);
}

TEST_CASE("criterion 4: Choi round trips in both directions") {
  Real worst_exact = 0.0, worst_twirl = 0.0;
  bool pass = true;
  for (auto [d, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto results = choi_roundtrip_battery(d, n, 4242 + d + n, 20);
    pass = pass && all_pass(results);
    for (const auto& r : results) {
      if (r.scenario.rfind("channel_state_channel", 0) == 0)
        worst_exact = std::max(worst_exact, r.gap);
      else
        worst_twirl = std::max(worst_twirl, r.gap);
    }
  }
  pass = pass && worst_exact < 1e-12 && worst_twirl < 1e-10;
  report_line(4, "channel->state->channel exact; state->channel->state is the twirl", pass,
              gap_text(std::max(worst_exact, worst_twirl)));
  CHECK(pass);
}

TEST_CASE("criterion 5: distillation fidelity equals the code fidelity") {
  const auto rows = protocol_battery();
  Real worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.gap);
  const bool pass = worst < 1e-8;
  report_line(5, "full protocol vs code fidelity on the induced channel", pass,
              gap_text(worst) + ", " + std::to_string(rows.size()) + " scenarios");
  CHECK(pass);
}

TEST_CASE("criterion 6: code fidelity equals the correctable mass") {
  Real worst = 0.0;
  bool pass = true;
  for (Real eps : {0.05, 0.1, 0.2}) {
    const PauliDistribution noise = x_noise(eps, 3);
    const CodeFidelity fid =
        code_entanglement_fidelity(build_code_ml(bitflip_stabilizer(), noise), noise);
    worst = std::max(worst, std::abs(fid.via_channel - fid.via_distribution));
    if (eps == 0.1) pass = pass && std::abs(fid.via_distribution - 0.972) < 1e-9;
  }
  const PauliDistribution correlated = markov_x_noise(3);
  const CodeFidelity fid =
      code_entanglement_fidelity(build_code_ml(bitflip_stabilizer(), correlated), correlated);
  worst = std::max(worst, std::abs(fid.via_channel - fid.via_distribution));
  pass = pass && worst < 1e-9;
  report_line(6, "channel-route fidelity equals the correctable-set mass", pass, gap_text(worst));
  CHECK(pass);
}

TEST_CASE("criterion 7: infidelity bounds hold on every scenario") {
  const auto rows = protocol_battery();
  bool pass = true;
  Real worst_slack = 0.0;
  for (const auto& row : rows) {
    const Real infidelity = 1.0 - row.distilled;
    const Real residual_mass = 1.0 - row.correctable_mass;
    pass = pass && infidelity <= 1.5 * residual_mass + 1e-8;
    pass = pass && infidelity <= residual_mass + 1e-8;  // stabilizer codes drop the 3/2
    worst_slack = std::max(worst_slack, infidelity - residual_mass);
  }
  report_line(7, "distillation infidelity within both bounds", pass,
              "max excess " + gap_text(worst_slack).substr(8));
  CHECK(pass);
}

TEST_CASE("criterion 8: correlated-chain rate bound values") {
  // Constant error rate: closed form in bits.
  RealMatrix t_const(4, 4);
  for (Index u = 0; u < 4; ++u) {
    for (Index v = 0; v < 4; ++v) t_const(u, v) = 0.1 / 3.0;
    t_const(u, 0) = 0.9;
  }
  const RealVector q_const = analyze_chain(t_const).classes[0].stationary;
  const Real bound_const = markov_bound(t_const, q_const, 2);
  const Real closed_form = 1.0 - testing::binary_entropy_bits(0.1) - 0.1 * std::log2(3.0);
  bool pass = std::abs(bound_const - closed_form) < 1e-12;
  pass = pass && std::abs(bound_const - 0.372508) < 1e-6;

  // Letter-dependent error rates against a long power iteration.
  RealVector eps(4);
  eps << 0.05, 0.1, 0.15, 0.2;
  RealMatrix t(4, 4);
  for (Index u = 0; u < 4; ++u) {
    for (Index v = 0; v < 4; ++v) t(u, v) = eps[u] / 3.0;
    t(u, 0) = 1.0 - eps[u];
  }
  const Real bound = markov_bound(t, analyze_chain(t).classes[0].stationary, 2);
  const RealVector q_oracle =
      testing::power_iteration_stationary(t, 1000000, RealVector::Constant(4, 0.25));
  Real weighted = 0.0;
  for (Index u = 0; u < 4; ++u)
    weighted += q_oracle[u] * (testing::binary_entropy_bits(eps[u]) + eps[u] * std::log2(3.0));
  const Real gap = std::abs(bound - (1.0 - weighted));
  pass = pass && gap < 1e-8;
  report_line(8, "conditional-entropy bound matches closed form and oracle", pass,
              "value " + std::to_string(bound_const) + ", " + gap_text(gap));
  CHECK(pass);
}

TEST_CASE("criterion 9: error exponent against a dense grid search") {
  struct Pair {
    Real rate;
    RealVector p;
  };
  std::vector<Pair> pairs;
  RealVector p1(4);
  p1 << 0.9, 0.1 / 3.0, 0.1 / 3.0, 0.1 / 3.0;
  RealVector p2(4);
  p2 << 0.7, 0.1, 0.1, 0.1;
  RealVector p3(4);
  p3 << 0.85, 0.05, 0.05, 0.05;
  RealVector p4(4);
  p4 << 0.6, 0.2, 0.1, 0.1;
  pairs.push_back({0.2, p1});
  pairs.push_back({0.3, p1});
  pairs.push_back({0.1, p2});
  pairs.push_back({0.25, p3});
  pairs.push_back({0.05, p4});

  Real worst = 0.0;
  for (const Pair& pair : pairs) {
    const Real opt = error_exponent(pair.rate, pair.p, 2);
    const Real grid = testing::grid_search_exponent(pair.rate, pair.p, 2, 500);
    worst = std::max(worst, std::abs(opt - grid));
  }
  bool pass = worst < 1e-4;

  // Zero exactly above the single-letter rate bound, positive just below it.
  const Real capacity = hashing_bound(p1, 2);
  pass = pass && error_exponent(capacity, p1, 2) < 1e-9;
  pass = pass && error_exponent(std::min(1.0, capacity + 0.02), p1, 2) < 1e-9;
  pass = pass && error_exponent(capacity - 0.05, p1, 2) > 1e-6;
  report_line(9, "optimizer matches the simplex grid and the zero threshold", pass,
              gap_text(worst));
  CHECK(pass);
}

TEST_CASE("criterion 10: correctability conditions and exact recovery") {
  const PauliDistribution noise = x_noise(0.1, 3);
  const SymplecticCode code = build_code_ml(bitflip_stabilizer(), noise);
  auto labels = correctable_set(code).labels;
  bool pass = kl_check(code, labels);

  auto augmented = labels;
  augmented.push_back(ZdVec(2, {0, 1, 0, 0, 0, 0}));
  pass = pass && !kl_check(code, augmented);

  const KrausChannel dec = decoder(code);
  Real worst_infidelity = 0.0;
  for (const ZdVec& x : labels) {
    for (Index j = 0; j < code.code_dim(); ++j) {
      const Vector state = code.code_basis().col(j);
      const Vector corrupted = weyl(x).matrix * state;
      const DensityMatrix decoded = apply(dec, DensityMatrix::pure(corrupted));
      const Real fidelity = (state.adjoint() * decoded.matrix() * state)(0, 0).real();
      worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity);
    }
  }
  pass = pass && worst_infidelity < 1e-9;
  report_line(10, "correctability check and exact recovery of the correctable set", pass,
              "max recovery infidelity " + gap_text(worst_infidelity).substr(8));
  CHECK(pass);
}
