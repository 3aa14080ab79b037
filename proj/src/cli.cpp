#include "qdistill/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qdistill/channels.hpp"
#include "qdistill/codes.hpp"
#include "qdistill/distill.hpp"
#include "qdistill/io.hpp"
#include "qdistill/noise.hpp"
#include "qdistill/verify.hpp"
#include "qdistill/weyl.hpp"

namespace qdistill {

namespace {

constexpr Real kCodeFidelityTol = 1e-9;
constexpr Real kDistillTol = 1e-8;

std::string format_real(Real v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string command_name(Command c) {
  switch (c) {
    case Command::VerifyLemma1: return "verify-lemma1";
    case Command::Twirl: return "twirl";
    case Command::ChoiRoundtrip: return "choi-roundtrip";
    case Command::CodeFidelity: return "code-fidelity";
    case Command::Distill: return "distill";
    case Command::Bounds: return "bounds";
    case Command::Exponent: return "exponent";
  }
  return "unknown";
}

void append_battery(Report& rep, const std::vector<CheckResult>& results, int d, int n) {
  for (const CheckResult& r : results) {
    ReportRow row;
    row.scenario = r.scenario;
    row.d = d;
    row.n = n;
    row.gap = r.gap;
    rep.rows.push_back(std::move(row));
    rep.pass = rep.pass && r.pass;
  }
}

// Bell-diagonal shared state realizing the noise model.
DensityMatrix bell_mixture(const PauliDistribution& dist) {
  const Matrix u = bell_basis_matrix(dist.d(), dist.n());
  const RealVector probs = dist.to_explicit();
  return DensityMatrix(u * probs.cast<Complex>().asDiagonal() * u.adjoint());
}

struct LoadedScenario {
  PauliDistribution noise;
  SymplecticCode code;
};

LoadedScenario load_scenario(const RunConfig& cfg) {
  if (cfg.noise_path.empty()) throw ValidationError("a --noise file is required");
  if (cfg.code_path.empty()) throw ValidationError("a --code file is required");
  PauliDistribution noise = load_noise_file(cfg.noise_path);
  const Subspace stabilizer = load_code_file(cfg.code_path);
  if (stabilizer.d() != noise.d() || stabilizer.n() != noise.n())
    throw ValidationError("code (d=" + std::to_string(stabilizer.d()) + ", n=" +
                          std::to_string(stabilizer.n()) + ") and noise (d=" +
                          std::to_string(noise.d()) + ", n=" + std::to_string(noise.n()) +
                          ") do not match");
  SymplecticCode code = build_code_ml(stabilizer, noise);
  return LoadedScenario{std::move(noise), std::move(code)};
}

void fill_bound_columns(ReportRow& row, const BoundReport& bound) {
  if (bound.derived) row.bound_hashing_or_markov = bound.value;
}

Report run_verify_lemma1(const RunConfig& cfg) {
  Report rep;
  append_battery(rep, lemma1_battery(cfg.d, cfg.n, cfg.seed), cfg.d, cfg.n);
  rep.notes.push_back("tolerance 1e-9 on the gap between the full simulation and the closed form");
  return rep;
}

Report run_twirl(const RunConfig& cfg) {
  Report rep;
  append_battery(rep, twirl_battery(cfg.d, cfg.n, cfg.seed), cfg.d, cfg.n);
  return rep;
}

Report run_choi(const RunConfig& cfg) {
  Report rep;
  append_battery(rep, choi_roundtrip_battery(cfg.d, cfg.n, cfg.seed), cfg.d, cfg.n);
  return rep;
}

Report run_code_fidelity(const RunConfig& cfg) {
  Report rep;
  LoadedScenario sc = load_scenario(cfg);
  const CodeFidelity fid = code_entanglement_fidelity(sc.code, sc.noise);
  ReportRow row;
  row.scenario = "code-fidelity";
  row.d = sc.code.d();
  row.n = sc.code.n();
  row.code_dim = sc.code.code_dim();
  row.rate = static_cast<Real>(sc.code.n() - sc.code.k()) / static_cast<Real>(sc.code.n());
  row.fidelity_way1 = fid.via_channel;
  row.fidelity_way2 = fid.via_distribution;
  row.gap = std::abs(fid.via_channel - fid.via_distribution);
  row.bound_corollary1 = min_pure_fidelity_bound(1.0 - fid.via_distribution);
  fill_bound_columns(row, distillation_bound(sc.noise));
  rep.pass = *row.gap < kCodeFidelityTol;
  rep.rows.push_back(std::move(row));
  rep.notes.push_back("fidelity via channel simulation and via correctable-set mass; tolerance 1e-9");
  return rep;
}

Report run_distill(const RunConfig& cfg) {
  Report rep;
  LoadedScenario sc = load_scenario(cfg);
  const DensityMatrix sigma = bell_mixture(sc.noise);
  const Theorem1Report check = theorem1_check(sigma, sc.code);
  ReportRow row;
  row.scenario = "distill";
  row.d = sc.code.d();
  row.n = sc.code.n();
  row.code_dim = sc.code.code_dim();
  row.rate = static_cast<Real>(sc.code.n() - sc.code.k()) / static_cast<Real>(sc.code.n());
  row.fidelity_way1 = check.distilled_fidelity;
  row.fidelity_way2 = check.code_fidelity_channel;
  row.gap = check.gap;
  row.bound_corollary1 = min_pure_fidelity_bound(1.0 - check.code_fidelity_mass);
  fill_bound_columns(row, distillation_bound(sc.noise));
  const Real infidelity = 1.0 - check.distilled_fidelity;
  rep.pass = check.gap < kDistillTol &&
             infidelity <= *row.bound_corollary1 + kDistillTol &&
             infidelity <= (1.0 - check.code_fidelity_mass) + kDistillTol;
  rep.rows.push_back(std::move(row));
  rep.notes.push_back("distilled fidelity vs code fidelity on the teleportation channel; tolerance 1e-8");

  if (cfg.samples > 0) {
    Rng rng(cfg.seed);
    const DensityMatrix input = DensityMatrix::projector_state(sc.code.projector());
    for (int i = 0; i < cfg.samples; ++i) {
      const auto [outcome, conditional] = teleport_sample(input, sigma, sc.code.d(), sc.code.n(), rng);
      (void)conditional;
      rep.notes.push_back("sampled measurement outcome " + std::to_string(i) + ": " + outcome.str());
    }
  }
  return rep;
}

Report run_bounds(const RunConfig& cfg) {
  Report rep;
  if (cfg.noise_path.empty()) throw ValidationError("a --noise file is required");
  const PauliDistribution noise = load_noise_file(cfg.noise_path);
  const BoundReport bound = distillation_bound(noise);
  ReportRow row;
  row.scenario = bound.derived ? "bound:" + bound.kind : "bound:none";
  row.d = noise.d();
  row.n = noise.n();
  fill_bound_columns(row, bound);
  rep.rows.push_back(std::move(row));
  if (bound.derived) {
    rep.notes.push_back(bound.kind + " bound = " + format_real(bound.value) +
                        " (base-d units" + std::string(noise.d() == 2 ? ", i.e. bits" : "") + ")");
    if (bound.vacuous) rep.notes.push_back("bound vacuous (<= 0)");
  }
  if (!bound.note.empty()) rep.notes.push_back(bound.note);
  return rep;
}

Report run_exponent(const RunConfig& cfg) {
  Report rep;
  if (cfg.noise_path.empty()) throw ValidationError("a --noise file is required");
  if (!cfg.rate) throw ValidationError("--rate is required for the exponent command");
  const PauliDistribution noise = load_noise_file(cfg.noise_path);
  RealVector single;
  if (noise.form() == PauliDistribution::Form::IID) single = noise.single_letter();
  else if (noise.n() == 1) single = noise.to_explicit();
  else throw ValidationError("exponent requires an iid noise model (or explicit with n = 1)");
  const Real value = error_exponent(*cfg.rate, single, noise.d());
  ReportRow row;
  row.scenario = "exponent";
  row.d = noise.d();
  row.n = 1;
  row.rate = *cfg.rate;
  row.value = value;
  rep.rows.push_back(std::move(row));
  rep.notes.push_back("E(R) = " + format_real(value) + " at R = " + format_real(*cfg.rate) +
                      " (base-d units)");
  return rep;
}

std::string optional_cell(const std::optional<Real>& v) { return v ? format_real(*v) : ""; }

}  // namespace

std::string report_csv(const Report& rep) {
  std::ostringstream os;
  os << "# command=" << rep.command << " seed=" << rep.seed << "\n";
  os << "scenario,d,n,K,rate,fidelity_way1,fidelity_way2,gap,bound_corollary1,"
        "bound_hashing_or_markov,value\n";
  for (const ReportRow& r : rep.rows) {
    os << r.scenario << "," << r.d << "," << r.n << ","
       << (r.code_dim ? std::to_string(*r.code_dim) : "") << "," << optional_cell(r.rate) << ","
       << optional_cell(r.fidelity_way1) << "," << optional_cell(r.fidelity_way2) << ","
       << optional_cell(r.gap) << "," << optional_cell(r.bound_corollary1) << ","
       << optional_cell(r.bound_hashing_or_markov) << "," << optional_cell(r.value) << "\n";
  }
  return os.str();
}

std::string report_json_text(const Report& rep) {
  nlohmann::json j;
  j["command"] = rep.command;
  j["seed"] = rep.seed;
  j["pass"] = rep.pass;
  j["notes"] = rep.notes;
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& r : rep.rows) {
    nlohmann::json row;
    row["scenario"] = r.scenario;
    row["d"] = r.d;
    row["n"] = r.n;
    if (r.code_dim) row["K"] = *r.code_dim;
    if (r.rate) row["rate"] = *r.rate;
    if (r.fidelity_way1) row["fidelity_way1"] = *r.fidelity_way1;
    if (r.fidelity_way2) row["fidelity_way2"] = *r.fidelity_way2;
    if (r.gap) row["gap"] = *r.gap;
    if (r.bound_corollary1) row["bound_corollary1"] = *r.bound_corollary1;
    if (r.bound_hashing_or_markov) row["bound_hashing_or_markov"] = *r.bound_hashing_or_markov;
    if (r.value) row["value"] = *r.value;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

int run(const RunConfig& config) {
  try {
    if (config.d < 2) throw ValidationError("d must be >= 2");
    if (config.n < 1) throw ValidationError("n must be >= 1");
    if (config.format != "csv" && config.format != "json")
      throw ValidationError("format must be csv or json");

    Report rep;
    switch (config.command) {
      case Command::VerifyLemma1: rep = run_verify_lemma1(config); break;
      case Command::Twirl: rep = run_twirl(config); break;
      case Command::ChoiRoundtrip: rep = run_choi(config); break;
      case Command::CodeFidelity: rep = run_code_fidelity(config); break;
      case Command::Distill: rep = run_distill(config); break;
      case Command::Bounds: rep = run_bounds(config); break;
      case Command::Exponent: rep = run_exponent(config); break;
    }
    rep.command = command_name(config.command);
    rep.seed = config.seed;

    for (const std::string& note : rep.notes) std::cout << note << "\n";
    Real worst_gap = 0.0;
    for (const ReportRow& r : rep.rows)
      if (r.gap) worst_gap = std::max(worst_gap, *r.gap);
    std::cout << rep.command << ": " << rep.rows.size() << " row(s)";
    if (worst_gap > 0.0) std::cout << ", max gap " << format_real(worst_gap);
    std::cout << " -> " << (rep.pass ? "PASS" : "FAIL") << "\n";

    if (!config.output_path.empty()) {
      std::ofstream out(config.output_path);
      if (!out) throw ValidationError("cannot write report file: " + config.output_path);
      out << (config.format == "csv" ? report_csv(rep) : report_json_text(rep));
    } else if (config.format == "json") {
      std::cout << report_json_text(rep) << "\n";
    }
    return rep.pass ? kExitOk : kExitToleranceFailure;
  } catch (const GuardError& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return kExitGuardViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace qdistill
