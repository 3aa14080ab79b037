#pragma once

// Batch command surface. Every number in a report is produced by exactly one
// library operation; this layer only dispatches and formats.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdistill/types.hpp"

namespace qdistill {

enum class Command {
  VerifyLemma1,
  Twirl,
  ChoiRoundtrip,
  CodeFidelity,
  Distill,
  Bounds,
  Exponent,
};

struct RunConfig {
  Command command = Command::VerifyLemma1;
  int d = 2;
  int n = 1;
  std::uint64_t seed = 1;
  std::string noise_path;
  std::string code_path;
  std::string output_path;  // empty: stdout only
  std::string format = "csv";  // csv | json
  std::optional<Real> rate;    // exponent command
  int samples = 0;             // distill: sampled-outcome demo count
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitGuardViolation = 3;

// Stable report row schema (CSV columns in this order).
struct ReportRow {
  std::string scenario;
  int d = 0;
  int n = 0;
  std::optional<Index> code_dim;
  std::optional<Real> rate;
  std::optional<Real> fidelity_way1;
  std::optional<Real> fidelity_way2;
  std::optional<Real> gap;
  std::optional<Real> bound_corollary1;
  std::optional<Real> bound_hashing_or_markov;
  std::optional<Real> value;  // bounds / exponent scalar results
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  bool pass = true;
};

std::string report_csv(const Report& rep);
std::string report_json_text(const Report& rep);

// Runs the command, prints a summary, writes the report file when configured.
// Returns one of the exit codes above.
int run(const RunConfig& config);

}  // namespace qdistill
