#pragma once

// Seeded verification batteries shared by the CLI and the acceptance suite.
// Each battery compares two independently computed routes and reports the
// observed gap per scenario.

#include <cstdint>
#include <string>
#include <vector>

#include "qdistill/types.hpp"

namespace qdistill {

struct CheckResult {
  std::string scenario;
  Real gap = 0.0;
  Real tolerance = 0.0;
  bool pass = false;
};

// Full teleportation simulation vs the closed-form Pauli channel, compared
// both on Choi matrices and on probe input states. Scenarios: every Bell
// projector (n = 1 only), random Bell-diagonal mixtures, random generic
// states.
std::vector<CheckResult> lemma1_battery(int d, int n, std::uint64_t seed,
                                        int random_count = 20);

// Explicit twirling average vs Bell-diagonal projection, idempotence, and
// invariance of the teleportation channel under twirling.
std::vector<CheckResult> twirl_battery(int d, int n, std::uint64_t seed, int count = 20);

// Choi round trips: channel -> state -> channel recovers Pauli channels
// exactly; state -> channel -> state equals the twirl.
std::vector<CheckResult> choi_roundtrip_battery(int d, int n, std::uint64_t seed,
                                                int count = 20);

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

inline Real max_gap(const std::vector<CheckResult>& rs) {
  Real g = 0.0;
  for (const auto& r : rs) g = std::max(g, r.gap);
  return g;
}

}  // namespace qdistill
