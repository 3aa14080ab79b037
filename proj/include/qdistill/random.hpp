#pragma once

// Seeded random generators for test batteries and CLI verification runs.
// All draws go through std::mt19937_64 so a fixed seed replays a battery.

#include "qdistill/channels.hpp"
#include "qdistill/states.hpp"
#include "qdistill/types.hpp"

namespace qdistill {

Vector random_pure_state(Index dim, Rng& rng);
Matrix random_unitary(Index dim, Rng& rng);
// Ginibre construction: G G^dag normalized.
DensityMatrix random_density(Index dim, Rng& rng);
// Mixture of Bell projectors with Dirichlet(1) weights.
DensityMatrix random_bell_diagonal(int d, int n, Rng& rng);
PauliChannel random_pauli_channel(int d, int n, Rng& rng);
// Stinespring dilation of a Haar unitary with num_env Kraus operators.
KrausChannel random_kraus_channel(Index dim, int num_env, Rng& rng);
RealVector random_simplex_point(Index size, Rng& rng);

}  // namespace qdistill
