#pragma once

// JSON schemas for noise models and code specifications.
//
// Noise model: {"d": int, "n": int, "form": "iid"|"markov"|"explicit",
//   "single_letter": [d^2 floats],            (iid)
//   "initial": [d^2 floats],
//   "transition": [[d^2 floats] x d^2],       (markov; rows are sources)
//   "table": [{"label": [[x,z], ...], "p": float}, ...]}  (explicit)
// Letters are [x, z] pairs; letter index is x*d + z.
//
// Code spec: {"d": int, "n": int, "stabilizer_basis": [[2n residues], ...]}
// with vectors in interleaved (x1, z1, ..., xn, zn) coordinates.

#include <string>

#include <json.hpp>

#include "qdistill/noise.hpp"
#include "qdistill/zd.hpp"

namespace qdistill {

PauliDistribution load_noise_json(const nlohmann::json& j);
PauliDistribution load_noise_file(const std::string& path);
nlohmann::json noise_to_json(const PauliDistribution& dist);

// Returns the stabilizer subspace; rejects non-self-orthogonal input naming
// the violating pair of basis vectors.
Subspace load_code_json(const nlohmann::json& j);
Subspace load_code_file(const std::string& path);
nlohmann::json code_to_json(const Subspace& stabilizer);

}  // namespace qdistill
