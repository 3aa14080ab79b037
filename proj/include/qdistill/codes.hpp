#pragma once

// Symplectic (stabilizer) qudit codes from self-orthogonal subspaces:
// projector construction, maximum-likelihood coset representatives, syndrome
// decoding, correctability checks, and the code entanglement fidelity.
//
// The code space is the joint eigenvalue-1 eigenspace of the phase-corrected
// generator unitaries W_i = phi_i N_{l_i} (phi_i chosen so W_i^d = I), the
// deterministic realization of the syndrome-zero eigenspace. Each N_{l_i}
// acts on it as the unimodular scalar 1/phi_i. The syndrome of a label x is
// s_i(x) = <x, l_i>, constant on cosets of the symplectic dual.

#include <vector>

#include "qdistill/channels.hpp"
#include "qdistill/noise.hpp"
#include "qdistill/states.hpp"
#include "qdistill/zd.hpp"

namespace qdistill {

class SymplecticCode {
 public:
  int d() const { return d_; }
  int n() const { return n_; }
  int k() const { return k_; }
  Index code_dim() const { return code_dim_; }      // K = d^{n-k}
  Index num_syndromes() const { return num_syndromes_; }  // d^k

  const Subspace& stabilizer() const { return stabilizer_; }
  const Subspace& dual() const { return dual_; }
  const Matrix& projector() const { return projector_; }
  // Orthonormal columns spanning the code space (d^n x K).
  const Matrix& code_basis() const { return code_basis_; }
  const std::vector<Matrix>& generator_unitaries() const { return gens_; }

  IntVector syndrome_of(const ZdVec& x) const;
  Index syndrome_index(const IntVector& s) const;
  IntVector syndrome_from_index(Index idx) const;
  Matrix syndrome_projector(const IntVector& s) const;

  bool has_reps() const { return !reps_.empty(); }
  // Coset representative per syndrome index.
  const std::vector<ZdVec>& reps() const;

  friend SymplecticCode build_code(const Subspace& stabilizer);
  friend SymplecticCode with_reps(const SymplecticCode& code, std::vector<ZdVec> reps);

 private:
  SymplecticCode() : stabilizer_(Subspace::zero(2, 1)), dual_(Subspace::zero(2, 1)) {}
  int d_ = 0, n_ = 0, k_ = 0;
  Index code_dim_ = 0, num_syndromes_ = 0;
  Subspace stabilizer_;
  Subspace dual_;
  std::vector<Matrix> gens_;              // W_i, order d, pairwise commuting
  std::vector<std::vector<Matrix>> gen_powers_;
  Matrix projector_;
  Matrix code_basis_;
  std::vector<ZdVec> reps_;
};

// Builds the code for a self-orthogonal stabilizer subspace (no coset
// representatives chosen yet).
SymplecticCode build_code(const Subspace& stabilizer);

// For each coset s of the dual, the representative maximizing
// sum_{l in L} P(x + l) over x in s; ties broken lexicographically.
// Result is indexed by syndrome index.
std::vector<ZdVec> choose_reps(const Subspace& stabilizer, const PauliDistribution& p);

// Copy of code carrying the given representatives (validated against the
// syndrome map).
SymplecticCode with_reps(const SymplecticCode& code, std::vector<ZdVec> reps);

SymplecticCode build_code_ml(const Subspace& stabilizer, const PauliDistribution& p);
// Full-space code (L = {0}) with the identity representative.
SymplecticCode trivial_code(int d, int n);

// J = { rep(s) + l : s syndrome, l in L }, duplicate-free.
struct CorrectableSet {
  std::vector<ZdVec> labels;
};

CorrectableSet correctable_set(const SymplecticCode& code);

// Knill-Laflamme condition: Pi N_x^dag N_y Pi = c_{x,y} Pi for all x, y in J.
bool kl_check(const SymplecticCode& code, const std::vector<ZdVec>& labels);

// Syndrome measurement followed by the representative correction:
// Kraus operators { N_{rep(s)}^dag Pi_s }.
KrausChannel decoder(const SymplecticCode& code);

struct CodeFidelity {
  Real via_channel;       // entanglement fidelity of decoder after the noise channel
  Real via_distribution;  // probability mass of the correctable set
};

// Both routes to the code entanglement fidelity under Pauli noise.
CodeFidelity code_entanglement_fidelity(const SymplecticCode& code, const PauliDistribution& p);

}  // namespace qdistill
