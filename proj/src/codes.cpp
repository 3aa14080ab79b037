#include "qdistill/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qdistill {

namespace {

// Phase making phi * N_l a unitary of order d. N_l^d = omega^{-t} I with
// t = (d(d-1)/2) (a . b) mod d, so phi = exp(2 pi i t / d^2).
Complex order_fix_phase(const ZdVec& l) {
  const int d = l.d();
  long long dot = 0;
  for (int i = 0; i < l.n(); ++i) dot += 1LL * l.x(i) * l.z(i);
  const long long half_sum = 1LL * d * (d - 1) / 2;
  long long t = ((half_sum % d) * (dot % d)) % d;
  if (t < 0) t += d;
  if (t == 0) return Complex(1.0, 0.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<Real>(t) /
                             static_cast<Real>(1LL * d * d));
}

}  // namespace

IntVector SymplecticCode::syndrome_of(const ZdVec& x) const {
  if (x.d() != d_ || x.n() != n_) throw DimensionError("syndrome_of: label mismatch");
  IntVector s(k_);
  for (int i = 0; i < k_; ++i) s[i] = symplectic_form(x, stabilizer_.basis_vector(i));
  return s;
}

Index SymplecticCode::syndrome_index(const IntVector& s) const {
  if (s.size() != k_) throw DimensionError("syndrome_index: wrong syndrome length");
  Index idx = 0;
  for (int i = 0; i < k_; ++i) {
    if (s[i] < 0 || s[i] >= d_) throw DimensionError("syndrome_index: entry out of range");
    idx = idx * d_ + s[i];
  }
  return idx;
}

IntVector SymplecticCode::syndrome_from_index(Index idx) const {
  if (idx < 0 || idx >= num_syndromes_) throw DimensionError("syndrome_from_index: out of range");
  IntVector s(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    s[i] = static_cast<int>(idx % d_);
    idx /= d_;
  }
  return s;
}

Matrix SymplecticCode::syndrome_projector(const IntVector& s) const {
  if (s.size() != k_) throw DimensionError("syndrome_projector: wrong syndrome length");
  const Index dim = checked_pow(d_, n_, kTeleportDimGuard);
  Matrix proj = Matrix::Identity(dim, dim);
  // Commuting generators let the sum over exponent tuples factor per
  // generator: Pi_s = prod_i (1/d) sum_e omega^{s_i e} W_i^e.
  for (int i = 0; i < k_; ++i) {
    Matrix factor = Matrix::Zero(dim, dim);
    for (int e = 0; e < d_; ++e) factor += root_of_unity(d_, 1LL * s[i] * e) * gen_powers_[i][e];
    proj = proj * (factor / static_cast<Real>(d_));
  }
  return proj;
}

const std::vector<ZdVec>& SymplecticCode::reps() const {
  if (reps_.empty()) throw ValidationError("SymplecticCode: no coset representatives chosen");
  return reps_;
}

SymplecticCode build_code(const Subspace& stabilizer) {
  if (!is_self_orthogonal(stabilizer))
    throw ValidationError("build_code: stabilizer subspace is not self-orthogonal");
  SymplecticCode code;
  code.d_ = stabilizer.d();
  code.n_ = stabilizer.n();
  code.k_ = stabilizer.dim();
  code.stabilizer_ = stabilizer;
  code.dual_ = symplectic_dual(stabilizer);
  const Index dim = checked_pow(code.d_, code.n_, kTeleportDimGuard);
  code.code_dim_ = checked_pow(code.d_, code.n_ - code.k_);
  code.num_syndromes_ = checked_pow(code.d_, code.k_);

  code.gens_.reserve(code.k_);
  code.gen_powers_.resize(code.k_);
  for (int i = 0; i < code.k_; ++i) {
    const ZdVec l = stabilizer.basis_vector(i);
    Matrix w = order_fix_phase(l) * weyl(l).matrix;
    code.gen_powers_[i].resize(code.d_);
    code.gen_powers_[i][0] = Matrix::Identity(dim, dim);
    for (int e = 1; e < code.d_; ++e) code.gen_powers_[i][e] = code.gen_powers_[i][e - 1] * w;
    if ((code.gen_powers_[i][code.d_ - 1] * w - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::logic_error("build_code: generator unitary does not have order d");
    code.gens_.push_back(std::move(w));
  }

  code.projector_ = code.syndrome_projector(IntVector::Zero(code.k_));
  const Real trace_err = std::abs(code.projector_.trace().real() - static_cast<Real>(code.code_dim_));
  if (trace_err > 1e-9) throw std::logic_error("build_code: projector rank is not d^{n-k}");

  Eigen::SelfAdjointEigenSolver<Matrix> es(code.projector_);
  Matrix basis(dim, code.code_dim_);
  Index found = 0;
  for (Index i = 0; i < dim; ++i) {
    if (es.eigenvalues()(i) > 0.5) {
      if (found == code.code_dim_) throw std::logic_error("build_code: too many unit eigenvalues");
      basis.col(found++) = es.eigenvectors().col(i);
    }
  }
  if (found != code.code_dim_) throw std::logic_error("build_code: projector eigenspace mismatch");
  code.code_basis_ = std::move(basis);
  return code;
}

std::vector<ZdVec> choose_reps(const Subspace& stabilizer, const PauliDistribution& p) {
  if (p.d() != stabilizer.d() || p.n() != stabilizer.n())
    throw DimensionError("choose_reps: distribution does not match the subspace");
  const int d = stabilizer.d();
  const int k = stabilizer.dim();
  const Subspace dual = symplectic_dual(stabilizer);
  const std::vector<ZdVec> stabilizer_elements = subspace_elements(stabilizer);
  const std::vector<ZdVec> cosets = coset_representatives(dual);
  const Index num_syndromes = checked_pow(d, k);
  if (static_cast<Index>(cosets.size()) != num_syndromes)
    throw std::logic_error("choose_reps: coset count does not match d^k");

  std::vector<ZdVec> reps(static_cast<size_t>(num_syndromes), ZdVec::zero(d, stabilizer.n()));
  std::vector<bool> filled(static_cast<size_t>(num_syndromes), false);
  for (const ZdVec& coset_rep : cosets) {
    std::vector<ZdVec> members = coset_members(coset_rep, dual);
    std::sort(members.begin(), members.end());
    Real best_score = -1.0;
    const ZdVec* best = nullptr;
    for (const ZdVec& x : members) {
      Real score = 0.0;
      for (const ZdVec& l : stabilizer_elements) score += p.prob(x + l);
      if (score > best_score) {
        best_score = score;
        best = &x;
      }
    }
    Index idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * d + symplectic_form(*best, stabilizer.basis_vector(i));
    if (filled[idx]) throw std::logic_error("choose_reps: duplicate syndrome");
    filled[idx] = true;
    reps[idx] = *best;
  }
  return reps;
}

SymplecticCode with_reps(const SymplecticCode& code, std::vector<ZdVec> reps) {
  if (static_cast<Index>(reps.size()) != code.num_syndromes())
    throw ValidationError("with_reps: expected one representative per syndrome");
  for (Index idx = 0; idx < code.num_syndromes(); ++idx) {
    if (code.syndrome_index(code.syndrome_of(reps[idx])) != idx)
      throw ValidationError("with_reps: representative " + reps[idx].str() +
                            " is not in the coset of syndrome index " + std::to_string(idx));
  }
  SymplecticCode out = code;
  out.reps_ = std::move(reps);
  return out;
}

SymplecticCode build_code_ml(const Subspace& stabilizer, const PauliDistribution& p) {
  return with_reps(build_code(stabilizer), choose_reps(stabilizer, p));
}

SymplecticCode trivial_code(int d, int n) {
  return with_reps(build_code(Subspace::zero(d, n)), {ZdVec::zero(d, n)});
}

CorrectableSet correctable_set(const SymplecticCode& code) {
  CorrectableSet out;
  std::set<long long> seen;
  const std::vector<ZdVec> stabilizer_elements = subspace_elements(code.stabilizer());
  for (const ZdVec& rep : code.reps()) {
    for (const ZdVec& l : stabilizer_elements) {
      ZdVec x = rep + l;
      if (!seen.insert(x.index()).second)
        throw std::logic_error("correctable_set: duplicate label " + x.str());
      out.labels.push_back(std::move(x));
    }
  }
  return out;
}

bool kl_check(const SymplecticCode& code, const std::vector<ZdVec>& labels) {
  const Matrix& proj = code.projector();
  const Real k_dim = static_cast<Real>(code.code_dim());
  std::vector<Matrix> ops;
  ops.reserve(labels.size());
  for (const ZdVec& x : labels) ops.push_back(weyl(x).matrix);
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = 0; b < ops.size(); ++b) {
      const Matrix inner = proj * (ops[a].adjoint() * ops[b]) * proj;
      const Complex c = inner.trace() / k_dim;
      if ((inner - c * proj).cwiseAbs().maxCoeff() > 1e-9) return false;
    }
  return true;
}

KrausChannel decoder(const SymplecticCode& code) {
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(code.num_syndromes()));
  for (Index idx = 0; idx < code.num_syndromes(); ++idx) {
    const Matrix correction = weyl(code.reps()[idx]).matrix.adjoint();
    ops.push_back(correction * code.syndrome_projector(code.syndrome_from_index(idx)));
  }
  return KrausChannel(std::move(ops));
}

CodeFidelity code_entanglement_fidelity(const SymplecticCode& code, const PauliDistribution& p) {
  if (p.d() != code.d() || p.n() != code.n())
    throw DimensionError("code_entanglement_fidelity: distribution does not match the code");
  const Real via_distribution = mass(p, correctable_set(code).labels);
  const PauliChannel noise(code.d(), code.n(), p.to_explicit());
  const KrausChannel channel = compose(decoder(code), to_kraus(noise));
  const Real via_channel =
      entanglement_fidelity(DensityMatrix::projector_state(code.projector()), channel);
  return CodeFidelity{via_channel, via_distribution};
}

}  // namespace qdistill
