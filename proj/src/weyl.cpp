#include "qdistill/weyl.hpp"

#include <cmath>

namespace qdistill {

namespace {

int mod_pos(long long a, int d) {
  long long r = a % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

}  // namespace

WeylOperator weyl_single(int d, int i, int j) {
  if (d < 2) throw DimensionError("weyl_single: d must be >= 2");
  const int a = mod_pos(i, d);
  const int b = mod_pos(j, d);
  Matrix m = Matrix::Zero(d, d);
  // X^a Z^b: column l maps to omega^{b l} |l - a>.
  for (int l = 0; l < d; ++l) m(mod_pos(l - a, d), l) = root_of_unity(d, 1LL * b * l);
  return WeylOperator{ZdVec(d, {a, b}), std::move(m)};
}

WeylOperator weyl(const ZdVec& y) {
  const int d = y.d();
  checked_pow(d, y.n(), kDenseDimGuard);
  Matrix m = weyl_single(d, y.x(0), y.z(0)).matrix;
  for (int i = 1; i < y.n(); ++i) m = kron(m, weyl_single(d, y.x(i), y.z(i)).matrix);
  return WeylOperator{y, std::move(m)};
}

int commutation_phase(const ZdVec& y, const ZdVec& y2) { return symplectic_form(y, y2); }

BellVector bell_psi(const ZdVec& y) {
  const Index dim = checked_pow(y.d(), y.n(), kDenseDimGuard);
  const Matrix n_y = weyl(y).matrix;
  const Real scale = 1.0 / std::sqrt(static_cast<Real>(dim));
  Vector v(dim * dim);
  for (Index l = 0; l < dim; ++l)
    for (Index m = 0; m < dim; ++m) v(l * dim + m) = scale * n_y(m, l);
  return BellVector{y, BellVector::Kind::Psi, std::move(v)};
}

BellVector bell_psi_prime(const ZdVec& x) {
  const Index dim = checked_pow(x.d(), x.n(), kDenseDimGuard);
  const Matrix n_x = weyl(x).matrix;
  const Real scale = 1.0 / std::sqrt(static_cast<Real>(dim));
  Vector v(dim * dim);
  for (Index l = 0; l < dim; ++l)
    for (Index m = 0; m < dim; ++m) v(m * dim + l) = scale * n_x(m, l);
  return BellVector{x, BellVector::Kind::PsiPrime, std::move(v)};
}

Matrix bell_basis_matrix(int d, int n) {
  const Index labels = checked_pow(d, 2 * n, kDenseDimGuard);
  Matrix u(labels, labels);
  for (Index y = 0; y < labels; ++y) u.col(y) = bell_psi(ZdVec::from_index(d, n, y)).vector;
  return u;
}

}  // namespace qdistill
