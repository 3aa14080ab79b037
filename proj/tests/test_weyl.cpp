#include <doctest.h>

#include <cmath>

#include "qdistill/random.hpp"
#include "qdistill/weyl.hpp"

using namespace qdistill;

namespace {

Vector basis_state(Index dim, Index j) {
  Vector v = Vector::Zero(dim);
  v[j] = Complex(1.0, 0.0);
  return v;
}

}  // namespace

TEST_CASE("single-system operators match their defining matrices") {
  CHECK(linf_diff(weyl_single(2, 0, 0).matrix, Matrix::Identity(2, 2)) < 1e-15);

  Matrix x_flip(2, 2);
  x_flip << 0, 1, 1, 0;
  CHECK(linf_diff(weyl_single(2, 1, 0).matrix, x_flip) < 1e-15);

  const Complex w = root_of_unity(3, 1);
  Matrix z3 = Matrix::Zero(3, 3);
  z3(0, 0) = 1.0;
  z3(1, 1) = w;
  z3(2, 2) = w * w;
  CHECK(linf_diff(weyl_single(3, 0, 1).matrix, z3) < 1e-15);
}

TEST_CASE("tensor factors compose in label order") {
  CHECK(linf_diff(weyl(ZdVec::zero(3, 2)).matrix, Matrix::Identity(9, 9)) < 1e-15);
  const Matrix expected = kron(weyl_single(2, 1, 0).matrix, weyl_single(2, 0, 1).matrix);
  CHECK(linf_diff(weyl(ZdVec(2, {1, 0, 0, 1})).matrix, expected) < 1e-15);
}

TEST_CASE("shift and phase action on basis states") {
  Rng rng(5);
  for (int d : {2, 3}) {
    const int n = 2;
    const Index dim = checked_pow(d, n);
    for (int trial = 0; trial < 25; ++trial) {
      IntVector c(2 * n);
      for (Index i = 0; i < c.size(); ++i) c[i] = static_cast<int>(rng() % d);
      const ZdVec x(d, c);
      // |l> with digits l_i, big-endian.
      std::vector<int> l(n), shifted(n);
      for (int i = 0; i < n; ++i) l[i] = static_cast<int>(rng() % d);
      long long phase = 0;
      Index in_index = 0, out_index = 0;
      for (int i = 0; i < n; ++i) {
        phase += 1LL * x.z(i) * l[i];
        shifted[i] = ((l[i] - x.x(i)) % d + d) % d;
        in_index = in_index * d + l[i];
        out_index = out_index * d + shifted[i];
      }
      const Vector got = weyl(x).matrix * basis_state(dim, in_index);
      const Vector expected = root_of_unity(d, phase) * basis_state(dim, out_index);
      CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("all operators are unitary at small scale") {
  for (int d : {2, 3}) {
    for (int n : {1, 2}) {
      const Index labels = checked_pow(d, 2 * n);
      const Index dim = checked_pow(d, n);
      for (Index i = 0; i < labels; ++i) {
        const Matrix m = weyl(ZdVec::from_index(d, n, i)).matrix;
        CHECK(linf_diff(m.adjoint() * m, Matrix::Identity(dim, dim)) < 1e-12);
      }
    }
  }
}

TEST_CASE("commutation exponent reproduces the matrix identity") {
  CHECK(commutation_phase(ZdVec(2, {1, 0}), ZdVec(2, {0, 1})) == 1);
  CHECK(commutation_phase(ZdVec(3, {1, 2}), ZdVec(3, {1, 2})) == 0);
  CHECK(commutation_phase(ZdVec(3, {1, 0}), ZdVec(3, {0, 2})) == 2);

  // Exhaustive at n = 1.
  for (int d : {2, 3}) {
    const Index labels = checked_pow(d, 2);
    for (Index i = 0; i < labels; ++i)
      for (Index j = 0; j < labels; ++j) {
        const ZdVec y = ZdVec::from_index(d, 1, i), y2 = ZdVec::from_index(d, 1, j);
        const Matrix lhs = weyl(y).matrix * weyl(y2).matrix;
        const Matrix rhs =
            root_of_unity(d, commutation_phase(y, y2)) * weyl(y2).matrix * weyl(y).matrix;
        CHECK(linf_diff(lhs, rhs) < 1e-10);
      }
  }
  // Random pairs at n = 2.
  Rng rng(6);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Index labels = checked_pow(d, 4);
      const ZdVec y = ZdVec::from_index(d, 2, static_cast<long long>(rng() % labels));
      const ZdVec y2 = ZdVec::from_index(d, 2, static_cast<long long>(rng() % labels));
      const Matrix lhs = weyl(y).matrix * weyl(y2).matrix;
      const Matrix rhs =
          root_of_unity(d, commutation_phase(y, y2)) * weyl(y2).matrix * weyl(y).matrix;
      CHECK(linf_diff(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("Hilbert-Schmidt orthogonality of the operator basis") {
  for (int d : {2, 3}) {
    const int n = 1;
    const Index labels = checked_pow(d, 2 * n);
    const Real dim = static_cast<Real>(checked_pow(d, n));
    for (Index i = 0; i < labels; ++i)
      for (Index j = 0; j < labels; ++j) {
        const Complex inner = (weyl(ZdVec::from_index(d, n, i)).matrix.adjoint() *
                               weyl(ZdVec::from_index(d, n, j)).matrix)
                                  .trace() /
                              dim;
        CHECK(std::abs(inner - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
      }
  }
}

TEST_CASE("Bell vectors at d = 2 match explicit superpositions") {
  const Vector psi0 = bell_psi(ZdVec::zero(2, 1)).vector;
  Vector expected(4);
  expected << 1, 0, 0, 1;
  expected /= std::sqrt(2.0);
  CHECK((psi0 - expected).cwiseAbs().maxCoeff() < 1e-12);

  const Vector psi_x = bell_psi(ZdVec(2, {1, 0})).vector;
  Vector expected_x(4);
  expected_x << 0, 1, 1, 0;  // (|01> + |10>)/sqrt(2)
  expected_x /= std::sqrt(2.0);
  CHECK((psi_x - expected_x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("both Bell families are orthonormal bases") {
  for (int d : {2, 3}) {
    for (int n : {1, 2}) {
      const Index labels = checked_pow(d, 2 * n);
      Matrix psi(labels, labels), psi_prime(labels, labels);
      for (Index i = 0; i < labels; ++i) {
        psi.col(i) = bell_psi(ZdVec::from_index(d, n, i)).vector;
        psi_prime.col(i) = bell_psi_prime(ZdVec::from_index(d, n, i)).vector;
      }
      CHECK(linf_diff(psi.adjoint() * psi, Matrix::Identity(labels, labels)) < 1e-10);
      CHECK(linf_diff(psi_prime.adjoint() * psi_prime, Matrix::Identity(labels, labels)) < 1e-10);
    }
  }
}

TEST_CASE("bell_basis_matrix columns agree with bell_psi") {
  const Matrix u = bell_basis_matrix(2, 1);
  for (Index i = 0; i < 4; ++i)
    CHECK((u.col(i) - bell_psi(ZdVec::from_index(2, 1, i)).vector).cwiseAbs().maxCoeff() < 1e-15);
}
