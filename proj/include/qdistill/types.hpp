#pragma once

// Shared dense numeric types. Scalar precision is fixed here; everything
// downstream uses these aliases.

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdistill {

using Scalar = double;
using Real = Scalar;
using Complex = std::complex<Scalar>;
using Index = Eigen::Index;

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

using Rng = std::mt19937_64;

// Mismatched operand shapes or tensor factorizations.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Operation defined only for prime modulus.
struct ModulusError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Enumeration or dense operator beyond the desk-scale guard.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed user input (distributions, files, configs).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Space enumerations refuse above this many elements.
inline constexpr long long kEnumerationGuard = 1LL << 24;
// Dense operators refuse above this dimension.
inline constexpr Index kDenseDimGuard = 4096;
// Full teleportation simulation refuses above this dim(T x A x B).
inline constexpr Index kTeleportDimGuard = 1024;

// base^exponent with overflow/guard check.
Index checked_pow(int base, int exponent, long long guard = kEnumerationGuard);

// exp(2 pi i exponent / d).
Complex root_of_unity(int d, long long exponent);

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b.derived().template cast<Complex>();
  return out;
}

inline Real linf_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("linf_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qdistill
