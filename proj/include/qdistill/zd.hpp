#pragma once

// Exact arithmetic over Z_d and the symplectic geometry of (Z/dZ)^{2n}.
//
// Vectors use the interleaved coordinate order (x1, z1, ..., xn, zn), and
// the symplectic form is <y, y'> = sum_i (x_i z'_i - z_i x'_i) mod d.
// Subspace operations (duals, cosets) require a prime modulus; the form and
// character sums are defined for any d >= 2.

#include <initializer_list>
#include <string>
#include <vector>

#include "qdistill/types.hpp"

namespace qdistill {

bool is_prime(int d);
int mod_inverse(int a, int d);  // d prime, a not divisible by d

// Element of (Z/dZ)^{2n}. Immutable after construction; coordinates are
// stored reduced to [0, d).
class ZdVec {
 public:
  ZdVec(int d, IntVector coords);
  ZdVec(int d, std::initializer_list<int> coords);
  static ZdVec zero(int d, int n);
  // Inverse of index(): big-endian base-d digits, length 2n.
  static ZdVec from_index(int d, int n, long long index);

  int d() const { return d_; }
  int n() const { return static_cast<int>(coords_.size()) / 2; }
  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  const IntVector& coords() const { return coords_; }

  int x(int i) const { return coords_[2 * i]; }
  int z(int i) const { return coords_[2 * i + 1]; }
  // Index of the i-th letter (x_i, z_i) in Z_d^2, as x_i * d + z_i.
  int letter_index(int i) const { return x(i) * d_ + z(i); }
  long long index() const;

  bool is_zero() const;
  std::string str() const;

  ZdVec operator+(const ZdVec& o) const;
  ZdVec operator-(const ZdVec& o) const;
  ZdVec operator*(int c) const;
  bool operator==(const ZdVec& o) const;
  bool operator!=(const ZdVec& o) const { return !(*this == o); }
  bool operator<(const ZdVec& o) const;  // lexicographic on coordinates

 private:
  int d_;
  IntVector coords_;
};

// <y, y2> mod d.
int symplectic_form(const ZdVec& y, const ZdVec& y2);

// Linear subspace of (Z/dZ)^{2n}, d prime. The stored basis is the row
// reduced echelon form with pivots normalized to 1, so equal subspaces have
// identical representations.
class Subspace {
 public:
  Subspace(int d, int n, const std::vector<ZdVec>& generators);
  static Subspace zero(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  ZdVec basis_vector(int i) const;
  std::vector<ZdVec> basis_vectors() const;

  bool contains(const ZdVec& v) const;
  // Canonical representative of the coset v + this (pivot coordinates zeroed).
  ZdVec coset_reduce(const ZdVec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int d_ = 0, n_ = 0;
  IntMatrix basis_;
  std::vector<int> pivots_;
};

// { y : <y, l> = 0 for all l in L }.
Subspace symplectic_dual(const Subspace& l);
// True iff all pairs of basis vectors have vanishing symplectic form.
bool is_self_orthogonal(const Subspace& l);

// All d^dim elements of m (guarded).
std::vector<ZdVec> subspace_elements(const Subspace& m);
// One canonical representative per coset of m in (Z_d)^{2n}, in lexicographic
// order (guarded).
std::vector<ZdVec> coset_representatives(const Subspace& m);
// The members of rep + m.
std::vector<ZdVec> coset_members(const ZdVec& rep, const Subspace& m);

// Sum over the whole space of omega^{<x, a>}; equals d^{2n} for a = 0 and 0
// otherwise. Verification utility, not a hot path.
Complex character_sum(const ZdVec& a);

}  // namespace qdistill
