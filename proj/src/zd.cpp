#include "qdistill/zd.hpp"

#include <algorithm>
#include <sstream>

namespace qdistill {

namespace {

int mod_pos(long long a, int d) {
  long long r = a % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

// In-place row reduction over Z_d (d prime); returns pivot columns and drops
// zero rows.
std::vector<int> rref_mod(IntMatrix& m, int d) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) m.row(r).swap(m.row(pivot_row));
    const int inv = mod_inverse(m(r, c), d);
    for (int j = 0; j < cols; ++j) m(r, j) = mod_pos(1LL * m(r, j) * inv, d);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const int f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) = mod_pos(m(i, j) - 1LL * f * m(r, j), d);
    }
    pivots.push_back(c);
    ++r;
  }
  m.conservativeResize(r, cols);
  return pivots;
}

void check_same_space(const ZdVec& a, const ZdVec& b, const char* what) {
  if (a.d() != b.d()) throw DimensionError(std::string(what) + ": mismatched modulus");
  if (a.size() != b.size()) throw DimensionError(std::string(what) + ": mismatched length");
}

}  // namespace

bool is_prime(int d) {
  if (d < 2) return false;
  for (int f = 2; 1LL * f * f <= d; ++f)
    if (d % f == 0) return false;
  return true;
}

int mod_inverse(int a, int d) {
  a = mod_pos(a, d);
  if (a == 0) throw DimensionError("mod_inverse: zero has no inverse");
  // Extended Euclid.
  int t = 0, new_t = 1, r = d, new_r = a;
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ModulusError("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(d));
  return mod_pos(t, d);
}

ZdVec::ZdVec(int d, IntVector coords) : d_(d), coords_(std::move(coords)) {
  if (d_ < 2) throw DimensionError("ZdVec: modulus must be >= 2");
  if (coords_.size() == 0 || coords_.size() % 2 != 0)
    throw DimensionError("ZdVec: coordinate length must be even and positive");
  for (Index i = 0; i < coords_.size(); ++i) coords_[i] = mod_pos(coords_[i], d_);
}

ZdVec::ZdVec(int d, std::initializer_list<int> coords)
    : ZdVec(d, [&] {
        IntVector v(static_cast<Index>(coords.size()));
        Index i = 0;
        for (int c : coords) v[i++] = c;
        return v;
      }()) {}

ZdVec ZdVec::zero(int d, int n) {
  if (n < 1) throw DimensionError("ZdVec: n must be >= 1");
  return ZdVec(d, IntVector::Zero(2 * n));
}

ZdVec ZdVec::from_index(int d, int n, long long index) {
  const Index total = checked_pow(d, 2 * n);
  if (index < 0 || index >= total) throw DimensionError("ZdVec::from_index: index out of range");
  IntVector coords(2 * n);
  for (int p = 2 * n - 1; p >= 0; --p) {
    coords[p] = static_cast<int>(index % d);
    index /= d;
  }
  return ZdVec(d, std::move(coords));
}

long long ZdVec::index() const {
  long long idx = 0;
  for (Index p = 0; p < coords_.size(); ++p) idx = idx * d_ + coords_[p];
  return idx;
}

bool ZdVec::is_zero() const {
  for (Index i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

std::string ZdVec::str() const {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i];
  }
  os << ")";
  return os.str();
}

ZdVec ZdVec::operator+(const ZdVec& o) const {
  check_same_space(*this, o, "ZdVec::operator+");
  IntVector c(coords_.size());
  for (Index i = 0; i < coords_.size(); ++i) c[i] = mod_pos(coords_[i] + o.coords_[i], d_);
  return ZdVec(d_, std::move(c));
}

ZdVec ZdVec::operator-(const ZdVec& o) const {
  check_same_space(*this, o, "ZdVec::operator-");
  IntVector c(coords_.size());
  for (Index i = 0; i < coords_.size(); ++i) c[i] = mod_pos(coords_[i] - o.coords_[i], d_);
  return ZdVec(d_, std::move(c));
}

ZdVec ZdVec::operator*(int s) const {
  IntVector c(coords_.size());
  for (Index i = 0; i < coords_.size(); ++i) c[i] = mod_pos(1LL * coords_[i] * s, d_);
  return ZdVec(d_, std::move(c));
}

bool ZdVec::operator==(const ZdVec& o) const {
  return d_ == o.d_ && coords_.size() == o.coords_.size() && coords_ == o.coords_;
}

bool ZdVec::operator<(const ZdVec& o) const {
  check_same_space(*this, o, "ZdVec::operator<");
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
  }
  return false;
}

int symplectic_form(const ZdVec& y, const ZdVec& y2) {
  check_same_space(y, y2, "symplectic_form");
  long long acc = 0;
  for (int i = 0; i < y.n(); ++i) acc += 1LL * y.x(i) * y2.z(i) - 1LL * y.z(i) * y2.x(i);
  return mod_pos(acc, y.d());
}

Subspace::Subspace(int d, int n, const std::vector<ZdVec>& generators) : d_(d), n_(n) {
  if (!is_prime(d_)) throw ModulusError("Subspace: modulus " + std::to_string(d_) + " is not prime");
  if (n_ < 1) throw DimensionError("Subspace: n must be >= 1");
  IntMatrix m(static_cast<Index>(generators.size()), 2 * n_);
  for (size_t i = 0; i < generators.size(); ++i) {
    const ZdVec& g = generators[i];
    if (g.d() != d_ || g.size() != 2 * n_)
      throw DimensionError("Subspace: generator " + std::to_string(i) + " has wrong modulus or length");
    m.row(static_cast<Index>(i)) = g.coords().transpose();
  }
  pivots_ = rref_mod(m, d_);
  basis_ = std::move(m);
}

Subspace Subspace::zero(int d, int n) { return Subspace(d, n, std::vector<ZdVec>{}); }

ZdVec Subspace::basis_vector(int i) const {
  if (i < 0 || i >= dim()) throw DimensionError("Subspace::basis_vector: index out of range");
  return ZdVec(d_, basis_.row(i).transpose());
}

std::vector<ZdVec> Subspace::basis_vectors() const {
  std::vector<ZdVec> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

ZdVec Subspace::coset_reduce(const ZdVec& v) const {
  if (v.d() != d_ || v.size() != 2 * n_) throw DimensionError("Subspace::coset_reduce: mismatched vector");
  IntVector c = v.coords();
  for (int r = 0; r < dim(); ++r) {
    const int p = pivots_[r];
    if (c[p] == 0) continue;
    const int f = c[p];
    for (Index j = 0; j < c.size(); ++j) c[j] = mod_pos(c[j] - 1LL * f * basis_(r, j), d_);
  }
  return ZdVec(d_, std::move(c));
}

bool Subspace::contains(const ZdVec& v) const { return coset_reduce(v).is_zero(); }

bool Subspace::operator==(const Subspace& o) const {
  return d_ == o.d_ && n_ == o.n_ && basis_.rows() == o.basis_.rows() && basis_ == o.basis_;
}

Subspace symplectic_dual(const Subspace& l) {
  const int d = l.d();
  const int n = l.n();
  const int cols = 2 * n;
  // Constraint row per basis vector: <l, y> = c_l . y with
  // c_l = (-z1, x1, -z2, x2, ...).
  IntMatrix c(l.dim(), cols);
  for (int r = 0; r < l.dim(); ++r) {
    for (int i = 0; i < n; ++i) {
      c(r, 2 * i) = mod_pos(-l.basis()(r, 2 * i + 1), d);
      c(r, 2 * i + 1) = l.basis()(r, 2 * i);
    }
  }
  std::vector<int> pivots = rref_mod(c, d);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<ZdVec> kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    IntVector v = IntVector::Zero(cols);
    v[f] = 1;
    for (Index r = 0; r < c.rows(); ++r) v[pivots[r]] = mod_pos(-c(r, f), d);
    kernel.emplace_back(d, std::move(v));
  }
  return Subspace(d, n, kernel);
}

bool is_self_orthogonal(const Subspace& l) {
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j)
      if (symplectic_form(l.basis_vector(i), l.basis_vector(j)) != 0) return false;
  return true;
}

std::vector<ZdVec> subspace_elements(const Subspace& m) {
  const int d = m.d();
  const int k = m.dim();
  const Index count = checked_pow(d, k);
  std::vector<ZdVec> out;
  out.reserve(static_cast<size_t>(count));
  for (Index idx = 0; idx < count; ++idx) {
    IntVector v = IntVector::Zero(2 * m.n());
    Index rem = idx;
    for (int r = k - 1; r >= 0; --r) {
      const int coeff = static_cast<int>(rem % d);
      rem /= d;
      if (coeff == 0) continue;
      for (Index j = 0; j < v.size(); ++j) v[j] = mod_pos(v[j] + 1LL * coeff * m.basis()(r, j), d);
    }
    out.emplace_back(d, std::move(v));
  }
  return out;
}

std::vector<ZdVec> coset_representatives(const Subspace& m) {
  const int d = m.d();
  const int cols = 2 * m.n();
  checked_pow(d, cols);  // whole-space guard
  std::vector<bool> is_pivot(cols, false);
  for (int p : m.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const Index count = checked_pow(d, static_cast<int>(free_cols.size()));
  std::vector<ZdVec> out;
  out.reserve(static_cast<size_t>(count));
  for (Index idx = 0; idx < count; ++idx) {
    IntVector v = IntVector::Zero(cols);
    Index rem = idx;
    for (int t = static_cast<int>(free_cols.size()) - 1; t >= 0; --t) {
      v[free_cols[t]] = static_cast<int>(rem % d);
      rem /= d;
    }
    out.emplace_back(d, std::move(v));
  }
  return out;
}

std::vector<ZdVec> coset_members(const ZdVec& rep, const Subspace& m) {
  if (rep.d() != m.d() || rep.size() != 2 * m.n())
    throw DimensionError("coset_members: representative does not match the subspace");
  std::vector<ZdVec> out = subspace_elements(m);
  for (auto& v : out) v = rep + v;
  return out;
}

Complex character_sum(const ZdVec& a) {
  const int d = a.d();
  const Index total = checked_pow(d, a.size());
  std::vector<Complex> roots(d);
  for (int e = 0; e < d; ++e) roots[e] = root_of_unity(d, e);
  Complex acc(0.0, 0.0);
  for (Index idx = 0; idx < total; ++idx) {
    const ZdVec x = ZdVec::from_index(d, a.n(), idx);
    acc += roots[symplectic_form(x, a)];
  }
  return acc;
}

}  // namespace qdistill
