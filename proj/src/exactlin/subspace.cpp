#include "tannakit/exactlin/subspace.hpp"

#include <cassert>
#include <stdexcept>

#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"

namespace tannakit::exactlin {

namespace {

Subspace from_reduction(RrefResult red, std::size_t ambient) {
  Matrix basis = red.reduced.row_block(0, red.rank());
  if (basis.rows() == 0) return Subspace(ambient, red.reduced.field());
  return Subspace::from_rref(std::move(basis), std::move(red.pivots));
}

}  // namespace

Subspace::Subspace(std::size_t ambient, Field f) : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

Subspace Subspace::span(const Matrix& rows) {
  return from_reduction(rref(rows), rows.cols());
}

Subspace Subspace::full(std::size_t ambient, Field f) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return from_rref(Matrix::identity(ambient, f), std::move(piv));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  assert(basis.rows() == pivots.size());
  Subspace s;
  s.ambient_ = basis.cols();
  s.field_ = basis.field();
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates: ambient mismatch");
  std::vector<Scalar> coords;
  coords.reserve(dim());
  std::vector<Scalar> residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    Scalar c = v[pivots_[k]].in(field_);
    coords.push_back(c);
    if (c.is_zero()) continue;
    auto row = basis_.row(k);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!row[j].is_zero()) residual[j].sub_mul(c, row[j]);
    }
  }
  for (const auto& r : residual) {
    if (!r.is_zero()) return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (std::size_t k = 0; k < other.dim(); ++k) {
    if (!contains(other.vector(k))) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_, field_);
  return kernel(basis_);
}

Subspace Subspace::image_under(const Matrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("image_under: shape mismatch");
  if (dim() == 0) return Subspace(m.rows(), field_);
  return span(multiply(basis_, m.transpose()));
}

Subspace Subspace::tensor(const Subspace& a, const Subspace& b) {
  const std::size_t amb = a.ambient_ * b.ambient_;
  if (a.dim() == 0 || b.dim() == 0) return Subspace(amb, a.field_);
  Matrix basis = kron(a.basis_, b.basis_);
  std::vector<std::size_t> piv;
  piv.reserve(basis.rows());
  for (std::size_t pa : a.pivots_) {
    for (std::size_t pb : b.pivots_) piv.push_back(pa * b.ambient_ + pb);
  }
  return from_rref(std::move(basis), std::move(piv));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  if (b.dim() == 0) return a;
  if (a.dim() == 0) return b;
  Matrix stacked = a.basis_;
  stacked.append_rows(b.basis_);
  return Subspace::span(stacked);
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  const Field f = m.field();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  Matrix basis(0, n, f);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t k = 0; k < red.rank(); ++k) v[red.pivots[k]] = -red.reduced(k, free);
    basis.append_row(v);
  }
  return Subspace::span(basis);
}

Subspace kernel_within(const Subspace& u, const Matrix& m) {
  if (m.cols() != u.ambient()) throw std::invalid_argument("kernel_within: shape mismatch");
  if (u.dim() == 0) return u;
  // Coordinates c with m * (c^T B)^T = 0, i.e. (m B^T) c = 0.
  Subspace coeffs = kernel(multiply(m, u.basis().transpose()));
  if (coeffs.dim() == 0) return Subspace(u.ambient(), u.field());
  return Subspace::span(multiply(coeffs.basis(), u.basis()));
}

Subspace intersect_many(std::span<const Subspace> subs) {
  if (subs.empty()) throw std::invalid_argument("intersect_many: empty input");
  const std::size_t amb = subs.front().ambient();
  const Field f = subs.front().field();
  Matrix stacked(0, amb, f);
  for (const auto& s : subs) {
    if (s.ambient() != amb) throw std::invalid_argument("intersect_many: mismatched ambient dimensions");
    stacked.append_rows(s.annihilator().basis());
  }
  if (stacked.rows() == 0) return Subspace::full(amb, f);
  return kernel(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const Subspace pair[] = {a, b};
  return intersect_many(pair);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix right_inverse(const Matrix& m) {
  RrefResult red = rref(m);
  if (red.rank() != m.rows()) {
    throw MathError("right_inverse: matrix is row-rank deficient (rank " + std::to_string(red.rank()) +
                    " < " + std::to_string(m.rows()) + ")");
  }
  const std::size_t r = m.rows();
  Matrix square(r, r, m.field());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) square(i, k) = m(i, red.pivots[k]);
  }
  Matrix inv = inverse(square);
  Matrix s(m.cols(), r, m.field());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < r; ++j) s(red.pivots[k], j) = inv(k, j);
  }
  return s;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0, m.field());
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RrefResult red = rref(std::move(aug));
  if (red.rank() < n || red.pivots[n - 1] != n - 1) throw MathError("inverse: matrix is singular");
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  }
  return inv;
}

}  // namespace tannakit::exactlin
