#pragma once

#include <cstddef>
#include <vector>

#include "tannakit/exactlin/matrix.hpp"
#include "tannakit/ncpoly/ncpoly.hpp"

namespace tannakit::ncpoly {

/// Dense matrix of noncommutative polynomials. Products keep the left
/// factor's entries on the left.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from(const exactlin::Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// Entry positions are swapped; entries themselves are not reversed.
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NCPoly> data_;
};

/// Kronecker product with entry (i*rows(b)+k, j*cols(b)+l) = a(i,j) * b(k,l).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Replaces generator g by images[g] everywhere.
NCPoly substitute(const NCPoly& p, const std::vector<NCPoly>& images);

}  // namespace tannakit::ncpoly
