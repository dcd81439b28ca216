#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tannakit/exactlin/scalar.hpp"

namespace tannakit::exactlin {

/// Dense row-major matrix over an exact field.
///
/// All entries live in field(); assigning a rational to an F_p matrix goes
/// through set(), which converts.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rationals());

  /// Rational matrix from nested rows, e.g. {{1, 2}, {Scalar(1, 2), 0}}.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n, Field f = Field::rationals());
  static Matrix row_vector(std::span<const Scalar> v, Field f = Field::rationals());
  static Matrix column_vector(std::span<const Scalar> v, Field f = Field::rationals());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { data_[i * cols_ + j] = v.in(field_); }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t j) const;

  Matrix transpose() const;
  Matrix in(Field f) const;
  bool is_zero() const;

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Appends the rows of `other` (same column count, same field).
  void append_rows(const Matrix& other);
  void append_row(std::span<const Scalar> v);
  void swap_rows(std::size_t a, std::size_t b);

  std::string str() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

/// Vertical concatenation; all blocks must share the column count.
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, Field f);

}  // namespace tannakit::exactlin
