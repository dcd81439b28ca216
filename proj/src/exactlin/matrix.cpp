#include "tannakit/exactlin/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "tannakit/exactlin/kernels.hpp"

namespace tannakit::exactlin {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::row_vector(std::span<const Scalar> v, Field f) {
  Matrix m(1, v.size(), f);
  for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
  return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> v, Field f) {
  Matrix m(v.size(), 1, f);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::in(Field f) const {
  if (f == field_) return *this;
  Matrix m(rows_, cols_, f);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].in(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block out of range");
  Matrix m(count, cols_, field_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), m.data_.begin());
  return m;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.rows_ == 0) return;
  if (rows_ == 0 && cols_ == 0) {
    *this = other.in(field_);
    return;
  }
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
  data_.reserve(data_.size() + other.data_.size());
  for (const auto& s : other.data_) data_.push_back(s.in(field_));
  rows_ += other.rows_;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw std::invalid_argument("append_row: column mismatch");
  for (const auto& s : v) data_.push_back(s.in(field_));
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : ", ") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.data_) e *= s;
  return r;
}

Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, Field f) {
  Matrix out(0, cols, f);
  for (const auto& b : blocks) {
    if (b.rows() == 0) continue;
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    out.append_rows(b);
  }
  return out;
}

}  // namespace tannakit::exactlin
