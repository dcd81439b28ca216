#pragma once

// Dense exact kernels. The default entry points use OpenMP across rows; the
// `reference` namespace keeps plain serial versions that tests compare
// against and the benchmark times.

#include <cstddef>
#include <vector>

#include "tannakit/exactlin/matrix.hpp"

namespace tannakit::exactlin {

struct RrefResult {
  Matrix reduced;                    // same shape as the input
  std::vector<std::size_t> pivots;   // strictly increasing pivot columns
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix m);

/// Kronecker product; composite index (i, j) -> i * rows(b) + j.
Matrix kron(const Matrix& a, const Matrix& b);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Caps the OpenMP team size used by the kernels (<= 0 restores the default).
/// Reads TANNAKIT_THREADS when called with the environment overload.
void set_max_threads(int n);
void set_max_threads_from_env();
int max_threads();

namespace reference {

RrefResult rref(Matrix m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace reference

}  // namespace tannakit::exactlin
