#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tannakit/exactlin/matrix.hpp"
#include "tannakit/exactlin/subspace.hpp"

namespace tannakit::quadalg {

using exactlin::Field;
using exactlin::Matrix;
using exactlin::Subspace;

/// A = TV/(R) with R a subspace of V (x) V. Index (i, j) of V (x) V is
/// i * dim_v + j, so the monomial x_i x_j sits at that column.
struct QuadraticAlgebra {
  std::size_t dim_v = 0;
  Subspace relations;
  std::vector<std::string> names;

  /// Spans the rows of `rels` (each of length dim_v^2). Empty `names`
  /// selects x, y, z (or x1..xn beyond three variables).
  static QuadraticAlgebra make(std::size_t dim_v, const Matrix& rels, std::vector<std::string> names = {});
  static QuadraticAlgebra free(std::size_t dim_v, Field f = Field::rationals());

  Field field() const { return relations.field(); }
};

std::vector<std::string> default_names(std::size_t n);

/// A^! = TV*/(R^perp), with R^perp the annihilator under the dual-basis pairing.
QuadraticAlgebra koszul_dual(const QuadraticAlgebra& a);

/// [R_1, ..., R_lmax] with R_1 = V, R_2 = R and
/// R_l = (R_{l-1} (x) V) intersected with (V^{l-2} (x) R).
std::vector<Subspace> relation_spaces(const QuadraticAlgebra& a, std::size_t lmax);

/// dim A_0 .. dim A_nmax. Uses (V^n / I_n)^* = (R^perp)_n, the n-th relation
/// space of the Koszul dual.
std::vector<std::size_t> graded_dims(const QuadraticAlgebra& a, std::size_t nmax);

/// Coefficient matrix of the single basis vector of `top` expanded in the
/// tensor basis of left (x) right: entry (i, j) multiplies left_i (x) right_j.
/// Throws std::logic_error when the vector does not lie in left (x) right.
Matrix pairing_matrix(const Subspace& top, const Subspace& left, const Subspace& right);

struct ASReport {
  std::size_t d = 0;
  std::vector<std::size_t> dims;   // dim R_1 .. dim R_{d+1}
  std::vector<Matrix> pairings;    // C^(1) .. C^(d-1)
  bool frobenius_top_one = false;
  bool pairings_nondegenerate = false;
  bool koszul_series_consistent = false;
  bool as_regular = false;
};

/// Frobenius-criterion regularity test. Throws MathError when R_nmax != 0.
ASReport as_regular_check(const QuadraticAlgebra& a, std::size_t nmax);

/// Sum over i + j = n of (-1)^j dim A_i dim A^!_j vanishes for 1 <= n <= nmax.
bool koszul_series_consistent(const QuadraticAlgebra& a, std::size_t nmax);

}  // namespace tannakit::quadalg
