#include "tannakit/quadalg/quadratic_algebra.hpp"

#include <stdexcept>

#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"

namespace tannakit::quadalg {

using exactlin::Scalar;

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 3) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, "xyz"[i]));
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

QuadraticAlgebra QuadraticAlgebra::make(std::size_t dim_v, const Matrix& rels, std::vector<std::string> names) {
  if (dim_v == 0) throw InputError("quadratic algebra needs dim V >= 1");
  if (rels.cols() != dim_v * dim_v) throw InputError("relation vectors must have length dim_v^2");
  if (names.empty()) names = default_names(dim_v);
  if (names.size() != dim_v) throw InputError("expected one variable name per basis vector of V");
  QuadraticAlgebra a;
  a.dim_v = dim_v;
  a.relations = Subspace::span(rels);
  a.names = std::move(names);
  return a;
}

QuadraticAlgebra QuadraticAlgebra::free(std::size_t dim_v, Field f) {
  return make(dim_v, Matrix(0, dim_v * dim_v, f));
}

QuadraticAlgebra koszul_dual(const QuadraticAlgebra& a) {
  QuadraticAlgebra dual;
  dual.dim_v = a.dim_v;
  dual.relations = a.relations.annihilator();
  for (const auto& n : a.names) {
    dual.names.push_back(n.size() > 1 && n.back() == '*' ? n.substr(0, n.size() - 1) : n + "*");
  }
  return dual;
}

std::vector<Subspace> relation_spaces(const QuadraticAlgebra& a, std::size_t lmax) {
  if (lmax == 0) throw std::invalid_argument("relation_spaces: lmax must be >= 1");
  const Field f = a.field();
  const std::size_t n = a.dim_v;
  std::vector<Subspace> out;
  out.push_back(Subspace::full(n, f));
  if (lmax >= 2) out.push_back(a.relations);
  const Matrix r_perp = a.relations.annihilator().basis();
  for (std::size_t l = 3; l <= lmax; ++l) {
    const Subspace& prev = out.back();
    Subspace left = Subspace::tensor(prev, Subspace::full(n, f));
    if (left.dim() == 0) {
      out.emplace_back(power(n, l), f);
      continue;
    }
    // V^{l-2} (x) R is cut out by I (x) R^perp.
    Matrix constraints = exactlin::kron(Matrix::identity(power(n, l - 2), f), r_perp);
    out.push_back(kernel_within(left, constraints));
  }
  return out;
}

std::vector<std::size_t> graded_dims(const QuadraticAlgebra& a, std::size_t nmax) {
  std::vector<std::size_t> dims{1};
  if (nmax == 0) return dims;
  for (const auto& s : relation_spaces(koszul_dual(a), nmax)) dims.push_back(s.dim());
  return dims;
}

Matrix pairing_matrix(const Subspace& top, const Subspace& left, const Subspace& right) {
  if (top.dim() != 1) throw std::invalid_argument("pairing_matrix: top space must be one-dimensional");
  Subspace prod = Subspace::tensor(left, right);
  auto coords = prod.coordinates(top.vector(0));
  if (!coords) throw std::logic_error("pairing_matrix: top vector not contained in the tensor product");
  Matrix c(left.dim(), right.dim(), top.field());
  for (std::size_t i = 0; i < left.dim(); ++i) {
    for (std::size_t j = 0; j < right.dim(); ++j) c(i, j) = (*coords)[i * right.dim() + j];
  }
  return c;
}

bool koszul_series_consistent(const QuadraticAlgebra& a, std::size_t nmax) {
  const auto h = graded_dims(a, nmax);
  const auto h_dual = graded_dims(koszul_dual(a), nmax);
  for (std::size_t n = 1; n <= nmax; ++n) {
    long long sum = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      long long term = static_cast<long long>(h[n - j]) * static_cast<long long>(h_dual[j]);
      sum += (j % 2 == 0) ? term : -term;
    }
    if (sum != 0) return false;
  }
  return true;
}

ASReport as_regular_check(const QuadraticAlgebra& a, std::size_t nmax) {
  if (nmax < 2) throw std::invalid_argument("as_regular_check: nmax must be >= 2");
  const auto spaces = relation_spaces(a, nmax);
  if (spaces.back().dim() != 0) {
    throw MathError("R_" + std::to_string(nmax) + " != 0: increase nmax or A is not of finite type");
  }
  ASReport rep;
  std::size_t d = 0;
  for (std::size_t l = 1; l <= nmax; ++l) {
    if (spaces[l - 1].dim() > 0) d = l;
  }
  rep.d = d;
  for (std::size_t l = 1; l <= d + 1; ++l) rep.dims.push_back(spaces[l - 1].dim());
  rep.frobenius_top_one = spaces[d - 1].dim() == 1;
  rep.pairings_nondegenerate = rep.frobenius_top_one;
  if (rep.frobenius_top_one) {
    for (std::size_t k = 1; k < d; ++k) {
      Matrix c = pairing_matrix(spaces[d - 1], spaces[k - 1], spaces[d - k - 1]);
      if (c.rows() != c.cols() || exactlin::rank(c) != c.rows()) rep.pairings_nondegenerate = false;
      rep.pairings.push_back(std::move(c));
    }
  }
  rep.koszul_series_consistent = koszul_series_consistent(a, nmax);
  rep.as_regular = rep.frobenius_top_one && rep.pairings_nondegenerate && rep.koszul_series_consistent;
  return rep;
}

}  // namespace tannakit::quadalg
