#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/corpus.hpp"
#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"

using namespace tannakit;
using namespace tannakit::exactlin;
using namespace tannakit::quadalg;
using namespace tannakit::testing;

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// V^i R V^j for every i + j + 2 = l, intersected in one shot.
Subspace direct_relation_space(const QuadraticAlgebra& a, std::size_t l) {
  if (l == 1) return Subspace::full(a.dim_v);
  std::vector<Subspace> pieces;
  for (std::size_t i = 0; i + 2 <= l; ++i) {
    std::size_t j = l - 2 - i;
    Matrix m = kron(kron(Matrix::identity(power(a.dim_v, i)), a.relations.basis()), Matrix::identity(power(a.dim_v, j)));
    pieces.push_back(Subspace::span(m));
  }
  return intersect_many(pieces);
}

// dim V^n - dim sum_{i+j+2=n} V^i R V^j.
std::size_t direct_graded_dim(const QuadraticAlgebra& a, std::size_t n) {
  const std::size_t total = power(a.dim_v, n);
  if (n < 2 || a.relations.dim() == 0) return total;
  Matrix stacked(0, total);
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    std::size_t j = n - 2 - i;
    stacked.append_rows(
        kron(kron(Matrix::identity(power(a.dim_v, i)), a.relations.basis()), Matrix::identity(power(a.dim_v, j))));
  }
  return total - rank(stacked);
}

std::vector<std::size_t> dims_of(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

}  // namespace

TEST_CASE("koszul_dual examples") {
  QuadraticAlgebra dual = koszul_dual(kxy());
  CHECK(dual.relations.dim() == 3);
  CHECK(dual.relations.contains(std::vector<Scalar>{1, 0, 0, 0}));
  CHECK(dual.relations.contains(std::vector<Scalar>{0, 0, 0, 1}));
  CHECK(dual.relations.contains(std::vector<Scalar>{0, 1, 1, 0}));
  CHECK(dual.names == std::vector<std::string>{"x*", "y*"});

  CHECK(koszul_dual(QuadraticAlgebra::free(2)).relations == Subspace::full(4));

  QuadraticAlgebra qd = koszul_dual(qplane(2));
  CHECK(qd.relations.dim() == 3);
  CHECK(qd.relations.contains(std::vector<Scalar>{0, 1, Scalar(1, 2), 0}));
}

TEST_CASE("relation_spaces examples") {
  CHECK(dims_of(relation_spaces(kxy(), 3)) == std::vector<std::size_t>{2, 1, 0});
  CHECK(dims_of(relation_spaces(kxyz(), 4)) == std::vector<std::size_t>{3, 3, 1, 0});
  QuadraticAlgebra all = QuadraticAlgebra::make(2, Matrix::identity(4));
  auto spaces = relation_spaces(all, 4);
  for (std::size_t l = 1; l <= 4; ++l) CHECK(spaces[l - 1] == Subspace::full(power(2, l)));
  CHECK_THROWS_AS(relation_spaces(kxy(), 0), std::invalid_argument);
}

TEST_CASE("graded_dims examples") {
  CHECK(graded_dims(kxy(), 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(graded_dims(koszul_dual(kxy()), 3) == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(graded_dims(QuadraticAlgebra::free(2), 3) == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(graded_dims(kxyz(), 3) == std::vector<std::size_t>{1, 3, 6, 10});
  CHECK(graded_dims(kxy(), 0) == std::vector<std::size_t>{1});
}

TEST_CASE("as_regular_check examples") {
  ASReport kr = as_regular_check(kxy(), 6);
  CHECK(kr.d == 2);
  CHECK(kr.as_regular);
  CHECK(kr.dims == std::vector<std::size_t>{2, 1, 0});
  REQUIRE(kr.pairings.size() == 1);
  CHECK(kr.pairings[0] == Matrix{{0, 1}, {-1, 0}});

  ASReport singular = as_regular_check(txy(), 6);
  CHECK(singular.d == 2);
  REQUIRE(singular.pairings.size() == 1);
  CHECK(singular.pairings[0] == Matrix{{0, 1}, {0, 0}});
  CHECK_FALSE(singular.pairings_nondegenerate);
  CHECK_FALSE(singular.as_regular);

  ASReport fr = as_regular_check(QuadraticAlgebra::free(2), 6);
  CHECK(fr.d == 1);
  CHECK_FALSE(fr.frobenius_top_one);
  CHECK_FALSE(fr.as_regular);

  QuadraticAlgebra all = QuadraticAlgebra::make(2, Matrix::identity(4));
  CHECK_THROWS_AS(as_regular_check(all, 4), MathError);
}

TEST_CASE("corpus is AS-regular with the expected global dimension") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    ASReport rep = as_regular_check(entry.algebra, 6);
    CHECK(rep.as_regular);
    CHECK(rep.d == entry.d);
    CHECK(rep.dims[entry.d - 1] == 1);
    CHECK(rep.pairings.size() == entry.d - 1);
  }
  CHECK(as_regular_check(kxyz(), 6).dims == std::vector<std::size_t>{3, 3, 1, 0});
}

TEST_CASE("property: biduality and dim R_l = dim A^!_l") {
  std::vector<QuadraticAlgebra> algebras{txy(), QuadraticAlgebra::free(2), QuadraticAlgebra::make(2, Matrix::identity(4))};
  for (const auto& e : corpus()) algebras.push_back(e.algebra);
  for (const auto& a : algebras) {
    QuadraticAlgebra dd = koszul_dual(koszul_dual(a));
    CHECK(dd.relations == a.relations);
    CHECK(dd.names == a.names);
    auto spaces = relation_spaces(a, 5);
    QuadraticAlgebra dual = koszul_dual(a);
    for (std::size_t l = 1; l <= 5; ++l) {
      CHECK(spaces[l - 1] == direct_relation_space(a, l));
      CHECK(spaces[l - 1].dim() == direct_graded_dim(dual, l));
    }
  }
}

TEST_CASE("property: graded_dims agree with the quotient-rank oracle") {
  for (const auto& e : corpus()) {
    auto dims = graded_dims(e.algebra, 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(dims[n] == direct_graded_dim(e.algebra, n));
  }
}

TEST_CASE("property: Hilbert series consistency to degree 6") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    CHECK(koszul_series_consistent(e.algebra, 6));
  }
}

TEST_CASE("property: pairing matrices reassemble the top vector") {
  for (const auto& e : corpus()) {
    auto spaces = relation_spaces(e.algebra, e.d);
    const Subspace& top = spaces[e.d - 1];
    for (std::size_t k = 1; k < e.d; ++k) {
      Matrix c = pairing_matrix(top, spaces[k - 1], spaces[e.d - k - 1]);
      Matrix flip = pairing_matrix(top, spaces[e.d - k - 1], spaces[k - 1]);
      CHECK(c.rows() == flip.cols());
      // Both expansions recover w_d.
      Matrix flat(1, c.rows() * c.cols());
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) flat(0, i * c.cols() + j) = c(i, j);
      Matrix rebuilt = flat * kron(spaces[k - 1].basis(), spaces[e.d - k - 1].basis());
      CHECK(Subspace::span(rebuilt) == top);
      CHECK(rebuilt == top.basis());
    }
  }
}
