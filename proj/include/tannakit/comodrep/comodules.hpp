#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tannakit/exactlin/matrix.hpp"
#include "tannakit/exactlin/subspace.hpp"
#include "tannakit/moncat/category.hpp"
#include "tannakit/quadalg/quadratic_algebra.hpp"

namespace tannakit::comodrep {

using exactlin::Matrix;
using exactlin::Subspace;
using moncat::Word;
using quadalg::QuadraticAlgebra;

enum class Family { phi, theta };

/// The spaces R_1..R_d of an AS-regular algebra together with the maps
/// Phi_{a,b}: R_{a+b} -> R_a R_b and Theta_{a,b}: R_a R_d^-1 R_b -> R_{a+b-d}.
///
/// M(r_i) = R_i in its RREF basis and M(r_d^-1) is the line dual to R_d,
/// paired with w_d so that r_d r_d^-1 and r_d^-1 r_d cancel to 1 without a
/// change of coordinates. Words therefore need not be normalized: the
/// matrix of a whiskered step is a Kronecker product with identities.
class StructureMaps {
 public:
  /// Throws MathError when `a` is not AS-regular.
  explicit StructureMaps(const QuadraticAlgebra& a, std::size_t nmax = 6);

  int d() const { return d_; }
  const QuadraticAlgebra& algebra() const { return algebra_; }
  const quadalg::ASReport& report() const { return report_; }

  /// R_i for 1 <= i <= d.
  const Subspace& space(int i) const;
  std::size_t letter_dim(const moncat::Letter& l) const;
  std::size_t dim(const Word& w) const;

  /// Phi_{a,b} for a, b >= 0 with a + b <= d; identity when a or b is 0.
  /// Columns index the basis of R_{a+b}; rows index R_a (x) R_b.
  const Matrix& phi(int a, int b) const;

  /// Theta_{a,b} for 1 <= a, b <= d with a + b >= d; identity when a or b
  /// equals d. Columns index R_a (x) R_b (the middle factor is 1-dim).
  const Matrix& theta(int a, int b) const;

  /// kron(I_left, generator, I_right) for a step of U(d).
  Matrix step_matrix(const moncat::PresentedMonoidalCategory& u, const moncat::Step& s) const;

  /// Product of the step matrices, identity for the empty composite.
  Matrix evaluate(const moncat::PresentedMonoidalCategory& u, const Word& source, const moncat::Composite& c) const;

 private:
  int d_ = 0;
  QuadraticAlgebra algebra_;
  quadalg::ASReport report_;
  std::vector<Subspace> spaces_;
  std::vector<std::vector<Matrix>> phi_;    // [a][b]
  std::vector<std::vector<Matrix>> theta_;  // [a][b]
};

/// Structure map without keeping the cache.
Matrix structure_map(const QuadraticAlgebra& a, Family family, int i, int j);

struct RelationCheck {
  std::string label;
  bool holds = false;
};

/// Evaluates every relation of U(d) on both sides.
std::vector<RelationCheck> verify_structure_relations(const StructureMaps& maps);

/// M(lambda) with its letter-wise factorization.
struct ComoduleSpace {
  Word word;
  std::vector<std::size_t> factors;
  std::size_t dim = 1;
};

ComoduleSpace comodule_space(const StructureMaps& maps, const Word& lambda);

enum class ComoduleKind { costandard, standard, simple };

std::string to_string(ComoduleKind k);

/// One of nabla, Delta, L as data on M(lambda).
///   costandard: `sub` is the sum of incoming images; nabla = M / sub.
///   standard:   `sub` is the common kernel of the outgoing maps; Delta = sub.
///   simple:     `sub` is Delta intersected with the incoming images;
///               L = Delta / sub.
struct ComoduleWitness {
  Word word;
  ComoduleKind kind = ComoduleKind::costandard;
  std::size_t ambient = 0;
  Subspace sub;
  std::size_t dim = 0;
};

/// (nabla(lambda), Delta(lambda)) from the elementary maps into and out of lambda.
std::pair<ComoduleWitness, ComoduleWitness> nabla_delta(const StructureMaps& maps, const Word& lambda);

/// Image of Delta(lambda) in nabla(lambda). Over a prime field this is a
/// rank only, not a certified simple dimension.
ComoduleWitness simple_witness(const StructureMaps& maps, const Word& lambda);

/// dim L(lambda). Throws InputError unless the field is Q.
std::size_t simple_dim(const StructureMaps& maps, const Word& lambda);

struct ComoduleRow {
  Word word;
  std::size_t dim_m = 0;
  std::size_t dim_nabla = 0;
  std::size_t dim_delta = 0;
  std::size_t dim_simple = 0;
};

/// One row per word, in input order. Rows are computed in parallel.
std::vector<ComoduleRow> comodule_table(const StructureMaps& maps, const std::vector<Word>& words);

/// a^p d^q in the character group of the torus of GL_2.
struct TorusWeight {
  int p = 0;
  int q = 0;
  friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
  friend auto operator<=>(const TorusWeight&, const TorusWeight&) = default;
};

std::string to_string(const TorusWeight& t);

/// wt(r1) = d, wt(r2) = ad, wt(r2^-1) = a^-1 d^-1. d = 2 words only.
TorusWeight wt(const Word& lambda);

/// Normalized d = 2 words of length <= maxlen with weight t, in shortlex order.
std::vector<Word> weight_fiber(const TorusWeight& t, std::size_t maxlen);

/// Sum of dim nabla over weight_fiber(t, maxlen). Requires d = 2.
std::size_t induced_dim(const StructureMaps& maps, const TorusWeight& t, std::size_t maxlen);

}  // namespace tannakit::comodrep
