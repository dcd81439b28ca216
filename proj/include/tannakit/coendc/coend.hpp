#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tannakit/comodrep/comodules.hpp"
#include "tannakit/exactlin/matrix.hpp"
#include "tannakit/moncat/category.hpp"
#include "tannakit/ncpoly/ncpoly.hpp"
#include "tannakit/ncpoly/poly_matrix.hpp"
#include "tannakit/quadalg/quadratic_algebra.hpp"

namespace tannakit::coendc {

using exactlin::Matrix;
using moncat::Word;
using ncpoly::NCPoly;
using ncpoly::PolyMatrix;

/// A fiber functor on a presented monoidal category: one dimension per
/// object generator and one matrix per morphism generator. The matrix of
/// f: X -> Y is dim Y x dim X (columns index the basis of F(X)); words map
/// to Kronecker products, inverse letters to the dual line.
struct FiberFunctorData {
  std::vector<std::size_t> object_dims;
  std::vector<Matrix> morphisms;

  std::size_t word_dim(const Word& w) const;

  /// Throws InputError on a size or shape mismatch, or when an invertible
  /// generator is not 1-dimensional.
  void validate(const moncat::PresentedMonoidalCategory& cat) const;
};

/// F applied to a composite of whiskered generators; identity when empty.
Matrix evaluate_composite(const FiberFunctorData& f, const Word& source, const moncat::Composite& c);

/// Every stored relation of `cat` holds under F.
bool relations_hold(const moncat::PresentedMonoidalCategory& cat, const FiberFunctorData& f);

/// F(r1) = V, F(r2) = R and F(r2 -> r1 r1) the inclusion.
FiberFunctorData fiber_functor_C(const quadalg::QuadraticAlgebra& a);

/// G on D(d, a): G(r_i) = R_i, G(r_i -> r1^i) the inclusions and
/// G(r_a r_d^-1 r_{d-a} -> 1) = Theta_{a,d-a}.
FiberFunctorData fiber_functor_D(const comodrep::StructureMaps& maps, int a);

struct Generator {
  std::string name;
  int weight = 0;
  std::size_t object = 0;
  std::size_t i = 0;  // 0-based matrix position
  std::size_t j = 0;
  std::optional<std::size_t> inverse_of;
};

/// coend(F) as a presented bialgebra.
///
/// Generators are listed object by object, row-major within an object, each
/// inverse symbol right after its generator. Names are "<object>_<i>_<j>"
/// (1-based), the object name alone when F(object) is a line, and
/// "<object>^-1" for inverses.
struct PresentedBialgebra {
  std::vector<Generator> generators;
  std::vector<NCPoly> relations;
  /// comultiplication[g] lists the pairs (x, y) with Delta(g) = sum x (x) y.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> comultiplication;
  std::vector<exactlin::Scalar> counit;
  std::optional<std::vector<NCPoly>> antipode;

  std::vector<std::size_t> object_dims;
  /// first generator of each object, and its inverse symbol if any.
  std::vector<std::size_t> object_offset;
  std::vector<std::optional<std::size_t>> object_inverse;

  std::vector<std::string> names() const;
  std::vector<int> weights() const;
  ncpoly::PresentedAlgebra algebra() const;

  /// Z_k, or [g^-1] for an inverse letter.
  PolyMatrix letter_matrix(const moncat::Letter& l) const;
  /// Kronecker product of the letter matrices; [1] for the empty word.
  PolyMatrix word_matrix(const Word& w) const;

  /// Counit extended multiplicatively.
  exactlin::Scalar apply_counit(const NCPoly& p) const;
};

/// Matrix-coefficient presentation: for f: X -> Y with matrix P the entries
/// of P^T Z_Y - Z_X P^T, then g g^-1 - 1 and g^-1 g - 1. Category relations
/// are not used.
PresentedBialgebra compile_coend(const moncat::PresentedMonoidalCategory& cat, const FiberFunctorData& f);

/// Renames generators in order. Throws InputError on a count mismatch.
void rename_generators(PresentedBialgebra& b, const std::vector<std::string>& names);

/// T(V^* (x) V) / (sigma_23(R^perp (x) R)) with z_ij standing for e_j^* (x) e_i.
/// Relations are the canonical basis of the relation space.
ncpoly::PresentedAlgebra uend_direct(const quadalg::QuadraticAlgebra& a);

struct Elimination {
  ncpoly::PresentedAlgebra algebra;
  /// (eliminated generator name, its value in the remaining generators)
  std::vector<std::pair<std::string, NCPoly>> substitutions;
};

/// Removes every non-invertible object generator X that is the source of a
/// morphism X -> Y with injective matrix P, using Z_X = P^T Z_Y S with S a
/// right inverse of P^T. Throws MathError when such a P is not injective.
Elimination eliminate_defined_generators(const PresentedBialgebra& b, const moncat::PresentedMonoidalCategory& cat,
                                         const FiberFunctorData& f);

/// A right dual for an object generator X: a word Y with ev: X Y -> 1 and
/// optionally coev: 1 -> Y X.
struct DualityDatum {
  std::size_t object = 0;
  Word dual;
  Matrix ev;
  std::optional<Matrix> coev;
};

struct AntipodeResult {
  std::vector<NCPoly> table;
  std::size_t max_steps = 0;
};

/// S(Z_X) = E Z_Y^T E^-1 with E the dim X x dim Y reshaping of ev, and
/// S(g) = g^-1, S(g^-1) = g on group-likes. Both antipode identities are
/// rewritten to 0 under the oriented relations; throws MathError when a
/// snake identity fails, E is singular, rewriting is inconclusive, or a
/// non-invertible object has no datum.
AntipodeResult antipode_derive(const PresentedBialgebra& b, const std::vector<DualityDatum>& duality,
                               std::size_t max_passes = 10000);

/// The datum for r_a read off the pairing r_a r_d^-1 r_{d-a} -> 1 of D(d, a).
std::vector<DualityDatum> duality_D(const moncat::PresentedMonoidalCategory& d_cat, const FiberFunctorData& g);

/// Stable JSON document (two-space indent).
std::string to_json(const PresentedBialgebra& b);
std::string to_json(const ncpoly::PresentedAlgebra& a);

/// One "lhs &= 0 \\" line per relation inside an align* environment.
std::string to_latex(const std::vector<NCPoly>& relations, const std::vector<std::string>& names);

/// "r1_1_2" -> "r1_{12}", "delta^-1" -> "\delta^{-1}".
std::string latex_name(const std::string& name);

}  // namespace tannakit::coendc
