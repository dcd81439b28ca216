#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tannakit/coendc/coend.hpp"
#include "tannakit/exactlin/matrix.hpp"

namespace tannakit::bilform {

using exactlin::Matrix;
using exactlin::Scalar;

/// b(e_i, e_j) = B_ij on an n-dimensional space, n >= 2, B invertible.
struct BilinearForm {
  Matrix b;

  /// Throws InputError when B is not square, n < 2, or B is singular.
  static BilinearForm make(Matrix b);
  std::size_t n() const { return b.rows(); }
};

/// F(v) = V, F(psi) = b as a 1 x n^2 row and F(phi) = B^-1 as an n^2 x 1
/// column, the choice that makes both snakes the identity.
coendc::FiberFunctorData tl_functor(const BilinearForm& bf);

struct QDim {
  Scalar value;
  std::string convention = "snake-normalized";
};

/// F(psi o phi) = sum_ij B_ij (B^-1)_ij.
QDim quantum_dimension(const BilinearForm& bf);

/// ev = F(psi), coev = F(phi) with v its own dual.
coendc::DualityDatum tl_duality(const BilinearForm& bf);

/// coend of the Temperley-Lieb functor with generators z_i_j and the
/// antipode S(Z) = B Z^T B^-1 attached after verification.
coendc::PresentedBialgebra hb_presentation(const BilinearForm& bf, std::size_t max_passes = 10000);

/// Entries of S(Z) Z - I and Z S(Z) - I with S(Z) = B Z^T B^-1.
std::vector<ncpoly::NCPoly> hb_matrix_relations(const BilinearForm& bf);

struct MoritaClass {
  Scalar q;
  std::vector<std::size_t> members;
};

/// Groups forms by exact equality of q(b), classes in order of first member.
std::vector<MoritaClass> comorita_components(const std::vector<BilinearForm>& forms);

}  // namespace tannakit::bilform
