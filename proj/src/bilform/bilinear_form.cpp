#include "tannakit/bilform/bilinear_form.hpp"

#include "tannakit/error.hpp"
#include "tannakit/exactlin/subspace.hpp"

namespace tannakit::bilform {

using ncpoly::NCPoly;
using ncpoly::PolyMatrix;

BilinearForm BilinearForm::make(Matrix b) {
  if (b.rows() != b.cols()) throw InputError("bilinear form: matrix must be square");
  if (b.rows() < 2) throw InputError("bilinear form: dimension must be at least 2");
  if (exactlin::rank(b) != b.rows()) throw InputError("bilinear form: matrix is singular");
  return BilinearForm{std::move(b)};
}

coendc::FiberFunctorData tl_functor(const BilinearForm& bf) {
  const std::size_t n = bf.n();
  const Matrix c = exactlin::inverse(bf.b);
  Matrix psi(1, n * n, bf.b.field());
  Matrix phi(n * n, 1, bf.b.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      psi(0, i * n + j) = bf.b(i, j);
      phi(i * n + j, 0) = c(i, j);
    }
  return {{n}, {phi, psi}};
}

QDim quantum_dimension(const BilinearForm& bf) {
  const Matrix c = exactlin::inverse(bf.b);
  Scalar q = Scalar::zero(bf.b.field());
  for (std::size_t i = 0; i < bf.n(); ++i)
    for (std::size_t j = 0; j < bf.n(); ++j) q += bf.b(i, j) * c(i, j);
  return {q};
}

coendc::DualityDatum tl_duality(const BilinearForm& bf) {
  auto f = tl_functor(bf);
  return {0, {moncat::Letter{0, 1}}, f.morphisms[1], f.morphisms[0]};
}

namespace {

std::vector<std::string> z_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) out.push_back("z_" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

}  // namespace

coendc::PresentedBialgebra hb_presentation(const BilinearForm& bf, std::size_t max_passes) {
  auto b = coendc::compile_coend(moncat::build_category(moncat::CategoryKind::TL), tl_functor(bf));
  coendc::rename_generators(b, z_names(bf.n()));
  b.antipode = coendc::antipode_derive(b, {tl_duality(bf)}, max_passes).table;
  return b;
}

std::vector<NCPoly> hb_matrix_relations(const BilinearForm& bf) {
  const std::size_t n = bf.n();
  PolyMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = NCPoly::generator(static_cast<std::uint32_t>(i * n + j));
  const PolyMatrix s = PolyMatrix::from(bf.b) * z.transpose() * PolyMatrix::from(exactlin::inverse(bf.b));
  const PolyMatrix id = PolyMatrix::identity(n);
  std::vector<NCPoly> out;
  for (const PolyMatrix& m : {s * z - id, z * s - id})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) out.push_back(m(i, j));
  return out;
}

std::vector<MoritaClass> comorita_components(const std::vector<BilinearForm>& forms) {
  std::vector<MoritaClass> out;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const Scalar q = quantum_dimension(forms[k]).value;
    bool placed = false;
    for (auto& cls : out) {
      if (cls.q == q) {
        cls.members.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({q, {k}});
  }
  return out;
}

}  // namespace tannakit::bilform
