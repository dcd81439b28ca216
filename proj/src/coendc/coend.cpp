#include "tannakit/coendc/coend.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"
#include "tannakit/exactlin/subspace.hpp"

namespace tannakit::coendc {

using exactlin::Scalar;
using moncat::Letter;
using ncpoly::Monomial;

std::size_t FiberFunctorData::word_dim(const Word& w) const {
  std::size_t n = 1;
  for (const Letter& l : w) {
    if (l.gen >= object_dims.size()) throw InputError("word letter outside the object alphabet");
    n *= l.exp == -1 ? 1 : object_dims[l.gen];
  }
  return n;
}

void FiberFunctorData::validate(const moncat::PresentedMonoidalCategory& cat) const {
  if (object_dims.size() != cat.objects.size()) throw InputError("fiber functor: one dimension per object generator");
  if (morphisms.size() != cat.morphisms.size()) throw InputError("fiber functor: one matrix per morphism generator");
  for (std::size_t k = 0; k < object_dims.size(); ++k) {
    if (cat.objects.invertible[k] && object_dims[k] != 1) {
      throw InputError("invertible generator " + cat.objects.names[k] + " must map to a 1-dimensional space");
    }
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    const auto& g = cat.morphisms[m];
    if (morphisms[m].rows() != word_dim(g.target) || morphisms[m].cols() != word_dim(g.source)) {
      throw InputError("fiber functor: matrix of " + g.name + " has the wrong shape");
    }
  }
}

Matrix evaluate_composite(const FiberFunctorData& f, const Word& source, const moncat::Composite& c) {
  Matrix acc = Matrix::identity(f.word_dim(source));
  for (const auto& s : c) {
    const Matrix step = exactlin::kron(exactlin::kron(Matrix::identity(f.word_dim(s.left)), f.morphisms.at(s.morphism)),
                                       Matrix::identity(f.word_dim(s.right)));
    acc = exactlin::multiply(step, acc);
  }
  return acc;
}

bool relations_hold(const moncat::PresentedMonoidalCategory& cat, const FiberFunctorData& f) {
  f.validate(cat);
  for (const auto& rel : cat.relations) {
    if (!cat.type_checks(rel)) return false;
    if (evaluate_composite(f, rel.source, rel.lhs) != evaluate_composite(f, rel.source, rel.rhs)) return false;
  }
  return true;
}

namespace {

Matrix columns_of(const exactlin::Subspace& s) { return s.basis().transpose(); }

}  // namespace

FiberFunctorData fiber_functor_C(const quadalg::QuadraticAlgebra& a) {
  FiberFunctorData f;
  f.object_dims = {a.dim_v, a.relations.dim()};
  f.morphisms = {columns_of(a.relations)};
  return f;
}

FiberFunctorData fiber_functor_D(const comodrep::StructureMaps& maps, int a) {
  const int d = maps.d();
  FiberFunctorData f;
  for (int i = 1; i <= d; ++i) f.object_dims.push_back(maps.space(i).dim());
  for (int i = 2; i <= d; ++i) f.morphisms.push_back(columns_of(maps.space(i)));
  f.morphisms.push_back(maps.theta(a, d - a));
  return f;
}

std::vector<std::string> PresentedBialgebra::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

std::vector<int> PresentedBialgebra::weights() const {
  std::vector<int> out;
  for (const auto& g : generators) out.push_back(g.weight);
  return out;
}

ncpoly::PresentedAlgebra PresentedBialgebra::algebra() const {
  ncpoly::PresentedAlgebra p;
  p.generators = names();
  p.weights = weights();
  p.relations = relations;
  if (!relations.empty()) p.field = relations.front().field();
  return p;
}

PolyMatrix PresentedBialgebra::letter_matrix(const Letter& l) const {
  if (l.gen >= object_dims.size()) throw InputError("letter outside the object alphabet");
  if (l.exp == -1) {
    if (!object_inverse[l.gen]) throw InputError("inverse of a non-invertible generator");
    PolyMatrix m(1, 1);
    m(0, 0) = NCPoly::generator(static_cast<std::uint32_t>(*object_inverse[l.gen]));
    return m;
  }
  const std::size_t n = object_dims[l.gen];
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = NCPoly::generator(static_cast<std::uint32_t>(object_offset[l.gen] + i * n + j));
  return m;
}

PolyMatrix PresentedBialgebra::word_matrix(const Word& w) const {
  PolyMatrix acc = PolyMatrix::identity(1);
  for (const Letter& l : w) acc = ncpoly::kron(acc, letter_matrix(l));
  return acc;
}

Scalar PresentedBialgebra::apply_counit(const NCPoly& p) const {
  Scalar total = 0;
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (auto g : m) term *= counit.at(g);
    total += term;
  }
  return total;
}

PresentedBialgebra compile_coend(const moncat::PresentedMonoidalCategory& cat, const FiberFunctorData& f) {
  f.validate(cat);
  PresentedBialgebra b;
  b.object_dims = f.object_dims;
  for (std::size_t k = 0; k < cat.objects.size(); ++k) {
    const std::size_t n = f.object_dims[k];
    const std::string& base = cat.objects.names[k];
    const int w = cat.objects.weights[k];
    b.object_offset.push_back(b.generators.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string name = n == 1 ? base : base + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
        b.generators.push_back({std::move(name), w, k, i, j, std::nullopt});
        b.counit.push_back(i == j ? 1 : 0);
        std::vector<std::pair<std::size_t, std::size_t>> delta;
        for (std::size_t p = 0; p < n; ++p) delta.push_back({b.object_offset[k] + i * n + p, b.object_offset[k] + p * n + j});
        b.comultiplication.push_back(std::move(delta));
      }
    if (cat.objects.invertible[k]) {
      const std::size_t g = b.object_offset[k];
      const std::size_t inv = b.generators.size();
      b.generators.push_back({base + "^-1", -w, k, 0, 0, g});
      b.counit.push_back(1);
      b.comultiplication.push_back({{inv, inv}});
      b.object_inverse.push_back(inv);
    } else {
      b.object_inverse.push_back(std::nullopt);
    }
  }

  const long count = static_cast<long>(cat.morphisms.size());
  std::vector<std::vector<NCPoly>> per_morphism(cat.morphisms.size());
#pragma omp parallel for schedule(dynamic) num_threads(exactlin::max_threads())
  for (long m = 0; m < count; ++m) {
    const auto idx = static_cast<std::size_t>(m);
    const auto& gen = cat.morphisms[idx];
    const PolyMatrix pt = PolyMatrix::from(f.morphisms[idx].transpose());
    const PolyMatrix diff = pt * b.word_matrix(gen.target) - b.word_matrix(gen.source) * pt;
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!diff(i, j).is_zero()) per_morphism[idx].push_back(diff(i, j));
  }
  for (auto& rels : per_morphism)
    for (auto& r : rels) b.relations.push_back(std::move(r));

  for (std::size_t k = 0; k < cat.objects.size(); ++k) {
    if (!b.object_inverse[k]) continue;
    const auto g = static_cast<std::uint32_t>(b.object_offset[k]);
    const auto inv = static_cast<std::uint32_t>(*b.object_inverse[k]);
    b.relations.push_back(NCPoly::monomial({g, inv}) - NCPoly::constant(1));
    b.relations.push_back(NCPoly::monomial({inv, g}) - NCPoly::constant(1));
  }
  return b;
}

void rename_generators(PresentedBialgebra& b, const std::vector<std::string>& names) {
  if (names.size() != b.generators.size()) throw InputError("rename_generators: wrong number of names");
  for (std::size_t g = 0; g < names.size(); ++g) b.generators[g].name = names[g];
}

ncpoly::PresentedAlgebra uend_direct(const quadalg::QuadraticAlgebra& a) {
  const std::size_t n = a.dim_v;
  const std::size_t g = n * n;
  const auto perp = a.relations.annihilator();
  Matrix rows(0, g * g, a.field());
  for (std::size_t x = 0; x < perp.dim(); ++x) {
    const auto f = perp.vector(x);
    for (std::size_t y = 0; y < a.relations.dim(); ++y) {
      const auto r = a.relations.vector(y);
      std::vector<Scalar> row(g * g, Scalar::zero(a.field()));
      // f_{pr} r_{qs} z_{qp} z_{sr}
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t rr = 0; rr < n; ++rr) {
          if (f[p * n + rr].is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
              if (r[q * n + s].is_zero()) continue;
              row[(q * n + p) * g + (s * n + rr)] += f[p * n + rr] * r[q * n + s];
            }
        }
      rows.append_row(row);
    }
  }
  const auto space = exactlin::Subspace::span(rows);

  ncpoly::PresentedAlgebra out;
  out.field = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.generators.push_back("z_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  out.weights.assign(g, 1);
  for (std::size_t k = 0; k < space.dim(); ++k) {
    NCPoly p(a.field());
    const auto v = space.vector(k);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      if (!v[idx].is_zero()) {
        p.add_term({static_cast<std::uint32_t>(idx / g), static_cast<std::uint32_t>(idx % g)}, v[idx]);
      }
    }
    out.relations.push_back(std::move(p));
  }
  return out;
}

Elimination eliminate_defined_generators(const PresentedBialgebra& b, const moncat::PresentedMonoidalCategory& cat,
                                         const FiberFunctorData& f) {
  f.validate(cat);
  const std::size_t objects = cat.objects.size();
  std::vector<std::optional<std::size_t>> definer(objects);
  for (std::size_t m = 0; m < cat.morphisms.size(); ++m) {
    const auto& g = cat.morphisms[m];
    if (g.source.size() != 1 || g.source[0].exp != 1 || g.target.empty()) continue;
    const std::size_t k = g.source[0].gen;
    if (cat.objects.invertible[k] || definer[k]) continue;
    bool self = false;
    for (const Letter& l : g.target) self = self || l.gen == k;
    if (!self) definer[k] = m;
  }
  for (std::size_t k = 0; k < objects; ++k) {
    if (!definer[k]) continue;
    for (const Letter& l : cat.morphisms[*definer[k]].target) {
      if (definer[l.gen]) throw InputError("eliminate_defined_generators: chained definitions are not supported");
    }
  }

  // Old index -> new index for the generators that stay.
  const std::size_t total = b.generators.size();
  std::vector<bool> removed(total, false);
  for (std::size_t g = 0; g < total; ++g) removed[g] = !b.generators[g].inverse_of && definer[b.generators[g].object];
  std::vector<NCPoly> rename(total);
  Elimination out;
  std::uint32_t next = 0;
  for (std::size_t g = 0; g < total; ++g) {
    if (removed[g]) continue;
    rename[g] = NCPoly::generator(next++);
    out.algebra.generators.push_back(b.generators[g].name);
    out.algebra.weights.push_back(b.generators[g].weight);
  }

  std::vector<NCPoly> images = rename;
  for (std::size_t k = 0; k < objects; ++k) {
    if (!definer[k]) continue;
    const auto& mor = cat.morphisms[*definer[k]];
    const Matrix& p = f.morphisms[*definer[k]];
    if (exactlin::rank(p) != p.cols()) throw MathError("matrix of " + mor.name + " is not injective");
    const Matrix pt = p.transpose();
    const Matrix s = exactlin::right_inverse(pt);
    const PolyMatrix zx = PolyMatrix::from(pt) * b.word_matrix(mor.target) * PolyMatrix::from(s);
    const std::size_t n = f.object_dims[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t g = b.object_offset[k] + i * n + j;
        images[g] = ncpoly::substitute(zx(i, j), rename);
        out.substitutions.push_back({b.generators[g].name, images[g]});
      }
  }

  for (const auto& r : b.relations) {
    NCPoly q = ncpoly::substitute(r, images);
    if (!q.is_zero()) out.algebra.relations.push_back(std::move(q));
  }
  if (!b.relations.empty()) out.algebra.field = b.relations.front().field();
  return out;
}

namespace {

bool reduces_to_zero(const NCPoly& p, const std::vector<ncpoly::Rule>& rules, std::size_t max_passes,
                     std::size_t& max_steps) {
  auto res = ncpoly::rewrite_reduce_detailed(p, rules, max_passes);
  max_steps = std::max(max_steps, res.steps);
  return res.normal_form.is_zero();
}

}  // namespace

AntipodeResult antipode_derive(const PresentedBialgebra& b, const std::vector<DualityDatum>& duality,
                               std::size_t max_passes) {
  const std::size_t objects = b.object_dims.size();
  AntipodeResult out;
  out.table.resize(b.generators.size());
  std::vector<PolyMatrix> s_of(objects);

  for (std::size_t k = 0; k < objects; ++k) {
    if (b.object_inverse[k]) {
      const std::size_t g = b.object_offset[k], inv = *b.object_inverse[k];
      out.table[g] = NCPoly::generator(static_cast<std::uint32_t>(inv));
      out.table[inv] = NCPoly::generator(static_cast<std::uint32_t>(g));
      continue;
    }
    const DualityDatum* datum = nullptr;
    for (const auto& dd : duality) {
      if (dd.object == k) datum = &dd;
    }
    const std::string& label = b.generators[b.object_offset[k]].name;
    if (!datum) throw MathError("no duality datum for the generators of " + label);

    const std::size_t nx = b.object_dims[k];
    const PolyMatrix zy = b.word_matrix(datum->dual);
    const std::size_t ny = zy.rows();
    if (datum->ev.rows() != 1 || datum->ev.cols() != nx * ny) throw InputError("ev has the wrong shape");
    if (nx != ny) throw MathError("dual of " + label + " has a different dimension");
    Matrix e(nx, ny);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) e(i, j) = datum->ev(0, i * ny + j);
    if (exactlin::rank(e) != nx) throw MathError("pairing for " + label + " is degenerate");

    if (datum->coev) {
      const Matrix& c = *datum->coev;
      if (c.cols() != 1 || c.rows() != nx * ny) throw InputError("coev has the wrong shape");
      using exactlin::kron;
      const Matrix ix = Matrix::identity(nx), iy = Matrix::identity(ny);
      if (exactlin::multiply(kron(datum->ev, ix), kron(ix, c)) != ix ||
          exactlin::multiply(kron(iy, datum->ev), kron(c, iy)) != iy) {
        throw MathError("snake identities fail for " + label);
      }
    }

    const PolyMatrix s = PolyMatrix::from(e) * zy.transpose() * PolyMatrix::from(exactlin::inverse(e));
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < nx; ++j) out.table[b.object_offset[k] + i * nx + j] = s(i, j);
    s_of[k] = s;
  }

  const auto rules = ncpoly::orient_rules(b.relations);
  for (std::size_t k = 0; k < objects; ++k) {
    PolyMatrix z = b.letter_matrix(Letter{k, 1});
    PolyMatrix s = s_of[k];
    if (b.object_inverse[k]) {
      s = b.letter_matrix(Letter{k, -1});
    }
    const PolyMatrix id = PolyMatrix::identity(z.rows());
    for (const PolyMatrix& lhs : {s * z - id, z * s - id}) {
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
          if (!reduces_to_zero(lhs(i, j), rules, max_passes, out.max_steps)) {
            throw MathError("antipode identity for " + b.generators[b.object_offset[k]].name +
                            " not certified within " + std::to_string(max_passes) + " rewrites");
          }
        }
    }
  }
  return out;
}

std::vector<DualityDatum> duality_D(const moncat::PresentedMonoidalCategory& d_cat, const FiberFunctorData& g) {
  std::vector<DualityDatum> out;
  for (std::size_t m = 0; m < d_cat.morphisms.size(); ++m) {
    const auto& mor = d_cat.morphisms[m];
    if (mor.kind != moncat::MorKind::pairing) continue;
    DualityDatum dd;
    dd.object = mor.source.front().gen;
    dd.dual.assign(mor.source.begin() + 1, mor.source.end());
    dd.ev = g.morphisms[m];
    out.push_back(std::move(dd));
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json terms_json(const NCPoly& p, const std::vector<std::string>& names) {
  ordered_json terms = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ordered_json word = ordered_json::array();
    for (auto g : it->first) word.push_back(names.at(g));
    terms.push_back({{"coef", it->second.str()}, {"word", word}});
  }
  return terms;
}

}  // namespace

std::string to_json(const PresentedBialgebra& b) {
  const auto names = b.names();
  ordered_json doc;
  doc["generators"] = ordered_json::array();
  for (const auto& g : b.generators) {
    ordered_json gen{{"name", g.name}, {"weight", g.weight}};
    if (g.inverse_of) gen["inverse_of"] = names[*g.inverse_of];
    doc["generators"].push_back(gen);
  }
  doc["relations"] = ordered_json::array();
  for (const auto& r : b.relations) doc["relations"].push_back(terms_json(r, names));
  doc["comultiplication"] = ordered_json::object();
  for (std::size_t g = 0; g < names.size(); ++g) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : b.comultiplication[g]) pairs.push_back({names[x], names[y]});
    doc["comultiplication"][names[g]] = pairs;
  }
  doc["counit"] = ordered_json::object();
  for (std::size_t g = 0; g < names.size(); ++g) doc["counit"][names[g]] = b.counit[g].str();
  if (b.antipode) {
    doc["antipode"] = ordered_json::object();
    for (std::size_t g = 0; g < names.size(); ++g) doc["antipode"][names[g]] = terms_json((*b.antipode)[g], names);
  }
  return doc.dump(2) + "\n";
}

std::string to_json(const ncpoly::PresentedAlgebra& a) {
  ordered_json doc;
  doc["generators"] = ordered_json::array();
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    doc["generators"].push_back({{"name", a.generators[g]}, {"weight", a.weights[g]}});
  }
  doc["relations"] = ordered_json::array();
  for (const auto& r : a.relations) doc["relations"].push_back(terms_json(r, a.generators));
  return doc.dump(2) + "\n";
}

std::string latex_name(const std::string& name) {
  static const std::set<std::string> greek{"alpha", "beta",  "gamma", "delta", "epsilon", "eta", "theta", "lambda",
                                           "mu",    "nu",    "xi",    "pi",    "rho",     "sigma", "tau", "phi",
                                           "chi",   "psi",   "omega"};
  std::string base = name, power;
  if (auto caret = base.find('^'); caret != std::string::npos) {
    power = "^{" + base.substr(caret + 1) + "}";
    base.resize(caret);
  }
  std::string sub;
  if (auto us = base.find('_'); us != std::string::npos) {
    for (char c : base.substr(us + 1)) {
      if (c != '_') sub += c;
    }
    sub = "_{" + sub + "}";
    base.resize(us);
  }
  if (greek.count(base)) base = "\\" + base;
  return base + sub + power;
}

std::string to_latex(const std::vector<NCPoly>& relations, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (const auto& r : relations) {
    std::string line;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      Scalar c = it->second;
      const bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
      if (negative) c = -c;
      if (line.empty()) {
        line += negative ? "-" : "";
      } else {
        line += negative ? " - " : " + ";
      }
      std::string coef;
      if (c.field().is_rational() && c.rational().get_den() != 1) {
        coef = "\\frac{" + c.rational().get_num().get_str() + "}{" + c.rational().get_den().get_str() + "}";
      } else if (!c.is_one() || it->first.empty()) {
        coef = c.str();
      }
      std::string word;
      for (auto g : it->first) word += (word.empty() ? "" : " ") + latex_name(names.at(g));
      line += coef + (coef.empty() || word.empty() ? "" : " ") + word;
    }
    os << "  " << (line.empty() ? "0" : line) << " &= 0 \\\\\n";
  }
  os << "\\end{align*}\n";
  return os.str();
}

}  // namespace tannakit::coendc
