#include "tannakit/comodrep/comodules.hpp"

#include <stdexcept>

#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"
#include "tannakit/moncat/poset.hpp"

namespace tannakit::comodrep {

using exactlin::kron;
using exactlin::multiply;
using moncat::Letter;

namespace {

Matrix eye(std::size_t n, exactlin::Field f) { return Matrix::identity(n, f); }

// Coordinates of each basis vector of `top` in the tensor basis of left (x) right.
Matrix inclusion_matrix(const Subspace& top, const Subspace& left, const Subspace& right) {
  const Subspace prod = Subspace::tensor(left, right);
  Matrix m(prod.dim(), top.dim(), top.field());
  for (std::size_t k = 0; k < top.dim(); ++k) {
    auto coords = prod.coordinates(top.vector(k));
    if (!coords) throw std::logic_error("R_{a+b} is not contained in R_a (x) R_b");
    for (std::size_t i = 0; i < prod.dim(); ++i) m(i, k) = (*coords)[i];
  }
  return m;
}

}  // namespace

StructureMaps::StructureMaps(const QuadraticAlgebra& a, std::size_t nmax) : algebra_(a) {
  report_ = quadalg::as_regular_check(a, nmax);
  if (!report_.as_regular) throw MathError("algebra is not AS-regular");
  d_ = static_cast<int>(report_.d);
  spaces_ = quadalg::relation_spaces(a, report_.d);
  const auto f = a.field();
  const auto n = [&](int i) { return i == 0 ? std::size_t{1} : spaces_[static_cast<std::size_t>(i - 1)].dim(); };

  phi_.assign(static_cast<std::size_t>(d_ + 1), std::vector<Matrix>(static_cast<std::size_t>(d_ + 1)));
  for (int x = 0; x <= d_; ++x) {
    for (int y = 0; x + y <= d_; ++y) {
      Matrix& m = phi_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (x == 0 || y == 0) {
        m = eye(n(x + y), f);
      } else {
        m = inclusion_matrix(space(x + y), space(x), space(y));
      }
    }
  }

  // theta_{p,q} with p + q = d sends v_k (x) w* (x) u_j to (C^(q))^-1_{kj}.
  theta_.assign(static_cast<std::size_t>(d_ + 1), std::vector<Matrix>(static_cast<std::size_t>(d_ + 1)));
  for (int q = 1; q < d_; ++q) {
    const int p = d_ - q;
    const Matrix inv = exactlin::inverse(report_.pairings[static_cast<std::size_t>(q - 1)]);
    Matrix m(1, n(p) * n(q), f);
    for (std::size_t k = 0; k < n(p); ++k)
      for (std::size_t j = 0; j < n(q); ++j) m(0, k * n(q) + j) = inv(k, j);
    theta_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = std::move(m);
  }
  for (int c = 1; c <= d_; ++c) {
    theta_[static_cast<std::size_t>(d_)][static_cast<std::size_t>(c)] = eye(n(c), f);
    theta_[static_cast<std::size_t>(c)][static_cast<std::size_t>(d_)] = eye(n(c), f);
  }
  // Theta_{a,b} = (I_c (x) theta_{d-b,b}) o (Phi_{c,d-b} (x) I_b), c = a + b - d.
  for (int x = 1; x < d_; ++x) {
    for (int y = 1; y < d_; ++y) {
      const int c = x + y - d_;
      if (c < 1) continue;
      const Matrix split = kron(phi(c, d_ - y), eye(n(y), f));
      const Matrix contract = kron(eye(n(c), f), theta(d_ - y, y));
      theta_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = multiply(contract, split);
    }
  }
}

const Subspace& StructureMaps::space(int i) const {
  if (i < 1 || i > d_) throw std::invalid_argument("R_i requested outside 1..d");
  return spaces_[static_cast<std::size_t>(i - 1)];
}

std::size_t StructureMaps::letter_dim(const Letter& l) const {
  const int i = static_cast<int>(l.gen) + 1;
  if (i > d_ || (l.exp == -1 && i != d_)) throw InputError("letter outside the lambda alphabet");
  return l.exp == -1 ? 1 : space(i).dim();
}

std::size_t StructureMaps::dim(const Word& w) const {
  std::size_t out = 1;
  for (const Letter& l : w) out *= letter_dim(l);
  return out;
}

const Matrix& StructureMaps::phi(int a, int b) const {
  if (a < 0 || b < 0 || a + b > d_) throw std::invalid_argument("Phi_{a,b} needs a, b >= 0 and a + b <= d");
  return phi_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const Matrix& StructureMaps::theta(int a, int b) const {
  if (a < 1 || b < 1 || a > d_ || b > d_ || a + b < d_) {
    throw std::invalid_argument("Theta_{a,b} needs 1 <= a, b <= d and a + b >= d");
  }
  return theta_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Matrix StructureMaps::step_matrix(const moncat::PresentedMonoidalCategory& u, const moncat::Step& s) const {
  const moncat::MorGen& g = u.morphisms.at(s.morphism);
  const Matrix& core = g.kind == moncat::MorKind::phi ? phi(g.a, g.b) : theta(g.a, g.b);
  const auto f = algebra_.field();
  return kron(kron(eye(dim(s.left), f), core), eye(dim(s.right), f));
}

Matrix StructureMaps::evaluate(const moncat::PresentedMonoidalCategory& u, const Word& source,
                               const moncat::Composite& c) const {
  Matrix acc = eye(dim(source), algebra_.field());
  for (const auto& s : c) acc = multiply(step_matrix(u, s), acc);
  return acc;
}

Matrix structure_map(const QuadraticAlgebra& a, Family family, int i, int j) {
  StructureMaps maps(a);
  return family == Family::phi ? maps.phi(i, j) : maps.theta(i, j);
}

std::vector<RelationCheck> verify_structure_relations(const StructureMaps& maps) {
  const auto u = moncat::build_category(moncat::CategoryKind::U, maps.d());
  std::vector<RelationCheck> out;
  for (const auto& rel : u.relations) {
    const bool holds =
        u.type_checks(rel) && maps.evaluate(u, rel.source, rel.lhs) == maps.evaluate(u, rel.source, rel.rhs);
    out.push_back({rel.label, holds});
  }
  return out;
}

ComoduleSpace comodule_space(const StructureMaps& maps, const Word& lambda) {
  ComoduleSpace s;
  s.word = lambda;
  for (const Letter& l : lambda) {
    s.factors.push_back(maps.letter_dim(l));
    s.dim *= s.factors.back();
  }
  return s;
}

std::string to_string(ComoduleKind k) {
  switch (k) {
    case ComoduleKind::costandard: return "costandard";
    case ComoduleKind::standard: return "standard";
    case ComoduleKind::simple: return "simple";
  }
  return "unknown";
}

namespace {

Word normalized(const Word& w, int d) { return moncat::normalize(w, moncat::lambda_alphabet(d)); }

Matrix elementary_matrix(const StructureMaps& maps, const moncat::ElementaryMap& e) {
  const Matrix& core = e.kind == moncat::MorKind::phi ? maps.phi(e.a, e.b) : maps.theta(e.a, e.b);
  const auto f = maps.algebra().field();
  return kron(kron(eye(maps.dim(e.left), f), core), eye(maps.dim(e.right), f));
}

}  // namespace

std::pair<ComoduleWitness, ComoduleWitness> nabla_delta(const StructureMaps& maps, const Word& lambda) {
  const Word w = normalized(lambda, maps.d());
  const std::size_t n = maps.dim(w);
  const auto f = maps.algebra().field();

  Subspace incoming(n, f);
  for (const auto& e : moncat::elementary_maps(w, maps.d(), moncat::Direction::into)) {
    incoming = incoming + Subspace::span(elementary_matrix(maps, e).transpose());
  }
  std::vector<Subspace> kernels{Subspace::full(n, f)};
  for (const auto& e : moncat::elementary_maps(w, maps.d(), moncat::Direction::outof)) {
    kernels.push_back(exactlin::kernel(elementary_matrix(maps, e)));
  }
  Subspace common = exactlin::intersect_many(kernels);

  ComoduleWitness nabla{w, ComoduleKind::costandard, n, incoming, n - incoming.dim()};
  ComoduleWitness delta{w, ComoduleKind::standard, n, common, common.dim()};
  return {std::move(nabla), std::move(delta)};
}

ComoduleWitness simple_witness(const StructureMaps& maps, const Word& lambda) {
  auto [nabla, delta] = nabla_delta(maps, lambda);
  Subspace lost = exactlin::intersect(delta.sub, nabla.sub);
  const std::size_t dim = delta.dim - lost.dim();
  return {delta.word, ComoduleKind::simple, delta.ambient, std::move(lost), dim};
}

std::size_t simple_dim(const StructureMaps& maps, const Word& lambda) {
  if (!maps.algebra().field().is_rational()) {
    throw InputError("simple dimensions are certified over Q only");
  }
  return simple_witness(maps, lambda).dim;
}

std::vector<ComoduleRow> comodule_table(const StructureMaps& maps, const std::vector<Word>& words) {
  std::vector<ComoduleRow> rows(words.size());
  const long count = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic) num_threads(exactlin::max_threads())
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    auto [nabla, delta] = nabla_delta(maps, words[idx]);
    const std::size_t lost = exactlin::intersect(delta.sub, nabla.sub).dim();
    rows[idx] = {nabla.word, nabla.ambient, nabla.dim, delta.dim, delta.dim - lost};
  }
  return rows;
}

std::string to_string(const TorusWeight& t) {
  return "a^" + std::to_string(t.p) + " d^" + std::to_string(t.q);
}

TorusWeight wt(const Word& lambda) {
  TorusWeight t;
  for (const Letter& l : lambda) {
    if (l.gen == 0 && l.exp == 1) {
      t.q += 1;
    } else if (l.gen == 1) {
      t.p += l.exp;
      t.q += l.exp;
    } else {
      throw InputError("torus weights are defined for d = 2 words only");
    }
  }
  return t;
}

std::vector<Word> weight_fiber(const TorusWeight& t, std::size_t maxlen) {
  std::vector<Word> out;
  for (Word& w : moncat::enumerate_words(2, maxlen)) {
    if (wt(w) == t) out.push_back(std::move(w));
  }
  return out;
}

std::size_t induced_dim(const StructureMaps& maps, const TorusWeight& t, std::size_t maxlen) {
  if (maps.d() != 2) throw InputError("induced dimensions need d = 2");
  std::size_t total = 0;
  for (const auto& row : comodule_table(maps, weight_fiber(t, maxlen))) total += row.dim_nabla;
  return total;
}

}  // namespace tannakit::comodrep
