#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/presentations.hpp"
#include "tannakit/coendc/coend.hpp"
#include "tannakit/error.hpp"

using namespace tannakit;
using namespace tannakit::coendc;
using ncpoly::parse_poly;
using ncpoly::span_equal;
using quadalg::QuadraticAlgebra;

namespace {

const std::vector<std::string> kAbcdDelta{"a", "b", "c", "d", "delta"};

PresentedBialgebra uaut_kxy() {
  comodrep::StructureMaps maps(testing::kxy());
  auto cat = moncat::build_category(moncat::CategoryKind::D, 2, 1);
  auto b = compile_coend(cat, fiber_functor_D(maps, 1));
  rename_generators(b, testing::uaut_kxy_names());
  return b;
}

bool contains_up_to_sign(const std::vector<NCPoly>& rels, const NCPoly& p) {
  for (const auto& r : rels) {
    if (r == p || r == -p) return true;
  }
  return false;
}

// One object, no morphisms.
moncat::PresentedMonoidalCategory single_object(bool invertible) {
  moncat::PresentedMonoidalCategory cat;
  cat.objects.names = {"g"};
  cat.objects.invertible = {invertible};
  cat.objects.weights = {1};
  return cat;
}

}  // namespace

TEST_CASE("compile_coend over C for K[x,y]") {
  auto cat = moncat::build_category(moncat::CategoryKind::C);
  auto f = fiber_functor_C(testing::kxy());
  auto b = compile_coend(cat, f);
  REQUIRE(b.generators.size() == 5);
  CHECK(b.names() == std::vector<std::string>{"r1_1_1", "r1_1_2", "r1_2_1", "r1_2_2", "r2"});
  CHECK(b.weights() == std::vector<int>{1, 1, 1, 1, 2});
  rename_generators(b, kAbcdDelta);
  // P^T (Z (x) Z) - delta P^T with P = (0, 1, -1, 0)^T, expanded by hand.
  for (const char* s : {"+1 a c -1 c a", "+1 b d -1 d b", "+1 a d -1 c b -1 delta", "+1 d a -1 b c -1 delta"}) {
    CAPTURE(s);
    CHECK(contains_up_to_sign(b.relations, parse_poly(s, kAbcdDelta)));
  }
  CHECK(b.relations.size() == 4);
  CHECK(b.comultiplication[1] == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 3}});
  CHECK(b.counit[0] == 1);
  CHECK(b.counit[1] == 0);
}

TEST_CASE("compile_coend over D(2,1) gives the uaut(K[x,y]) ideal") {
  auto b = uaut_kxy();
  CHECK(b.generators.size() == 6);
  CHECK(b.generators[5].inverse_of == std::optional<std::size_t>{4});
  CHECK(b.weights() == std::vector<int>{1, 1, 1, 1, 2, -2});
  CHECK(b.relations.size() == 10);
  CHECK(span_equal(b.relations, testing::uaut_kxy_relations(), 6, 3));
  // Dropping a relation loses the equality.
  auto fewer = testing::uaut_kxy_relations();
  fewer.pop_back();
  CHECK_FALSE(span_equal(b.relations, fewer, 6, 3));
}

TEST_CASE("compile_coend trivial and error cases") {
  FiberFunctorData f{{2}, {}};
  auto b = compile_coend(single_object(false), f);
  CHECK(b.generators.size() == 4);
  CHECK(b.relations.empty());

  CHECK_THROWS_AS(compile_coend(single_object(true), f), InputError);

  auto cat = moncat::build_category(moncat::CategoryKind::C);
  auto bad = fiber_functor_C(testing::kxy());
  bad.morphisms[0] = Matrix(3, 1);
  CHECK_THROWS_AS(compile_coend(cat, bad), InputError);
}

TEST_CASE("uend_direct examples") {
  auto u = uend_direct(testing::kxy());
  CHECK(u.generators.size() == 4);
  CHECK(u.relations.size() == 3);
  const std::vector<std::string> abcd{"a", "b", "c", "d"};
  std::vector<NCPoly> expected{parse_poly("+1 a c -1 c a", abcd), parse_poly("+1 b d -1 d b", abcd),
                               parse_poly("+1 a d -1 c b +1 b c -1 d a", abcd)};
  CHECK(span_equal(u.relations, expected, 4, 2));

  CHECK(uend_direct(QuadraticAlgebra::free(2)).relations.empty());
  auto full = QuadraticAlgebra::make(2, Matrix::identity(4));
  CHECK(uend_direct(full).relations.empty());
}

TEST_CASE("elimination matches uend_direct on the corpus") {
  auto cat = moncat::build_category(moncat::CategoryKind::C);
  for (const auto& entry : testing::corpus()) {
    CAPTURE(entry.name);
    auto f = fiber_functor_C(entry.algebra);
    auto b = compile_coend(cat, f);
    auto e = eliminate_defined_generators(b, cat, f);
    const std::size_t n = entry.algebra.dim_v;
    CHECK(e.algebra.generators.size() == n * n);
    CHECK(e.substitutions.size() == entry.algebra.relations.dim() * entry.algebra.relations.dim());
    auto u = uend_direct(entry.algebra);
    CHECK(span_equal(e.algebra.relations, u.relations, n * n, 3));
  }
  // The transposed z identification breaks the equality.
  auto q = testing::qplane(2);
  auto f = fiber_functor_C(q);
  auto e = eliminate_defined_generators(compile_coend(cat, f), cat, f);
  auto u = uend_direct(q);
  std::vector<NCPoly> swapped;
  const std::vector<NCPoly> transpose{NCPoly::generator(0), NCPoly::generator(2), NCPoly::generator(1),
                                      NCPoly::generator(3)};
  for (const auto& r : u.relations) swapped.push_back(ncpoly::substitute(r, transpose));
  CHECK_FALSE(span_equal(e.algebra.relations, swapped, 4, 2));
}

TEST_CASE("elimination leaves minimal input unchanged") {
  FiberFunctorData f{{2}, {}};
  auto cat = single_object(false);
  auto b = compile_coend(cat, f);
  auto e = eliminate_defined_generators(b, cat, f);
  CHECK(e.algebra.generators == b.names());
  CHECK(e.algebra.relations.empty());
  CHECK(e.substitutions.empty());
}

TEST_CASE("antipode for uaut(K[x,y])") {
  auto b = uaut_kxy();
  auto cat = moncat::build_category(moncat::CategoryKind::D, 2, 1);
  comodrep::StructureMaps maps(testing::kxy());
  auto res = antipode_derive(b, duality_D(cat, fiber_functor_D(maps, 1)));
  const auto& names = testing::uaut_kxy_names();
  CHECK(res.table[0] == parse_poly("+1 delta^-1 d", names));
  CHECK(res.table[1] == parse_poly("-1 delta^-1 b", names));
  CHECK(res.table[2] == parse_poly("-1 delta^-1 c", names));
  CHECK(res.table[3] == parse_poly("+1 delta^-1 a", names));
  CHECK(res.table[4] == parse_poly("+1 delta^-1", names));
  CHECK(res.table[5] == parse_poly("+1 delta", names));
  CHECK(res.max_steps <= 10000);

  // Without duality data there is nothing to derive from.
  CHECK_THROWS_AS(antipode_derive(b, {}), MathError);
}

TEST_CASE("antipode for a group-like generator") {
  FiberFunctorData f{{1}, {}};
  auto b = compile_coend(single_object(true), f);
  auto res = antipode_derive(b, {});
  CHECK(res.table[0] == NCPoly::generator(1));
  CHECK(res.table[1] == NCPoly::generator(0));
}

TEST_CASE("property: counit kills and weights grade every compiled relation") {
  for (const auto& entry : testing::corpus()) {
    CAPTURE(entry.name);
    auto c = moncat::build_category(moncat::CategoryKind::C);
    std::vector<PresentedBialgebra> all{compile_coend(c, fiber_functor_C(entry.algebra))};
    comodrep::StructureMaps maps(entry.algebra);
    for (int a = 1; a < maps.d(); ++a) {
      all.push_back(compile_coend(moncat::build_category(moncat::CategoryKind::D, maps.d(), a),
                                  fiber_functor_D(maps, a)));
    }
    for (const auto& b : all) {
      CHECK_FALSE(b.relations.empty());
      CHECK(b.algebra().homogeneous());
      for (const auto& r : b.relations) CHECK(b.apply_counit(r).is_zero());
    }
  }
}

TEST_CASE("json and latex emitters") {
  auto b = uaut_kxy();
  const std::string json = to_json(b);
  CHECK(json.find("\"inverse_of\": \"delta\"") != std::string::npos);
  CHECK(json.find("\"comultiplication\"") != std::string::npos);
  CHECK(json == to_json(uaut_kxy()));

  CHECK(latex_name("delta^-1") == "\\delta^{-1}");
  CHECK(latex_name("r1_1_2") == "r1_{12}");
  CHECK(latex_name("a") == "a");
  const std::vector<std::string> names{"a", "b"};
  auto tex = to_latex({parse_poly("+1 a b -2/3 b a -1", names)}, names);
  CHECK(tex == "\\begin{align*}\n  -\\frac{2}{3} b a + a b - 1 &= 0 \\\\\n\\end{align*}\n");
}
