#include "tannakit/moncat/category.hpp"

#include "tannakit/error.hpp"

namespace tannakit::moncat {

namespace {

Word pow_r1(int i) { return Word(static_cast<std::size_t>(i), r(1)); }

// r_i as a word, with r_0 the empty word.
Word rw(int i) { return i == 0 ? Word{} : Word{r(i)}; }

std::string idx_name(const char* base, int a, int b) {
  return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

class UBuilder {
 public:
  explicit UBuilder(int d, bool with_theta) : d_(d) {
    cat_.kind = with_theta ? CategoryKind::U : CategoryKind::U_up_plus;
    cat_.d = d;
    cat_.objects = lambda_alphabet(d);
    if (!with_theta) cat_.objects.invertible.back() = false;
    for (int a = 1; a < d; ++a) {
      for (int b = 1; a + b <= d; ++b) {
        cat_.morphisms.push_back({idx_name("phi", a, b), rw(a + b), concat(rw(a), rw(b)), MorKind::phi, a, b});
      }
    }
    if (!with_theta) return;
    const Word inv{r(d, -1)};
    for (int a = 1; a < d; ++a) {
      for (int b = 1; b < d; ++b) {
        if (a + b < d) continue;
        cat_.morphisms.push_back({idx_name("theta", a, b), concat(rw(a), inv, rw(b)), rw(a + b - d), MorKind::theta, a, b});
      }
    }
  }

  void add_rel1() {
    for (int a = 1; a <= d_; ++a)
      for (int b = 1; a + b <= d_; ++b)
        for (int c = 1; a + b + c <= d_; ++c) {
          Relation rel;
          rel.label = "rel1(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          rel.source = rw(a + b + c);
          rel.target = concat(rw(a), rw(b), rw(c));
          rel.lhs = {step({}, phi(a, b + c), {}), step(rw(a), phi(b, c), {})};
          rel.rhs = {step({}, phi(a + b, c), {}), step({}, phi(a, b), rw(c))};
          cat_.relations.push_back(std::move(rel));
        }
  }

  void add_rel2() {
    const Word inv{r(d_, -1)};
    for (int a = 1; a < d_; ++a)
      for (int b = 1; b < d_; ++b)
        for (int c = 1; c < d_; ++c) {
          if (a + b + c < 2 * d_) continue;
          Relation rel;
          rel.label = "rel2(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          rel.source = concat(concat(rw(a), inv, rw(b)), inv, rw(c));
          rel.target = rw(a + b + c - 2 * d_);
          rel.lhs = {step({}, theta(a, b), concat(inv, rw(c))), step({}, theta(a + b - d_, c), {})};
          rel.rhs = {step(concat(rw(a), inv), theta(b, c), {}), step({}, theta(a, b + c - d_), {})};
          cat_.relations.push_back(std::move(rel));
        }
  }

  // theta_{d,c} and phi_{a,0} are identities in the degenerate cases.
  void add_rel3() {
    const Word inv{r(d_, -1)};
    for (int a = 1; a < d_; ++a)
      for (int b = 1; a + b <= d_; ++b)
        for (int c = 1; c < d_; ++c) {
          if (b + c < d_) continue;
          Relation rel;
          rel.label = "rel3(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          rel.source = normalized(concat(rw(a + b), inv, rw(c)));
          rel.target = concat(rw(a), rw(b + c - d_));
          rel.lhs = {step({}, phi(a, b), concat(inv, rw(c))), step(rw(a), theta(b, c), {})};
          if (a + b < d_) rel.rhs.push_back(step({}, theta(a + b, c), {}));
          if (b + c > d_) rel.rhs.push_back(step({}, phi(a, b + c - d_), {}));
          cat_.relations.push_back(std::move(rel));
        }
  }

  // theta_{a,d} and phi_{0,c} are identities in the degenerate cases.
  void add_rel4() {
    const Word inv{r(d_, -1)};
    for (int a = 1; a < d_; ++a)
      for (int b = 1; b < d_; ++b)
        for (int c = 1; b + c <= d_; ++c) {
          if (a + b < d_) continue;
          Relation rel;
          rel.label = "rel4(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          rel.source = normalized(concat(rw(a), inv, rw(b + c)));
          rel.target = concat(rw(a + b - d_), rw(c));
          rel.lhs = {step(concat(rw(a), inv), phi(b, c), {}), step({}, theta(a, b), rw(c))};
          if (b + c < d_) rel.rhs.push_back(step({}, theta(a, b + c), {}));
          if (a + b > d_) rel.rhs.push_back(step({}, phi(a + b - d_, c), {}));
          cat_.relations.push_back(std::move(rel));
        }
  }

  PresentedMonoidalCategory take() { return std::move(cat_); }

 private:
  Word normalized(const Word& w) const { return normalize(w, cat_.objects); }
  Step step(Word left, std::size_t m, Word right) const { return Step{std::move(left), m, std::move(right)}; }
  std::size_t phi(int a, int b) const { return *cat_.find_morphism(idx_name("phi", a, b)); }
  std::size_t theta(int a, int b) const { return *cat_.find_morphism(idx_name("theta", a, b)); }

  int d_;
  PresentedMonoidalCategory cat_;
};

}  // namespace

std::string to_string(MorKind k) {
  switch (k) {
    case MorKind::inclusion: return "inclusion";
    case MorKind::phi: return "phi";
    case MorKind::theta: return "theta";
    case MorKind::cup: return "cup";
    case MorKind::cap: return "cap";
    case MorKind::pairing: return "pairing";
  }
  return "unknown";
}

Alphabet lambda_alphabet(int d) {
  Alphabet al;
  for (int i = 1; i <= d; ++i) {
    al.names.push_back("r" + std::to_string(i));
    al.invertible.push_back(i == d);
    al.weights.push_back(i);
  }
  return al;
}

std::optional<std::size_t> PresentedMonoidalCategory::find_morphism(std::string_view name) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].name == name) return i;
  }
  return std::nullopt;
}

Word PresentedMonoidalCategory::step_source(const Step& s) const {
  return normalize(concat(s.left, morphisms.at(s.morphism).source, s.right), objects);
}

Word PresentedMonoidalCategory::step_target(const Step& s) const {
  return normalize(concat(s.left, morphisms.at(s.morphism).target, s.right), objects);
}

std::optional<Word> PresentedMonoidalCategory::compose_target(const Word& source, const Composite& c) const {
  Word cur = normalize(source, objects);
  for (const Step& s : c) {
    if (step_source(s) != cur) return std::nullopt;
    cur = step_target(s);
  }
  return cur;
}

bool PresentedMonoidalCategory::type_checks(const Relation& rel) const {
  const Word target = normalize(rel.target, objects);
  auto l = compose_target(rel.source, rel.lhs);
  auto r = compose_target(rel.source, rel.rhs);
  return l && r && *l == target && *r == target;
}

PresentedMonoidalCategory build_category(CategoryKind kind, int d, int a) {
  PresentedMonoidalCategory cat;
  cat.kind = kind;
  switch (kind) {
    case CategoryKind::C: {
      cat.d = 2;
      cat.objects = lambda_alphabet(2);
      cat.objects.invertible = {false, false};
      cat.morphisms.push_back({"i2", {r(2)}, pow_r1(2), MorKind::inclusion, 1, 1});
      return cat;
    }
    case CategoryKind::D: {
      if (d < 2) throw InputError("D(d, a) needs d >= 2");
      if (a < 1 || a >= d) throw InputError("D(d, a) needs 1 <= a <= d-1");
      cat.d = d;
      cat.objects = lambda_alphabet(d);
      for (int i = 2; i <= d; ++i) {
        cat.morphisms.push_back({"i" + std::to_string(i), {r(i)}, pow_r1(i), MorKind::inclusion, 0, 0});
      }
      cat.morphisms.push_back({"e", {r(a), r(d, -1), r(d - a)}, {}, MorKind::pairing, a, d - a});
      return cat;
    }
    case CategoryKind::U:
    case CategoryKind::U_up_plus: {
      if (d < 2) throw InputError("U(d) needs d >= 2");
      UBuilder b(d, kind == CategoryKind::U);
      b.add_rel1();
      if (kind == CategoryKind::U) {
        b.add_rel2();
        b.add_rel3();
        b.add_rel4();
      }
      return b.take();
    }
    case CategoryKind::TL: {
      cat.objects.names = {"v"};
      cat.objects.invertible = {false};
      cat.objects.weights = {0};
      const Word v{Letter{0, 1}};
      cat.morphisms.push_back({"phi", {}, concat(v, v), MorKind::cup, 0, 0});
      cat.morphisms.push_back({"psi", concat(v, v), {}, MorKind::cap, 0, 0});
      cat.relations.push_back({"snake_left", v, v, {Step{v, 0, {}}, Step{{}, 1, v}}, {}});
      cat.relations.push_back({"snake_right", v, v, {Step{{}, 0, v}, Step{v, 1, {}}}, {}});
      return cat;
    }
  }
  throw InputError("unknown category kind");
}

}  // namespace tannakit::moncat
