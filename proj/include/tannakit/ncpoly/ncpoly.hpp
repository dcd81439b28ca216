#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tannakit/exactlin/scalar.hpp"
#include "tannakit/exactlin/subspace.hpp"

namespace tannakit::ncpoly {

using exactlin::Field;
using exactlin::Scalar;

/// A word in the generators, by index.
using Monomial = std::vector<std::uint32_t>;

/// Degree-lexicographic order: shorter first, then by generator index.
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Noncommutative polynomial; zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::map<Monomial, Scalar, DegLex>;

  NCPoly() = default;
  explicit NCPoly(Field f) : field_(f) {}
  static NCPoly monomial(Monomial m, const Scalar& c = 1, Field f = Field::rationals());
  static NCPoly constant(const Scalar& c, Field f = Field::rationals());
  static NCPoly generator(std::uint32_t g, Field f = Field::rationals());

  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest monomial under DegLex; requires a nonzero polynomial.
  const Monomial& leading() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }
  Scalar coefficient(const Monomial& m) const;
  std::size_t max_length() const;
  std::size_t min_length() const;

  /// The common value of sum weights[g] over every term's letters; nullopt
  /// when terms disagree. The zero polynomial has weight 0.
  std::optional<long> homogeneous_weight(const std::vector<int>& weights) const;

  void add_term(const Monomial& m, const Scalar& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) { return NCPoly(a.field_) - a; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& s, const NCPoly& p);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Signed-term list, leading term first: "+1 a d -1 c b -1 delta".
  std::string str(const std::vector<std::string>& names) const;
  /// "a*d - c*b - delta".
  std::string pretty(const std::vector<std::string>& names) const;

 private:
  Field field_{};
  Terms terms_;
};

/// Inverse of NCPoly::str. Throws InputError on unknown names or bad numbers.
NCPoly parse_poly(const std::string& text, const std::vector<std::string>& names, Field f = Field::rationals());

/// Generators with integer weights and a list of relations.
struct PresentedAlgebra {
  std::vector<std::string> generators;
  std::vector<int> weights;
  std::vector<NCPoly> relations;
  Field field{};

  std::size_t num_generators() const { return generators.size(); }
  /// Every relation homogeneous for `weights`.
  bool homogeneous() const;
};

/// Dimension of the length-n component of a length-graded presentation.
/// Throws InputError when a weight is not 1 or a relation is not
/// length-homogeneous.
std::size_t graded_dim(const PresentedAlgebra& p, std::size_t n);

/// Two-sided span { m1 r m2 : |m1| + maxlen(r) + |m2| <= bound } inside the
/// space of monomials of length <= bound (indexed by monomial_index).
exactlin::Subspace bounded_ideal_span(const std::vector<NCPoly>& rels, std::size_t num_gens, std::size_t bound,
                                      Field f = Field::rationals());

/// Position of m among all monomials of length <= bound, by length then
/// base-num_gens value.
std::size_t monomial_index(const Monomial& m, std::size_t num_gens);
std::size_t monomial_count(std::size_t num_gens, std::size_t bound);

/// The two bounded spans coincide.
bool span_equal(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b, std::size_t num_gens, std::size_t bound,
                Field f = Field::rationals());

/// p lies in the bounded ideal span of rels (p must have length <= bound).
bool in_bounded_ideal(const NCPoly& p, const std::vector<NCPoly>& rels, std::size_t num_gens, std::size_t bound);

/// A rewriting rule lead -> tail, meaning lead - tail lies in the ideal and
/// every monomial of tail is DegLex-smaller than lead.
struct Rule {
  Monomial lead;
  NCPoly tail;
};

/// Interreduces the relations (row reduction over monomials sorted
/// DegLex-descending) so leading monomials are distinct and monic, then
/// orients each row as a rule. Rules are listed by increasing lead.
std::vector<Rule> orient_rules(const std::vector<NCPoly>& relations);

struct ReduceResult {
  NCPoly normal_form;
  std::size_t steps = 0;
  bool hit_cap = false;
};

/// Repeatedly rewrites the DegLex-largest reducible monomial at its leftmost
/// occurrence (first matching rule there) until nothing applies or
/// max_passes rewrites were made. A zero result certifies ideal membership;
/// anything else is inconclusive.
ReduceResult rewrite_reduce_detailed(const NCPoly& p, const std::vector<Rule>& rules, std::size_t max_passes);
NCPoly rewrite_reduce(const NCPoly& p, const std::vector<Rule>& rules, std::size_t max_passes);

}  // namespace tannakit::ncpoly
