#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tannakit/moncat/word.hpp"

namespace tannakit::moncat {

enum class MorKind { inclusion, phi, theta, cup, cap, pairing };

std::string to_string(MorKind k);

/// A morphism generator. For phi/theta/pairing, (a, b) are the usual
/// indices of phi_{a,b}, theta_{a,b} and r_a r_d^-1 r_b -> 1.
struct MorGen {
  std::string name;
  Word source;
  Word target;
  MorKind kind = MorKind::inclusion;
  int a = 0;
  int b = 0;
};

/// left (x) generator (x) right.
struct Step {
  Word left;
  std::size_t morphism = 0;
  Word right;
};

/// Steps applied first to last; no steps means the identity.
using Composite = std::vector<Step>;

/// A defining relation lhs = rhs between composites from source to target.
struct Relation {
  std::string label;
  Word source;
  Word target;
  Composite lhs;
  Composite rhs;
};

enum class CategoryKind { C, D, U, U_up_plus, TL };

struct PresentedMonoidalCategory {
  CategoryKind kind = CategoryKind::C;
  int d = 0;
  Alphabet objects;
  std::vector<MorGen> morphisms;
  std::vector<Relation> relations;

  Word word(std::string_view text) const { return parse_word(text, objects); }
  std::string render(const Word& w) const { return moncat::render(w, objects); }
  std::optional<std::size_t> find_morphism(std::string_view name) const;

  Word step_source(const Step& s) const;
  Word step_target(const Step& s) const;

  /// The composite's target when each step's source matches the previous
  /// target, starting from `source`; nullopt otherwise.
  std::optional<Word> compose_target(const Word& source, const Composite& c) const;
  bool type_checks(const Relation& r) const;
};

/// Builders for the categories used by the compiler:
///   C           <r1, r2 | r2 -> r1 r1>
///   D(d, a)     <r1..r_{d-1}, r_d^{+-1} | r_i -> r1^i, r_a r_d^-1 r_{d-a} -> 1>
///   U(d)        phi_{a,b} and theta_{a,b} with the four families of square relations
///   U_up_plus   r1..r_d with phi_{a,b} only
///   TL          <v | phi: 1 -> v v, psi: v v -> 1>
/// Throws InputError for d < 2 or a outside 1..d-1.
PresentedMonoidalCategory build_category(CategoryKind kind, int d = 2, int a = 1);

/// Object alphabet r1..r_d with r_d invertible and weight(r_i) = i.
Alphabet lambda_alphabet(int d);

/// The letter r_i (1-based) of the lambda alphabet.
inline Letter r(int i, int exp = 1) { return Letter{static_cast<std::size_t>(i - 1), exp}; }

}  // namespace tannakit::moncat
