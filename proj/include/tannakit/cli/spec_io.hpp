#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tannakit/bilform/bilinear_form.hpp"
#include "tannakit/exactlin/matrix.hpp"
#include "tannakit/quadalg/quadratic_algebra.hpp"

namespace tannakit::cli {

using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;

struct Term {
  Scalar coef;
  std::array<std::size_t, 2> word{};

  friend bool operator==(const Term&, const Term&) = default;
};

/// Input data (V, R) of a quadratic algebra, kept as written.
struct AlgebraSpec {
  Field field{};
  std::size_t dim_v = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<Term>> relations;

  quadalg::QuadraticAlgebra algebra() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// One form ("form") or a list ("forms").
struct FormSpec {
  std::vector<Matrix> forms;
  bool single = true;

  std::vector<bilform::BilinearForm> bilinear_forms() const;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

using Spec = std::variant<AlgebraSpec, FormSpec>;

/// Parses a JSON document. Rationals are reduced "p/q" strings.
///
///   {"field": "Q" | {"Fp": p}, "dim_v": n, "variables": [...],
///    "relations": [[{"coef": "1", "word": [0, 1]}, ...], ...]}
///   {"form": [["0", "1"], ["-1/3", "0"]]}
///   {"forms": [<matrix>, ...]}
///
/// Throws InputError naming the offending field, or the parser's line and
/// column for malformed JSON.
Spec parse_spec(const std::string& text);

/// Canonical JSON (two-space indent, trailing newline).
std::string emit_spec(const Spec& spec);

}  // namespace tannakit::cli
