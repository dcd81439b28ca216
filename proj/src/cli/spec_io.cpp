#include "tannakit/cli/spec_io.hpp"

#include <json.hpp>

#include "tannakit/error.hpp"

namespace tannakit::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& field_of(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

std::size_t parse_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Scalar parse_rational(const json& v, const std::string& path, Field f) {
  if (!v.is_string()) fail(path, "expected a rational string");
  const std::string text = v.get<std::string>();
  Scalar q;
  try {
    q = Scalar::parse(text);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  if (q.str() != text) fail(path, "\"" + text + "\" is not in reduced form (" + q.str() + ")");
  try {
    return q.in(f);
  } catch (const std::exception&) {
    fail(path, "denominator of \"" + text + "\" vanishes in " + f.str());
  }
}

Field parse_field(const json& v, const std::string& path) {
  if (v.is_string()) {
    if (v.get<std::string>() != "Q") fail(path, "unknown field " + v.dump());
    return Field::rationals();
  }
  if (v.is_object() && v.size() == 1 && v.contains("Fp")) {
    const std::size_t p = parse_count(v["Fp"], path + ".Fp");
    try {
      return Field::prime(p);
    } catch (const std::exception& e) {
      fail(path + ".Fp", e.what());
    }
  }
  fail(path, "expected \"Q\" or {\"Fp\": p}");
}

Matrix parse_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(rp, "expected an array");
    if (i == 0) cols = v[i].size();
    if (v[i].size() != cols || cols == 0) fail(rp, "ragged or empty row");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = parse_rational(v[i][j], path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                               Field::rationals());
  return m;
}

AlgebraSpec parse_algebra(const json& doc) {
  AlgebraSpec s;
  s.field = doc.contains("field") ? parse_field(doc["field"], "field") : Field::rationals();
  s.dim_v = parse_count(field_of(doc, "dim_v", "spec"), "dim_v");
  if (s.dim_v == 0) fail("dim_v", "must be positive");
  if (doc.contains("variables")) {
    const json& vars = doc["variables"];
    if (!vars.is_array() || vars.size() != s.dim_v) fail("variables", "expected dim_v names");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!vars[i].is_string() || vars[i].get<std::string>().empty())
        fail("variables[" + std::to_string(i) + "]", "expected a non-empty string");
      s.variables.push_back(vars[i].get<std::string>());
    }
  } else {
    s.variables = quadalg::default_names(s.dim_v);
  }
  const json& rels = field_of(doc, "relations", "spec");
  if (!rels.is_array()) fail("relations", "expected an array");
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string rp = "relations[" + std::to_string(r) + "]";
    if (!rels[r].is_array()) fail(rp, "expected an array of terms");
    std::vector<Term> terms;
    for (std::size_t t = 0; t < rels[r].size(); ++t) {
      const std::string tp = rp + "[" + std::to_string(t) + "]";
      const json& term = rels[r][t];
      if (!term.is_object()) fail(tp, "expected {\"coef\", \"word\"}");
      Term out;
      out.coef = parse_rational(field_of(term, "coef", tp), tp + ".coef", s.field);
      const json& word = field_of(term, "word", tp);
      if (!word.is_array() || word.size() != 2) fail(tp + ".word", "relation words must have length 2");
      for (std::size_t k = 0; k < 2; ++k) {
        out.word[k] = parse_count(word[k], tp + ".word[" + std::to_string(k) + "]");
        if (out.word[k] >= s.dim_v) fail(tp + ".word[" + std::to_string(k) + "]", "variable index out of range");
      }
      terms.push_back(out);
    }
    s.relations.push_back(std::move(terms));
  }
  return s;
}

FormSpec parse_forms(const json& doc) {
  FormSpec s;
  if (doc.contains("form")) {
    s.forms.push_back(parse_matrix(doc["form"], "form"));
  } else {
    s.single = false;
    const json& list = doc["forms"];
    if (!list.is_array() || list.empty()) fail("forms", "expected a non-empty array of matrices");
    for (std::size_t k = 0; k < list.size(); ++k) s.forms.push_back(parse_matrix(list[k], "forms[" + std::to_string(k) + "]"));
  }
  for (std::size_t k = 0; k < s.forms.size(); ++k) {
    try {
      bilform::BilinearForm::make(s.forms[k]);
    } catch (const InputError& e) {
      fail(s.single ? "form" : "forms[" + std::to_string(k) + "]", e.what());
    }
  }
  return s;
}

ordered_json rational_string(const Scalar& s) { return s.str(); }

ordered_json matrix_value(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

quadalg::QuadraticAlgebra AlgebraSpec::algebra() const {
  const std::size_t n2 = dim_v * dim_v;
  Matrix rels(relations.size(), n2, field);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const auto& t : relations[r]) {
      const std::size_t col = t.word[0] * dim_v + t.word[1];
      rels(r, col) += t.coef.in(field);
    }
  }
  if (relations.empty()) return quadalg::QuadraticAlgebra::make(dim_v, Matrix(0, n2, field), variables);
  return quadalg::QuadraticAlgebra::make(dim_v, rels, variables);
}

std::vector<bilform::BilinearForm> FormSpec::bilinear_forms() const {
  std::vector<bilform::BilinearForm> out;
  for (const auto& m : forms) out.push_back(bilform::BilinearForm::make(m));
  return out;
}

Spec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("spec: expected a JSON object");
  const int kinds = static_cast<int>(doc.contains("relations")) + static_cast<int>(doc.contains("form")) +
                    static_cast<int>(doc.contains("forms"));
  if (kinds != 1) throw InputError("spec: expected exactly one of \"relations\", \"form\", \"forms\"");
  if (doc.contains("relations")) return parse_algebra(doc);
  return parse_forms(doc);
}

std::string emit_spec(const Spec& spec) {
  ordered_json doc;
  if (const auto* a = std::get_if<AlgebraSpec>(&spec)) {
    if (a->field.is_rational()) {
      doc["field"] = "Q";
    } else {
      doc["field"] = {{"Fp", a->field.modulus}};
    }
    doc["dim_v"] = a->dim_v;
    doc["variables"] = a->variables;
    doc["relations"] = ordered_json::array();
    for (const auto& rel : a->relations) {
      ordered_json terms = ordered_json::array();
      for (const auto& t : rel) terms.push_back({{"coef", t.coef.str()}, {"word", {t.word[0], t.word[1]}}});
      doc["relations"].push_back(terms);
    }
  } else {
    const auto& f = std::get<FormSpec>(spec);
    if (f.single) {
      doc["form"] = matrix_value(f.forms.at(0));
    } else {
      doc["forms"] = ordered_json::array();
      for (const auto& m : f.forms) doc["forms"].push_back(matrix_value(m));
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace tannakit::cli
