#include "tannakit/ncpoly/ncpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tannakit/error.hpp"
#include "tannakit/exactlin/kernels.hpp"

namespace tannakit::ncpoly {

using exactlin::Matrix;
using exactlin::Subspace;

bool DegLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NCPoly NCPoly::monomial(Monomial m, const Scalar& c, Field f) {
  NCPoly p(f);
  p.add_term(m, c);
  return p;
}

NCPoly NCPoly::constant(const Scalar& c, Field f) { return monomial({}, c, f); }

NCPoly NCPoly::generator(std::uint32_t g, Field f) { return monomial({g}, 1, f); }

Scalar NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::size_t NCPoly::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

std::size_t NCPoly::min_length() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

std::optional<long> NCPoly::homogeneous_weight(const std::vector<int>& weights) const {
  std::optional<long> w;
  for (const auto& [m, c] : terms_) {
    long s = 0;
    for (auto g : m) s += weights.at(g);
    if (w && *w != s) return std::nullopt;
    w = s;
  }
  return w.value_or(0);
}

void NCPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c.in(field_));
  if (!inserted) {
    it->second += c.in(field_);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

NCPoly operator*(const Scalar& s, const NCPoly& p) {
  NCPoly out(p.field_);
  for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
  return out;
}

std::string NCPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    std::string c = it->second.str();
    out += (c[0] == '-') ? c : "+" + c;
    for (auto g : it->first) out += " " + names.at(g);
  }
  return out;
}

std::string NCPoly::pretty(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string c = it->second.str();
    bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string word;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (k > 0) word += '*';
      word += names.at(it->first[k]);
    }
    if (word.empty()) {
      out += c;
    } else if (c == "1") {
      out += word;
    } else {
      out += c + "*" + word;
    }
  }
  return out;
}

NCPoly parse_poly(const std::string& text, const std::vector<std::string>& names, Field f) {
  std::istringstream in(text);
  std::string tok;
  NCPoly p(f);
  bool have_term = false;
  Scalar coef;
  Monomial mono;
  auto flush = [&] {
    if (have_term) p.add_term(mono, coef);
    mono.clear();
  };
  while (in >> tok) {
    if (tok == "0" && !have_term) continue;
    if (tok[0] == '+' || tok[0] == '-') {
      flush();
      coef = Scalar::parse(tok, f);
      have_term = true;
      continue;
    }
    if (!have_term) throw InputError("polynomial term must start with a signed coefficient: '" + text + "'");
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw InputError("unknown generator '" + tok + "'");
    mono.push_back(static_cast<std::uint32_t>(it - names.begin()));
  }
  flush();
  return p;
}

bool PresentedAlgebra::homogeneous() const {
  return std::all_of(relations.begin(), relations.end(),
                     [&](const NCPoly& r) { return r.homogeneous_weight(weights).has_value(); });
}

std::size_t monomial_count(std::size_t num_gens, std::size_t bound) {
  std::size_t total = 0, layer = 1;
  for (std::size_t k = 0; k <= bound; ++k) {
    total += layer;
    layer *= num_gens;
  }
  return total;
}

std::size_t monomial_index(const Monomial& m, std::size_t num_gens) {
  std::size_t offset = m.empty() ? 0 : monomial_count(num_gens, m.size() - 1);
  std::size_t v = 0;
  for (auto g : m) v = v * num_gens + g;
  return offset + v;
}

namespace {

void for_each_word(std::size_t num_gens, std::size_t len, Monomial& cur, const auto& fn) {
  if (cur.size() == len) {
    fn(cur);
    return;
  }
  for (std::uint32_t g = 0; g < num_gens; ++g) {
    cur.push_back(g);
    for_each_word(num_gens, len, cur, fn);
    cur.pop_back();
  }
}

// Rows m1 r m2 for all splits of `extra` letters around r.
void append_shifts(Matrix& rows, const NCPoly& r, std::size_t num_gens, std::size_t extra,
                   std::size_t (*index)(const Monomial&, std::size_t)) {
  for (std::size_t left = 0; left <= extra; ++left) {
    const std::size_t right = extra - left;
    Monomial m1, m2;
    for_each_word(num_gens, left, m1, [&](const Monomial& a) {
      for_each_word(num_gens, right, m2, [&](const Monomial& b) {
        std::vector<Scalar> row(rows.cols(), Scalar::zero(rows.field()));
        for (const auto& [m, c] : r.terms()) {
          Monomial w = a;
          w.insert(w.end(), m.begin(), m.end());
          w.insert(w.end(), b.begin(), b.end());
          row[index(w, num_gens)] = c.in(rows.field());
        }
        rows.append_row(row);
      });
    });
  }
}

std::size_t fixed_length_index(const Monomial& m, std::size_t num_gens) {
  std::size_t v = 0;
  for (auto g : m) v = v * num_gens + g;
  return v;
}

}  // namespace

std::size_t graded_dim(const PresentedAlgebra& p, std::size_t n) {
  for (int w : p.weights) {
    if (w != 1) throw InputError("graded_dim needs every generator weight to be 1");
  }
  for (const auto& r : p.relations) {
    if (r.min_length() != r.max_length()) throw InputError("graded_dim needs length-homogeneous relations");
  }
  const std::size_t g = p.num_generators();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= g;
  Matrix rows(0, total, p.field);
  for (const auto& r : p.relations) {
    if (r.is_zero() || r.max_length() > n) continue;
    append_shifts(rows, r, g, n - r.max_length(), fixed_length_index);
  }
  return total - exactlin::rank(rows);
}

Subspace bounded_ideal_span(const std::vector<NCPoly>& rels, std::size_t num_gens, std::size_t bound, Field f) {
  Matrix rows(0, monomial_count(num_gens, bound), f);
  for (const auto& r : rels) {
    if (r.is_zero() || r.max_length() > bound) continue;
    for (std::size_t extra = 0; extra + r.max_length() <= bound; ++extra) {
      append_shifts(rows, r, num_gens, extra, monomial_index);
    }
  }
  return Subspace::span(rows);
}

bool span_equal(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b, std::size_t num_gens, std::size_t bound,
                Field f) {
  return bounded_ideal_span(a, num_gens, bound, f) == bounded_ideal_span(b, num_gens, bound, f);
}

bool in_bounded_ideal(const NCPoly& p, const std::vector<NCPoly>& rels, std::size_t num_gens, std::size_t bound) {
  if (p.max_length() > bound) throw std::invalid_argument("in_bounded_ideal: polynomial longer than the bound");
  Subspace span = bounded_ideal_span(rels, num_gens, bound, p.field());
  std::vector<Scalar> v(span.ambient(), Scalar::zero(p.field()));
  for (const auto& [m, c] : p.terms()) v[monomial_index(m, num_gens)] = c;
  return span.contains(v);
}

std::vector<Rule> orient_rules(const std::vector<NCPoly>& relations) {
  std::set<Monomial, DegLex> monos;
  Field f{};
  for (const auto& r : relations) {
    f = r.field();
    for (const auto& [m, c] : r.terms()) monos.insert(m);
  }
  std::vector<Monomial> cols(monos.rbegin(), monos.rend());
  std::map<Monomial, std::size_t, DegLex> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
  Matrix m(0, cols.size(), f);
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    std::vector<Scalar> row(cols.size(), Scalar::zero(f));
    for (const auto& [mono, c] : r.terms()) row[col_of[mono]] = c;
    m.append_row(row);
  }
  auto red = exactlin::rref(m);
  std::vector<Rule> rules;
  for (std::size_t k = 0; k < red.rank(); ++k) {
    Rule rule{cols[red.pivots[k]], NCPoly(f)};
    for (std::size_t j = red.pivots[k] + 1; j < cols.size(); ++j) {
      rule.tail.add_term(cols[j], -red.reduced(k, j));
    }
    rules.push_back(std::move(rule));
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) { return DegLex{}(a.lead, b.lead); });
  return rules;
}

namespace {

struct Match {
  Monomial mono;
  Scalar coef;
  std::size_t pos = 0;
  const Rule* rule = nullptr;
};

// Largest reducible monomial, leftmost position, first rule there.
std::optional<Match> find_redex(const NCPoly& p, const std::vector<Rule>& rules) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& mono = it->first;
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
      for (const Rule& rule : rules) {
        const Monomial& lead = rule.lead;
        if (lead.empty() || pos + lead.size() > mono.size()) continue;
        if (std::equal(lead.begin(), lead.end(), mono.begin() + static_cast<std::ptrdiff_t>(pos))) {
          return Match{mono, it->second, pos, &rule};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceResult rewrite_reduce_detailed(const NCPoly& p, const std::vector<Rule>& rules, std::size_t max_passes) {
  ReduceResult res{p, 0, false};
  NCPoly& cur = res.normal_form;
  const Field f = cur.field();
  while (auto m = find_redex(cur, rules)) {
    if (res.steps >= max_passes) {
      res.hit_cap = true;
      break;
    }
    const auto cut = static_cast<std::ptrdiff_t>(m->pos);
    const auto tail_start = static_cast<std::ptrdiff_t>(m->pos + m->rule->lead.size());
    NCPoly left = NCPoly::monomial(Monomial(m->mono.begin(), m->mono.begin() + cut), 1, f);
    NCPoly right = NCPoly::monomial(Monomial(m->mono.begin() + tail_start, m->mono.end()), 1, f);
    cur -= NCPoly::monomial(m->mono, m->coef, f);
    cur += m->coef * (left * m->rule->tail * right);
    ++res.steps;
  }
  return res;
}

NCPoly rewrite_reduce(const NCPoly& p, const std::vector<Rule>& rules, std::size_t max_passes) {
  return rewrite_reduce_detailed(p, rules, max_passes).normal_form;
}

}  // namespace tannakit::ncpoly
