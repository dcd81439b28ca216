#include "tannakit/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "tannakit/bilform/bilinear_form.hpp"
#include "tannakit/cli/spec_io.hpp"
#include "tannakit/coendc/coend.hpp"
#include "tannakit/comodrep/comodules.hpp"
#include "tannakit/error.hpp"
#include "tannakit/moncat/poset.hpp"
#include "tannakit/ncpoly/ncpoly.hpp"

namespace tannakit::cli {

namespace {

using nlohmann::ordered_json;

struct Output {
  ordered_json doc;
  std::string text;
  std::optional<std::string> latex;
};

ordered_json matrix_value(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

// "key: value" per top-level entry.
std::string flat_text(const ordered_json& doc) {
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

std::string presentation_text(const std::vector<std::string>& names, const std::vector<ncpoly::NCPoly>& relations,
                              const std::optional<std::vector<ncpoly::NCPoly>>& antipode) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : names) os << " " << n;
  os << "\nrelations:\n";
  for (const auto& r : relations) os << "  " << r.pretty(names) << " = 0\n";
  if (antipode) {
    os << "antipode:\n";
    for (std::size_t g = 0; g < names.size(); ++g) os << "  S(" << names[g] << ") = " << (*antipode)[g].pretty(names) << "\n";
  }
  return os.str();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const AlgebraSpec& need_algebra(const Spec& spec, const std::string& command) {
  if (const auto* a = std::get_if<AlgebraSpec>(&spec)) return *a;
  throw InputError(command + " expects an algebra spec");
}

const FormSpec& need_forms(const Spec& spec, const std::string& command) {
  if (const auto* f = std::get_if<FormSpec>(&spec)) return *f;
  throw InputError(command + " expects a form spec");
}

std::size_t positive(std::size_t v, const char* what) {
  if (v == 0) throw InputError(std::string(what) + " must be positive");
  return v;
}

Output analyze(const AlgebraSpec& s, const RunConfig& c) {
  const std::size_t nmax = positive(c.bound.value_or(c.nmax), "bound");
  const auto a = s.algebra();
  const auto dual = quadalg::koszul_dual(a);
  Output out;
  ordered_json& doc = out.doc;
  doc["field"] = a.field().str();
  doc["dim_v"] = a.dim_v;
  doc["variables"] = a.names;
  doc["relations_dim"] = a.relations.dim();
  doc["graded_dims"] = quadalg::graded_dims(a, nmax);
  doc["koszul_dual"] = {{"relations_dim", dual.relations.dim()}, {"graded_dims", quadalg::graded_dims(dual, nmax)}};
  std::vector<std::size_t> spaces;
  for (const auto& r : quadalg::relation_spaces(a, nmax)) spaces.push_back(r.dim());
  doc["relation_space_dims"] = spaces;
  try {
    const auto rep = quadalg::as_regular_check(a, nmax);
    doc["as_regular"] = rep.as_regular;
    doc["d"] = rep.d;
    const std::size_t top = std::min(rep.d, rep.dims.size());
    doc["dims"] = std::vector<std::size_t>(rep.dims.begin(), rep.dims.begin() + static_cast<long>(top));
    doc["frobenius_top_one"] = rep.frobenius_top_one;
    doc["pairings_nondegenerate"] = rep.pairings_nondegenerate;
    doc["koszul_series_consistent"] = rep.koszul_series_consistent;
    doc["pairings"] = ordered_json::array();
    for (const auto& p : rep.pairings) doc["pairings"].push_back(matrix_value(p));
  } catch (const MathError& e) {
    doc["as_regular"] = false;
    doc["d"] = nullptr;
    doc["note"] = e.what();
  }
  out.text = flat_text(doc);
  return out;
}

Output uend(const AlgebraSpec& s, const RunConfig& c) {
  const std::size_t bound = positive(c.bound.value_or(c.length_bound), "bound");
  const auto a = s.algebra();
  const auto u = coendc::uend_direct(a);
  auto cat = moncat::build_category(moncat::CategoryKind::C);
  auto f = coendc::fiber_functor_C(a);
  const auto e = coendc::eliminate_defined_generators(coendc::compile_coend(cat, f), cat, f);
  const bool agree = ncpoly::span_equal(e.algebra.relations, u.relations, u.num_generators(), bound, a.field());
  if (!agree) throw MathError("compiled coend and direct uend presentation disagree at bound " + std::to_string(bound));
  Output out;
  out.doc = ordered_json::parse(coendc::to_json(u));
  out.doc["cross_check"] = {{"method", "eliminated coend over C"}, {"bound", bound}, {"span_equal", agree}};
  out.text = presentation_text(u.generators, u.relations, std::nullopt);
  out.latex = coendc::to_latex(u.relations, u.generators);
  return out;
}

Output uaut(const AlgebraSpec& s, const RunConfig& c) {
  const auto a = s.algebra();
  comodrep::StructureMaps maps(a, c.nmax);
  const int d = maps.d();
  auto cat = moncat::build_category(moncat::CategoryKind::D, d, 1);
  auto g = coendc::fiber_functor_D(maps, 1);
  auto b = coendc::compile_coend(cat, g);
  if (a.dim_v == 2 && d == 2) coendc::rename_generators(b, {"a", "b", "c", "d", "delta", "delta^-1"});
  std::optional<std::string> unavailable;
  try {
    b.antipode = coendc::antipode_derive(b, coendc::duality_D(cat, g), c.max_passes).table;
  } catch (const MathError& e) {
    if (d == 2) throw;
    unavailable = e.what();
  }
  Output out;
  out.doc = ordered_json::parse(coendc::to_json(b));
  out.doc["d"] = d;
  if (unavailable) out.doc["antipode_unavailable"] = *unavailable;
  out.text = presentation_text(b.names(), b.relations, b.antipode);
  out.latex = coendc::to_latex(b.relations, b.names());
  return out;
}

Output comod(const AlgebraSpec& s, const RunConfig& c, const CommandOptions& o) {
  comodrep::StructureMaps maps(s.algebra(), c.nmax);
  const int d = maps.d();
  const auto alphabet = moncat::lambda_alphabet(d);
  Output out;
  out.doc["d"] = d;
  std::ostringstream text;
  if (o.fiber) {
    if (d != 2) throw InputError("weight fibers need d = 2");
    const std::size_t maxlen = positive(c.bound.value_or(c.maxlen), "bound");
    const comodrep::TorusWeight t{o.fiber->first, o.fiber->second};
    ordered_json words = ordered_json::array();
    std::size_t total = 0;
    text << "weight " << to_string(t) << ", maxlen " << maxlen << "\n";
    for (const auto& w : comodrep::weight_fiber(t, maxlen)) {
      const std::size_t n = comodrep::nabla_delta(maps, w).first.dim;
      total += n;
      words.push_back({{"word", moncat::render(w, alphabet)}, {"nabla", n}});
      text << "  " << moncat::render(w, alphabet) << "  " << n << "\n";
    }
    out.doc["weight"] = to_string(t);
    out.doc["maxlen"] = maxlen;
    out.doc["fiber"] = words;
    out.doc["induced_dim"] = total;
    text << "induced_dim " << total << "\n";
    out.text = text.str();
    return out;
  }
  std::vector<moncat::Word> words;
  if (!o.words.empty()) {
    for (const auto& w : o.words) words.push_back(moncat::parse_word(w, alphabet));
  } else {
    words = moncat::enumerate_words(d, c.bound.value_or(c.length_bound));
  }
  const auto rows = comodrep::comodule_table(maps, words);
  out.doc["columns"] = d == 2 ? ordered_json{"word", "M", "nabla", "Delta", "L", "wt"}
                              : ordered_json{"word", "M", "nabla", "Delta", "L"};
  out.doc["rows"] = ordered_json::array();
  text << std::left << std::setw(24) << "word" << std::right << std::setw(6) << "M" << std::setw(7) << "nabla"
       << std::setw(7) << "Delta" << std::setw(5) << "L";
  if (d == 2) text << "  wt";
  text << "\n";
  for (const auto& r : rows) {
    const std::string w = moncat::render(r.word, alphabet);
    ordered_json row = ordered_json::array({w, r.dim_m, r.dim_nabla, r.dim_delta, r.dim_simple});
    text << std::left << std::setw(24) << w << std::right << std::setw(6) << r.dim_m << std::setw(7) << r.dim_nabla
         << std::setw(7) << r.dim_delta << std::setw(5) << r.dim_simple;
    if (d == 2) {
      const std::string wt = to_string(comodrep::wt(r.word));
      row.push_back(wt);
      text << "  " << wt;
    }
    text << "\n";
    out.doc["rows"].push_back(row);
  }
  out.text = text.str();
  return out;
}

Output poset(const AlgebraSpec& s, const RunConfig& c, const CommandOptions& o) {
  if (o.leq.has_value() == o.interval.has_value()) throw InputError("poset needs exactly one of --leq or --interval");
  comodrep::StructureMaps maps(s.algebra(), c.nmax);
  const int d = maps.d();
  const auto alphabet = moncat::lambda_alphabet(d);
  const auto& [ltext, mtext] = o.leq ? *o.leq : *o.interval;
  const auto lambda = moncat::parse_word(ltext, alphabet), mu = moncat::parse_word(mtext, alphabet);
  Output out;
  out.doc["d"] = d;
  out.doc["lambda"] = moncat::render(lambda, alphabet);
  out.doc["mu"] = moncat::render(mu, alphabet);
  out.doc["ell"] = {moncat::weight_ell(lambda, d), moncat::weight_ell(mu, d)};
  if (o.leq) {
    const bool v = moncat::leq(lambda, mu, d);
    out.doc["leq"] = v;
    out.text = v ? "true\n" : "false\n";
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& w : moncat::interval(lambda, mu, d)) {
      list.push_back(moncat::render(w, alphabet));
      out.text += moncat::render(w, alphabet) + "\n";
    }
    out.doc["interval"] = list;
  }
  return out;
}

Output hb(const FormSpec& s, const RunConfig& c) {
  if (!s.single) throw InputError("hb expects a single \"form\"");
  const auto bf = bilform::BilinearForm::make(s.forms[0]);
  const auto h = bilform::hb_presentation(bf, c.max_passes);
  const auto q = bilform::quantum_dimension(bf);
  Output out;
  out.doc = ordered_json::parse(coendc::to_json(h));
  out.doc["q"] = q.value.str();
  out.doc["minus_q"] = (-q.value).str();
  out.doc["convention"] = q.convention;
  out.text = presentation_text(h.names(), h.relations, h.antipode) + "q(b): " + q.value.str() +
             "\n-q(b): " + (-q.value).str() + "\n";
  out.latex = coendc::to_latex(h.relations, h.names());
  return out;
}

Output classify(const FormSpec& s) {
  const auto classes = bilform::comorita_components(s.bilinear_forms());
  Output out;
  out.doc["convention"] = "snake-normalized";
  out.doc["classes"] = ordered_json::array();
  for (const auto& cl : classes) {
    out.doc["classes"].push_back({{"q", cl.q.str()}, {"minus_q", (-cl.q).str()}, {"members", cl.members}});
    out.text += "q(b) = " + cl.q.str() + " (-q(b) = " + (-cl.q).str() + "):";
    for (auto m : cl.members) out.text += " " + std::to_string(m);
    out.text += "\n";
  }
  return out;
}

Output hilbert(const AlgebraSpec& s, const RunConfig& c) {
  const std::size_t n = positive(c.bound.value_or(c.length_bound), "bound");
  const auto a = s.algebra();
  const auto u = coendc::uend_direct(a);
  std::vector<std::size_t> ud, comm;
  const std::size_t vars = a.dim_v * a.dim_v;
  for (std::size_t k = 0; k <= n; ++k) {
    ud.push_back(ncpoly::graded_dim(u, k));
    comm.push_back(binomial(k + vars - 1, vars - 1));
  }
  std::optional<std::size_t> from;
  for (std::size_t k = n + 1; k-- > 0;) {
    if (ud[k] <= comm[k]) break;
    from = k;
  }
  Output out;
  out.doc["degree_bound"] = n;
  out.doc["algebra"] = quadalg::graded_dims(a, n);
  out.doc["uend"] = ud;
  out.doc["commutative"] = comm;
  out.doc["exceeds_commutative_from"] = from ? ordered_json(*from) : ordered_json(nullptr);
  out.text = flat_text(out.doc);
  return out;
}

Output dispatch(const std::string& command, const Spec& spec, const RunConfig& c, const CommandOptions& o) {
  if (command == "analyze") return analyze(need_algebra(spec, command), c);
  if (command == "uend") return uend(need_algebra(spec, command), c);
  if (command == "uaut") return uaut(need_algebra(spec, command), c);
  if (command == "comod") return comod(need_algebra(spec, command), c, o);
  if (command == "poset") return poset(need_algebra(spec, command), c, o);
  if (command == "hb") return hb(need_forms(spec, command), c);
  if (command == "classify") return classify(need_forms(spec, command));
  if (command == "hilbert") return hilbert(need_algebra(spec, command), c);
  throw InputError("unknown command \"" + command + "\"");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  if (name == "latex") return Format::latex;
  throw InputError("unknown format \"" + name + "\"");
}

RunResult run(const std::string& command, const std::string& spec_text, const RunConfig& config,
              const CommandOptions& options) {
  RunResult result;
  try {
    const Output out = dispatch(command, parse_spec(spec_text), config, options);
    switch (config.format) {
      case Format::json: result.document = out.doc.dump(2) + "\n"; break;
      case Format::text: result.document = out.text; break;
      case Format::latex:
        if (!out.latex) throw InputError("latex output is available for uend, uaut and hb only");
        result.document = *out.latex;
        break;
    }
  } catch (const InputError& e) {
    result.exit_code = 1;
    result.error = e.what();
  } catch (const MathError& e) {
    result.exit_code = 2;
    result.error = e.what();
  }
  return result;
}

}  // namespace tannakit::cli
