#include "weave_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "weave/cohomology.hpp"
#include "weave/errors.hpp"
#include "weave/rational.hpp"
#include "weave/web.hpp"

namespace weave::cli {

namespace {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return out.str();
}

std::string integer_text(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  throw InputError(where + ": coefficient entries must be integers or integer strings");
}

std::vector<int> exponent_list(const Json& term, const char* key, int n, const std::string& where) {
  if (!term.contains(key) || !term[key].is_array()) throw InputError(where + ": missing exponent list " + key);
  const Json& list = term[key];
  if (list.size() != static_cast<std::size_t>(n + 1)) {
    throw InputError(where + ": exponent list length " + std::to_string(list.size()) + " for " + key + ", expected " +
                     std::to_string(n + 1));
  }
  std::vector<int> out;
  for (const Json& e : list) {
    if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000) {
      throw InputError(where + ": exponents must be integers in 0..1000");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

bool flag(const Json& doc, const char* key) {
  if (!doc.contains(key)) return false;
  if (!doc[key].is_boolean()) throw InputError(std::string("flag ") + key + " must be a boolean");
  return doc[key].get<bool>();
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(to_string(z));
}

Json poly_list(const std::vector<MultiPoly>& ps) {
  Json out = Json::array();
  for (const MultiPoly& p : ps) out.push_back(p.to_string());
  return out;
}

Json bidegree_json(const Bidegree& b) { return Json::array({b.x, b.u}); }

std::vector<Chart> selected(const InputDocument& doc, const Options& options) {
  if (options.chart) {
    validate_chart(*options.chart, doc.n);
    return {*options.chart};
  }
  return standard_atlas(doc.n);
}

/// Runs f, naming the chart when the Buchberger cap is hit.
template <typename F>
auto in_chart(const Chart& c, F&& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    throw CapExceeded("chart (" + c.label() + "): " + e.what());
  }
}

CiWeb make_web(const InputDocument& doc) {
  return CiWeb(doc.n, doc.pdes, doc.asserted_irreducible, doc.asserted_quasi_smooth);
}

Json verdict_json(const WebVerdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (v.vanishes_on_web) out["vanishes_on_web"] = *v.vanishes_on_web;
  Json charts = Json::array();
  for (const ChartVerdict& c : v.charts) {
    Json cj;
    cj["chart"] = c.chart.label();
    cj["degenerate"] = c.degenerate;
    cj["holds"] = c.holds;
    if (c.vanishes_on_web) cj["vanishes_on_web"] = *c.vanishes_on_web;
    cj["failures"] = c.failures;
    charts.push_back(std::move(cj));
  }
  out["charts"] = std::move(charts);
  return out;
}

void degenerate_notices(const WebVerdict& v, std::vector<std::string>& warnings) {
  for (const ChartVerdict& c : v.charts) {
    if (c.degenerate) warnings.push_back("chart (" + c.chart.label() + ") is degenerate (delta_p = 0): skipped");
  }
}

/// Per-chart verdicts, computed chart by chart so cap failures name the chart.
WebVerdict web_verdict(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& opts, bool hyper) {
  WebVerdict out;
  out.holds = true;
  bool any = false;
  bool on_web = true;
  for (const Chart& c : charts) {
    ChartVerdict v = in_chart(c, [&] {
      const ChartWebData d = chart_web_data(w, c, opts);
      return hyper ? hyperdicritical_in_chart(d, opts) : dicritical_in_chart(d, opts);
    });
    if (!v.degenerate) {
      any = true;
      out.holds = out.holds && v.holds;
    }
    on_web = on_web && v.vanishes_on_web.value_or(false);
    out.charts.push_back(std::move(v));
  }
  if (!any) throw InputError("web violates covering condition: the critical determinant vanishes in every chart");
  if (hyper) out.vanishes_on_web = on_web;
  return out;
}

WebVerdict smooth_verdict(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& opts) {
  WebVerdict out;
  out.holds = true;
  for (const Chart& c : charts) {
    WebVerdict one = in_chart(c, [&] { return smoothness_chart_check(w, {c}, opts); });
    out.holds = out.holds && one.holds;
    out.charts.push_back(std::move(one.charts.front()));
  }
  return out;
}

Json multidegree_json(const CiWeb& w) { return Json(multidegree(w)); }

Json bott_json(const MultiDegreeData& md) {
  Json out;
  out["weight"] = integer_json(md.weight());
  std::vector<int> deltas;
  for (const Bidegree& b : md.pairs()) deltas.push_back(b.x);
  out["multidegree"] = deltas;
  out["degree"] = integer_json(md.degree());
  const Rational N = script_N(md);
  const Integer bott = bott_number(md);
  out["script_N"] = format_exact(N);
  out["bott_number"] = integer_json(bott);
  out["relation_holds"] = Rational(bott) == Rational(md.weight()) * N;
  return out;
}

Json caustic_class_json(const CausticCertificate& c) {
  Json out;
  Json coeffs = Json::array();
  for (const Integer& a : c.coefficients) coeffs.push_back(integer_json(a));
  out["coefficients"] = std::move(coeffs);
  out["all_positive"] = c.all_positive;
  out["nonzero"] = c.nonzero;
  return out;
}

using Handler = std::function<Json(const InputDocument&, const Options&, std::vector<std::string>&)>;

Json cmd_bidegree(const InputDocument& doc, const Options&, std::vector<std::string>&) {
  Json pdes = Json::array();
  for (std::size_t a = 0; a < doc.pdes.size(); ++a) {
    Json p;
    p["index"] = a + 1;
    p["H"] = doc.pdes[a].H().to_string();
    p["bidegree"] = bidegree_json(doc.pdes[a].bidegree());
    pdes.push_back(std::move(p));
  }
  return Json{{"pdes", std::move(pdes)}};
}

Json cmd_chart_form(const InputDocument& doc, const Options& options, std::vector<std::string>& warnings) {
  const auto charts = selected(doc, options);
  Json pdes = Json::array();
  for (std::size_t a = 0; a < doc.pdes.size(); ++a) {
    Json forms = Json::array();
    for (const Chart& c : charts) {
      forms.push_back(Json{{"chart", c.label()}, {"F", chart_form(doc.pdes[a], c).F.to_string()}});
    }
    pdes.push_back(Json{{"index", a + 1}, {"charts", std::move(forms)}});
    for (std::string& s : pde_warnings(doc.pdes[a], charts)) warnings.push_back("PDE " + std::to_string(a + 1) + ", " + s);
  }
  return Json{{"pdes", std::move(pdes)}};
}

Json cmd_dual(const InputDocument& doc, const Options&, std::vector<std::string>&) {
  Json pdes = Json::array();
  for (std::size_t a = 0; a < doc.pdes.size(); ++a) {
    const BiHomogPde d = dual_pde(doc.pdes[a]);
    pdes.push_back(Json{{"index", a + 1}, {"dual", d.H().to_string()}, {"bidegree", bidegree_json(d.bidegree())}});
  }
  return Json{{"pdes", std::move(pdes)}};
}

Json cmd_linearizable(const InputDocument& doc, const Options& options, std::vector<std::string>&) {
  const auto charts = selected(doc, options);
  Json pdes = Json::array();
  for (std::size_t a = 0; a < doc.pdes.size(); ++a) {
    const WebVerdict v = is_linearizable_pde(doc.pdes[a], charts);
    Json p;
    p["index"] = a + 1;
    p["co_critical_set_is_S"] = v.holds;
    Json cs = Json::array();
    for (const ChartVerdict& c : v.charts) cs.push_back(Json{{"chart", c.chart.label()}, {"holds", c.holds}});
    p["charts"] = std::move(cs);
    pdes.push_back(std::move(p));
  }
  return Json{{"note", "necessary condition for linearizability"}, {"pdes", std::move(pdes)}};
}

Json cmd_critical(const InputDocument& doc, const Options& options, std::vector<std::string>& warnings) {
  const CiWeb w = make_web(doc);
  Json charts = Json::array();
  for (const Chart& c : selected(doc, options)) {
    const ChartWebData d = in_chart(c, [&] { return chart_web_data(w, c, options.ideal); });
    if (d.degenerate) warnings.push_back("chart (" + c.label() + ") is degenerate (delta_p = 0)");
    charts.push_back(Json{{"chart", c.label()},
                          {"degenerate", d.degenerate},
                          {"delta_p", d.delta_p.to_string()},
                          {"critical_basis", poly_list(d.critical_ideal.generators())}});
  }
  return Json{{"charts", std::move(charts)}};
}

Json cmd_caustic(const InputDocument& doc, const Options& options, std::vector<std::string>&) {
  const CiWeb w = make_web(doc);
  Json charts = Json::array();
  for (const Chart& c : selected(doc, options)) {
    const auto gens = in_chart(c, [&] { return caustic_generators(w, c, options.ideal); });
    charts.push_back(Json{{"chart", c.label()}, {"generators", poly_list(gens)}});
  }
  return Json{{"charts", std::move(charts)}};
}

Json cmd_dicritical(const InputDocument& doc, const Options& options, std::vector<std::string>& warnings) {
  const WebVerdict v = web_verdict(make_web(doc), selected(doc, options), options.ideal, false);
  degenerate_notices(v, warnings);
  return verdict_json(v);
}

Json cmd_hyperdicritical(const InputDocument& doc, const Options& options, std::vector<std::string>& warnings) {
  const WebVerdict v = web_verdict(make_web(doc), selected(doc, options), options.ideal, true);
  degenerate_notices(v, warnings);
  return verdict_json(v);
}

Json cmd_smooth(const InputDocument& doc, const Options& options, std::vector<std::string>&) {
  return verdict_json(smooth_verdict(make_web(doc), selected(doc, options), options.ideal));
}

Json cmd_algebraic(const InputDocument& doc, const Options&, std::vector<std::string>&) {
  const CiWeb w = make_web(doc);
  return Json{{"algebraic", is_algebraic_web(w)}, {"multidegree", multidegree_json(w)}};
}

Json cmd_chern(const InputDocument& doc, const Options&, std::vector<std::string>&) {
  Json classes = Json::array();
  for (int j = 0; j <= doc.n; ++j) classes.push_back(Json{{"j", j}, {"class", chern_T(doc.n, j).to_string()}});
  return Json{{"ring", "incidence"}, {"classes", std::move(classes)}};
}

Json cmd_bott(const InputDocument& doc, const Options&, std::vector<std::string>&) {
  return bott_json(make_web(doc).multidegree_data());
}

Json cmd_certify(const InputDocument& doc, const Options& options, std::vector<std::string>& warnings) {
  const CiWeb w = make_web(doc);
  const auto charts = selected(doc, options);
  const MultiDegreeData md = w.multidegree_data();
  const WebVerdict smooth = smooth_verdict(w, charts, options.ideal);
  const WebVerdict dic = web_verdict(w, charts, options.ideal, false);
  degenerate_notices(dic, warnings);
  const bool algebraic = is_algebraic_web(w);
  const bool quasi_smooth = smooth.holds || w.asserted_quasi_smooth();
  const bool hypotheses = md.weight() >= 3 && quasi_smooth && dic.holds;
  const bool contradiction = hypotheses && !algebraic;
  for (std::string& s : web_warnings(w, charts)) warnings.push_back(std::move(s));
  if (contradiction) warnings.push_back("CONTRADICTION: check irreducibility assumption");

  Json out = bott_json(md);
  out["asserted_irreducible"] = w.asserted_irreducible();
  out["asserted_quasi_smooth"] = w.asserted_quasi_smooth();
  out["smooth"] = smooth.holds;
  out["dicritical"] = dic.holds;
  out["algebraic"] = algebraic;
  out["hypotheses_met"] = hypotheses;
  out["contradiction"] = contradiction;
  out["caustic_class"] = caustic_class_json(caustic_certificate(md));
  out["smooth_charts"] = verdict_json(smooth)["charts"];
  out["dicritical_charts"] = verdict_json(dic)["charts"];
  return out;
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"bidegree", cmd_bidegree},         {"chart-form", cmd_chart_form},
      {"dual", cmd_dual},                 {"linearizable", cmd_linearizable},
      {"critical", cmd_critical},         {"caustic", cmd_caustic},
      {"dicritical", cmd_dicritical},     {"hyperdicritical", cmd_hyperdicritical},
      {"smooth", cmd_smooth},             {"algebraic", cmd_algebraic},
      {"chern", cmd_chern},               {"bott", cmd_bott},
      {"certify", cmd_certify},
  };
  return table;
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t k = 0; k < v.size(); ++k) flatten(v[k], prefix + "[" + std::to_string(k) + "]", out);
  } else if (v.is_string()) {
    out.emplace_back(prefix, v.get<std::string>());
  } else {
    out.emplace_back(prefix, v.dump());
  }
}

}  // namespace

InputDocument parse_input_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("malformed JSON: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("missing integer field n");
  const long long n = doc["n"].get<long long>();
  if (n < 2 || n > 12) throw InputError("n must lie in 2..12");
  if (!doc.contains("pdes") || !doc["pdes"].is_array() || doc["pdes"].empty()) {
    throw InputError("pdes must be a non-empty list of term lists");
  }
  InputDocument out;
  out.n = static_cast<int>(n);
  out.asserted_irreducible = flag(doc, "asserted_irreducible");
  out.asserted_quasi_smooth = flag(doc, "asserted_quasi_smooth");
  if (doc.contains("flags")) {
    out.asserted_irreducible = out.asserted_irreducible || flag(doc["flags"], "asserted_irreducible");
    out.asserted_quasi_smooth = out.asserted_quasi_smooth || flag(doc["flags"], "asserted_quasi_smooth");
  }
  const VarTablePtr vars = VarTable::bihomogeneous(out.n);
  const std::size_t width = static_cast<std::size_t>(out.n + 1);
  for (std::size_t a = 0; a < doc["pdes"].size(); ++a) {
    const Json& terms = doc["pdes"][a];
    const std::string pde_where = "pde " + std::to_string(a + 1);
    if (!terms.is_array()) throw InputError(pde_where + ": must be a list of terms");
    MultiPoly h(vars);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const Json& term = terms[t];
      const std::string where = pde_where + ", term " + std::to_string(t + 1);
      if (!term.is_object()) throw InputError(where + ": must be an object");
      if (!term.contains("c") || !term["c"].is_array() || term["c"].size() != 2) {
        throw InputError(where + ": coefficient must be [numerator, denominator]");
      }
      Rational c;
      try {
        c = parse_rational(integer_text(term["c"][0], where) + "/" + integer_text(term["c"][1], where));
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
      const auto X = exponent_list(term, "X", out.n, where);
      const auto u = exponent_list(term, "u", out.n, where);
      Exponents e(2 * width, 0);
      for (std::size_t k = 0; k < width; ++k) {
        e[k] = X[k];
        e[width + k] = u[k];
      }
      h.add_term(e, c);
    }
    try {
      out.pdes.emplace_back(std::move(h));
    } catch (const InputError& e) {
      throw InputError(pde_where + ": " + e.what());
    }
  }
  out.digest = "sha256:" + sha256_hex(text);
  return out;
}

InputDocument parse_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

Chart parse_chart(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("chart must be written i,j");
  try {
    std::size_t used_i = 0, used_j = 0;
    const std::string si(text.substr(0, comma)), sj(text.substr(comma + 1));
    const int i = std::stoi(si, &used_i);
    const int j = std::stoi(sj, &used_j);
    if (used_i != si.size() || used_j != sj.size()) throw UsageError("chart must be written i,j");
    return Chart{i, j};
  } catch (const std::logic_error&) {
    throw UsageError("chart must be written i,j");
  }
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(std::string_view command, const InputDocument& doc, const Options& options) {
  const auto& table = handlers();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == command; });
  if (it == table.end()) throw UsageError("unknown command " + std::string(command));
  Report r;
  r.command = it->first;
  r.input_digest = doc.digest;
  r.charts = options.chart ? options.chart->label() : "all";
  r.result = it->second(doc, options, r.warnings);
  return r;
}

std::string to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["input_digest"] = r.input_digest;
  out["charts"] = r.charts;
  out["result"] = r.result;
  out["warnings"] = r.warnings;
  return out.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"command", r.command}, {"input_digest", r.input_digest}, {"charts", r.charts}};
  flatten(r.result, "", rows);
  for (std::size_t k = 0; k < r.warnings.size(); ++k) rows.emplace_back("warning[" + std::to_string(k) + "]", r.warnings[k]);
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << "\n";
  return out.str();
}

std::string render(const Report& r, Format format) { return format == Format::Json ? to_json(r) : to_text(r); }

Report parse_report(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  const auto require = [&](const char* key, bool ok) {
    if (!doc.contains(key) || !ok) throw InputError(std::string("report field ") + key + " missing or mistyped");
  };
  require("command", doc.contains("command") && doc["command"].is_string());
  require("input_digest", doc.contains("input_digest") && doc["input_digest"].is_string());
  require("charts", doc.contains("charts") && doc["charts"].is_string());
  require("result", doc.contains("result") && doc["result"].is_object());
  require("warnings", doc.contains("warnings") && doc["warnings"].is_array());
  if (doc.size() != 5) throw InputError("report has unexpected fields");
  Report r;
  r.command = doc["command"].get<std::string>();
  if (std::find(commands().begin(), commands().end(), r.command) == commands().end()) {
    throw InputError("report names unknown command " + r.command);
  }
  r.input_digest = doc["input_digest"].get<std::string>();
  r.charts = doc["charts"].get<std::string>();
  r.result = doc["result"];
  for (const Json& w : doc["warnings"]) {
    if (!w.is_string()) throw InputError("report warnings must be strings");
    r.warnings.push_back(w.get<std::string>());
  }
  return r;
}

}  // namespace weave::cli
