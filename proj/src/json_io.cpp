#include "matreal/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "matreal/error.hpp"

namespace matreal {

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<ElementSet> sets_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) schema_error(std::string("field \"") + name + "\" must be an array of arrays");
  std::vector<ElementSet> out;
  for (const Json& s : v) out.push_back(set_from_json(s));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                           ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

Json set_to_json(ElementSet s) {
  Json out = Json::array();
  for (Element e : s) out.push_back(e);
  return out;
}

ElementSet set_from_json(const Json& j) {
  if (!j.is_array()) schema_error("expected an array of integers");
  ElementSet s;
  for (const Json& v : j) {
    if (!v.is_number_integer()) schema_error("expected an array of integers");
    const int e = v.get<int>();
    if (e < 1 || e > kMaxElement) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e) + " out of range");
    s = s.with(e);
  }
  return s;
}

SplitHypergraph hypergraph_from_json(const Json& j) {
  SplitHypergraph h;
  h.d = int_field(j, "d");
  h.n = int_field(j, "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) schema_error("field \"edges\" must be an array");
  for (const Json& e : edges) h.edges.push_back({set_from_json(field(e, "set")), int_field(e, "rank")});
  return h;
}

Json hypergraph_to_json(const SplitHypergraph& h) {
  Json edges = Json::array();
  for (const SplitEdge& e : h.edges) edges.push_back(Json{{"set", set_to_json(e.set)}, {"rank", e.rank}});
  return Json{{"d", h.d}, {"n", h.n}, {"edges", edges}};
}

MatroidInput matroid_from_json(const Json& j) {
  if (!j.is_object()) schema_error("matroid document must be a JSON object");
  MatroidInput in;
  if (j.contains("edges")) {
    in.schema = MatroidSchema::Split;
    in.hypergraph = hypergraph_from_json(j);
    in.matroid = elementary_split_matroid(*in.hypergraph);
  } else if (j.contains("hyperplanes")) {
    in.schema = MatroidSchema::Paving;
    in.matroid = Matroid::paving(int_field(j, "d"), int_field(j, "n"), sets_field(j, "hyperplanes"));
  } else if (j.contains("circuits")) {
    in.schema = MatroidSchema::Circuits;
    in.matroid = Matroid::from_circuits(int_field(j, "d"), sets_field(j, "circuits"));
  } else if (j.contains("vectors")) {
    in.schema = MatroidSchema::Vectors;
    std::vector<std::vector<Rational>> cols;
    for (const Json& c : field(j, "vectors")) {
      std::vector<Rational> col;
      for (const Json& x : c) col.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
      cols.push_back(std::move(col));
    }
    in.matroid = Matroid::from_vectors(cols);
  } else {
    schema_error("matroid document needs \"circuits\", \"hyperplanes\", \"edges\" or \"vectors\"");
  }
  return in;
}

Json poly_to_json(const Poly& p, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t v = 0; v < vars.size(); ++v) exps.push_back(t.mono.exponent(static_cast<int>(v)));
    terms.push_back(Json{{"coef", format_rational(t.coef)}, {"exps", exps}});
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const Json& j, const std::vector<std::string>& vars) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
  const Json& local = field(j, "vars");
  std::vector<int> mapping;
  for (const Json& name : local) {
    auto it = index.find(name.get<std::string>());
    if (it == index.end()) schema_error("unknown variable '" + name.get<std::string>() + "'");
    mapping.push_back(it->second);
  }
  std::vector<Term> terms;
  for (const Json& t : field(j, "terms")) {
    const Json& exps = field(t, "exps");
    if (!exps.is_array() || exps.size() != mapping.size()) schema_error("term exponent list has the wrong length");
    Monomial m;
    for (std::size_t k = 0; k < mapping.size(); ++k) {
      const int e = exps[k].get<int>();
      if (e < 0) schema_error("negative exponent");
      if (e > 0) m = m * Monomial::var(mapping[k], e);
    }
    const Json& coef = field(t, "coef");
    terms.push_back({parse_rational(coef.is_string() ? coef.get<std::string>() : coef.dump()), m});
  }
  return Poly::from_terms(std::move(terms));
}

Json param_matrix_to_json(const ParamMatrix& pm) {
  Json columns = Json::object();
  for (int e = 1; e <= pm.d; ++e) {
    Json col = Json::array();
    for (const Poly& p : pm.columns[e - 1]) col.push_back(poly_to_json(p, pm.params));
    columns[std::to_string(e)] = col;
  }
  Json nonvanishing = Json::array();
  for (const Poly& p : pm.nonvanishing) nonvanishing.push_back(poly_to_json(p, pm.params));
  return Json{{"n", pm.n},       {"d", pm.d},             {"order", pm.order},
              {"params", pm.params}, {"columns", columns}, {"nonvanishing", nonvanishing}};
}

ParamMatrix param_matrix_from_json(const Json& j) {
  ParamMatrix pm;
  pm.n = int_field(j, "n");
  pm.d = int_field(j, "d");
  if (pm.n < 0 || pm.d < 1 || pm.d > kMaxElement) schema_error("bad matrix dimensions");
  pm.order = field(j, "order").get<Ordering>();
  pm.params = field(j, "params").get<std::vector<std::string>>();
  const Json& columns = field(j, "columns");
  pm.columns.assign(pm.d, PolyVector(pm.n));
  for (int e = 1; e <= pm.d; ++e) {
    const Json& col = field(columns, std::to_string(e).c_str());
    if (!col.is_array() || col.size() != static_cast<std::size_t>(pm.n)) {
      schema_error("column " + std::to_string(e) + " must have n entries");
    }
    for (int i = 0; i < pm.n; ++i) pm.columns[e - 1][i] = poly_from_json(col[i], pm.params);
  }
  for (const Json& p : field(j, "nonvanishing")) pm.nonvanishing.push_back(poly_from_json(p, pm.params));
  return pm;
}

Json subspaces_to_json(const std::vector<Subspace>& ls) {
  Json out = Json::array();
  for (const Subspace& l : ls) out.push_back(Json{{"points", set_to_json(l.points)}, {"rank", l.rank}});
  return out;
}

Json validation_to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const SplitViolation& v : r.violations) {
    violations.push_back(Json{{"condition", std::string(to_string(v.condition))}, {"edges", v.edges},
                              {"detail", v.detail}});
  }
  return Json{{"valid", r.valid()}, {"structural", r.structural}, {"violations", violations}};
}

Json dimension_report_to_json(const DimensionReport& r) {
  Json out{{"naive_dim", r.naive_dim}};
  out["expected_codim"] = r.expected_codim ? Json(*r.expected_codim) : Json(nullptr);
  out["expected_dim"] = r.expected_dim ? Json(*r.expected_dim) : Json(nullptr);
  out["family_used"] = std::string(to_string(r.family_used));
  return out;
}

Json type_vector_to_json(const TypeVector& t) {
  return Json{{"order", t.ordering}, {"tau", t.tau}, {"tau_tilde", t.tau_tilde}, {"degree", t.degree}};
}

Json verification_to_json(const VerificationReport& r) {
  Json results = Json::array();
  for (const SampleResult& s : r.results) {
    Json point = Json::array();
    for (const Rational& x : s.point) point.push_back(format_rational(x));
    Json item{{"passed", s.passed}, {"point", point}};
    if (s.witness) {
      item["witness"] = set_to_json(*s.witness);
      item["expected_rank"] = s.expected_rank;
      item["observed_rank"] = s.observed_rank;
    }
    results.push_back(item);
  }
  return Json{{"samples", r.samples}, {"passed", r.passed}, {"rejected", r.rejected},
              {"all_passed", r.all_passed()}, {"results", results}};
}

Json rigidity_to_json(const RigidityReport& r) {
  Json out{{"order", r.ordering},
           {"sum_tau_tilde", r.sum_tau_tilde},
           {"threshold", r.threshold},
           {"rigid_criterion", r.rigid_criterion},
           {"has_n_plus_1_circuit", r.has_n_plus_1_circuit}};
  out["rigid"] = r.rigid ? Json(*r.rigid) : Json(nullptr);
  out["realizability_assumed"] = r.realizability_assumed;
  out["naive_dim"] = r.naive_dim ? Json(*r.naive_dim) : Json(nullptr);
  out["naive_equals_threshold"] = r.naive_equals_threshold ? Json(*r.naive_equals_threshold) : Json(nullptr);
  out["inductively_rigid_witness"] = r.inductively_rigid_witness ? Json(*r.inductively_rigid_witness) : Json(nullptr);
  out["verdict_basis"] = r.verdict_basis;
  return out;
}

}  // namespace matreal
