#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "matreal/dimensions.hpp"
#include "matreal/error.hpp"
#include "matreal/json_io.hpp"
#include "matreal/orderings.hpp"
#include "matreal/realization.hpp"
#include "matreal/rigidity.hpp"
#include "matreal/split.hpp"

using namespace matreal;

namespace {

constexpr const char* kSchemas = R"(JSON schemas:
  matroid (circuits)  {"d": int, "circuits": [[int]]}            complete circuit list
  matroid (paving)    {"d": int, "n": int, "hyperplanes": [[int]]}
  matroid (split)     {"d": int, "n": int, "edges": [{"set": [int], "rank": int}]}
  matroid (vectors)   {"vectors": [["p/q", ...], ...]}           one column per element
  ordering            comma-separated 1-based labels, e.g. 1,2,3,5,4
  Poly                {"vars": [string], "terms": [{"coef": "p/q", "exps": [int]}]}
                      terms in graded-lex order, variable 0 largest
  ParamMatrix         {"n": int, "d": int, "order": [int], "params": [string],
                       "columns": {"<elt>": [Poly]}, "nonvanishing": [Poly]}
  DimensionReport     {"naive_dim", "expected_codim", "expected_dim", "family_used"}
  TypeVector          {"order", "tau", "tau_tilde", "degree"}
  RigidityReport      {"order", "sum_tau_tilde", "threshold", "rigid_criterion",
                       "has_n_plus_1_circuit", "rigid", "realizability_assumed",
                       "naive_dim", "naive_equals_threshold",
                       "inductively_rigid_witness", "verdict_basis"}
  error (exit 1)      {"error": {"kind": string, "message": string}}

Sampling in verify uses mt19937_64 seeded with --seed; coordinates are p/q with
|p| <= height and 1 <= q <= height. Output bytes depend only on inputs and flags.

Exit codes: 0 success, 1 domain/file/parse error, 2 usage error.)";

struct FileNotFound {
  std::string path;
};

Json load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw FileNotFound{path};
  return read_json_file(path);
}

MatroidInput load_matroid(const std::string& path) { return matroid_from_json(load(path)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void summary(const std::string& text) { std::cerr << text << "\n"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int fail(std::string_view kind, const std::string& message) {
  emit(Json{{"error", Json{{"kind", std::string(kind)}, {"message", message}}}});
  summary("error: " + message);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realization spaces of matroids: dimensions, orderings, parametrizations, rigidity"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  std::string matroid_path, order_text, family_text = "powerset", out_path, pm_path;
  int cap = kDefaultPowersetCap;
  int samples = 25;
  std::uint64_t seed = 0;
  std::int64_t height = 1000;
  bool greedy = false, basis_only = false;

  auto add_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", matroid_path, "matroid JSON file")->required();
  };

  auto* validate = app.add_subcommand("validate", "check matroid axioms or split conditions");
  add_matroid(validate);
  auto* subs = app.add_subcommand("subspaces", "list subspaces (point set and rank)");
  add_matroid(subs);
  auto* naive = app.add_subcommand("naive-dim", "naive dimension of the realization space");
  add_matroid(naive);
  auto* ec = app.add_subcommand("expected-codim", "expected codimension and dimension");
  add_matroid(ec);
  ec->add_option("--family", family_text, "powerset|connected|hypergraph")->capture_default_str();
  ec->add_option("--cap", cap, "largest d for the powerset family")->capture_default_str();
  auto* type = app.add_subcommand("type", "type vectors tau and tau-tilde of an ordering");
  add_matroid(type);
  type->add_option("--order", order_text, "ordering")->required();
  auto* find = app.add_subcommand("find-order", "search for an inductive ordering");
  add_matroid(find);
  find->add_flag("--greedy", greedy, "greedy reverse removal instead of backtracking");
  auto* ic = app.add_subcommand("inductively-connected", "decide inductive connectivity");
  add_matroid(ic);
  auto* realize = app.add_subcommand("realize", "build a parametrized realization");
  add_matroid(realize);
  realize->add_option("--order", order_text, "inductive ordering (default: least one found)");
  realize->add_option("--out", out_path, "write the ParamMatrix here instead of stdout");
  auto* verify = app.add_subcommand("verify", "sample a ParamMatrix and compare ranks with the matroid");
  verify->add_option("--pm", pm_path, "ParamMatrix JSON file")->required();
  add_matroid(verify);
  verify->add_option("--samples", samples, "number of accepted sample points")->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--height", height, "bound on numerators and denominators")->capture_default_str();
  auto* ideal = app.add_subcommand("ideal", "circuit ideal generators and basis minors of the generic matrix");
  add_matroid(ideal);
  ideal->add_flag("--basis-only", basis_only, "emit only the basis-minor non-vanishing set");
  auto* rigid = app.add_subcommand("rigid", "dimension-count rigidity criterion");
  add_matroid(rigid);
  rigid->add_option("--order", order_text, "inductive ordering (default: least one found)");
  auto* irigid = app.add_subcommand("inductively-rigid", "search for an inductively rigid ordering");
  add_matroid(irigid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      const Json doc = load(matroid_path);
      if (doc.contains("edges")) {
        const ValidationReport r = validate_split(hypergraph_from_json(doc));
        emit(validation_to_json(r));
        summary(r.valid() ? "valid elementary split hypergraph"
                          : std::to_string(r.violations.size()) + " split condition violation(s)");
        return r.valid() ? 0 : 1;
      }
      const MatroidInput in = matroid_from_json(doc);
      emit(Json{{"valid", true}, {"d", in.matroid.size()}, {"n", in.matroid.rank()}});
      summary("valid matroid of rank " + std::to_string(in.matroid.rank()) + " on " +
              std::to_string(in.matroid.size()) + " elements");
    } else if (subs->parsed()) {
      const auto ls = subspaces(load_matroid(matroid_path).matroid);
      emit(subspaces_to_json(ls));
      summary(std::to_string(ls.size()) + " subspaces");
    } else if (naive->parsed()) {
      const auto v = naive_dimension(load_matroid(matroid_path).matroid);
      emit(Json{{"naive_dim", v}});
      summary("naive dimension " + std::to_string(v));
    } else if (ec->parsed()) {
      const DimensionReport r = dimension_report(load_matroid(matroid_path).matroid, parse_family(family_text), cap);
      emit(dimension_report_to_json(r));
      summary("naive " + std::to_string(r.naive_dim) + ", expected codim " +
              (r.expected_codim ? std::to_string(*r.expected_codim) : "n/a"));
    } else if (type->parsed()) {
      const TypeVector t = ordering_type(load_matroid(matroid_path).matroid, parse_ordering(order_text));
      emit(type_vector_to_json(t));
      summary("tau = (" + join(t.tau) + ")");
    } else if (find->parsed()) {
      const auto w = find_inductive_ordering(load_matroid(matroid_path).matroid,
                                             greedy ? SearchMode::Greedy : SearchMode::Backtracking);
      emit(Json{{"found", w.has_value()}, {"order", w ? Json(*w) : Json(nullptr)}});
      summary(w ? "inductive ordering " + format_ordering(*w) : "no inductive ordering found");
    } else if (ic->parsed()) {
      const auto w = find_inductive_ordering(load_matroid(matroid_path).matroid);
      emit(Json{{"inductively_connected", w.has_value()}, {"witness", w ? Json(*w) : Json(nullptr)}});
      summary(w ? "inductively connected, witness " + format_ordering(*w) : "not inductively connected");
    } else if (realize->parsed()) {
      const Matroid m = load_matroid(matroid_path).matroid;
      Ordering w;
      if (!order_text.empty()) {
        w = parse_ordering(order_text);
      } else {
        auto found = find_inductive_ordering(m);
        if (!found) throw matreal::Error(matreal::ErrorKind::NotInductivelyConnected, "matroid has no inductive ordering");
        w = *found;
      }
      const ParamMatrix pm = build_realization(m, w);
      const Json j = param_matrix_to_json(pm);
      if (out_path.empty()) {
        emit(j);
      } else {
        std::ofstream out(out_path);
        if (!out) throw matreal::Error(matreal::ErrorKind::ParseError, "cannot write '" + out_path + "'");
        out << j.dump(2) << "\n";
        emit(Json{{"written", out_path}, {"params", pm.params.size()}, {"nonvanishing", pm.nonvanishing.size()}});
      }
      summary(std::to_string(pm.params.size()) + " parameters, " + std::to_string(pm.nonvanishing.size()) +
              " non-vanishing conditions, order " + format_ordering(w));
    } else if (verify->parsed()) {
      const ParamMatrix pm = param_matrix_from_json(load(pm_path));
      const Matroid m = load_matroid(matroid_path).matroid;
      VerifyOptions options;
      options.height = height;
      const VerificationReport r = verify_realization(pm, m, samples, seed, options);
      emit(verification_to_json(r));
      summary(std::to_string(r.passed) + "/" + std::to_string(r.samples) + " samples passed, " +
              std::to_string(r.rejected) + " rejected");
      return r.all_passed() ? 0 : 1;
    } else if (ideal->parsed()) {
      const Matroid m = load_matroid(matroid_path).matroid;
      const auto names = generic_matrix_names(m.rank(), m.size());
      Json gens = Json::array(), nonvan = Json::array();
      std::size_t count = 0;
      if (!basis_only) {
        const auto g = circuit_ideal_generators(m);
        count = g.size();
        for (const Poly& p : g) gens.push_back(poly_to_json(p, names));
      }
      const auto b = basis_nonvanishing(m);
      for (const Poly& p : b) nonvan.push_back(poly_to_json(p, names));
      emit(Json{{"vars", names}, {"generators", gens}, {"nonvanishing", nonvan}});
      summary(std::to_string(count) + " generators, " + std::to_string(b.size()) + " basis minors");
    } else if (rigid->parsed()) {
      const Matroid m = load_matroid(matroid_path).matroid;
      const RigidityReport r = order_text.empty() ? rigidity_criterion(m) : rigidity_criterion(m, parse_ordering(order_text));
      emit(rigidity_to_json(r));
      summary("sum tau-tilde " + std::to_string(r.sum_tau_tilde) + " vs threshold " + std::to_string(r.threshold) +
              ": " + (r.rigid ? (*r.rigid ? "rigid" : "not rigid") : "no verdict"));
    } else if (irigid->parsed()) {
      const RigidityReport r = is_inductively_rigid(load_matroid(matroid_path).matroid);
      emit(rigidity_to_json(r));
      summary(r.inductively_rigid_witness ? "inductively rigid, witness " + format_ordering(*r.inductively_rigid_witness)
                                          : "no inductively rigid ordering");
    }
  } catch (const FileNotFound& e) {
    return fail("FileNotFound", "no such file '" + e.path + "'");
  } catch (const matreal::Error& e) {
    return fail(to_string(e.kind()), e.what());
  }
  return 0;
}
