#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "matreal/dimensions.hpp"
#include "matreal/matroid.hpp"
#include "matreal/orderings.hpp"
#include "matreal/poly.hpp"
#include "matreal/realization.hpp"
#include "matreal/rigidity.hpp"
#include "matreal/split.hpp"

namespace matreal {

using Json = nlohmann::ordered_json;

/// Parses JSON text; throws Error(ParseError) with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
/// Reads and parses a file; missing files raise Error(ParseError) naming the path.
Json read_json_file(const std::string& path);

/// Which schema a matroid document used.
enum class MatroidSchema { Circuits, Paving, Split, Vectors };

struct MatroidInput {
  Matroid matroid = Matroid::empty();
  MatroidSchema schema = MatroidSchema::Circuits;
  /// Present for the split schema.
  std::optional<SplitHypergraph> hypergraph;
};

/// Accepts {"d","circuits"}, {"d","n","hyperplanes"}, {"d","n","edges":[{"set","rank"}]}
/// or {"vectors": [["p/q", ...], ...]} (one inner list per element).
MatroidInput matroid_from_json(const Json& j);
/// Split hypergraph document without validation.
SplitHypergraph hypergraph_from_json(const Json& j);
Json hypergraph_to_json(const SplitHypergraph& h);

Json set_to_json(ElementSet s);
ElementSet set_from_json(const Json& j);

Json poly_to_json(const Poly& p, const std::vector<std::string>& vars);
/// Variables are resolved against `vars`; unknown names raise ParseError.
Poly poly_from_json(const Json& j, const std::vector<std::string>& vars);

Json param_matrix_to_json(const ParamMatrix& pm);
ParamMatrix param_matrix_from_json(const Json& j);

Json subspaces_to_json(const std::vector<Subspace>& ls);
Json validation_to_json(const ValidationReport& r);
Json dimension_report_to_json(const DimensionReport& r);
Json type_vector_to_json(const TypeVector& t);
Json verification_to_json(const VerificationReport& r);
Json rigidity_to_json(const RigidityReport& r);

}  // namespace matreal
