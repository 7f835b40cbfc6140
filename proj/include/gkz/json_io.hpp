#ifndef GKZ_JSON_IO_HPP
#define GKZ_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gkz/evaluate.hpp"
#include "gkz/symmetry.hpp"
#include "gkz/transforms.hpp"
#include "gkz/verify.hpp"

namespace gkz {

using Json = nlohmann::json;

/// Sorted keys, two space indent, floats as %.15e, trailing newline.
std::string dump_canonical(const Json& j);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<Complex>& v);
Json to_json(const ComplexMatrix& m);

std::vector<Complex> complex_vector_from_json(const Json& j);
/// Rectangular array of integers (or digit strings); ParseError naming source.
IntMatrix int_matrix_from_json(const Json& j, const std::string& source);

/// {"name": str?, "matrix": [[int]], "params": {str: affine-expression}?}
struct ConfigDocument {
  std::optional<std::string> name;
  PointConfiguration config;
  std::map<std::string, std::string> params;
};

Json to_json(const ConfigDocument& doc);
/// Parses text and validates the matrix; ParseError carries line and column.
ConfigDocument parse_config_document(const std::string& text, const std::string& source = "<input>");
/// An existing file path first, then a catalog name.
ConfigDocument load_config_document(const std::string& path_or_name);
PointConfiguration load_config(const std::string& path_or_name);

/// Reads a whole file as JSON with line information on failure.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

/// {"T", "perm" (1-based), "det"}
Json to_json(const PolytopeSymmetry& s);
PolytopeSymmetry symmetry_from_json(const Json& j);
/// {"order", "generators", "elements"}
Json to_json(const SymmetryGroup& g);

/// {"kind": "linear", "T", "perm", "scale"}
Json to_json(const LinearTransformation& tr);
/// {"kind": "elementary", "variable", "shift", "M"}
Json to_json(const ElementaryAutomorphism& ea);
/// {"kind": "binomial", "M", "N", "beta", "terms": [{"coeff", "t_power", "beta_shift", "beta"}]}
Json to_json(const BinomialIdentity& id);

Json to_json(const EvaluationResult& r);
Json to_json(const IdentityReport& rep);
Json to_json(const F4Report& rep);

/// "PASS max_residual=..." or "FAIL max_residual=..." followed by notes.
std::string report_text(const IdentityReport& rep);
std::string report_text(const F4Report& rep);

} // namespace gkz

#endif // GKZ_JSON_IO_HPP
