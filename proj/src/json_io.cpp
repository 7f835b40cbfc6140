#include "gkz/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace gkz {

namespace {

std::string format_double(double v)
{
  if (!std::isfinite(v))
    return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void emit(const Json& j, std::string& out, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first)
        out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      emit(value, out, indent + 1);
    }
    out += "\n" + pad + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    bool flat = true;
    for (const auto& e : j)
      flat = flat && is_scalar(e);
    if (flat) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k)
          out += ", ";
        emit(j[k], out, indent + 1);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k)
        out += ",\n";
      out += inner;
      emit(j[k], out, indent + 1);
    }
    out += "\n" + pad + "]";
    return;
  }
  case Json::value_t::number_float:
    out += format_double(j.get<double>());
    return;
  default:
    out += j.dump();
  }
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void parse_fail(const std::string& source, const std::string& what)
{
  throw Error(ErrorCode::ParseError, source + ": " + what);
}

Integer integer_from_json(const Json& j, const std::string& source)
{
  if (j.is_number_integer())
    return Integer(j.get<long long>());
  if (j.is_number_unsigned())
    return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  parse_fail(source, "matrix entries must be integers, got " + j.dump());
}

Json sample_json(const SamplePoint& p)
{
  return Json{{"beta", to_json(p.beta)}, {"x", to_json(p.x)}};
}

Json residuals_json(const std::vector<Residual>& rs)
{
  Json out = Json::array();
  for (const auto& r : rs)
    out.push_back({{"label", r.label}, {"value", r.value}, {"threshold", r.threshold}});
  return out;
}

Json f4_sample_json(const F4Sample& s)
{
  return {{"y1", to_json(s.y1)},       {"y2", to_json(s.y2)},       {"lhs", to_json(s.lhs)},
          {"term1", to_json(s.term1)}, {"term2", to_json(s.term2)}, {"residual", s.residual}};
}

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

} // namespace

IntMatrix int_matrix_from_json(const Json& j, const std::string& source)
{
  if (!j.is_array() || j.empty())
    parse_fail(source, "\"matrix\" must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    parse_fail(source, "\"matrix\" rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      parse_fail(source, "row " + std::to_string(i + 1) + " of \"matrix\" has the wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      M(i, c) = integer_from_json(j[i][c], source);
  }
  return M;
}

std::string dump_canonical(const Json& j)
{
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j)
{
  if (j.is_number())
    return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::ParseError, "expected a number or [re, im], got " + j.dump());
}

Json to_json(const Integer& v)
{
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json to_json(const IntVector& v)
{
  Json out = Json::array();
  for (const auto& e : v)
    out.push_back(to_json(e));
  return out;
}

Json to_json(const IntMatrix& m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const std::vector<Complex>& v)
{
  Json out = Json::array();
  for (const auto& z : v)
    out.push_back(to_json(z));
  return out;
}

Json to_json(const ComplexMatrix& m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(to_json(m.row(i)));
  return out;
}

std::vector<Complex> complex_vector_from_json(const Json& j)
{
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "expected an array of complex numbers, got " + j.dump());
  std::vector<Complex> out;
  for (const auto& e : j)
    out.push_back(complex_from_json(e));
  return out;
}

Json to_json(const ConfigDocument& doc)
{
  Json j{{"matrix", to_json(doc.config.matrix())}};
  if (doc.name)
    j["name"] = *doc.name;
  if (!doc.params.empty())
    j["params"] = doc.params;
  return j;
}

Json parse_json_text(const std::string& text, const std::string& source)
{
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    std::string what = e.what();
    // drop the library prefix "[json.exception.parse_error.101] parse error at ..."
    const auto pos = what.find(": ");
    if (pos != std::string::npos)
      what = what.substr(pos + 2);
    throw Error(ErrorCode::ParseError, source + ": line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + what);
  }
}

Json read_json_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

ConfigDocument parse_config_document(const std::string& text, const std::string& source)
{
  const Json j = parse_json_text(text, source);
  if (!j.is_object())
    parse_fail(source, "configuration must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "matrix" && key != "params")
      parse_fail(source, "unknown key \"" + key + "\"");
  if (!j.contains("matrix"))
    parse_fail(source, "missing \"matrix\"");
  ConfigDocument doc{std::nullopt, validate_configuration(int_matrix_from_json(j["matrix"], source)),
                     {}};
  if (j.contains("name")) {
    if (!j["name"].is_string())
      parse_fail(source, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object())
      parse_fail(source, "\"params\" must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_string())
        parse_fail(source, "parameter \"" + key + "\" must be an affine expression string");
      AffineExpression::parse(value.get<std::string>());
      doc.params[key] = value.get<std::string>();
    }
  }
  return doc;
}

ConfigDocument load_config_document(const std::string& path_or_name)
{
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_name, ec)) {
    std::ifstream in(path_or_name, std::ios::binary);
    if (!in)
      throw Error(ErrorCode::IoError, "cannot open " + path_or_name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_document(ss.str(), path_or_name);
  }
  const CatalogEntry entry = catalog(path_or_name);
  return {entry.name, entry.config, entry.classical_params};
}

PointConfiguration load_config(const std::string& path_or_name)
{
  return load_config_document(path_or_name).config;
}

Json to_json(const PolytopeSymmetry& s)
{
  Json perm = Json::array();
  for (std::size_t p : s.perm)
    perm.push_back(p + 1);
  return {{"T", to_json(s.T)}, {"perm", perm}, {"det", s.det_sign}};
}

PolytopeSymmetry symmetry_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("T") || !j.contains("perm"))
    throw Error(ErrorCode::ParseError, "symmetry needs \"T\" and \"perm\"");
  PolytopeSymmetry s;
  s.T = int_matrix_from_json(j["T"], "symmetry");
  for (const auto& e : j["perm"]) {
    if (!e.is_number_integer() || e.get<long long>() < 1)
      throw Error(ErrorCode::ParseError, "\"perm\" entries are 1-based positive integers");
    s.perm.push_back(static_cast<std::size_t>(e.get<long long>() - 1));
  }
  s.det_sign = j.value("det", 0);
  return s;
}

Json to_json(const SymmetryGroup& g)
{
  Json gens = Json::array(), elems = Json::array();
  for (const auto& s : g.generators)
    gens.push_back(to_json(s));
  for (const auto& s : g.elements)
    elems.push_back(to_json(s));
  return {{"order", g.order()}, {"generators", gens}, {"elements", elems}};
}

Json to_json(const LinearTransformation& tr)
{
  Json j = to_json(tr.symmetry);
  j.erase("det");
  j["kind"] = "linear";
  j["scale"] = tr.scale;
  return j;
}

Json to_json(const ElementaryAutomorphism& ea)
{
  return {{"kind", "elementary"},
          {"variable", ea.variable_index + 1},
          {"shift", to_json(ea.shift)},
          {"M", to_json(ea.M)}};
}

Json to_json(const BinomialIdentity& id)
{
  Json terms = Json::array();
  const std::vector<Complex> base = id.automorphism.sf.to_standard(id.beta);
  for (const auto& t : id.terms) {
    std::vector<Complex> shift(base.size());
    for (std::size_t k = 0; k < base.size(); ++k)
      shift[k] = t.beta_std[k] - base[k];
    terms.push_back({{"coeff", to_json(t.binomial)},
                     {"t_power", t.t_power},
                     {"beta_shift", to_json(shift)},
                     {"beta", to_json(t.beta)}});
  }
  return {{"kind", "binomial"},
          {"variable", id.automorphism.variable_index + 1},
          {"shift", to_json(id.automorphism.shift)},
          {"M", to_json(id.automorphism.M)},
          {"N", id.N},
          {"beta", to_json(id.beta)},
          {"terms", terms}};
}

Json to_json(const EvaluationResult& r)
{
  return {{"value", to_json(r.value)},
          {"error_estimate", r.error_estimate},
          {"abs_integral", r.abs_integral},
          {"converged", r.converged},
          {"warnings", r.warnings}};
}

Json to_json(const IdentityReport& rep)
{
  Json samples = Json::array();
  for (const auto& s : rep.samples)
    samples.push_back(sample_json(s));
  Json values = Json::object();
  for (const auto& [k, v] : rep.values)
    values[k] = to_json(v);
  return {{"description", rep.description},
          {"samples", samples},
          {"lhs", to_json(rep.lhs)},
          {"rhs", to_json(rep.rhs)},
          {"fitted_constant", to_json(rep.fitted_constant)},
          {"residuals", residuals_json(rep.residuals)},
          {"values", values},
          {"max_residual", rep.max_residual()},
          {"verdict", rep.verdict()},
          {"notes", rep.notes}};
}

Json to_json(const F4Report& rep)
{
  Json perm = Json::array();
  for (std::size_t p : rep.perm)
    perm.push_back(p + 1);
  Json fit = Json::array(), check = Json::array();
  for (const auto& s : rep.fit_samples)
    fit.push_back(f4_sample_json(s));
  for (const auto& s : rep.check_samples)
    check.push_back(f4_sample_json(s));
  return {{"description", "two-term F4 transformation against the polytope symmetry of F_C(2)"},
          {"T", to_json(rep.T)},
          {"perm", perm},
          {"symmetry_exact", rep.symmetry_exact},
          {"parameter_map", rep.parameter_map},
          {"parameter_map_consistent", rep.parameter_map_consistent},
          {"K1", to_json(rep.K1)},
          {"K2", to_json(rep.K2)},
          {"fit_samples", fit},
          {"check_samples", check},
          {"max_residual", rep.max_residual},
          {"ratio_spread", rep.ratio_spread},
          {"single_term_residual", rep.single_term_residual},
          {"verdict", rep.verdict},
          {"notes", rep.notes}};
}

std::string report_text(const IdentityReport& rep)
{
  std::string out = std::string(rep.passed() ? "PASS" : "FAIL") +
                    " max_residual=" + sci(rep.max_residual()) + "  " + rep.description + "\n";
  for (const auto& r : rep.residuals)
    out += "  " + r.label + ": " + sci(r.value) + " (threshold " + sci(r.threshold) + ")\n";
  for (const auto& n : rep.notes)
    out += "  note: " + n + "\n";
  return out;
}

std::string report_text(const F4Report& rep)
{
  std::string out = std::string(rep.passed() ? "PASS" : "FAIL") +
                    " max_residual=" + sci(rep.max_residual) + "  " + rep.verdict + "\n";
  for (const auto& n : rep.notes)
    out += "  " + n + "\n";
  return out;
}

} // namespace gkz
