#include "gkz/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gkz/json_io.hpp"

namespace gkz::cli {

namespace {

struct Options {
  std::string input;
  std::string catalog_name;
  std::string out_path;
  std::string format = "json";
  std::optional<double> tol;
  unsigned samples = 6;
  unsigned degree_bound = 6;
  std::optional<unsigned> m;
  std::string check;
  std::string evaluator = "auto";
  unsigned N = 2;
};

std::string resolve_name(const Options& o)
{
  std::string name = !o.catalog_name.empty() ? o.catalog_name : o.input;
  if (name.empty())
    throw Error(ErrorCode::UsageError, "a configuration is required (path or --catalog NAME)");
  if ((name == "lauricella_fc" || name == "pfq") && o.m)
    name += "(" + std::to_string(*o.m) + ")";
  return name;
}

QuadratureSettings settings_from(const Options& o, double default_tol = 1e-10)
{
  QuadratureSettings s;
  s.rel_tol = default_tol;
  if (const char* env = std::getenv("GKZ_TOL")) {
    try {
      s.rel_tol = std::stod(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, std::string("GKZ_TOL is not a number: ") + env);
    }
  }
  if (o.tol)
    s.rel_tol = *o.tol;
  if (!(s.rel_tol > 0.0 && s.rel_tol < 1.0))
    throw Error(ErrorCode::UsageError, "tolerance must lie in (0, 1)");
  return s;
}

class Output {
public:
  Output(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void write(const std::string& text)
  {
    if (o_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out_path, std::ios::binary);
    if (!f || !(f << text))
      throw Error(ErrorCode::IoError, "cannot write " + o_.out_path);
  }
  void json(const Json& j) { write(dump_canonical(j)); }

private:
  const Options& o_;
  std::ostream& out_;
};

int cmd_catalog(const Options& o, Output& out)
{
  if (o.input.empty() && o.catalog_name.empty()) {
    out.json({{"names", catalog_names()}});
    return Success;
  }
  const std::string name = resolve_name(o);
  const CatalogEntry e = catalog(name);
  Json j = to_json(ConfigDocument{e.name, e.config, e.classical_params});
  j["prefactor"] = e.prefactor;
  out.json(j);
  return Success;
}

int cmd_validate(const Options& o, Output& out)
{
  const ConfigDocument doc = load_config_document(resolve_name(o));
  const PointConfiguration& c = doc.config;
  Json facets = Json::array();
  for (const auto& f : facet_normals(c))
    facets.push_back(to_json(f));
  Json vertices = Json::array();
  const auto vc = vertex_columns(c);
  for (std::size_t j = 0; j < vc.size(); ++j)
    if (vc[j])
      vertices.push_back(j + 1);
  const auto gap = find_saturation_gap(c, o.degree_bound);
  Json j{{"valid", true},
         {"d", c.d()},
         {"n", c.n()},
         {"matrix", to_json(c.matrix())},
         {"xi", to_json(c.xi())},
         {"xi_has_negative_entry", c.xi_has_negative_entry()},
         {"vertices", vertices},
         {"facet_normals", facets},
         {"degree_bound", o.degree_bound},
         {"saturated_up_to_bound", !gap.has_value()}};
  if (gap)
    j["saturation_gap"] = to_json(*gap);
  if (doc.name)
    j["name"] = *doc.name;
  out.json(j);
  return Success;
}

int cmd_xi(const Options& o, Output& out)
{
  out.json(to_json(load_config(resolve_name(o)).xi()));
  return Success;
}

int cmd_standard_form(const Options& o, Output& out)
{
  const std::string name = !o.catalog_name.empty() ? o.catalog_name : o.input;
  if (name.empty())
    throw Error(ErrorCode::UsageError, "a configuration is required (path or --catalog NAME)");
  const StandardForm sf = to_standard_form(load_config(name), o.m.value_or(1));
  Json exps = Json::array(), blocks = Json::array();
  for (std::size_t j = 0; j < sf.base.n(); ++j) {
    exps.push_back(to_json(sf.exponent(j)));
    blocks.push_back(sf.block_of[j] + 1);
  }
  out.json({{"U", to_json(sf.unimodular)},
            {"UA", to_json(sf.transformed)},
            {"m", sf.m},
            {"r", sf.r},
            {"block_of", blocks},
            {"block_sizes", sf.block_sizes},
            {"exponents", exps}});
  return Success;
}

int cmd_symmetries(const Options& o, Output& out)
{
  out.json(to_json(find_symmetries(load_config(resolve_name(o)))));
  return Success;
}

int cmd_transforms(const Options& o, Output& out)
{
  const PointConfiguration config = load_config(resolve_name(o));
  Json linear = Json::array();
  for (const auto& s : find_symmetries(config).elements)
    linear.push_back(to_json(induced_transformation(s)));
  Json elementary = Json::array();
  Json skipped = Json::array();
  try {
    const StandardForm sf = to_standard_form(config, 1);
    for (std::size_t i = 0; i < sf.r; ++i) {
      try {
        elementary.push_back(to_json(elementary_pullback(sf, i, 1.0)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::LeavesConfiguration)
          throw;
        skipped.push_back({{"variable", i + 1}, {"reason", e.what()}});
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSuchBlockStructure)
      throw;
    skipped.push_back({{"reason", e.what()}});
  }
  out.json({{"linear", linear}, {"elementary", elementary}, {"elementary_skipped", skipped}});
  return Success;
}

Json read_request(const Options& o)
{
  if (o.input.empty() || o.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_json_text(ss.str(), "<stdin>");
  }
  return read_json_file(o.input);
}

int cmd_eval(const Options& o, Output& out)
{
  const Json req = read_request(o);
  if (!req.is_object() || !req.contains("config") || !req.contains("beta") || !req.contains("x"))
    throw Error(ErrorCode::ParseError, "evaluation request needs \"config\", \"beta\" and \"x\"");
  const std::string method = req.value("method", std::string("integral"));
  const std::vector<Complex> beta = complex_vector_from_json(req["beta"]);
  const std::vector<Complex> x = complex_vector_from_json(req["x"]);
  if (method == "classical") {
    if (!req["config"].is_string())
      throw Error(ErrorCode::ParseError, "the classical method needs a catalog name as \"config\"");
    const CatalogEntry e = catalog(req["config"].get<std::string>());
    std::vector<std::string> warnings;
    const Complex v = classical_solution_beta(e, beta, x, &warnings);
    Json params = Json::object();
    for (const auto& [k, p] : classical_parameters(e, beta))
      params[k] = to_json(p);
    out.json({{"method", "classical"}, {"value", to_json(v)}, {"parameters", params},
              {"warnings", warnings}});
    return Success;
  }
  if (method != "integral")
    throw Error(ErrorCode::UsageError, "unknown method \"" + method + "\"");
  PointConfiguration config =
      req["config"].is_string()
          ? load_config(req["config"].get<std::string>())
          : parse_config_document(req["config"].dump(), "request config").config;
  const std::size_t m = req.value("m", 1u);
  const StandardForm sf = req.contains("U")
                              ? make_standard_form(config, int_matrix_from_json(req["U"], "U"), m)
                              : to_standard_form(config, m);
  CycleSpec cycle;
  if (req.contains("cycle")) {
    for (const auto& c : req["cycle"])
      cycle.push_back(parse_axis_cycle(c.get<std::string>()));
  } else {
    cycle.assign(sf.r, AxisCycle::positive_axis());
  }
  Options local = o;
  if (!o.tol && req.contains("tol"))
    local.tol = req["tol"].get<double>();
  const QuadratureSettings settings = settings_from(local);
  EvaluationResult r;
  if (req.contains("derivative")) {
    std::vector<unsigned> u = req["derivative"].get<std::vector<unsigned>>();
    r = derivative_integral(sf, beta, x, u, cycle, settings);
  } else {
    r = euler_integral(sf, beta, x, cycle, settings);
  }
  Json j = to_json(r);
  j["method"] = "integral";
  out.json(j);
  return r.converged ? Success : NumericError;
}

int emit(const Options& o, Output& out, const IdentityReport& rep)
{
  if (o.format == "text")
    out.write(report_text(rep));
  else
    out.json(to_json(rep));
  return rep.passed() ? Success : VerificationFailed;
}

int emit(const Options& o, Output& out, const F4Report& rep)
{
  if (o.format == "text")
    out.write(report_text(rep));
  else
    out.json(to_json(rep));
  return rep.passed() ? Success : VerificationFailed;
}

int verify_pde_cmd(const Options& o, Output& out)
{
  const CatalogEntry e = catalog(resolve_name(o));
  QuadratureSettings s = settings_from(o);
  switch (e.kind) {
  case CatalogKind::Gauss: {
    // two blocks make the Euler integral one dimensional
    const StandardForm sf =
        make_standard_form(e.config, IntMatrix{{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}, 2);
    const SamplePoint p = default_grid(e, 1).points[0];
    return emit(o, out, verify_pde(sf, p.beta, p.x, {AxisCycle::positive_axis()}, s));
  }
  case CatalogKind::Quadric: {
    const std::vector<Complex> beta{-0.7, -0.2}, x{2.0, 1.0, 3.0};
    return emit(o, out,
                verify_pde(to_standard_form(e.config), beta, x, {AxisCycle::real_line()}, s));
  }
  case CatalogKind::Square: {
    const SamplePoint p = default_grid(e, 1).points[0];
    const CycleSpec orthant(2, AxisCycle::positive_axis());
    return emit(o, out, verify_pde(to_standard_form(e.config), p.beta, p.x, orthant, s));
  }
  default:
    throw Error(ErrorCode::UsageError, "the pde check supports gauss, quadric and square");
  }
}

int verify_linear_cmd(const Options& o, Output& out)
{
  const CatalogEntry e = catalog(resolve_name(o));
  // quadrature against quadrature is judged at 1e-6
  const QuadratureSettings s = settings_from(o, 1e-8);
  if (e.kind != CatalogKind::Square && e.kind != CatalogKind::Gauss &&
      e.kind != CatalogKind::Quadric)
    throw Error(ErrorCode::UsageError, "the linear check supports gauss, quadric and square");
  std::string ev = o.evaluator;
  if (ev == "auto")
    ev = e.kind == CatalogKind::Square ? "classical" : "integral";
  if (ev == "classical" && e.kind != CatalogKind::Square)
    throw Error(ErrorCode::UsageError,
                "the classical evaluator is only symmetric under the square group");
  const StandardForm sf = to_standard_form(e.config);
  const Evaluator f = ev == "classical"
                          ? classical_evaluator(e)
                          : integral_evaluator(sf, CycleSpec(sf.r, AxisCycle::positive_axis()), s);
  SampleGrid grid = default_grid(e, std::max(2u, o.samples));
  if (e.kind == CatalogKind::Quadric)
    for (auto& p : grid.points)
      p.x[1] = std::abs(p.x[1]);  // positive coefficients keep the orthant integral regular
  const SymmetryGroup g = find_symmetries(e.config);
  Json reports = Json::array();
  std::string text;
  bool all = true;
  for (const auto& sym : g.elements) {
    const IdentityReport rep =
        verify_linear_transformation(e.config, induced_transformation(sym), grid, f);
    all = all && rep.passed();
    Json j = to_json(rep);
    j["transformation"] = to_json(induced_transformation(sym));
    reports.push_back(j);
    text += report_text(rep);
  }
  if (o.format == "text")
    out.write(text + (all ? "PASS" : "FAIL") + " group of order " + std::to_string(g.order()) +
              "\n");
  else
    out.json({{"config", e.name},
              {"evaluator", ev},
              {"order", g.order()},
              {"reports", reports},
              {"verdict", all ? "pass" : "fail"}});
  return all ? Success : VerificationFailed;
}

int verify_binomial_cmd(const Options& o, Output& out)
{
  const CatalogEntry e = catalog(resolve_name(o));
  const QuadratureSettings s = settings_from(o, 1e-8);
  if (o.N == 0)
    throw Error(ErrorCode::UsageError, "--N must be a positive integer");
  const double N = o.N;
  const StandardForm sf = to_standard_form(e.config);
  if (e.kind == CatalogKind::Quadric) {
    const std::vector<Complex> beta{-2.3, -N};
    const BinomialIdentity id =
        binomial_expansion_identity(sf, elementary_pullback(sf, 0, 1.0), beta, o.N);
    IdentityReport rep = verify_binomial_identity(
        id, {{3.0, 1.0, 2.0}, {2.5, 0.7, 1.8}, {4.0, -1.0, 1.5}}, {AxisCycle::real_line()}, s);
    for (const auto& n : published_quadric_sum_notes(id, {3.0, 1.0, 2.0}, s))
      rep.notes.push_back(n);
    return emit(o, out, rep);
  }
  if (e.kind == CatalogKind::Square) {
    // shift of w2 on the real line, w1 on the positive axis
    const std::vector<Complex> beta{-4.2, -0.6, -N};
    const BinomialIdentity id =
        binomial_expansion_identity(sf, elementary_pullback(sf, 1, 1.0), beta, o.N);
    const std::vector<std::vector<Complex>> xs = {
        {Complex(1.0, 0.8), 1.3, Complex(0.7, 0.5), 0.9},
        {Complex(0.6, 1.1), -0.8, Complex(1.2, 0.3), -1.5},
        {Complex(-0.5, 0.7), 0.6, Complex(0.4, 0.9), 1.1}};
    return emit(o, out,
                verify_binomial_identity(
                    id, xs, {AxisCycle::positive_axis(), AxisCycle::real_line()}, s));
  }
  throw Error(ErrorCode::UsageError, "the binomial check supports quadric and square");
}

int cmd_verify(const Options& o, Output& out)
{
  if (o.check == "pfaff")
    return emit(o, out, verify_pfaff(std::max(1u, o.samples)));
  if (o.check == "quadric")
    return emit(o, out, verify_quadric_multivaluedness(settings_from(o)));
  if (o.check == "pde")
    return verify_pde_cmd(o, out);
  if (o.check == "linear")
    return verify_linear_cmd(o, out);
  if (o.check == "binomial")
    return verify_binomial_cmd(o, out);
  if (o.check == "f4")
    return emit(o, out, f4_nonexistence_report());
  throw Error(ErrorCode::UsageError, "unknown check \"" + o.check + "\"");
}

void add_config_options(CLI::App* sub, Options& o)
{
  sub->add_option("input", o.input, "configuration JSON file or catalog name");
  sub->add_option("--catalog", o.catalog_name, "catalog name");
  sub->add_option("--m", o.m, "family index for lauricella_fc and pfq");
}

void add_common_options(CLI::App* sub, Options& o)
{
  sub->add_option("--out", o.out_path, "write output to this file");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--tol", o.tol, "relative quadrature tolerance (default GKZ_TOL, else 1e-10; 1e-8 for linear and binomial checks)");
}

} // namespace

int exit_code_for(ErrorCode code)
{
  switch (code) {
  case ErrorCode::ParseError:
  case ErrorCode::UsageError:
  case ErrorCode::IoError:
  case ErrorCode::UnknownName:
  case ErrorCode::NotFullRank:
  case ErrorCode::LatticeNotSpanned:
  case ErrorCode::NoXi:
  case ErrorCode::NoSuchBlockStructure:
  case ErrorCode::DimensionMismatch:
  case ErrorCode::ConfigMismatch:
  case ErrorCode::TooLarge:
  case ErrorCode::DegenerateCone:
    return Usage;
  default:
    return NumericError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"A-hypergeometric configurations, symmetries and identity checks", "gkz"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog names or print one entry");
  add_config_options(catalog_cmd, o);
  add_common_options(catalog_cmd, o);

  auto* validate_cmd = app.add_subcommand("validate", "validate a configuration");
  add_config_options(validate_cmd, o);
  add_common_options(validate_cmd, o);
  validate_cmd->add_option("--degree-bound", o.degree_bound, "degree bound of the saturation search");

  auto* xi_cmd = app.add_subcommand("xi", "the row vector xi with xi A = (1, ..., 1)");
  add_config_options(xi_cmd, o);
  add_common_options(xi_cmd, o);

  auto* sf_cmd = app.add_subcommand("standard-form", "block standard form with m blocks (--m)");
  sf_cmd->add_option("input", o.input, "configuration JSON file or catalog name");
  sf_cmd->add_option("--catalog", o.catalog_name, "catalog name");
  sf_cmd->add_option("--m", o.m, "number of blocks (default 1)");
  add_common_options(sf_cmd, o);

  auto* sym_cmd = app.add_subcommand("symmetries", "polytope symmetry group");
  add_config_options(sym_cmd, o);
  add_common_options(sym_cmd, o);

  auto* tr_cmd = app.add_subcommand("transforms", "induced linear and elementary transformations");
  add_config_options(tr_cmd, o);
  add_common_options(tr_cmd, o);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an Euler integral or classical series");
  eval_cmd->add_option("input", o.input, "request JSON file, - for stdin");
  add_common_options(eval_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "numeric identity checks");
  add_config_options(verify_cmd, o);
  add_common_options(verify_cmd, o);
  verify_cmd->add_option("--check", o.check, "pfaff, quadric, pde, linear, binomial or f4")
      ->required()
      ->check(CLI::IsMember({"pfaff", "quadric", "pde", "linear", "binomial", "f4"}));
  verify_cmd->add_option("--samples", o.samples, "number of sample points");
  verify_cmd->add_option("--evaluator", o.evaluator, "auto, classical or integral")
      ->check(CLI::IsMember({"auto", "classical", "integral"}));
  verify_cmd->add_option("--N", o.N, "negative integer exponent -N of the binomial check");

  auto* f4_cmd = app.add_subcommand("f4-report", "the F4 non-existence certificate");
  add_common_options(f4_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n" << app.help();
    return Usage;
  }

  Output output(o, out);
  try {
    if (catalog_cmd->parsed())
      return cmd_catalog(o, output);
    if (validate_cmd->parsed())
      return cmd_validate(o, output);
    if (xi_cmd->parsed())
      return cmd_xi(o, output);
    if (sf_cmd->parsed())
      return cmd_standard_form(o, output);
    if (sym_cmd->parsed())
      return cmd_symmetries(o, output);
    if (tr_cmd->parsed())
      return cmd_transforms(o, output);
    if (eval_cmd->parsed())
      return cmd_eval(o, output);
    if (verify_cmd->parsed())
      return cmd_verify(o, output);
    if (f4_cmd->parsed())
      return emit(o, output, f4_nonexistence_report());
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

int run(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace gkz::cli
