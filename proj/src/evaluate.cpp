#include "gkz/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <regex>

namespace gkz {

namespace {

constexpr double kPi = std::numbers::pi;

enum class PieceMap { Exp, Logistic, Circle };

struct Piece {
  PieceMap map;
  double theta;
  double sign;
};

std::vector<Piece> pieces_of(const AxisCycle& c)
{
  switch (c.kind) {
  case CycleKind::PositiveAxis:
    return {{PieceMap::Exp, c.theta, 1.0}};
  case CycleKind::NegativeAxis:
    return {{PieceMap::Exp, kPi, 1.0}};
  case CycleKind::RealLine:
    // oriented from -infinity to +infinity; the outward ray at angle pi is reversed
    return {{PieceMap::Exp, 0.0, 1.0}, {PieceMap::Exp, kPi, -1.0}};
  case CycleKind::UnitInterval:
    return {{PieceMap::Logistic, 0.0, 1.0}};
  case CycleKind::UnitCircle:
    return {{PieceMap::Circle, 0.0, 1.0}};
  }
  return {};
}

struct AxisPoint {
  Complex log_w;
  Complex log_jac;  // log of the density against dv, relative to dw/w
};

AxisPoint axis_point(const Piece& p, double v)
{
  switch (p.map) {
  case PieceMap::Exp:
    return {Complex(v, p.theta), 0.0};
  case PieceMap::Logistic: {
    const double log_w = v >= 0 ? -std::log1p(std::exp(-v)) : v - std::log1p(std::exp(v));
    return {log_w, log_w - v};  // dw/w = (1 - w) dv
  }
  case PieceMap::Circle:
    return {Complex(0.0, v), -std::log(2.0 * kPi)};  // dw/(2 pi i w) = dv/(2 pi)
  }
  return {};
}

/// The integrand data shared by euler_integral and derivative_integral.
struct EulerIntegrand {
  const StandardForm& sf;
  std::vector<std::vector<double>> exps;  // exponent of column j in w_k
  std::vector<Complex> log_x;             // principal log of x_j, unused when x_j = 0
  std::vector<bool> zero_x;
  std::vector<Complex> w_power;           // exponent c_k of w_k against dw/w
  std::vector<Complex> f_power;           // exponent p_i of f_i

  /// principal log of f_i at the given log w; rel receives |f_i| over its
  /// largest monomial
  Complex log_f(std::size_t i, const std::vector<Complex>& log_w, double* rel = nullptr) const
  {
    std::vector<Complex> terms;
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (sf.block_of[j] != i || zero_x[j])
        continue;
      Complex t = log_x[j];
      for (std::size_t k = 0; k < log_w.size(); ++k)
        t += exps[j][k] * log_w[k];
      terms.push_back(t);
      top = std::max(top, t.real());
    }
    Complex s = 0;
    for (const auto& t : terms)
      s += std::exp(t - top);
    if (terms.empty() || std::abs(s) == 0.0)
      throw Error(ErrorCode::SingularOnCycle, "f_" + std::to_string(i + 1) + " vanishes on the cycle");
    if (rel)
      *rel = std::abs(s);
    return top + std::log(s);
  }

  Complex f(std::size_t i, const std::vector<Complex>& log_w) const
  {
    return std::exp(log_f(i, log_w));
  }

  Complex log_value(const std::vector<Complex>& log_w) const
  {
    Complex L = 0;
    for (std::size_t k = 0; k < log_w.size(); ++k)
      L += w_power[k] * log_w[k];
    for (std::size_t i = 0; i < f_power.size(); ++i)
      if (f_power[i] != Complex(0))
        L += f_power[i] * log_f(i, log_w);
    return L;
  }
};

EulerIntegrand make_integrand(const StandardForm& sf, std::span<const Complex> beta,
                         std::span<const Complex> x, std::span<const unsigned> u)
{
  const std::size_t n = sf.base.n();
  if (beta.size() != sf.base.d())
    throw Error(ErrorCode::DimensionMismatch, "beta must have length d");
  if (x.size() != n || u.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "x and u must have length n");
  const std::vector<Complex> b = sf.to_standard(beta);
  EulerIntegrand in{sf, {}, {}, {}, {}, {}};
  in.exps.resize(n);
  in.w_power.assign(sf.r, 0.0);
  in.f_power.assign(sf.m, 0.0);
  std::vector<unsigned> block_u(sf.m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& e : sf.exponent(j))
      in.exps[j].push_back(e.convert_to<double>());
    in.zero_x.push_back(x[j] == Complex(0));
    in.log_x.push_back(x[j] == Complex(0) ? Complex(0) : std::log(x[j]));
    block_u[sf.block_of[j]] += u[j];
    for (std::size_t k = 0; k < sf.r; ++k)
      in.w_power[k] += static_cast<double>(u[j]) * in.exps[j][k];
  }
  for (std::size_t k = 0; k < sf.r; ++k)
    in.w_power[k] -= b[sf.m + k];
  for (std::size_t i = 0; i < sf.m; ++i)
    in.f_power[i] = b[i] - static_cast<double>(block_u[i]);
  return in;
}

// Sample points of one axis in cycle order, as values of log w.
std::vector<Complex> scan_path(const AxisCycle& c, std::size_t count)
{
  std::vector<Complex> path;
  const double R = 40.0;
  auto ray = [&](double theta, bool inward) {
    for (std::size_t s = 0; s < count; ++s) {
      double v = -R + 2.0 * R * static_cast<double>(s) / static_cast<double>(count - 1);
      path.emplace_back(inward ? -v : v, theta);
    }
  };
  switch (c.kind) {
  case CycleKind::PositiveAxis:
    ray(c.theta, false);
    break;
  case CycleKind::NegativeAxis:
    ray(kPi, false);
    break;
  case CycleKind::RealLine:
    ray(kPi, true);
    ray(0.0, false);
    break;
  case CycleKind::UnitInterval:
    for (std::size_t s = 0; s < count; ++s) {
      double v = -R + 2.0 * R * static_cast<double>(s) / static_cast<double>(count - 1);
      path.push_back(axis_point({PieceMap::Logistic, 0, 1}, v).log_w);
    }
    break;
  case CycleKind::UnitCircle:
    for (std::size_t s = 0; s <= count; ++s)
      path.emplace_back(0.0, -kPi + 2.0 * kPi * static_cast<double>(s) / static_cast<double>(count));
    break;
  }
  return path;
}

// Sign changes of real-valued f, or near-zero winding, between neighbouring
// grid points along any axis.
void scan_for_zeros(const EulerIntegrand& in, const CycleSpec& cycle,
                    std::vector<std::string>& warnings)
{
  const std::size_t r = cycle.size();
  const std::size_t count = r == 1 ? 801 : (r == 2 ? 121 : 41);
  std::vector<std::vector<Complex>> paths;
  for (const auto& c : cycle)
    paths.push_back(scan_path(c, count));
  std::vector<std::size_t> idx(r, 0);
  std::vector<Complex> log_w(r);
  bool cut_warned = false;
  auto at = [&](const std::vector<std::size_t>& id, std::size_t i) {
    for (std::size_t k = 0; k < r; ++k)
      log_w[k] = paths[k][id[k]];
    return in.f(i, log_w);
  };
  auto rel_at = [&](const std::vector<std::size_t>& id, std::size_t i) {
    for (std::size_t k = 0; k < r; ++k)
      log_w[k] = paths[k][id[k]];
    double rel = 1;
    in.log_f(i, log_w, &rel);
    return rel;
  };
  // a zero hit exactly by the grid: a sharp dip of |f_i| against its
  // monomials, unlike the smooth decay towards an endpoint zero
  auto on_grid_zero = [&](const std::vector<std::size_t>& id, std::size_t i) {
    const double rel0 = rel_at(id, i);
    if (rel0 >= 1e-12)
      return false;
    for (std::size_t a = 0; a < r; ++a) {
      if (id[a] == 0 || id[a] + 1 >= paths[a].size())
        continue;
      auto prev = id, next = id;
      --prev[a];
      ++next[a];
      if (rel0 < 1e-6 * std::min(rel_at(prev, i), rel_at(next, i)))
        return true;
    }
    return false;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < r) {
      for (idx[k] = 0; idx[k] < paths[k].size(); ++idx[k])
        rec(k + 1);
      return;
    }
    for (std::size_t i = 0; i < in.sf.m; ++i) {
      if (on_grid_zero(idx, i))
        throw Error(ErrorCode::SingularOnCycle, "f_" + std::to_string(i + 1) + " vanishes on the cycle");
      const Complex f0 = at(idx, i);
      for (std::size_t a = 0; a < r; ++a) {
        if (idx[a] + 1 >= paths[a].size())
          continue;
        auto next = idx;
        ++next[a];
        const Complex f1 = at(next, i);
        const bool real0 = std::abs(f0.imag()) <= 1e-12 * std::abs(f0);
        const bool real1 = std::abs(f1.imag()) <= 1e-12 * std::abs(f1);
        if (real0 && real1 && f0.real() * f1.real() < 0)
          throw Error(ErrorCode::SingularOnCycle,
                      "f_" + std::to_string(i + 1) + " changes sign on the cycle");
        if (std::abs(std::arg(f1 / f0)) > 2.5)
          throw Error(ErrorCode::SingularOnCycle,
                      "f_" + std::to_string(i + 1) + " winds around zero on the cycle");
        if (!cut_warned && f0.real() < 0 && f1.real() < 0 && f0.imag() * f1.imag() < 0) {
          warnings.push_back("f_" + std::to_string(i + 1) +
                             " crosses the principal branch cut on the cycle");
          cut_warned = true;
        }
      }
    }
  };
  rec(0);
}

EvaluationResult integrate(const EulerIntegrand& in, const CycleSpec& cycle, Complex prefactor,
                           const QuadratureSettings& settings)
{
  const std::size_t r = in.sf.r;
  if (cycle.size() != r)
    throw Error(ErrorCode::DimensionMismatch,
                "cycle has " + std::to_string(cycle.size()) + " axes, expected " + std::to_string(r));
  EvaluationResult out;
  scan_for_zeros(in, cycle, out.warnings);

  std::vector<Complex> log_w(r);
  std::vector<Complex> log_jac(r);
  double inner_rel = 0;
  double inner_peak = 0;
  bool inner_ok = true;

  // Integral over axes k..r-1 with earlier axes fixed.
  std::function<QuadratureResult(std::size_t, const QuadratureSettings&)> axes =
      [&](std::size_t k, const QuadratureSettings& s) -> QuadratureResult {
    QuadratureResult total{0.0, 0.0, 0.0, true};
    QuadratureSettings inner = s;
    inner.rel_tol = 0.1 * s.rel_tol;
    inner.abs_tol = 0.1 * s.abs_tol;
    for (const Piece& p : pieces_of(cycle[k])) {
      auto g = [&](double v) -> ValueMagnitude {
        const AxisPoint ap = axis_point(p, v);
        log_w[k] = ap.log_w;
        log_jac[k] = ap.log_jac;
        if (k + 1 == r) {
          Complex L = in.log_value(log_w);
          for (const auto& j : log_jac)
            L += j;
          if (L.real() < -745.0)
            return {0.0, 0.0};
          const Complex e = std::exp(L);
          return {e, std::abs(e)};
        }
        QuadratureResult q = axes(k + 1, inner);
        // slices far below the peak contribute negligibly to the outer integral
        inner_peak = std::max(inner_peak, q.abs_integral);
        if (q.abs_integral > 1e-6 * inner_peak && q.abs_integral > 0) {
          inner_rel = std::max(inner_rel, q.error / q.abs_integral);
          // absolute error judged against the largest slice seen so far
          if (!q.converged && q.error > inner.rel_tol * inner_peak)
            inner_ok = false;
        }
        return {q.value, q.abs_integral};
      };
      const MagnitudeIntegrand gm = g;
      QuadratureResult q = p.map == PieceMap::Circle ? integrate_interval(gm, -kPi, kPi, s)
                                                     : integrate_real_line(gm, s);
      total.value += p.sign * q.value;
      total.error += q.error;
      total.abs_integral += q.abs_integral;
      total.converged = total.converged && q.converged;
    }
    return total;
  };

  QuadratureResult q = axes(0, settings);
  out.value = prefactor * q.value;
  out.error_estimate = std::abs(prefactor) * (q.error + inner_rel * q.abs_integral);
  out.abs_integral = std::abs(prefactor) * q.abs_integral;
  const double target = quadrature_target(settings, out.value, out.abs_integral);
  out.converged = q.converged && inner_ok && out.error_estimate <= 10.0 * target;
  if (!out.converged)
    out.warnings.push_back("quadrature did not reach the requested tolerance");
  return out;
}

} // namespace

std::string to_string(const AxisCycle& c)
{
  switch (c.kind) {
  case CycleKind::PositiveAxis:
    if (c.theta == 0)
      return "positive_axis";
    return "positive_axis(" + std::to_string(c.theta) + ")";
  case CycleKind::NegativeAxis:
    return "negative_axis";
  case CycleKind::RealLine:
    return "real_line";
  case CycleKind::UnitInterval:
    return "unit_interval";
  case CycleKind::UnitCircle:
    return "unit_circle";
  }
  return "";
}

AxisCycle parse_axis_cycle(const std::string& text)
{
  static const std::regex rotated(R"(^\s*positive_axis\s*\(\s*([-+0-9.eE]+)\s*\)\s*$)");
  std::smatch match;
  if (text == "positive_axis")
    return AxisCycle::positive_axis();
  if (std::regex_match(text, match, rotated))
    return AxisCycle::positive_axis(std::stod(match[1].str()));
  if (text == "negative_axis")
    return AxisCycle::negative_axis();
  if (text == "real_line")
    return AxisCycle::real_line();
  if (text == "unit_interval")
    return AxisCycle::unit_interval();
  if (text == "unit_circle")
    return AxisCycle::unit_circle();
  throw Error(ErrorCode::ParseError, "unknown cycle \"" + text + "\"");
}

EvaluationResult euler_integral(const StandardForm& sf, std::span<const Complex> beta,
                                std::span<const Complex> x, const CycleSpec& cycle,
                                const QuadratureSettings& settings)
{
  const std::vector<unsigned> zero(sf.base.n(), 0);
  return derivative_integral(sf, beta, x, zero, cycle, settings);
}

EvaluationResult derivative_integral(const StandardForm& sf, std::span<const Complex> beta,
                                     std::span<const Complex> x, std::span<const unsigned> u,
                                     const CycleSpec& cycle, const QuadratureSettings& settings)
{
  EulerIntegrand in = make_integrand(sf, beta, x, u);
  const std::vector<Complex> b = sf.to_standard(beta);
  std::vector<unsigned> block_u(sf.m, 0);
  for (std::size_t j = 0; j < u.size(); ++j)
    block_u[sf.block_of[j]] += u[j];
  Complex prefactor = 1;
  for (std::size_t i = 0; i < sf.m; ++i)
    prefactor *= falling_factorial(b[i], block_u[i]);
  if (prefactor == Complex(0))
    return {};
  return integrate(in, cycle, prefactor, settings);
}

Complex homogenization_constant(std::size_t m, std::span<const Complex> beta_head)
{
  if (beta_head.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "beta_head must have m entries");
  if (m == 1)
    return 1.0;
  Integer total = 0, value = 1;
  for (const auto& b : beta_head) {
    const double k = std::round(b.real());
    if (std::abs(b.imag()) > 1e-12 || std::abs(b.real() - k) > 1e-12 || k < 0)
      throw Error(ErrorCode::UnsupportedParameters,
                  "K(beta; tau) is only available for nonnegative integer beta when m >= 2");
    const unsigned kk = static_cast<unsigned>(k);
    // multinomial built as a product of binomials
    for (unsigned j = 1; j <= kk; ++j) {
      ++total;
      value = value * total / j;
    }
  }
  return value.convert_to<double>();
}

std::map<std::string, Complex> classical_parameters(const CatalogEntry& entry,
                                                    std::span<const Complex> beta)
{
  if (beta.size() != entry.config.d())
    throw Error(ErrorCode::DimensionMismatch, "beta must have length d");
  switch (entry.kind) {
  case CatalogKind::Gauss:
    return {{"a", -beta[1]}, {"b", -beta[2]}, {"c", beta[0] + 1.0}};
  case CatalogKind::Square:
    return {{"a", -beta[1]}, {"b", -beta[2]}, {"c", -beta[0]}};
  case CatalogKind::AppellF4:
    return {{"a", -beta[1] + beta[2] + beta[3]},
            {"b", beta[1] - beta[0]},
            {"c", beta[2] + 1.0},
            {"c'", beta[3] + 1.0}};
  case CatalogKind::LauricellaFC: {
    std::map<std::string, Complex> p;
    Complex a = -beta[1];
    for (unsigned i = 1; i <= entry.order; ++i) {
      p["c" + std::to_string(i)] = beta[1 + i] + 1.0;
      a += beta[1 + i];
    }
    p["a"] = a;
    p["b"] = beta[1] - beta[0];
    return p;
  }
  default:
    throw Error(ErrorCode::UnsupportedParameters, entry.name + " has no classical solution");
  }
}

namespace {

Complex get(const std::map<std::string, Complex>& p, const std::string& name)
{
  auto it = p.find(name);
  if (it == p.end())
    throw Error(ErrorCode::UnknownName, "missing classical parameter " + name);
  return it->second;
}

Complex power(Complex base, Complex alpha, const std::string& label,
              std::vector<std::string>* warnings)
{
  if (alpha == Complex(0))
    return 1.0;
  if (base == Complex(0))
    throw Error(ErrorCode::OutOfDomain, "zero coordinate " + label + " in the prefactor");
  if (base.imag() == 0 && base.real() < 0 && warnings)
    warnings->push_back("BranchAmbiguity: " + label + " lies on the negative real axis");
  return std::exp(alpha * std::log(base));
}

Complex ratio(Complex num, Complex den)
{
  if (den == Complex(0))
    throw Error(ErrorCode::OutOfDomain, "zero denominator coordinate in the series argument");
  return num / den;
}

} // namespace

Complex classical_solution(const CatalogEntry& entry, const std::map<std::string, Complex>& params,
                           std::span<const Complex> x, std::vector<std::string>* warnings)
{
  if (x.size() != entry.config.n())
    throw Error(ErrorCode::DimensionMismatch, "x must have length n");
  switch (entry.kind) {
  case CatalogKind::Gauss: {
    const Complex a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
    const Complex y = ratio(x[0] * x[3], x[1] * x[2]);
    return power(x[0], c - 1.0, "x1", warnings) * power(x[1], -a, "x2", warnings) *
           power(x[2], -b, "x3", warnings) * gauss_2f1(a, b, c, y);
  }
  case CatalogKind::Square: {
    const Complex a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
    const Complex z = 1.0 - ratio(x[0] * x[3], x[1] * x[2]);
    const Complex g = std::exp(log_gamma(a) + log_gamma(b) + log_gamma(c - a) +
                               log_gamma(c - b) - 2.0 * log_gamma(c));
    return g * power(x[0], a + b - c, "x1", warnings) * power(x[1], -b, "x2", warnings) *
           power(x[2], -a, "x3", warnings) * gauss_2f1(a, b, c, z);
  }
  case CatalogKind::AppellF4:
  case CatalogKind::LauricellaFC: {
    const std::size_t m = entry.order;
    const Complex a = get(params, "a"), b = get(params, "b");
    std::vector<Complex> c(m), y(m);
    for (std::size_t i = 0; i < m; ++i)
      c[i] = entry.kind == CatalogKind::AppellF4 ? get(params, i == 0 ? "c" : "c'")
                                                 : get(params, "c" + std::to_string(i + 1));
    Complex value = power(x[0], -a, "x1", warnings) *
                    power(x[m + 1], -b, "x" + std::to_string(m + 2), warnings);
    for (std::size_t i = 0; i < m; ++i) {
      value *= power(x[1 + i], c[i] - 1.0, "x" + std::to_string(i + 2), warnings);
      y[i] = ratio(x[1 + i] * x[m + 2 + i], x[0] * x[m + 1]);
    }
    if (m == 2)
      return value * appell_f4(a, b, c[0], c[1], y[0], y[1]);
    return value * lauricella_fc(a, b, c, y);
  }
  default:
    throw Error(ErrorCode::UnsupportedParameters, entry.name + " has no classical solution");
  }
}

Complex classical_solution_beta(const CatalogEntry& entry, std::span<const Complex> beta,
                                std::span<const Complex> x, std::vector<std::string>* warnings)
{
  return classical_solution(entry, classical_parameters(entry, beta), x, warnings);
}

} // namespace gkz
