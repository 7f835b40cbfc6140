#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "gkz/evaluate.hpp"
#include "support.hpp"

using namespace gkz;
using gkz::testing::Gen;
using gkz::testing::rel_err;

namespace {

struct GaussPoint {
  double a, b, c;
  Complex x;
};

const std::vector<GaussPoint> euler_points{
    {0.3, 0.5, 1.7, 0.25},
    {1.2, 0.8, 2.5, -0.6},
    {-0.4, 1.5, 3.1, Complex(0.5, 0.3)},
    {0.7, 0.35, 1.2, Complex(0.0, 0.7)},
    {2.0, 1.1, 2.9, 0.8},
};

// B(b, c-b) 2F1(a, b; c; x)
Complex euler_series(const GaussPoint& p)
{
  return beta_function(p.b, p.c - p.b) * gauss_2f1(p.a, p.b, p.c, p.x);
}

} // namespace

TEST_CASE("Euler integral on [0,1] against the series")
{
  const auto start = std::chrono::steady_clock::now();
  QuadratureSettings s;
  s.rel_tol = 1e-11;
  // (x1 + x2 w)^{b1} (x3 + x4 w)^{b2} w^{-b3} dw/w with x = (1, -1, 1, -x)
  const StandardForm sf = to_standard_form(catalog("gauss").config, 2);
  REQUIRE(sf.block_of == std::vector<std::size_t>{0, 0, 1, 1});
  REQUIRE(sf.exponent(1) == IntVector{1});
  REQUIRE(sf.exponent(3) == IntVector{1});
  for (const auto& p : euler_points) {
    CAPTURE(p.x);
    const Complex expected = euler_series(p);

    const Integrand f = [&](double z) {
      return std::pow(z, p.b - 1) * std::pow(1 - z, p.c - p.b - 1) * std::pow(1.0 - p.x * z, -p.a);
    };
    const QuadratureResult direct = integrate_interval(f, 0.0, 1.0, s);
    CHECK(rel_err(direct.value, expected) < 1e-8);

    const std::vector<Complex> bstd{p.c - p.b - 1, -p.a, -p.b};
    const std::vector<Complex> beta = sf.from_standard(bstd);
    const std::vector<Complex> x{1.0, -1.0, 1.0, -p.x};
    const EvaluationResult r = euler_integral(sf, beta, x, {AxisCycle::unit_interval()}, s);
    CHECK(r.converged);
    CHECK(rel_err(r.value, expected) < 1e-8);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
}

TEST_CASE("two column configuration: closed form on the positive axis")
{
  // int_0^inf w^{-b2} (x1 + x2 w)^{b1} dw/w = x1^{b1} (x1/x2)^{s} B(s, -b1 - s), s = -b2
  const StandardForm sf = to_standard_form(validate_configuration(IntMatrix{{1, 1}, {0, 1}}));
  Gen gen(12);
  for (int trial = 0; trial < 8; ++trial) {
    const double s = gen.real(0.2, 1.5);
    const Complex b1(-s - gen.real(0.3, 2.0), gen.real(-0.5, 0.5));
    const Complex x1(gen.real(0.5, 2.0), gen.real(-0.3, 0.3)), x2(gen.real(0.5, 2.0), gen.real(-0.3, 0.3));
    const std::vector<Complex> bstd{b1, -s};
    const std::vector<Complex> beta = sf.from_standard(bstd);
    const std::vector<Complex> x{x1, x2};
    const Complex closed = std::pow(x1, b1) * std::pow(x1 / x2, s) * beta_function(s, -b1 - s);
    const EvaluationResult r = euler_integral(sf, beta, x, {AxisCycle::positive_axis()});
    CHECK(rel_err(r.value, closed) < 1e-9);

    // d/dx2 closed = -s/x2 closed
    const std::vector<unsigned> u{0, 1};
    const EvaluationResult d = derivative_integral(sf, beta, x, u, {AxisCycle::positive_axis()});
    CHECK(rel_err(d.value, -s / x2 * closed) < 1e-8);
  }
}

TEST_CASE("singular integrand is rejected")
{
  const StandardForm sf = to_standard_form(validate_configuration(IntMatrix{{1, 1}, {0, 1}}));
  const std::vector<Complex> beta = sf.from_standard(std::vector<Complex>{-1.5, -0.5});
  // x1 + x2 w vanishes at w = 1
  const std::vector<Complex> x{1.0, -1.0};
  CHECK_THROWS_AS(euler_integral(sf, beta, x, {AxisCycle::positive_axis()}), Error);
}

TEST_CASE("axis cycle names round trip")
{
  for (const auto& c : {AxisCycle::positive_axis(), AxisCycle::positive_axis(1.5), AxisCycle::negative_axis(),
                        AxisCycle::real_line(), AxisCycle::unit_interval(), AxisCycle::unit_circle()}) {
    const AxisCycle back = parse_axis_cycle(to_string(c));
    CHECK(back.kind == c.kind);
    CHECK(back.theta == doctest::Approx(c.theta));
  }
  CHECK_THROWS_AS(parse_axis_cycle("spiral"), Error);
}

TEST_CASE("classical parameters round trip")
{
  Gen gen(2);
  for (const std::string name : {"gauss", "square", "lauricella_fc(2)", "appell_f4"}) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    for (int trial = 0; trial < 5; ++trial) {
      std::map<std::string, Complex> params;
      for (const auto& p : e.parameter_names)
        params[p] = gen.complex(2.0);
      const std::vector<Complex> beta = e.beta(params);
      const auto back = classical_parameters(e, beta);
      for (const auto& [k, v] : params)
        CHECK(rel_err(back.at(k), v) < 1e-12);
    }
  }
  CHECK(homogenization_constant(1, std::vector<Complex>{-0.3}) == Complex(1.0));
}

TEST_CASE("gauss: classical solution against the integral")
{
  // x1^{c-1} x2^{-a} x3^{-b} 2F1(a, b; c; x1 x4 / (x2 x3)) at x = (1, 1, 1, z)
  const CatalogEntry g = catalog("gauss");
  const std::map<std::string, Complex> params{{"a", 0.4}, {"b", 0.3}, {"c", 1.6}};
  const std::vector<Complex> x{1.0, 1.0, 1.0, Complex(0.3, 0.1)};
  const Complex value = classical_solution(g, params, x);
  CHECK(rel_err(value, gauss_2f1(0.4, 0.3, 1.6, Complex(0.3, 0.1))) < 1e-13);
  const std::vector<Complex> x2{2.0, 1.5, 0.5, Complex(0.1, 0.05)};
  const Complex z = 2.0 * Complex(0.1, 0.05) / (1.5 * 0.5);
  const Complex expect = std::pow(2.0, 0.6) * std::pow(1.5, -0.4) * std::pow(0.5, -0.3) *
                         gauss_2f1(0.4, 0.3, 1.6, z);
  CHECK(rel_err(classical_solution(g, params, x2), expect) < 1e-12);
  CHECK(rel_err(classical_solution_beta(g, g.beta(params), x2), expect) < 1e-12);
}
