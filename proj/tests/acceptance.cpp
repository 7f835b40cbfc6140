// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gkz/catalog.hpp"
#include "gkz/symmetry.hpp"
#include "gkz/transforms.hpp"
#include "gkz/verify.hpp"

using namespace gkz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(Complex a, Complex b)
{
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

bool contains_pair(const SymmetryGroup& g, const IntMatrix& T, const Permutation& perm)
{
  for (const auto& s : g.elements)
    if (s.T == T && s.perm == perm)
      return true;
  return false;
}

const IntMatrix square_T1{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
const Permutation square_P1{0, 2, 1, 3};
const IntMatrix square_T2{{1, 0, 0}, {1, -1, 0}, {0, 0, 1}};
const Permutation square_P2{2, 3, 0, 1};

Outcome square_group()
{
  const auto t0 = Clock::now();
  const PointConfiguration sq = catalog("square").config;
  const SymmetryGroup g = find_symmetries(sq);
  const bool ok = g.order() == 8 && contains_pair(g, square_T1, square_P1) &&
                  contains_pair(g, square_T2, square_P2) &&
                  verify_symmetry(sq, square_T1, permutation_matrix(square_P1)) &&
                  verify_symmetry(sq, square_T2, permutation_matrix(square_P2));
  const double t = seconds_since(t0);
  return {ok && t < 1.0, "order " + std::to_string(g.order()) + ", " + fmt("%.3f s", t)};
}

Outcome fc_subgroups()
{
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t m : {2u, 3u}) {
    const PointConfiguration c = catalog("lauricella_fc(" + std::to_string(m) + ")").config;
    const SymmetryGroup g = find_symmetries(c);
    const std::size_t n = 2 * m + 2;
    std::vector<PolytopeSymmetry> gens;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      Permutation p(n);
      for (std::size_t j = 0; j < n; ++j)
        p[j] = j;
      std::swap(p[1 + k], p[2 + k]);
      std::swap(p[m + 2 + k], p[m + 3 + k]);
      if (auto s = solve_T_for_permutation(c, p))
        gens.push_back(*s);
      else
        ok = false;
    }
    for (std::size_t k = 1; k <= m; ++k) {
      Permutation p(n);
      for (std::size_t j = 0; j < n; ++j)
        p[j] = j;
      std::swap(p[k], p[m + 1 + k]);
      if (auto s = solve_T_for_permutation(c, p))
        gens.push_back(*s);
      else
        ok = false;
    }
    const auto sub = generate_closure(gens);
    std::size_t expected = 1;
    for (std::size_t i = 1; i <= m; ++i)
      expected *= 2 * i;
    bool inside = sub.size() == expected;
    for (const auto& s : sub)
      inside = inside && g.contains(s);
    ok = ok && inside;
    detail += "m=" + std::to_string(m) + ": subgroup " + std::to_string(sub.size()) + " of " +
              std::to_string(g.order()) + "; ";
  }
  const double t = seconds_since(t0);
  return {ok && t < 10.0, detail + fmt("%.3f s", t)};
}

Outcome f4_matrices()
{
  const auto t0 = Clock::now();
  const F4Report rep = f4_nonexistence_report();
  const IntMatrix& A = catalog("appell_f4").config.matrix();
  const bool exact = rep.symmetry_exact && rep.T * A == A * permutation_matrix(rep.perm);
  const double t = seconds_since(t0);
  return {exact && t < 0.1, std::string(exact ? "TA = AP" : "TA != AP") + ", " + fmt("%.4f s", t)};
}

Outcome pfaff()
{
  const IdentityReport rep = verify_pfaff(10, 7);
  return {rep.passed() && rep.samples.size() == 10 && rep.max_residual() < 1e-10,
          "max residual " + fmt("%.2e", rep.max_residual())};
}

Outcome euler_vs_series()
{
  const auto t0 = Clock::now();
  struct P {
    double a, b, c;
    Complex x;
  };
  const std::vector<P> points{{0.3, 0.5, 1.7, 0.25},
                              {1.2, 0.8, 2.5, -0.6},
                              {-0.4, 1.5, 3.1, Complex(0.5, 0.3)},
                              {0.7, 0.35, 1.2, Complex(0.0, 0.7)},
                              {2.0, 1.1, 2.9, 0.8}};
  QuadratureSettings s;
  s.rel_tol = 1e-11;
  double worst = 0;
  for (const auto& p : points) {
    const Integrand f = [&](double z) {
      return std::pow(z, p.b - 1) * std::pow(1 - z, p.c - p.b - 1) * std::pow(1.0 - p.x * z, -p.a);
    };
    const QuadratureResult q = integrate_interval(f, 0.0, 1.0, s);
    worst = std::max(worst, rel(q.value, beta_function(p.b, p.c - p.b) * gauss_2f1(p.a, p.b, p.c, p.x)));
  }
  const double t = seconds_since(t0);
  return {worst < 1e-8 && t < 5.0, "5 points, max rel " + fmt("%.2e", worst) + ", " + fmt("%.3f s", t)};
}

Outcome pde()
{
  const CatalogEntry g = catalog("gauss");
  const StandardForm g2 = make_standard_form(g.config, IntMatrix{{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}, 2);
  const SamplePoint p = default_grid(g, 1).points[0];
  const IdentityReport rg = verify_pde(g2, p.beta, p.x, {AxisCycle::positive_axis()}, {}, 1e-6, 1e-8);
  const CatalogEntry q = catalog("quadric");
  const std::vector<Complex> beta{-0.7, -0.2}, x{2.0, 1.0, 3.0};
  const IdentityReport rq =
      verify_pde(to_standard_form(q.config), beta, x, {AxisCycle::real_line()}, {}, 1e-6, 1e-8);
  const bool ok = rg.passed() && rq.passed() && is_nonresonant(g.config, p.beta) &&
                  is_nonresonant(q.config, beta);
  return {ok, "gauss " + fmt("%.2e", rg.max_residual()) + ", quadric " + fmt("%.2e", rq.max_residual())};
}

Outcome square_linear()
{
  const CatalogEntry e = catalog("square");
  const SampleGrid grid = default_grid(e, 6);
  const SymmetryGroup g = find_symmetries(e.config);
  const Evaluator f = classical_evaluator(e);
  bool ok = g.order() == 8 && grid.points.size() >= 5;
  bool printed1 = false, printed2 = false;
  double worst = 0;
  for (const auto& s : g.elements) {
    const IdentityReport rep = verify_linear_transformation(e.config, induced_transformation(s), grid, f);
    ok = ok && rep.passed() && rep.fit_stable;
    worst = std::max(worst, rep.max_residual());
    if (s.T == square_T1 && s.perm == square_P1)
      printed1 = rep.passed();
    if (s.T == square_T2 && s.perm == square_P2)
      printed2 = rep.passed();
  }
  return {ok && printed1 && printed2,
          "8 elements, 6 samples, max residual " + fmt("%.2e", worst) +
              (printed1 && printed2 ? ", both printed identities pass" : ", printed identity missing")};
}

Outcome quadric_phases()
{
  const IdentityReport rep = verify_quadric_multivaluedness({}, 1e-8);
  const Complex phase = rep.values.at("composed_phase");
  const Complex expected = rep.values.at("composed_phase_expected");
  const Complex b1 = rep.samples.at(0).beta.at(0), b2 = rep.samples.at(0).beta.at(1);
  const Complex independent = std::exp(Complex(0, -2 * 3.14159265358979323846) * (b1 + b2));
  const bool ok = rep.passed() && rel(phase, expected) < 1e-12 && rel(phase, independent) < 1e-12;
  return {ok, "max residual " + fmt("%.2e", rep.max_residual()) + ", composed factor exp(-2 pi i (b1 + b2))"};
}

Outcome binomial_identities()
{
  QuadratureSettings s;
  s.rel_tol = 1e-9;
  bool ok = true;
  bool divergence_noted = false;
  double worst = 0;
  const StandardForm q = to_standard_form(catalog("quadric").config);
  for (unsigned N = 1; N <= 3; ++N) {
    const std::vector<Complex> beta{-2.3, -static_cast<double>(N)};
    const BinomialIdentity id = binomial_expansion_identity(q, elementary_pullback(q, 0, 1.0), beta, N);
    const IdentityReport rep =
        verify_binomial_identity(id, {{3.0, 1.0, 2.0}, {2.5, 0.7, 1.8}, {4.0, -1.0, 1.5}},
                                 {AxisCycle::real_line()}, s, 1e-6);
    ok = ok && rep.passed();
    worst = std::max(worst, rep.max_residual());
    for (const auto& n : published_quadric_sum_notes(id, {3.0, 1.0, 2.0}, s))
      divergence_noted = divergence_noted || n.find("diverges") != std::string::npos ||
                         n.find("does not converge") != std::string::npos;
  }
  const StandardForm sq = to_standard_form(catalog("square").config);
  s.rel_tol = 1e-8;
  const std::vector<Complex> beta{-4.2, -0.6, -2.0};
  const BinomialIdentity id = binomial_expansion_identity(sq, elementary_pullback(sq, 1, 1.0), beta, 2);
  const IdentityReport rep = verify_binomial_identity(
      id,
      {{Complex(1.0, 0.8), 1.3, Complex(0.7, 0.5), 0.9},
       {Complex(0.6, 1.1), -0.8, Complex(1.2, 0.3), -1.5},
       {Complex(-0.5, 0.7), 0.6, Complex(0.4, 0.9), 1.1}},
      {AxisCycle::positive_axis(), AxisCycle::real_line()}, s, 1e-6);
  ok = ok && rep.passed();
  worst = std::max(worst, rep.max_residual());
  const bool degenerate = rep.values.count("degenerate") && rep.values.at("degenerate") == Complex(1.0);
  return {ok && divergence_noted,
          "quadric N=1,2,3 and square, max residual " + fmt("%.2e", worst) +
              (divergence_noted ? "; published index range diverges (recorded)" : "") +
              (degenerate ? "; square sides vanish identically on the line cycle" : "")};
}

Outcome f4_report()
{
  const F4Report rep = f4_nonexistence_report(1e-8);
  const bool ok = rep.fit_samples.size() == 2 && rep.check_samples.size() >= 5 &&
                  rep.max_residual < 1e-8 && rep.ratio_spread > 1e-2 &&
                  rep.verdict == "contradiction reproduced";
  return {ok, "check residual " + fmt("%.2e", rep.max_residual) + ", ratio spread " +
                  fmt("%.2e", rep.ratio_spread) + ", verdict " + rep.verdict};
}

Outcome properties()
{
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto cplx = [&](double r) { return Complex(r * U(rng), r * U(rng)); };
  bool groups = true, xi = true;
  for (const std::string name : {"square", "gauss", "quadric", "lauricella_fc(2)", "lauricella_fc(3)", "appell_f4"}) {
    const PointConfiguration c = catalog(name).config;
    const SymmetryGroup g = find_symmetries(c);
    groups = groups && is_group(g.elements);
    for (const auto& s : g.elements)
      xi = xi && c.xi() * s.T == c.xi();
  }
  double f4 = 0;
  for (int i = 0; i < 50; ++i) {
    const Complex a = cplx(2), b = cplx(2), c(1.0 + U(rng) * 0.5, U(rng)), cp(1.2, 0.3);
    const Complex y1 = cplx(0.45);
    f4 = std::max(f4, rel(appell_f4(a, b, c, cp, y1, 0.0), gauss_2f1_series(a, b, c, y1)));
  }
  double shift = 0;
  for (const std::string name : {"quadric", "square"}) {
    const StandardForm sf = to_standard_form(catalog(name).config);
    for (int i = 0; i < 20; ++i) {
      const Complex t = cplx(2), s = cplx(2);
      const std::size_t k = static_cast<std::size_t>(i) % sf.r;
      const ComplexMatrix lhs = elementary_pullback(sf, k, t).M * elementary_pullback(sf, k, s).M;
      const ComplexMatrix rhs = elementary_pullback(sf, k, t + s).M;
      double num = 0, den = 0;
      for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
          num = std::max(num, std::abs(lhs(r, c) - rhs(r, c)));
          den = std::max(den, std::abs(rhs(r, c)));
        }
      shift = std::max(shift, num / den);
    }
  }
  bool honoured = true;
  for (int i = 0; i < 20; ++i) {
    const Complex k(3 * U(rng), 25 * U(rng));
    const Integrand f = [&](double x) { return std::exp(k * x); };
    const Complex exact = (std::exp(k) - 1.0) / k;
    for (double tol : {1e-4, 1e-8, 1e-12}) {
      QuadratureSettings s;
      s.rel_tol = tol;
      s.abs_tol = 0;
      const QuadratureResult r = integrate_interval(f, 0.0, 1.0, s);
      honoured = honoured && r.converged && std::abs(r.value - exact) <= r.error + 1e-14 * r.abs_integral;
    }
  }
  const bool ok = groups && xi && f4 < 1e-12 && shift < 1e-12 && honoured;
  return {ok, std::string("group axioms ") + (groups ? "ok" : "FAIL") + ", xi T = xi " + (xi ? "ok" : "FAIL") +
                  ", F4(y1,0) vs 2F1 " + fmt("%.1e", f4) + ", M(t)M(s) " + fmt("%.1e", shift) +
                  ", quadrature errors " + (honoured ? "honoured" : "violated")};
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"square symmetry group of order 8 with both printed pairs", square_group},
      {"F_C families generate subgroups of order 2^m m! (m = 2, 3)", fc_subgroups},
      {"printed F4 matrices satisfy TA = AP", f4_matrices},
      {"Pfaff identity over 10 samples", pfaff},
      {"Euler integral against B(b,c-b) 2F1", euler_vs_series},
      {"PDE residuals for gauss and quadric", pde},
      {"square group: linear transformation identities", square_linear},
      {"quadric reversal, rotation and composed phase", quadric_phases},
      {"binomial identities (quadric N = 1,2,3; square)", binomial_identities},
      {"F4 report: contradiction reproduced", f4_report},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
