#ifndef GKZ_QUADRATURE_HPP
#define GKZ_QUADRATURE_HPP

#include <functional>

#include "gkz/lattice.hpp"

namespace gkz {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double truncation_growth = 2.0;  // tail segment growth on unbounded axes
  double core_half_width = 8.0;
  double max_half_width = 300.0;
  // error targets are rel_tol * max(|I|, cancellation_floor * int |f|), and
  // never below 200 eps * int |f|
  double cancellation_floor = 1e-6;
};

double quadrature_target(const QuadratureSettings& settings, Complex value, double abs_integral);

struct QuadratureResult {
  Complex value = 0;
  double error = 0;
  double abs_integral = 0;  // integral of |f|
  bool converged = true;
};

using Integrand = std::function<Complex(double)>;

/// Integrand value together with the magnitude that abs_integral accumulates;
/// for an inner integral of an iterated quadrature this is its own abs_integral.
struct ValueMagnitude {
  Complex value;
  double magnitude;
};
using MagnitudeIntegrand = std::function<ValueMagnitude(double)>;

/// Globally adaptive 7/15 point Gauss-Kronrod on [a, b].
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSettings& settings);

/// Integral over the real line: core interval plus geometrically growing tail
/// segments until a segment is negligible or max_half_width is reached.
QuadratureResult integrate_real_line(const Integrand& f, const QuadratureSettings& settings);

QuadratureResult integrate_interval(const MagnitudeIntegrand& f, double a, double b,
                                    const QuadratureSettings& settings);
QuadratureResult integrate_real_line(const MagnitudeIntegrand& f,
                                     const QuadratureSettings& settings);

} // namespace gkz

#endif // GKZ_QUADRATURE_HPP
