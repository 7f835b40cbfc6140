#include "gkz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace gkz {

namespace {

constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082,
                                       0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975,
                                       0.417959183673469387755102040816327};
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329,
                                        0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926,
                                        0.741531185599394439863864773280788,
                                        0.586087235467691130294144838258730,
                                        0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245,
                                        0.0};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970,
                                        0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518,
                                        0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550,
                                        0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649,
                                        0.209482141084727828012999174891714};

struct Segment {
  double a, b;
  Complex value;
  double error;
  double abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

ValueMagnitude checked(const MagnitudeIntegrand& f, double x)
{
  ValueMagnitude v = f(x);
  if (!std::isfinite(v.value.real()) || !std::isfinite(v.value.imag()) ||
      !std::isfinite(v.magnitude))
    throw Error(ErrorCode::NotConverged, "integrand is not finite at t = " + std::to_string(x));
  return v;
}

Segment gk15(const MagnitudeIntegrand& f, double a, double b)
{
  const double center = 0.5 * (a + b), half = 0.5 * (b - a);
  std::array<Complex, 15> fv;
  std::array<double, 15> mag;
  std::array<double, 15> w;
  auto eval = [&](int k, double x) {
    const ValueMagnitude v = checked(f, x);
    fv[k] = v.value;
    mag[k] = v.magnitude;
  };
  eval(0, center);
  w[0] = kWgk[7];
  Complex gauss = fv[0] * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    eval(1 + 2 * j, center - dx);
    eval(2 + 2 * j, center + dx);
    w[1 + 2 * j] = w[2 + 2 * j] = kWgk[j];
    if (j % 2 == 1)
      gauss += kWg[j / 2] * (fv[1 + 2 * j] + fv[2 + 2 * j]);
  }
  Complex kronrod = 0;
  double abs_k = 0;
  for (int k = 0; k < 15; ++k) {
    kronrod += w[k] * fv[k];
    abs_k += w[k] * mag[k];
  }
  const Complex mean = 0.5 * kronrod;
  double asc = 0;
  for (int k = 0; k < 15; ++k)
    asc += w[k] * std::abs(fv[k] - mean);
  const double h = std::abs(half);
  Segment s{a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_k * h};
  asc *= h;
  if (asc != 0 && s.error != 0)
    s.error = asc * std::min(1.0, std::pow(200.0 * s.error / asc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * s.abs_value;
  if (s.abs_value > std::numeric_limits<double>::min() / (50.0 * std::numeric_limits<double>::epsilon()))
    s.error = std::max(s.error, floor);
  return s;
}

} // namespace

double quadrature_target(const QuadratureSettings& settings, Complex value, double abs_integral)
{
  // below about 200 eps of int |f| the Kronrod estimates only see rounding
  const double cancel = std::max(settings.rel_tol * settings.cancellation_floor,
                                 200.0 * std::numeric_limits<double>::epsilon());
  return std::max({settings.rel_tol * std::abs(value), cancel * abs_integral, settings.abs_tol});
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSettings& settings)
{
  return integrate_interval(MagnitudeIntegrand([&f](double x) {
                              const Complex v = f(x);
                              return ValueMagnitude{v, std::abs(v)};
                            }),
                            a, b, settings);
}

QuadratureResult integrate_interval(const MagnitudeIntegrand& f, double a, double b,
                                    const QuadratureSettings& settings)
{
  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b));
  Complex total = heap.top().value;
  double error = heap.top().error, abs_total = heap.top().abs_value;
  int splits = 0;
  auto target = [&] { return quadrature_target(settings, total, abs_total); };
  while (error > target() && splits < settings.max_subdivisions) {
    Segment s = heap.top();
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b)
      break;
    heap.pop();
    Segment l = gk15(f, s.a, mid), r = gk15(f, mid, s.b);
    total += l.value + r.value - s.value;
    abs_total += l.abs_value + r.abs_value - s.abs_value;
    heap.push(l);
    heap.push(r);
    ++splits;
    error += l.error + r.error - s.error;
    if (splits % 64 == 0 || error <= target()) {
      // recompute the error sum to avoid drift
      error = 0;
      auto copy = heap;
      while (!copy.empty()) {
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, error, abs_total, error <= target()};
}

QuadratureResult integrate_real_line(const Integrand& f, const QuadratureSettings& settings)
{
  return integrate_real_line(MagnitudeIntegrand([&f](double x) {
                               const Complex v = f(x);
                               return ValueMagnitude{v, std::abs(v)};
                             }),
                             settings);
}

QuadratureResult integrate_real_line(const MagnitudeIntegrand& f,
                                     const QuadratureSettings& settings)
{
  const double L0 = settings.core_half_width;
  QuadratureResult out = integrate_interval(f, -L0, L0, settings);
  for (int side : {-1, 1}) {
    double L = L0;
    bool done = false;
    while (!done) {
      double next = std::min(L * settings.truncation_growth, settings.max_half_width);
      if (next <= L) {
        out.converged = false;
        break;
      }
      QuadratureResult seg = side > 0 ? integrate_interval(f, L, next, settings)
                                      : integrate_interval(f, -next, -L, settings);
      out.value += seg.value;
      out.error += seg.error;
      out.abs_integral += seg.abs_integral;
      out.converged = out.converged && seg.converged;
      const double target = quadrature_target(settings, out.value, out.abs_integral);
      if (seg.abs_integral <= 0.1 * target)
        done = true;
      L = next;
    }
  }
  out.converged = out.converged &&
                  out.error <= quadrature_target(settings, out.value, out.abs_integral);
  return out;
}

} // namespace gkz
