#include "gkz/special_functions.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

namespace gkz {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr int kMaxTerms = 200000;

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_lanczos(Complex z)
{
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

void check_c(Complex c)
{
  if (is_nonpositive_integer(c))
    throw Error(ErrorCode::PoleInC, "lower parameter is a nonpositive integer");
}

} // namespace

bool is_nonpositive_integer(Complex z, double tol)
{
  return std::abs(z.imag()) <= tol && z.real() < 0.5 &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex falling_factorial(Complex alpha, unsigned k)
{
  Complex p = 1;
  for (unsigned j = 0; j < k; ++j)
    p *= alpha - static_cast<double>(j);
  return p;
}

Complex rising_pochhammer(Complex alpha, unsigned k)
{
  Complex p = 1;
  for (unsigned j = 0; j < k; ++j)
    p *= alpha + static_cast<double>(j);
  return p;
}

Complex log_gamma(Complex z)
{
  if (is_nonpositive_integer(z, 0.0))
    throw Error(ErrorCode::PoleInGamma, "Gamma has a pole at a nonpositive integer");
  if (z.real() < 0.5) {
    const Complex s = std::sin(std::numbers::pi * z);
    if (std::abs(s) == 0.0)
      throw Error(ErrorCode::PoleInGamma, "Gamma has a pole at a nonpositive integer");
    return std::log(std::numbers::pi) - std::log(s) - log_gamma_lanczos(1.0 - z);
  }
  return log_gamma_lanczos(z);
}

Complex gamma(Complex z)
{
  return std::exp(log_gamma(z));
}

Complex beta_function(Complex a, Complex b)
{
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

Complex gauss_2f1_series(Complex a, Complex b, Complex c, Complex x)
{
  check_c(c);
  const bool terminating = is_nonpositive_integer(a, 0.0) || is_nonpositive_integer(b, 0.0);
  if (!terminating && std::abs(x) >= 1.0)
    throw Error(ErrorCode::OutOfDomain, "2F1 series needs |x| < 1");
  Complex sum = 1, term = 1;
  int small = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    if (term == Complex(0))
      return sum;
    if (std::abs(term) <= kSeriesTol * std::abs(sum)) {
      if (++small >= 3)
        return sum;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorCode::NotConverged, "2F1 series did not converge");
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x)
{
  check_c(c);
  if (x == 1.0)
    throw Error(ErrorCode::OutOfDomain, "2F1 continuation undefined at x = 1");
  const Complex y = x / (x - 1.0);
  if (std::abs(y) < std::abs(x)) {
    if (std::abs(y) >= 1.0)
      throw Error(ErrorCode::OutOfDomain, "x is not reachable by the Pfaff transformation");
    return std::exp(-a * std::log(1.0 - x)) * gauss_2f1_series(a, c - b, c, y);
  }
  return gauss_2f1_series(a, b, c, x);
}

Complex appell_f4(Complex a, Complex b, Complex c, Complex cp, Complex y1, Complex y2)
{
  check_c(c);
  check_c(cp);
  if (std::sqrt(std::abs(y1)) + std::sqrt(std::abs(y2)) >= 1.0)
    throw Error(ErrorCode::OutOfDomain, "F4 series needs sqrt|y1| + sqrt|y2| < 1");
  // diag[r] holds the term with indices (r, n - r)
  std::vector<Complex> diag{1.0};
  Complex sum = 1;
  int small = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    const Complex ab = (a + dn) * (b + dn);
    std::vector<Complex> next(n + 2);
    double mag = 0;
    for (int r = 0; r <= n; ++r) {
      const double s = n - r;
      next[r] = diag[r] * ab / ((cp + s) * (s + 1.0)) * y2;
    }
    next[n + 1] = diag[n] * ab / ((c + dn) * (dn + 1.0)) * y1;
    Complex layer = 0;
    for (const auto& t : next) {
      layer += t;
      mag += std::abs(t);
    }
    sum += layer;
    diag.swap(next);
    if (mag == 0.0)
      return sum;
    if (mag <= kSeriesTol * std::abs(sum)) {
      if (++small >= 3)
        return sum;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorCode::NotConverged, "F4 series did not converge");
}

Complex lauricella_fc(Complex a, Complex b, std::span<const Complex> c, std::span<const Complex> y)
{
  const std::size_t m = c.size();
  if (m == 0 || m > 3 || y.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "F_C needs 1 <= m <= 3 and matching lengths");
  double radius = 0;
  for (std::size_t i = 0; i < m; ++i) {
    check_c(c[i]);
    radius += std::sqrt(std::abs(y[i]));
  }
  if (radius >= 1.0)
    throw Error(ErrorCode::OutOfDomain, "F_C series needs sum sqrt|y_i| < 1");
  using Index = std::vector<unsigned>;
  std::map<Index, Complex> layer{{Index(m, 0), 1.0}};
  Complex sum = 1;
  int small = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    const Complex ab = (a + dn) * (b + dn);
    std::map<Index, Complex> next;
    for (const auto& [k, t] : layer)
      for (std::size_t i = 0; i < m; ++i) {
        Index k2 = k;
        ++k2[i];
        if (next.count(k2))
          continue;
        next[k2] = t * ab / ((c[i] + static_cast<double>(k[i])) * (k[i] + 1.0)) * y[i];
      }
    Complex total = 0;
    double mag = 0;
    for (const auto& [k, t] : next) {
      total += t;
      mag += std::abs(t);
    }
    sum += total;
    layer.swap(next);
    if (mag == 0.0)
      return sum;
    if (mag <= kSeriesTol * std::abs(sum)) {
      if (++small >= 3)
        return sum;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorCode::NotConverged, "F_C series did not converge");
}

} // namespace gkz
