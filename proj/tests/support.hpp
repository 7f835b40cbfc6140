#ifndef GKZ_TESTS_SUPPORT_HPP
#define GKZ_TESTS_SUPPORT_HPP

#include <complex>
#include <random>
#include <vector>

#include "gkz/lattice.hpp"

namespace gkz::testing {

// Generators for property tests; every test seeds its own engine.
class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long long integer(long long lo, long long hi)
  {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex(double radius)
  {
    return {real(-radius, radius), real(-radius, radius)};
  }
  Complex in_disc(double radius)
  {
    const double r = radius * std::sqrt(real(0.0, 1.0)), t = real(-3.14159265358979, 3.14159265358979);
    return std::polar(r, t);
  }
  IntMatrix int_matrix(std::size_t rows, std::size_t cols, long long bound)
  {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = integer(-bound, bound);
    return m;
  }
  // product of elementary row operations, so det = +-1
  IntMatrix unimodular(std::size_t d, int steps)
  {
    IntMatrix u = IntMatrix::identity(d);
    for (int s = 0; s < steps && d > 1; ++s) {
      const std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long long>(d) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long long>(d) - 2));
      if (j >= i)
        ++j;
      const long long k = integer(-2, 2);
      for (std::size_t c = 0; c < d; ++c)
        u(i, c) += k * u(j, c);
      if (integer(0, 3) == 0)
        for (std::size_t c = 0; c < d; ++c)
          std::swap(u(i, c), u(j, c));
    }
    return u;
  }
  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

inline double rel_err(Complex a, Complex b)
{
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

} // namespace gkz::testing

#endif // GKZ_TESTS_SUPPORT_HPP
