#ifndef GKZ_SPECIAL_FUNCTIONS_HPP
#define GKZ_SPECIAL_FUNCTIONS_HPP

#include <span>

#include "gkz/lattice.hpp"

namespace gkz {

/// Descending factorial alpha (alpha-1) ... (alpha-k+1).
Complex falling_factorial(Complex alpha, unsigned k);
/// Rising Pochhammer symbol alpha (alpha+1) ... (alpha+k-1).
Complex rising_pochhammer(Complex alpha, unsigned k);

/// log Gamma(z) up to a multiple of 2 pi i; throws PoleInGamma at 0, -1, -2, ...
Complex log_gamma(Complex z);
Complex gamma(Complex z);
/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
Complex beta_function(Complex a, Complex b);

/// Raw power series, |x| < 1.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, Complex x);
/// Series with Pfaff continuation when |x/(x-1)| < |x|.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x);

/// Double series summed along anti-diagonals; sqrt|y1| + sqrt|y2| < 1.
Complex appell_f4(Complex a, Complex b, Complex c, Complex cp, Complex y1, Complex y2);

/// m-fold F_C series for m <= 3.
Complex lauricella_fc(Complex a, Complex b, std::span<const Complex> c,
                      std::span<const Complex> y);

/// True when z is within tol of a nonpositive integer.
bool is_nonpositive_integer(Complex z, double tol = 1e-12);

} // namespace gkz

#endif // GKZ_SPECIAL_FUNCTIONS_HPP
