#ifndef GKZ_TRANSFORMS_HPP
#define GKZ_TRANSFORMS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gkz/configs.hpp"
#include "gkz/symmetry.hpp"

namespace gkz {

using ComplexMatrix = Matrix<Complex>;

struct LinearTransformation {
  PolytopeSymmetry symmetry;
  int scale = 1;  // det T
};

LinearTransformation induced_transformation(const PolytopeSymmetry& s);
LinearTransformation inverse(const LinearTransformation& tr);

/// (beta, x) -> (T beta, x'), x'_k = x_{perm^{-1}(k)}. For an involution this
/// is x P.
std::pair<std::vector<Complex>, std::vector<Complex>>
apply(const LinearTransformation& tr, std::span<const Complex> beta, std::span<const Complex> x);

/// Same action in exact arithmetic.
std::pair<RatVector, RatVector> apply_exact(const LinearTransformation& tr, const RatVector& beta,
                                            const RatVector& x);

/// Rows t_i of T, stacked they give T. The substitution that permutes the
/// monomials, z^{a_j} -> z^{a_perm(j)}, is z_i -> z^{T e_i} (the columns).
std::vector<IntVector> monomial_torus_map(const PointConfiguration& config,
                                          const PolytopeSymmetry& s);

/// Shift w_i -> w_i + t of one dehomogenized variable (0-based index) of an
/// m = 1 standard form. f(x; w + t e_i) = f(x M; w).
struct ElementaryAutomorphism {
  StandardForm sf;
  std::size_t variable_index = 0;
  Complex shift = 0;
  ComplexMatrix M;

  /// M for an arbitrary shift along the same variable.
  ComplexMatrix coefficient_matrix(Complex t) const;
  std::vector<Complex> pullback(std::span<const Complex> x) const;
  ElementaryAutomorphism inverse() const;
};

ElementaryAutomorphism elementary_pullback(const StandardForm& sf, std::size_t i, Complex t);

struct BinomialTerm {
  Integer binomial;          // C(N-1, K)
  unsigned t_power = 0;      // exponent of the shift t
  std::vector<Complex> beta;      // shifted parameter, original coordinates
  std::vector<Complex> beta_std;  // the same in standard coordinates

  Complex weight(Complex t) const;
};

/// With beta'_{1+i} = -N in standard coordinates and the toric measure,
///   F(x; beta) = sum_{K=0}^{N-1} C(N-1, K) t^{N-1-K} F(x M; beta_K),
/// where beta_K has beta'_{1+i} = -(K+1) and all other entries unchanged.
/// The cycle must be invariant under the shift (real_line on axis i).
struct BinomialIdentity {
  ElementaryAutomorphism automorphism;
  std::vector<Complex> beta;
  unsigned N = 0;
  std::vector<BinomialTerm> terms;
};

BinomialIdentity binomial_expansion_identity(const StandardForm& sf,
                                             const ElementaryAutomorphism& ea,
                                             std::span<const Complex> beta, unsigned N);

Integer binomial(unsigned n, unsigned k);

} // namespace gkz

#endif // GKZ_TRANSFORMS_HPP
