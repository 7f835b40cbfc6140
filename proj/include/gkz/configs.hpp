#ifndef GKZ_CONFIGS_HPP
#define GKZ_CONFIGS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkz/lattice.hpp"

namespace gkz {

/// An integer point configuration A (d x n) whose columns span Z^d and whose
/// rowspan contains the all-ones vector, together with the unique integer
/// row vector xi satisfying xi * A = (1, ..., 1).
///
/// Instances are only produced by validate_configuration(), so holding one is
/// a certificate that all of the above was checked in exact arithmetic.
class PointConfiguration {
public:
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t d() const { return matrix_.rows(); }
  std::size_t n() const { return matrix_.cols(); }
  const IntVector& xi() const { return xi_; }
  IntVector column(std::size_t j) const { return matrix_.col(j); }

  /// Set when some xi_i < 0; the configuration is still accepted.
  bool xi_has_negative_entry() const { return xi_negative_; }

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b)
  { return a.matrix_ == b.matrix_; }

private:
  friend PointConfiguration validate_configuration(const IntMatrix& raw);

  IntMatrix matrix_;
  IntVector xi_;
  bool xi_negative_ = false;
};

PointConfiguration validate_configuration(const IntMatrix& raw);

struct XiResult {
  IntVector xi;
  bool has_negative_entry = false;
};

/// Unique integer vector with xi * A = (1, ..., 1); throws NoXi when the system
/// is inconsistent or its solution is not integral.
XiResult compute_xi(const IntMatrix& A);

/// The block shape obtained from a unimodular row change U: rows 0..m-1 of
/// U * A are 0/1 indicators of a partition of the columns, the remaining r
/// rows carry the dehomogenized exponents.
struct StandardForm {
  PointConfiguration base;
  IntMatrix unimodular;               // U, d x d
  IntMatrix transformed;              // U * A
  std::size_t m = 1;
  std::size_t r = 0;
  std::vector<std::size_t> block_of;  // block index of each column
  std::vector<std::size_t> block_sizes;

  /// Exponent of column j in the dehomogenized variables w_1..w_r.
  IntVector exponent(std::size_t j) const;

  /// Parameter vector in standard coordinates, U * beta.
  std::vector<Complex> to_standard(std::span<const Complex> beta) const;
  /// Inverse of to_standard.
  std::vector<Complex> from_standard(std::span<const Complex> beta_std) const;
};

StandardForm to_standard_form(const PointConfiguration& config, std::size_t m = 1);

/// Builds a standard form from a caller supplied unimodular U, checking the
/// block structure; throws NoSuchBlockStructure if rows 0..m-1 of U*A are not
/// partition indicators.
StandardForm make_standard_form(const PointConfiguration& config, const IntMatrix& U,
                                std::size_t m);

/// Primitive inward normals of the facets of the cone spanned by the columns,
/// sorted lexicographically.
std::vector<IntVector> facet_normals(const PointConfiguration& config);

/// Columns that are vertices of conv(A).
std::vector<bool> vertex_columns(const PointConfiguration& config);

bool is_nonresonant(const PointConfiguration& config, std::span<const Rational> beta);
bool is_nonresonant(const PointConfiguration& config, std::span<const Complex> beta,
                    double tolerance = 1e-9);

/// True when -Re(beta) lies in the interior of the cone over A, the region where
/// the positive orthant Euler integral converges.
bool in_orthant_convergence_region(const PointConfiguration& config,
                                   std::span<const Complex> beta);

/// First lattice point of the cone with xi-degree at most degree_bound that is
/// not a nonnegative integer combination of the columns.
std::optional<IntVector> find_saturation_gap(const PointConfiguration& config,
                                             unsigned degree_bound);

bool is_saturated_up_to(const PointConfiguration& config, unsigned degree_bound);

} // namespace gkz

#endif // GKZ_CONFIGS_HPP
