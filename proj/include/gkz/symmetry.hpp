#ifndef GKZ_SYMMETRY_HPP
#define GKZ_SYMMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gkz/configs.hpp"

namespace gkz {

using Permutation = std::vector<std::size_t>;  // 0-based

/// A pair (T, P) with T * A = A * P. Column j of A * P is a_{perm[j]}, so the
/// permutation matrix has P(perm[j], j) = 1.
struct PolytopeSymmetry {
  IntMatrix T;
  Permutation perm;
  int det_sign = 1;

  IntMatrix permutation_matrix() const;

  friend bool operator==(const PolytopeSymmetry& a, const PolytopeSymmetry& b)
  { return a.T == b.T && a.perm == b.perm; }
};

IntMatrix permutation_matrix(const Permutation& perm);
/// Throws DimensionMismatch unless P is a permutation matrix.
Permutation permutation_from_matrix(const IntMatrix& P);
Permutation inverse_permutation(const Permutation& perm);

PolytopeSymmetry identity_symmetry(const PointConfiguration& config);

/// T = (A P)_B (A_B)^{-1} on the lexicographically first column basis B;
/// empty unless T is integral, unimodular and T A = A P on every column.
std::optional<PolytopeSymmetry> solve_T_for_permutation(const PointConfiguration& config,
                                                        const Permutation& perm);

bool verify_symmetry(const PointConfiguration& config, const IntMatrix& T, const IntMatrix& P);

/// (T1, p1) o (T2, p2) = (T1 T2, p1 o p2). Acting on (beta, x) the composite
/// equals applying s2 first and then s1.
PolytopeSymmetry compose(const PolytopeSymmetry& s1, const PolytopeSymmetry& s2);
PolytopeSymmetry inverse(const PolytopeSymmetry& s);

struct SymmetryGroup {
  std::vector<PolytopeSymmetry> elements;  // sorted by permutation
  std::vector<PolytopeSymmetry> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const PolytopeSymmetry& s) const;
};

/// Closure of a set of symmetries under composition.
std::vector<PolytopeSymmetry> generate_closure(const std::vector<PolytopeSymmetry>& gens);

/// Exact check of identity, closure and inverses.
bool is_group(const std::vector<PolytopeSymmetry>& elements);

SymmetryGroup find_symmetries(const PointConfiguration& config, std::size_t max_columns = 14);

} // namespace gkz

#endif // GKZ_SYMMETRY_HPP
