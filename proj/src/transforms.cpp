#include "gkz/transforms.hpp"

#include <map>

namespace gkz {

Integer binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  Integer c = 1;
  for (unsigned j = 1; j <= k; ++j)
    c = c * (n - k + j) / j;
  return c;
}

LinearTransformation induced_transformation(const PolytopeSymmetry& s)
{
  return {s, static_cast<int>(determinant(s.T))};
}

LinearTransformation inverse(const LinearTransformation& tr)
{
  return induced_transformation(inverse(tr.symmetry));
}

std::pair<std::vector<Complex>, std::vector<Complex>>
apply(const LinearTransformation& tr, std::span<const Complex> beta, std::span<const Complex> x)
{
  const IntMatrix& T = tr.symmetry.T;
  const Permutation& perm = tr.symmetry.perm;
  if (beta.size() != T.cols() || x.size() != perm.size())
    throw Error(ErrorCode::DimensionMismatch, "beta must have length d and x length n");
  std::vector<Complex> b(T.rows(), Complex(0)), y(x.size());
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j)
      b[i] += T(i, j).convert_to<double>() * beta[j];
  for (std::size_t j = 0; j < perm.size(); ++j)
    y[perm[j]] = x[j];
  return {b, y};
}

std::pair<RatVector, RatVector> apply_exact(const LinearTransformation& tr, const RatVector& beta,
                                            const RatVector& x)
{
  const Permutation& perm = tr.symmetry.perm;
  if (beta.size() != tr.symmetry.T.cols() || x.size() != perm.size())
    throw Error(ErrorCode::DimensionMismatch, "beta must have length d and x length n");
  RatVector b = to_rational(tr.symmetry.T) * beta;
  RatVector y(x.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    y[perm[j]] = x[j];
  return {b, y};
}

std::vector<IntVector> monomial_torus_map(const PointConfiguration& config,
                                          const PolytopeSymmetry& s)
{
  if (s.T.rows() != config.d() || s.perm.size() != config.n())
    throw Error(ErrorCode::ConfigMismatch, "symmetry does not belong to this configuration");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < s.T.rows(); ++i)
    rows.push_back(s.T.row(i));
  return rows;
}

ComplexMatrix ElementaryAutomorphism::coefficient_matrix(Complex t) const
{
  const std::size_t n = sf.base.n();
  std::map<IntVector, std::size_t> index;
  for (std::size_t j = 0; j < n; ++j)
    index.emplace(sf.exponent(j), j);
  ComplexMatrix out(n, n, Complex(0));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e = sf.exponent(j);
    const Integer top = e[variable_index];
    if (top < 0)
      throw Error(ErrorCode::LeavesConfiguration,
                  "negative exponent in column " + std::to_string(j + 1) +
                      " has no finite expansion");
    const unsigned N = top.convert_to<unsigned>();
    for (unsigned k = 0; k <= N; ++k) {
      // (w_i + t)^N contributes C(N, k) t^(N-k) w_i^k
      e[variable_index] = k;
      auto it = index.find(e);
      if (it == index.end())
        throw Error(ErrorCode::LeavesConfiguration,
                    "expanding column " + std::to_string(j + 1) +
                        " produces a monomial outside the configuration");
      out(j, it->second) += binomial(N, k).convert_to<double>() *
                            (N - k == 0 ? Complex(1) : std::pow(t, static_cast<int>(N - k)));
    }
  }
  return out;
}

std::vector<Complex> ElementaryAutomorphism::pullback(std::span<const Complex> x) const
{
  if (x.size() != M.rows())
    throw Error(ErrorCode::DimensionMismatch, "coefficient vector length differs from n");
  return std::vector<Complex>(x.begin(), x.end()) * M;
}

ElementaryAutomorphism ElementaryAutomorphism::inverse() const
{
  return elementary_pullback(sf, variable_index, -shift);
}

ElementaryAutomorphism elementary_pullback(const StandardForm& sf, std::size_t i, Complex t)
{
  if (sf.m != 1)
    throw Error(ErrorCode::NoSuchBlockStructure, "elementary shifts need an m = 1 standard form");
  if (i >= sf.r)
    throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  ElementaryAutomorphism ea{sf, i, t, {}};
  ea.M = ea.coefficient_matrix(t);
  return ea;
}

Complex BinomialTerm::weight(Complex t) const
{
  Complex p = t_power == 0 ? Complex(1) : std::pow(t, static_cast<int>(t_power));
  return binomial.convert_to<double>() * p;
}

BinomialIdentity binomial_expansion_identity(const StandardForm& sf,
                                             const ElementaryAutomorphism& ea,
                                             std::span<const Complex> beta, unsigned N)
{
  if (!(ea.sf.unimodular == sf.unimodular) || !(ea.sf.base == sf.base))
    throw Error(ErrorCode::ConfigMismatch, "automorphism built on a different standard form");
  if (N == 0)
    throw Error(ErrorCode::NotNegativeInteger, "N must be positive");
  std::vector<Complex> bstd = sf.to_standard(beta);
  const std::size_t slot = sf.m + ea.variable_index;
  if (std::abs(bstd[slot] + static_cast<double>(N)) > 1e-12)
    throw Error(ErrorCode::NotNegativeInteger,
                "dehomogenized exponent of the shifted variable is not -" + std::to_string(N));
  BinomialIdentity id{ea, std::vector<Complex>(beta.begin(), beta.end()), N, {}};
  for (unsigned K = 0; K < N; ++K) {
    BinomialTerm term;
    term.binomial = binomial(N - 1, K);
    term.t_power = N - 1 - K;
    term.beta_std = bstd;
    term.beta_std[slot] = -static_cast<double>(K + 1);
    term.beta = sf.from_standard(term.beta_std);
    id.terms.push_back(term);
  }
  return id;
}

} // namespace gkz
