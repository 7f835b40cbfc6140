#include "gkz/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace gkz {

namespace {

bool perm_less(const PolytopeSymmetry& a, const PolytopeSymmetry& b)
{
  return a.perm < b.perm;
}

int sign_of(const Integer& det)
{
  return det > 0 ? 1 : -1;
}

} // namespace

IntMatrix permutation_matrix(const Permutation& perm)
{
  IntMatrix P(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    P(perm[j], j) = 1;
  return P;
}

IntMatrix PolytopeSymmetry::permutation_matrix() const
{
  return gkz::permutation_matrix(perm);
}

Permutation permutation_from_matrix(const IntMatrix& P)
{
  if (P.rows() != P.cols())
    throw Error(ErrorCode::DimensionMismatch, "permutation matrix must be square");
  const std::size_t n = P.rows();
  Permutation perm(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (P(i, j) == 0)
        continue;
      if (P(i, j) != 1 || perm[j] != n || seen[i])
        throw Error(ErrorCode::DimensionMismatch, "not a permutation matrix");
      perm[j] = i;
      seen[i] = true;
    }
  for (std::size_t j = 0; j < n; ++j)
    if (perm[j] == n)
      throw Error(ErrorCode::DimensionMismatch, "not a permutation matrix");
  return perm;
}

Permutation inverse_permutation(const Permutation& perm)
{
  Permutation inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    inv[perm[j]] = j;
  return inv;
}

PolytopeSymmetry identity_symmetry(const PointConfiguration& config)
{
  Permutation id(config.n());
  for (std::size_t j = 0; j < id.size(); ++j)
    id[j] = j;
  return {IntMatrix::identity(config.d()), id, 1};
}

std::optional<PolytopeSymmetry> solve_T_for_permutation(const PointConfiguration& config,
                                                        const Permutation& perm)
{
  const std::size_t d = config.d(), n = config.n();
  if (perm.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from n");
  {
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p])
        throw Error(ErrorCode::DimensionMismatch, "not a permutation");
      seen[p] = true;
    }
  }
  const IntMatrix& A = config.matrix();
  const auto basis = independent_columns(A);
  RatMatrix AB(d, d), APB(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      AB(i, k) = Rational(A(i, basis[k]));
      APB(i, k) = Rational(A(i, perm[basis[k]]));
    }
  auto ABinv = inverse(AB);
  if (!ABinv)
    return std::nullopt;
  auto T = to_integer(APB * *ABinv);
  if (!T)
    return std::nullopt;
  Integer det = determinant(*T);
  if (abs(det) != 1)
    return std::nullopt;
  if (!(*T * A == A * permutation_matrix(perm)))
    return std::nullopt;
  return PolytopeSymmetry{*T, perm, sign_of(det)};
}

bool verify_symmetry(const PointConfiguration& config, const IntMatrix& T, const IntMatrix& P)
{
  if (T.rows() != config.d() || T.cols() != config.d() || P.rows() != config.n() ||
      P.cols() != config.n())
    throw Error(ErrorCode::DimensionMismatch, "T must be d x d and P n x n");
  permutation_from_matrix(P);
  return abs(determinant(T)) == 1 && T * config.matrix() == config.matrix() * P;
}

PolytopeSymmetry compose(const PolytopeSymmetry& s1, const PolytopeSymmetry& s2)
{
  if (s1.T.rows() != s2.T.rows() || s1.perm.size() != s2.perm.size())
    throw Error(ErrorCode::ConfigMismatch, "symmetries of different configurations");
  Permutation p(s1.perm.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k] = s1.perm[s2.perm[k]];
  return {s1.T * s2.T, p, s1.det_sign * s2.det_sign};
}

PolytopeSymmetry inverse(const PolytopeSymmetry& s)
{
  return {unimodular_inverse(s.T), inverse_permutation(s.perm), s.det_sign};
}

bool SymmetryGroup::contains(const PolytopeSymmetry& s) const
{
  auto it = std::lower_bound(elements.begin(), elements.end(), s, perm_less);
  return it != elements.end() && *it == s;
}

std::vector<PolytopeSymmetry> generate_closure(const std::vector<PolytopeSymmetry>& gens)
{
  if (gens.empty())
    return {};
  std::map<Permutation, PolytopeSymmetry> seen;
  Permutation id(gens.front().perm.size());
  for (std::size_t j = 0; j < id.size(); ++j)
    id[j] = j;
  PolytopeSymmetry e{IntMatrix::identity(gens.front().T.rows()), id, 1};
  std::deque<PolytopeSymmetry> queue{e};
  seen.emplace(e.perm, e);
  while (!queue.empty()) {
    PolytopeSymmetry g = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      PolytopeSymmetry gh = compose(g, h);
      if (seen.emplace(gh.perm, gh).second)
        queue.push_back(gh);
    }
  }
  std::vector<PolytopeSymmetry> out;
  for (auto& [p, s] : seen)
    out.push_back(s);
  return out;
}

bool is_group(const std::vector<PolytopeSymmetry>& elements)
{
  if (elements.empty())
    return false;
  std::map<Permutation, const PolytopeSymmetry*> index;
  for (const auto& s : elements)
    index[s.perm] = &s;
  auto member = [&](const PolytopeSymmetry& s) {
    auto it = index.find(s.perm);
    return it != index.end() && *it->second == s;
  };
  bool has_identity = false;
  for (const auto& s : elements) {
    if (s.T == IntMatrix::identity(s.T.rows()) && std::is_sorted(s.perm.begin(), s.perm.end()))
      has_identity = true;
    if (!member(inverse(s)))
      return false;
    for (const auto& t : elements)
      if (!member(compose(s, t)))
        return false;
  }
  return has_identity;
}

SymmetryGroup find_symmetries(const PointConfiguration& config, std::size_t max_columns)
{
  const std::size_t d = config.d(), n = config.n();
  if (n > max_columns)
    throw Error(ErrorCode::TooLarge, "symmetry enumeration is limited to n <= " +
                                         std::to_string(max_columns));
  const IntMatrix& A = config.matrix();
  const auto basis = independent_columns(A);
  const auto vertex = vertex_columns(config);

  // T * D = A_img * adj(A_B) with D = det(A_B); integrality needs D | entries.
  IntMatrix AB(d, d);
  for (std::size_t k = 0; k < d; ++k)
    AB.set_col(k, A.col(basis[k]));
  const Integer D = determinant(AB);
  RatMatrix adj_r = *inverse(to_rational(AB));
  IntMatrix adj(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      adj(i, j) = numerator(adj_r(i, j) * Rational(D));

  std::map<IntVector, std::size_t> column_index;
  for (std::size_t j = 0; j < n; ++j)
    column_index.emplace(A.col(j), j);

  std::map<Permutation, PolytopeSymmetry> found;
  std::vector<std::size_t> image(d);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      IntMatrix Aimg(d, d);
      for (std::size_t c = 0; c < d; ++c)
        Aimg.set_col(c, A.col(image[c]));
      IntMatrix TD = Aimg * adj;
      IntMatrix T(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (TD(i, j) % D != 0)
            return;
          T(i, j) = TD(i, j) / D;
        }
      if (abs(determinant(T)) != 1)
        return;
      IntMatrix TA = T * A;
      Permutation perm(n);
      std::vector<bool> hit(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        auto it = column_index.find(TA.col(j));
        if (it == column_index.end() || hit[it->second])
          return;
        perm[j] = it->second;
        hit[it->second] = true;
      }
      auto certified = solve_T_for_permutation(config, perm);
      if (certified && certified->T == T)
        found.emplace(perm, *certified);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || vertex[j] != vertex[basis[k]])
        continue;
      used[j] = true;
      image[k] = j;
      rec(k + 1);
      used[j] = false;
    }
  };
  rec(0);

  SymmetryGroup group;
  for (auto& [p, s] : found)
    group.elements.push_back(s);
  if (!is_group(group.elements))
    throw Error(ErrorCode::ConfigMismatch, "enumerated symmetries failed the group certificate");

  // greedy generating set in permutation order
  std::set<Permutation> span;
  span.insert(identity_symmetry(config).perm);
  for (const auto& s : group.elements) {
    if (span.count(s.perm))
      continue;
    group.generators.push_back(s);
    span.clear();
    for (const auto& g : generate_closure(group.generators))
      span.insert(g.perm);
    if (span.size() == group.order())
      break;
  }
  return group;
}

} // namespace gkz
