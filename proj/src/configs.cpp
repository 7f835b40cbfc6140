#include "gkz/configs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace gkz {

namespace {

Integer dot(const IntVector& a, const IntVector& b)
{
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// Restricted growth strings of length n with exactly m blocks, in lexicographic order.
void for_each_partition(std::size_t n, std::size_t m,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
  std::vector<std::size_t> rgs(n, 0);
  bool stop = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (stop)
      return;
    if (pos == n) {
      if (used == m)
        stop = visit(rgs);
      return;
    }
    // not enough positions left to open the remaining blocks
    if (m - std::min(m, used) > n - pos)
      return;
    for (std::size_t b = 0; b <= used && b < m && !stop; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

// Shift each exponent row so that its minimum over every block is zero.
IntMatrix canonicalize_completion(const IntMatrix& U, const IntMatrix& A, std::size_t m,
                                  const std::vector<std::size_t>& block_of)
{
  IntMatrix out = U;
  IntMatrix UA = U * A;
  for (std::size_t k = m; k < U.rows(); ++k)
    for (std::size_t b = 0; b < m; ++b) {
      std::optional<Integer> lo;
      for (std::size_t j = 0; j < A.cols(); ++j)
        if (block_of[j] == b && (!lo || UA(k, j) < *lo))
          lo = UA(k, j);
      if (!lo || *lo == 0)
        continue;
      for (std::size_t c = 0; c < U.cols(); ++c)
        out(k, c) -= *lo * U(b, c);
    }
  return out;
}

} // namespace

XiResult compute_xi(const IntMatrix& A)
{
  RatVector ones(A.cols(), Rational(1));
  auto sol = solve_unique(to_rational(A.transpose()), ones);
  if (!sol)
    throw Error(ErrorCode::NoXi, "xi * A = (1,...,1) has no unique solution");
  auto xi = to_integer(*sol);
  if (!xi)
    throw Error(ErrorCode::NoXi, "solution of xi * A = (1,...,1) is not integral");
  XiResult res{*xi, false};
  for (const auto& v : res.xi)
    if (v < 0)
      res.has_negative_entry = true;
  return res;
}

PointConfiguration validate_configuration(const IntMatrix& raw)
{
  if (raw.rows() == 0 || raw.rows() > raw.cols())
    throw Error(ErrorCode::NotFullRank, "need 1 <= d <= n");
  if (rank(raw) != raw.rows())
    throw Error(ErrorCode::NotFullRank, "rank(A) < d");
  auto factors = smith_normal_form(raw).invariant_factors();
  for (const auto& f : factors)
    if (f != 1)
      throw Error(ErrorCode::LatticeNotSpanned,
                  "columns span a sublattice; Smith invariant factors " + to_string(factors));
  XiResult xi = compute_xi(raw);
  PointConfiguration pc;
  pc.matrix_ = raw;
  pc.xi_ = xi.xi;
  pc.xi_negative_ = xi.has_negative_entry;
  return pc;
}

IntVector StandardForm::exponent(std::size_t j) const
{
  IntVector e(r);
  for (std::size_t k = 0; k < r; ++k)
    e[k] = transformed(m + k, j);
  return e;
}

std::vector<Complex> StandardForm::to_standard(std::span<const Complex> beta) const
{
  if (beta.size() != unimodular.cols())
    throw Error(ErrorCode::DimensionMismatch, "parameter length differs from d");
  std::vector<Complex> out(unimodular.rows(), Complex(0));
  for (std::size_t i = 0; i < unimodular.rows(); ++i)
    for (std::size_t j = 0; j < unimodular.cols(); ++j)
      out[i] += unimodular(i, j).convert_to<double>() * beta[j];
  return out;
}

std::vector<Complex> StandardForm::from_standard(std::span<const Complex> beta_std) const
{
  IntMatrix inv = unimodular_inverse(unimodular);
  if (beta_std.size() != inv.cols())
    throw Error(ErrorCode::DimensionMismatch, "parameter length differs from d");
  std::vector<Complex> out(inv.rows(), Complex(0));
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      out[i] += inv(i, j).convert_to<double>() * beta_std[j];
  return out;
}

StandardForm make_standard_form(const PointConfiguration& config, const IntMatrix& U,
                                std::size_t m)
{
  const std::size_t d = config.d(), n = config.n();
  if (U.rows() != d || U.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "U must be d x d");
  if (m == 0 || m > d)
    throw Error(ErrorCode::NoSuchBlockStructure, "block count out of range");
  if (abs(determinant(U)) != 1)
    throw Error(ErrorCode::NoSuchBlockStructure, "U is not unimodular");
  StandardForm sf{config, U, U * config.matrix(), m, d - m, std::vector<std::size_t>(n),
                  std::vector<std::size_t>(m, 0)};
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hits = 0;
    for (std::size_t b = 0; b < m; ++b) {
      const Integer& v = sf.transformed(b, j);
      if (v == 1) {
        sf.block_of[j] = b;
        ++hits;
      } else if (v != 0) {
        throw Error(ErrorCode::NoSuchBlockStructure, "block rows must be 0/1");
      }
    }
    if (hits != 1)
      throw Error(ErrorCode::NoSuchBlockStructure, "block rows must partition the columns");
    ++sf.block_sizes[sf.block_of[j]];
  }
  for (std::size_t b = 0; b < m; ++b)
    if (sf.block_sizes[b] == 0)
      throw Error(ErrorCode::NoSuchBlockStructure, "empty block");
  return sf;
}

StandardForm to_standard_form(const PointConfiguration& config, std::size_t m)
{
  const std::size_t d = config.d(), n = config.n();
  if (m == 0 || m > d)
    throw Error(ErrorCode::NoSuchBlockStructure, "block count out of range");
  if (m == 1) {
    IntMatrix xi_row(1, d);
    xi_row.set_row(0, config.xi());
    IntMatrix U = unimodular_completion(xi_row);
    U = canonicalize_completion(U, config.matrix(), 1, std::vector<std::size_t>(n, 0));
    return make_standard_form(config, U, 1);
  }
  if (n > 14)
    throw Error(ErrorCode::TooLarge, "block search is limited to n <= 14");

  const RatMatrix At = to_rational(config.matrix().transpose());
  std::optional<StandardForm> found;
  for_each_partition(n, m, [&](const std::vector<std::size_t>& blocks) {
    IntMatrix Y(m, d);
    for (std::size_t b = 0; b < m; ++b) {
      RatVector indicator(n, Rational(0));
      for (std::size_t j = 0; j < n; ++j)
        if (blocks[j] == b)
          indicator[j] = 1;
      auto y = solve_unique(At, indicator);
      if (!y)
        return false;
      auto yi = to_integer(*y);
      if (!yi)
        return false;
      Y.set_row(b, *yi);
    }
    try {
      IntMatrix U = unimodular_completion(Y);
      U = canonicalize_completion(U, config.matrix(), m, blocks);
      found = make_standard_form(config, U, m);
    } catch (const Error&) {
      return false;
    }
    return true;
  });
  if (!found)
    throw Error(ErrorCode::NoSuchBlockStructure,
                "no partition into " + std::to_string(m) + " blocks lies in the integer rowspan");
  return *found;
}

std::vector<IntVector> facet_normals(const PointConfiguration& config)
{
  const std::size_t d = config.d(), n = config.n();
  const IntMatrix& A = config.matrix();
  std::set<IntVector> normals;
  if (d == 1) {
    normals.insert(IntVector{A(0, 0) > 0 ? Integer(1) : Integer(-1)});
    return {normals.begin(), normals.end()};
  }
  std::vector<std::size_t> pick(d - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == d - 1) {
      IntMatrix sub(d - 1, d);
      for (std::size_t k = 0; k < d - 1; ++k)
        sub.set_row(k, A.col(pick[k]));
      IntMatrix ker = integer_kernel(sub);
      if (ker.cols() != 1)
        return;
      IntVector nu = make_primitive(ker.col(0));
      bool pos_side = false, neg_side = false;
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = dot(nu, A.col(j));
        if (s > 0)
          pos_side = true;
        if (s < 0)
          neg_side = true;
      }
      if (pos_side && neg_side)
        return;
      if (neg_side)
        for (auto& v : nu)
          v = -v;
      normals.insert(nu);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      pick[pos] = j;
      rec(pos + 1, j + 1);
    }
  };
  rec(0, 0);
  if (normals.empty())
    throw Error(ErrorCode::DegenerateCone, "cone over A is not full-dimensional");
  return {normals.begin(), normals.end()};
}

std::vector<bool> vertex_columns(const PointConfiguration& config)
{
  const std::size_t d = config.d(), n = config.n();
  std::vector<bool> vertex(n, d == 1);
  if (d == 1)
    return vertex;
  auto normals = facet_normals(config);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector a = config.column(j);
    std::vector<IntVector> active;
    for (const auto& nu : normals)
      if (dot(nu, a) == 0)
        active.push_back(nu);
    if (active.size() < d - 1)
      continue;
    IntMatrix act(active.size(), d);
    for (std::size_t k = 0; k < active.size(); ++k)
      act.set_row(k, active[k]);
    vertex[j] = rank(act) == d - 1;
  }
  return vertex;
}

bool is_nonresonant(const PointConfiguration& config, std::span<const Rational> beta)
{
  if (beta.size() != config.d())
    throw Error(ErrorCode::DimensionMismatch, "parameter length differs from d");
  for (const auto& nu : facet_normals(config)) {
    Rational s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
      s += Rational(nu[i]) * beta[i];
    if (denominator(s) == 1)
      return false;
  }
  return true;
}

bool is_nonresonant(const PointConfiguration& config, std::span<const Complex> beta,
                    double tolerance)
{
  if (beta.size() != config.d())
    throw Error(ErrorCode::DimensionMismatch, "parameter length differs from d");
  for (const auto& nu : facet_normals(config)) {
    Complex s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
      s += nu[i].convert_to<double>() * beta[i];
    if (std::abs(s.imag()) <= tolerance && std::abs(s.real() - std::round(s.real())) <= tolerance)
      return false;
  }
  return true;
}

bool in_orthant_convergence_region(const PointConfiguration& config,
                                   std::span<const Complex> beta)
{
  if (beta.size() != config.d())
    throw Error(ErrorCode::DimensionMismatch, "parameter length differs from d");
  for (const auto& nu : facet_normals(config)) {
    double s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
      s -= nu[i].convert_to<double>() * beta[i].real();
    if (!(s > 1e-12))
      return false;
  }
  return true;
}

std::optional<IntVector> find_saturation_gap(const PointConfiguration& config,
                                             unsigned degree_bound)
{
  const std::size_t d = config.d(), n = config.n();
  const auto normals = facet_normals(config);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(config.column(j));

  std::set<IntVector> reachable{IntVector(d, Integer(0))};
  for (unsigned k = 1; k <= degree_bound; ++k) {
    std::set<IntVector> next;
    for (const auto& p : reachable)
      for (const auto& a : cols) {
        IntVector q(d);
        for (std::size_t i = 0; i < d; ++i)
          q[i] = p[i] + a[i];
        next.insert(std::move(q));
      }
    reachable = std::move(next);

    // bounding box of the slice k * conv(A)
    IntVector lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = hi[i] = cols[0][i];
      for (const auto& a : cols) {
        lo[i] = std::min(lo[i], a[i]);
        hi[i] = std::max(hi[i], a[i]);
      }
      lo[i] *= k;
      hi[i] *= k;
    }
    IntVector p = lo;
    for (;;) {
      if (dot(config.xi(), p) == Integer(k)) {
        bool in_cone = true;
        for (const auto& nu : normals)
          if (dot(nu, p) < 0) {
            in_cone = false;
            break;
          }
        if (in_cone && !reachable.count(p))
          return p;
      }
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (p[i] < hi[i]) {
          ++p[i];
          break;
        }
        p[i] = lo[i];
        if (i == 0) {
          i = d + 1;
          break;
        }
      }
      if (i == d + 1)
        break;
    }
  }
  return std::nullopt;
}

bool is_saturated_up_to(const PointConfiguration& config, unsigned degree_bound)
{
  return !find_saturation_gap(config, degree_bound).has_value();
}

} // namespace gkz
