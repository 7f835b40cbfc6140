#include "gkz/lattice.hpp"

#include <sstream>
#include <utility>

namespace gkz {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) += q * m(i, src);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::swap(m(r, j), m(p, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

RatMatrix to_rational(const IntMatrix& m)
{
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v)
{
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v)
    r.emplace_back(x);
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m)
{
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1)
        return std::nullopt;
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

std::optional<IntVector> to_integer(const RatVector& v)
{
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1)
      return std::nullopt;
    r.push_back(numerator(x));
  }
  return r;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows)
{
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Integer determinant(const IntMatrix& m)
{
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m)
{
  RatMatrix r = to_rational(m);
  return rref(r).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
  auto inv = inverse(to_rational(m));
  if (!inv)
    throw Error(ErrorCode::NotFullRank, "matrix is singular");
  auto integral = to_integer(*inv);
  if (!integral)
    throw Error(ErrorCode::DimensionMismatch, "matrix is not unimodular");
  return *integral;
}

std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& rhs)
{
  if (rhs.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;  // inconsistent
  if (pivots.size() != m.cols())
    return std::nullopt;  // not unique
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::vector<std::size_t> independent_columns(const IntMatrix& m)
{
  RatMatrix r = to_rational(m);
  return rref(r);
}

Integer gcd_of(const IntVector& v)
{
  Integer g = 0;
  for (const auto& x : v)
    g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

IntVector make_primitive(IntVector v)
{
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v)
      x /= g;
  return v;
}

IntVector SmithForm::invariant_factors() const
{
  IntVector f;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0)
      f.push_back(S(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& M)
{
  const std::size_t r = M.rows(), c = M.cols();
  SmithForm sf{IntMatrix::identity(r), M, IntMatrix::identity(c)};
  IntMatrix& S = sf.S;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (S(i, j) != 0 && (pi == r || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r)
        return sf;
      if (abs(S(t, t)) == abs(S(pi, pj))) {
        pi = t;
        pj = t;
      }
      swap_rows(S, t, pi);
      swap_rows(sf.U, t, pi);
      swap_cols(S, t, pj);
      swap_cols(sf.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        Integer q = S(i, t) / S(t, t);
        if (q != 0) {
          add_row(S, i, t, -q);
          add_row(sf.U, i, t, -q);
        }
        if (S(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        Integer q = S(t, j) / S(t, t);
        if (q != 0) {
          add_col(S, j, t, -q);
          add_col(sf.V, j, t, -q);
        }
        if (S(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // divisibility chain
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r)
        break;
      add_row(S, t, bad, 1);
      add_row(sf.U, t, bad, 1);
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j)
        S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < r; ++j)
        sf.U(t, j) = -sf.U(t, j);
    }
  }
  return sf;
}

std::optional<IntMatrix> integer_representation(const IntMatrix& M)
{
  const std::size_t d = M.rows(), n = M.cols();
  SmithForm sf = smith_normal_form(M);
  auto factors = sf.invariant_factors();
  if (factors.size() != d)
    return std::nullopt;
  for (const auto& f : factors)
    if (f != 1)
      return std::nullopt;
  // X = V [I_d; 0] U satisfies M X = I_d.
  IntMatrix embed(n, d);
  for (std::size_t i = 0; i < d; ++i)
    embed(i, i) = 1;
  IntMatrix X = sf.V * embed * sf.U;
  return X.transpose();
}

IntMatrix unimodular_completion(const IntMatrix& leading_rows)
{
  const std::size_t m = leading_rows.rows(), d = leading_rows.cols();
  SmithForm sf = smith_normal_form(leading_rows);
  auto factors = sf.invariant_factors();
  if (factors.size() != m)
    throw Error(ErrorCode::NotFullRank, "rows are linearly dependent");
  for (const auto& f : factors)
    if (f != 1)
      throw Error(ErrorCode::LatticeNotSpanned, "rows do not extend to a unimodular matrix");
  IntMatrix W = unimodular_inverse(sf.V);
  IntMatrix U(d, d);
  for (std::size_t i = 0; i < m; ++i)
    U.set_row(i, leading_rows.row(i));
  for (std::size_t i = m; i < d; ++i)
    U.set_row(i, W.row(i));
  return U;
}

IntMatrix integer_kernel(const IntMatrix& M)
{
  SmithForm sf = smith_normal_form(M);
  const std::size_t k = sf.invariant_factors().size();
  IntMatrix K(M.cols(), M.cols() - k);
  for (std::size_t j = k; j < M.cols(); ++j)
    K.set_col(j - k, sf.V.col(j));
  return K;
}

std::string to_string(const IntVector& v)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace gkz
