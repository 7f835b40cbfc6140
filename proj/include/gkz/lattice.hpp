#ifndef GKZ_LATTICE_HPP
#define GKZ_LATTICE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkz/error.hpp"

namespace gkz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix over an exact ring.
template<typename T>
class Matrix {
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
  : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {}

  Matrix(std::initializer_list<std::initializer_list<long long>> rows)
  {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (long long v : row)
        data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const
  { return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  std::vector<T> col(std::size_t j) const
  {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  void set_row(std::size_t i, const std::vector<T>& values)
  {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = values[j];
  }

  void set_col(std::size_t j, const std::vector<T>& values)
  {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, j) = values[i];
  }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b)
  { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
  {
    if (a.cols_ != v.size())
      throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        out[i] += a(i, j) * v[j];
    return out;
  }

  friend std::vector<T> operator*(const std::vector<T>& v, const Matrix& a)
  {
    if (a.rows_ != v.size())
      throw Error(ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
    std::vector<T> out(a.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        out[j] += v[i] * a(i, j);
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Converts back when every entry is integral; empty otherwise.
std::optional<IntMatrix> to_integer(const RatMatrix& m);
std::optional<IntVector> to_integer(const RatVector& v);

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Inverse over the rationals; empty when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Inverse of a unimodular matrix, which is integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Solution of m * x = rhs when it exists and is unique (m has full column rank).
std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& rhs);

/// Lexicographically first maximal set of linearly independent columns.
std::vector<std::size_t> independent_columns(const IntMatrix& m);

Integer gcd_of(const IntVector& v);
IntVector make_primitive(IntVector v);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // rows x cols, diagonal with s_1 | s_2 | ...
  IntMatrix V;  // cols x cols, unimodular

  IntVector invariant_factors() const;
};

/// U * M * V = S.
SmithForm smith_normal_form(const IntMatrix& M);

/// Integer coefficients m_ij with e_i = sum_j m_ij a_j where a_j are the columns
/// of M; empty unless every invariant factor of M equals one.
std::optional<IntMatrix> integer_representation(const IntMatrix& M);

/// Unimodular d x d matrix whose first rows are the given rows; requires the
/// rows to be extendable (all invariant factors one).
IntMatrix unimodular_completion(const IntMatrix& leading_rows);

/// Lattice basis of the integer kernel {k : M k = 0}, as columns of the result.
IntMatrix integer_kernel(const IntMatrix& M);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

} // namespace gkz

#endif // GKZ_LATTICE_HPP
