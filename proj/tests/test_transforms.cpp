#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "gkz/catalog.hpp"
#include "gkz/transforms.hpp"
#include "support.hpp"

using namespace gkz;
using gkz::testing::Gen;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

// sum_j x_j w^{exponent(j)}
Complex poly(const StandardForm& sf, std::span<const Complex> x, std::span<const Complex> w)
{
  Complex s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Complex term = x[j];
    const IntVector e = sf.exponent(j);
    for (std::size_t i = 0; i < e.size(); ++i)
      term *= std::pow(w[i], e[i].convert_to<int>());
    s += term;
  }
  return s;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

} // namespace

TEST_CASE("square: published parameter and variable maps")
{
  const PointConfiguration sq = catalog("square").config;
  const auto s1 = solve_T_for_permutation(sq, {0, 2, 1, 3});
  const auto s2 = solve_T_for_permutation(sq, {2, 3, 0, 1});
  REQUIRE(s1);
  REQUIRE(s2);
  const std::vector<Complex> beta{-1.3, -0.4, -0.25};
  const std::vector<Complex> x{1.0, 2.0, 3.0, 4.0};

  const auto [b1, x1] = apply(induced_transformation(*s1), beta, x);
  CHECK(b1 == std::vector<Complex>{-1.3, -0.25, -0.4});
  CHECK(x1 == std::vector<Complex>{1.0, 3.0, 2.0, 4.0});

  const LinearTransformation tr2 = induced_transformation(*s2);
  CHECK(tr2.scale == -1);
  const auto [b2, x2] = apply(tr2, beta, x);
  CHECK(std::abs(b2[1] - (beta[0] - beta[1])) < 1e-15);
  CHECK(b2[0] == beta[0]);
  CHECK(b2[2] == beta[2]);
  CHECK(x2 == std::vector<Complex>{3.0, 4.0, 1.0, 2.0});
}

TEST_CASE("property: apply and its inverse round trip exactly")
{
  Gen gen(11);
  for (const std::string name : {"square", "gauss", "lauricella_fc(2)", "appell_f4"}) {
    CAPTURE(name);
    const PointConfiguration c = catalog(name).config;
    const SymmetryGroup g = find_symmetries(c);
    for (const auto& s : g.elements) {
      const LinearTransformation tr = induced_transformation(s);
      CHECK(tr.scale == determinant(s.T));
      RatVector beta(c.d()), x(c.n());
      for (auto& b : beta)
        b = Rational(gen.integer(-50, 50), gen.integer(1, 9));
      for (auto& v : x)
        v = Rational(gen.integer(-50, 50), gen.integer(1, 9));
      const auto [b1, x1] = apply_exact(tr, beta, x);
      const auto [b2, x2] = apply_exact(inverse(tr), b1, x1);
      CHECK(b2 == beta);
      CHECK(x2 == x);

      std::vector<Complex> bc, xc;
      for (const auto& b : beta)
        bc.emplace_back(b.convert_to<double>());
      for (const auto& v : x)
        xc.emplace_back(v.convert_to<double>());
      const auto [bf, xf] = apply(tr, bc, xc);
      for (std::size_t i = 0; i < bf.size(); ++i)
        CHECK(std::abs(bf[i] - b1[i].convert_to<double>()) < 1e-12);
      for (std::size_t j = 0; j < xf.size(); ++j)
        CHECK(xf[s.perm[j]] == xc[j]);
    }
  }
}

TEST_CASE("torus map rows are the rows of T")
{
  const PointConfiguration sq = catalog("square").config;
  const auto s = solve_T_for_permutation(sq, {2, 3, 0, 1});
  REQUIRE(s);
  const auto rows = monomial_torus_map(sq, *s);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(rows[i] == s->T.row(i));
  const PointConfiguration q = catalog("quadric").config;
  CHECK(code_of([&] { monomial_torus_map(q, *s); }) == ErrorCode::ConfigMismatch);
}

TEST_CASE("quadric: elementary shift matrix")
{
  const StandardForm sf = to_standard_form(catalog("quadric").config);
  const Complex t(0.5, -1.25);
  const ElementaryAutomorphism ea = elementary_pullback(sf, 0, t);
  ComplexMatrix expect(3, 3, Complex(0));
  expect(0, 0) = 1;
  expect(1, 0) = t;
  expect(1, 1) = 1;
  expect(2, 0) = t * t;
  expect(2, 1) = 2.0 * t;
  expect(2, 2) = 1;
  CHECK(max_diff(ea.M, expect) < 1e-15);
  CHECK(code_of([&] { elementary_pullback(sf, 1, t); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("property: shifts compose additively and pull back the polynomial")
{
  Gen gen(23);
  for (const std::string name : {"quadric", "square", "gauss"}) {
    CAPTURE(name);
    const StandardForm sf = to_standard_form(catalog(name).config);
    for (std::size_t i = 0; i < sf.r; ++i) {
      for (int trial = 0; trial < 10; ++trial) {
        const Complex t = gen.complex(2.0), s = gen.complex(2.0);
        ElementaryAutomorphism a, b, ab;
        try {
          a = elementary_pullback(sf, i, t);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::LeavesConfiguration);
          break;
        }
        b = elementary_pullback(sf, i, s);
        ab = elementary_pullback(sf, i, t + s);
        CHECK(max_diff(a.M * b.M, ab.M) < 1e-12);
        CHECK(max_diff(a.M * a.inverse().M, ComplexMatrix::identity(sf.base.n())) < 1e-12);

        std::vector<Complex> x(sf.base.n()), w(sf.r);
        for (auto& v : x)
          v = gen.complex(1.0);
        for (auto& v : w)
          v = gen.complex(1.5);
        std::vector<Complex> shifted = w;
        shifted[i] += t;
        CHECK(testing::rel_err(poly(sf, x, shifted), poly(sf, a.pullback(x), w)) < 1e-12);
      }
    }
  }
}

TEST_CASE("shift that leaves the configuration")
{
  const StandardForm sf = to_standard_form(validate_configuration(IntMatrix{{1, 1, 1}, {0, 2, 3}}));
  CHECK(code_of([&] { elementary_pullback(sf, 0, Complex(1.0)); }) == ErrorCode::LeavesConfiguration);
  const StandardForm g2 = to_standard_form(catalog("gauss").config, 2);
  CHECK(code_of([&] { elementary_pullback(g2, 0, Complex(1.0)); }) == ErrorCode::NoSuchBlockStructure);
}

TEST_CASE("binomial coefficients")
{
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
  for (unsigned n = 1; n < 25; ++n)
    for (unsigned k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
}

TEST_CASE("quadric: binomial identity terms")
{
  const StandardForm sf = to_standard_form(catalog("quadric").config);
  const Complex t(0.75, 0.0);
  const ElementaryAutomorphism ea = elementary_pullback(sf, 0, t);
  const std::vector<Complex> beta{-0.7, -3.0};
  const BinomialIdentity id = binomial_expansion_identity(sf, ea, beta, 3);
  REQUIRE(id.terms.size() == 3);
  const long long coeff[] = {1, 2, 1};
  for (unsigned K = 0; K < 3; ++K) {
    const BinomialTerm& term = id.terms[K];
    CHECK(term.binomial == coeff[K]);
    CHECK(term.t_power == 2 - K);
    CHECK(term.beta[0] == beta[0]);
    CHECK(std::abs(term.beta[1] + static_cast<double>(K + 1)) < 1e-15);
    CHECK(std::abs(term.weight(t) - static_cast<double>(coeff[K]) * std::pow(0.75, 2 - K)) < 1e-15);
  }
  const std::vector<Complex> bad{-0.7, -2.5};
  CHECK(code_of([&] { binomial_expansion_identity(sf, ea, bad, 3); }) == ErrorCode::NotNegativeInteger);
  CHECK(code_of([&] { binomial_expansion_identity(sf, ea, beta, 0); }) == ErrorCode::NotNegativeInteger);
}

TEST_CASE("square: binomial terms in original coordinates")
{
  const StandardForm sf = to_standard_form(catalog("square").config);
  const ElementaryAutomorphism ea = elementary_pullback(sf, 1, Complex(0.3));
  std::vector<Complex> bstd{-4.2, -0.6, -2.0};
  const std::vector<Complex> beta = sf.from_standard(bstd);
  const BinomialIdentity id = binomial_expansion_identity(sf, ea, beta, 2);
  REQUIRE(id.terms.size() == 2);
  for (unsigned K = 0; K < 2; ++K) {
    const auto back = sf.to_standard(id.terms[K].beta);
    CHECK(std::abs(back[0] - bstd[0]) < 1e-12);
    CHECK(std::abs(back[1] - bstd[1]) < 1e-12);
    CHECK(std::abs(back[2] + static_cast<double>(K + 1)) < 1e-12);
  }
}
