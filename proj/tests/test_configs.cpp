#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "gkz/catalog.hpp"
#include "gkz/configs.hpp"
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

IntVector iv(std::initializer_list<long long> v)
{
  IntVector out;
  for (long long e : v)
    out.emplace_back(e);
  return out;
}

} // namespace

TEST_CASE("smith normal form examples")
{
  auto inv = [](const IntMatrix& m) { return smith_normal_form(m).invariant_factors(); };
  CHECK(inv(IntMatrix{{2, 0}, {0, 3}}) == iv({1, 6}));
  CHECK(inv(IntMatrix{{1, 0}, {0, 1}}) == iv({1, 1}));
  const SmithForm s = smith_normal_form(IntMatrix{{4, 6}});
  CHECK(s.S == IntMatrix{{2, 0}});
}

TEST_CASE("smith normal form round trip on random matrices")
{
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t c = static_cast<std::size_t>(g.integer(1, 5));
    const IntMatrix M = g.int_matrix(r, c, 6);
    const SmithForm s = smith_normal_form(M);
    REQUIRE(s.U * M * s.V == s.S);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const IntVector f = s.invariant_factors();
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < c; ++l)
        if (k != l)
          CHECK(s.S(k, l) == 0);
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      if (f[k] != 0)
        CHECK(f[k + 1] % f[k] == 0);
  }
}

TEST_CASE("integer kernel is a kernel of the right rank")
{
  Gen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix M = g.int_matrix(2, 5, 4);
    const IntMatrix K = integer_kernel(M);
    CHECK(K.cols() == 5 - rank(M));
    const IntMatrix Z = M * K;
    for (std::size_t i = 0; i < Z.rows(); ++i)
      for (std::size_t j = 0; j < Z.cols(); ++j)
        CHECK(Z(i, j) == 0);
  }
}

TEST_CASE("validate_configuration")
{
  const PointConfiguration gauss = validate_configuration({{1, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK(gauss.xi() == iv({1, 1, 1}));
  const PointConfiguration quadric = validate_configuration({{1, 1, 1}, {0, 1, 2}});
  CHECK(quadric.xi() == iv({1, 0}));
  CHECK(code_of([] { validate_configuration({{2, 0}, {0, 2}}); }) == ErrorCode::LatticeNotSpanned);
  CHECK(code_of([] { validate_configuration({{1, 1, 1}, {2, 2, 2}}); }) == ErrorCode::NotFullRank);
  CHECK(code_of([] { validate_configuration({{1, 0}, {0, 1}, {1, 1}}); }) == ErrorCode::NotFullRank);
  CHECK(code_of([] { validate_configuration({{1, 0, 1}, {0, 1, 1}}); }) == ErrorCode::NoXi);
}

TEST_CASE("lattice span failure names the Smith factors")
{
  try {
    validate_configuration({{2, 0}, {0, 2}});
    FAIL("expected LatticeNotSpanned");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
}

TEST_CASE("compute_xi examples")
{
  CHECK(compute_xi({{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}}).xi == iv({1, 0, 0}));
  for (const char* name : {"lauricella_fc(1)", "lauricella_fc(2)", "lauricella_fc(3)"}) {
    const IntVector xi = compute_xi(catalog(name).config.matrix()).xi;
    CHECK(xi[0] == 1);
    for (std::size_t i = 1; i < xi.size(); ++i)
      CHECK(xi[i] == 0);
  }
  CHECK(compute_xi({{1, 0}, {0, 1}}).xi == iv({1, 1}));
  const XiResult neg = compute_xi({{1, 2, 3}, {0, 1, 2}});
  CHECK(neg.xi == iv({1, -1}));
  CHECK(neg.has_negative_entry);
}

TEST_CASE("xi transforms by the inverse row change")
{
  Gen g(13);
  const std::vector<IntMatrix> configs = {
      {{1, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}},
      {{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}},
      catalog("lauricella_fc(2)").config.matrix()};
  for (const auto& A : configs) {
    const IntVector xi = compute_xi(A).xi;
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix U = g.unimodular(A.rows(), 6);
      const IntVector xi2 = compute_xi(U * A).xi;
      CHECK(xi2 == xi * unimodular_inverse(U));
      const IntVector ones = xi2 * (U * A);
      for (const auto& e : ones)
        CHECK(e == 1);
    }
  }
}

TEST_CASE("standard forms")
{
  const PointConfiguration quadric = validate_configuration({{1, 1, 1}, {0, 1, 2}});
  CHECK(to_standard_form(quadric).transformed == quadric.matrix());

  const StandardForm g = to_standard_form(catalog("gauss").config);
  CHECK(abs(determinant(g.unimodular)) == 1);
  CHECK(g.transformed == g.unimodular * g.base.matrix());
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(g.transformed(0, j) == 1);
  CHECK(g.unimodular.row(0) == g.base.xi());

  const StandardForm f4 = to_standard_form(catalog("appell_f4").config, 2);
  CHECK(f4.block_sizes == std::vector<std::size_t>{3, 3});
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(f4.transformed(0, j) + f4.transformed(1, j) == 1);
    CHECK(f4.transformed(f4.block_of[j], j) == 1);
  }
  CHECK(f4.r == 2);

  CHECK(code_of([&] { to_standard_form(quadric, 2); }) == ErrorCode::NoSuchBlockStructure);
}

TEST_CASE("standard form parameter coordinates round trip")
{
  Gen g(14);
  const StandardForm sf = to_standard_form(catalog("lauricella_fc(3)").config, 2);
  std::vector<Complex> beta(sf.base.d());
  for (auto& b : beta)
    b = g.complex(2.0);
  const auto back = sf.from_standard(sf.to_standard(beta));
  for (std::size_t i = 0; i < beta.size(); ++i)
    CHECK(std::abs(back[i] - beta[i]) < 1e-14);
}

TEST_CASE("facet normals")
{
  const PointConfiguration quadric = validate_configuration({{1, 1, 1}, {0, 1, 2}});
  CHECK(facet_normals(quadric) == std::vector<IntVector>{iv({0, 1}), iv({2, -1})});
  const PointConfiguration id2 = validate_configuration({{1, 0}, {0, 1}});
  CHECK(facet_normals(id2) == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  const PointConfiguration gauss = catalog("gauss").config;
  const auto normals = facet_normals(gauss);
  CHECK(normals.size() == 4);
  // every column on the nonnegative side, each facet spanned by d - 1 columns on it
  for (const auto& nu : normals) {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < gauss.n(); ++j) {
      Integer p = 0;
      for (std::size_t i = 0; i < gauss.d(); ++i)
        p += nu[i] * gauss.matrix()(i, j);
      CHECK(p >= 0);
      if (p == 0)
        cols.push_back(gauss.column(j));
    }
    IntMatrix F(gauss.d(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      F.set_col(c, cols[c]);
    CHECK(rank(F) == gauss.d() - 1);
  }
}

TEST_CASE("facet normals agree with a brute force oracle")
{
  // all primitive normals of hyperplanes through d - 1 columns that keep
  // every column on one side
  auto oracle = [](const PointConfiguration& c) {
    std::set<IntVector> found;
    const std::size_t n = c.n();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        IntMatrix M(2, 3);
        M.set_row(0, c.column(a));
        M.set_row(1, c.column(b));
        const IntMatrix K = integer_kernel(M);
        if (K.cols() != 1)
          continue;
        for (int sgn : {1, -1}) {
          IntVector nu = K.col(0);
          for (auto& e : nu)
            e *= sgn;
          bool ok = true;
          for (std::size_t j = 0; j < n && ok; ++j) {
            Integer p = 0;
            for (std::size_t i = 0; i < 3; ++i)
              p += nu[i] * c.matrix()(i, j);
            ok = p >= 0;
          }
          if (ok)
            found.insert(make_primitive(nu));
        }
      }
    return std::vector<IntVector>(found.begin(), found.end());
  };
  for (const char* name : {"gauss", "square"}) {
    const PointConfiguration c = catalog(name).config;
    CHECK(facet_normals(c) == oracle(c));
  }
}

TEST_CASE("nonresonance")
{
  const PointConfiguration quadric = validate_configuration({{1, 1, 1}, {0, 1, 2}});
  const std::vector<Rational> b1{Rational(1, 2), Rational(1, 3)};
  CHECK(is_nonresonant(quadric, std::span<const Rational>(b1)));
  const std::vector<Rational> b2{1, 0};
  CHECK_FALSE(is_nonresonant(quadric, std::span<const Rational>(b2)));

  // gauss facets: direct pairing against the four normals
  const PointConfiguration gauss = catalog("gauss").config;
  const std::vector<Complex> beta{Complex(0.4, 0.1), -0.3, -0.7};
  bool expected = true;
  for (const auto& nu : facet_normals(gauss)) {
    Complex p = 0;
    for (std::size_t i = 0; i < 3; ++i)
      p += nu[i].convert_to<double>() * beta[i];
    if (std::abs(p.imag()) < 1e-9 && std::abs(p.real() - std::round(p.real())) < 1e-9)
      expected = false;
  }
  CHECK(is_nonresonant(gauss, std::span<const Complex>(beta)) == expected);
  CHECK(expected);
}

TEST_CASE("saturation")
{
  const PointConfiguration quadric = validate_configuration({{1, 1, 1}, {0, 1, 2}});
  CHECK(is_saturated_up_to(quadric, 5));
  CHECK(is_saturated_up_to(validate_configuration({{1, 0}, {0, 1}}), 3));
  // columns (1,0), (1,2), (1,3): the point (1,1) is in the cone, not in NA
  const PointConfiguration gap = validate_configuration({{1, 1, 1}, {0, 2, 3}});
  CHECK_FALSE(is_saturated_up_to(gap, 2));
  CHECK(find_saturation_gap(gap, 2) == iv({1, 1}));
}

TEST_CASE("catalog entries")
{
  const CatalogEntry gauss = catalog("gauss");
  CHECK(gauss.config.matrix() == IntMatrix{{1, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  const auto beta = gauss.beta({{"a", 0.3}, {"b", 0.7}, {"c", 1.9}});
  CHECK(std::abs(beta[0] - 0.9) < 1e-15);
  CHECK(std::abs(beta[1] + 0.3) < 1e-15);
  CHECK(std::abs(beta[2] + 0.7) < 1e-15);

  CHECK(catalog("square").config.matrix() == IntMatrix{{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}});
  const CatalogEntry fc2 = catalog("lauricella_fc(2)");
  CHECK(fc2.config.d() == 4);
  CHECK(fc2.config.n() == 6);
  const CatalogEntry f4 = catalog("appell_f4");
  CHECK(f4.config.matrix() == fc2.config.matrix());
  // beta = A kappa with kappa = (-a, c-1, c'-1, -b, 0, 0)
  const double a = 0.31, b = 0.77, c = 1.23, cp = 1.61;
  const std::vector<double> kappa{-a, c - 1, cp - 1, -b, 0, 0};
  const auto bf4 = f4.beta({{"a", a}, {"b", b}, {"c", c}, {"c'", cp}});
  for (std::size_t i = 0; i < 4; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < 6; ++j)
      s += f4.config.matrix()(i, j).convert_to<double>() * kappa[j];
    CHECK(std::abs(bf4[i] - s) < 1e-14);
  }
  CHECK(code_of([] { catalog("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("affine expressions")
{
  const AffineExpression e = AffineExpression::parse("c' - 2a + 1/2");
  CHECK(e.constant() == Rational(1, 2));
  CHECK(e.coefficients().at("a") == -2);
  CHECK(std::abs(e.evaluate({{"a", 1.0}, {"c'", 3.0}}) - 1.5) < 1e-15);
  CHECK(code_of([] { AffineExpression::parse("a *"); }) == ErrorCode::ParseError);
}
