#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gkz/verify.hpp"

namespace gkz {

namespace {

// Affine form in the classical parameters a, b, c, c'.
struct Affine {
  std::map<std::string, Rational> coeff;
  Rational constant = 0;

  static Affine from(const AffineExpression& e)
  {
    Affine a{e.coefficients(), e.constant()};
    a.normalize();
    return a;
  }
  void normalize()
  {
    for (auto it = coeff.begin(); it != coeff.end();)
      it = it->second == 0 ? coeff.erase(it) : std::next(it);
  }
  Affine& add(const Affine& o, const Rational& s)
  {
    for (const auto& [k, v] : o.coeff)
      coeff[k] += s * v;
    constant += s * o.constant;
    normalize();
    return *this;
  }
  bool operator==(const Affine& o) const { return coeff == o.coeff && constant == o.constant; }

  std::string str() const
  {
    std::string out;
    auto put = [&](const Rational& v, const std::string& name) {
      if (v == 0)
        return;
      const bool neg = v < 0;
      const Rational m = neg ? Rational(-v) : v;
      if (!out.empty() || neg)
        out += neg ? "-" : "+";
      if (m != 1 || name.empty())
        out += m.str();
      out += name;
    };
    for (const std::string name : {"a", "b", "c", "c'"})
      if (coeff.count(name))
        put(coeff.at(name), name);
    put(constant, "");
    return out.empty() ? "0" : out;
  }
};

struct F4Params {
  Complex a, b, c, cp;
};

Complex term1(const F4Params& p, Complex y1, Complex y2)
{
  return std::pow(-y2, -p.a) *
         appell_f4(p.a, p.a - p.cp + 1.0, p.c, p.a - p.b + 1.0, y1 / y2, 1.0 / y2);
}

Complex term2(const F4Params& p, Complex y1, Complex y2, double sign_of_b)
{
  return std::pow(-y2, sign_of_b * p.b) *
         appell_f4(p.b - p.cp + 1.0, p.b, p.c, p.b - p.a + 1.0, y1 / y2, 1.0 / y2);
}

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fmt(Complex z)
{
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

} // namespace

Complex appell_f4_continued(Complex a, Complex b, Complex c, Complex cp, Complex y1, Complex y2)
{
  Complex sum = 0, coef = 1;
  int small = 0;
  for (int r = 0; r < 400; ++r) {
    const double dr = r;
    const Complex term = coef * gauss_2f1(a + dr, b + dr, cp, y2);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small >= 3)
        return sum;
    } else {
      small = 0;
    }
    coef *= (a + dr) * (b + dr) / ((c + dr) * (dr + 1.0)) * y1;
  }
  throw Error(ErrorCode::NotConverged, "continued F4 sum did not converge");
}

F4Report f4_nonexistence_report(double threshold)
{
  F4Report rep;
  const CatalogEntry entry = catalog("appell_f4");
  const PointConfiguration& config = entry.config;

  // (1) the symmetry, exact
  rep.T = IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 2, -1, -1}};
  rep.perm = {2, 1, 0, 5, 4, 3};
  rep.symmetry_exact = verify_symmetry(config, rep.T, permutation_matrix(rep.perm));
  rep.notes.push_back(std::string("step 1: T A = A P ") +
                      (rep.symmetry_exact ? "holds exactly" : "FAILS"));

  // (2) induced parameter map through beta = A kappa
  std::vector<Affine> beta;
  for (std::size_t i = 0; i < config.d(); ++i)
    beta.push_back(Affine::from(
        AffineExpression::parse(entry.classical_params.at("beta" + std::to_string(i + 1)))));
  std::vector<Affine> tb(config.d());
  for (std::size_t i = 0; i < config.d(); ++i)
    for (std::size_t j = 0; j < config.d(); ++j)
      if (rep.T(i, j) != 0)
        tb[i].add(beta[j], Rational(rep.T(i, j)));
  // a = -b2 + b3 + b4, b = b2 - b1, c = b3 + 1, c' = b4 + 1
  Affine na, nb, nc, ncp;
  na.add(tb[1], -1).add(tb[2], 1).add(tb[3], 1);
  nb.add(tb[1], 1).add(tb[0], -1);
  nc.add(tb[2], 1).constant += 1;
  ncp.add(tb[3], 1).constant += 1;
  rep.parameter_map = {{"a", na.str()}, {"b", nb.str()}, {"c", nc.str()}, {"c'", ncp.str()}};
  auto expect = [](const std::string& s) { return Affine::from(AffineExpression::parse(s)); };
  rep.parameter_map_consistent = na == expect("b-c'+1") && nb == expect("b") &&
                                 nc == expect("c") && ncp == expect("b-a+1");
  rep.notes.push_back("step 2: (a, b, c, c') -> (" + na.str() + ", " + nb.str() + ", " + nc.str() +
                      ", " + ncp.str() + "), the parameters of the second right-hand term");

  // (3) fit K1, K2 beyond the series domain of the left side
  const F4Params p{0.31, 0.77, 1.23, 1.61};
  const std::vector<std::pair<Complex, Complex>> pts = {
      {Complex(0.12, 0.03), Complex(-3.2, 0.4)},  {Complex(-0.08, 0.05), Complex(-4.0, -0.3)},
      {Complex(0.15, -0.02), Complex(-3.5, 1.0)}, {Complex(-0.1, -0.1), Complex(-5.0, 0.5)},
      {Complex(0.05, 0.12), Complex(-3.3, -1.2)}, {Complex(0.18, 0.0), Complex(-6.0, 0.0)},
      {Complex(-0.15, 0.02), Complex(-3.8, 2.0)}, {Complex(0.02, -0.16), Complex(-4.5, -1.5)}};
  std::vector<F4Sample> all;
  for (const auto& [y1, y2] : pts)
    all.push_back({y1, y2, appell_f4_continued(p.a, p.b, p.c, p.cp, y1, y2), term1(p, y1, y2),
                   term2(p, y1, y2, -1.0), 0.0});
  const F4Sample& s0 = all[0];
  const F4Sample& s1 = all[1];
  const Complex det = s0.term1 * s1.term2 - s0.term2 * s1.term1;
  const double cond_scale = std::abs(s0.term1 * s1.term2) + std::abs(s0.term2 * s1.term1);
  if (std::abs(det) < 1e-8 * cond_scale)
    throw Error(ErrorCode::FitUnstable, "the 2 x 2 fit for K1, K2 is singular");
  rep.K1 = (s0.lhs * s1.term2 - s0.term2 * s1.lhs) / det;
  rep.K2 = (s0.term1 * s1.lhs - s0.lhs * s1.term1) / det;
  for (std::size_t s = 0; s < all.size(); ++s) {
    F4Sample smp = all[s];
    smp.residual = std::abs(smp.lhs - rep.K1 * smp.term1 - rep.K2 * smp.term2) / std::abs(smp.lhs);
    if (s < 2) {
      rep.fit_samples.push_back(smp);
    } else {
      rep.check_samples.push_back(smp);
      rep.max_residual = std::max(rep.max_residual, smp.residual);
    }
  }
  rep.notes.push_back("step 3: K1 = " + fmt(rep.K1) + ", K2 = " + fmt(rep.K2) +
                      ", max residual over " + std::to_string(rep.check_samples.size()) +
                      " further samples " + sci(rep.max_residual));
  const Complex g1 = std::exp(log_gamma(p.cp) + log_gamma(p.b - p.a) - log_gamma(p.cp - p.a) -
                              log_gamma(p.b));
  const Complex g2 = std::exp(log_gamma(p.cp) + log_gamma(p.a - p.b) - log_gamma(p.cp - p.b) -
                              log_gamma(p.a));
  rep.notes.push_back("note: Gamma quotient candidates G(c')G(b-a)/(G(c'-a)G(b)) = " + fmt(g1) +
                      " and G(c')G(a-b)/(G(c'-b)G(a)) = " + fmt(g2) +
                      " (relative differences " + sci(std::abs(g1 - rep.K1) / std::abs(g1)) +
                      ", " + sci(std::abs(g2 - rep.K2) / std::abs(g2)) + "; not asserted)");

  // the variant with (-y2)^{+b} on the second term does not fit
  {
    std::vector<Complex> t2p;
    for (const auto& smp : all)
      t2p.push_back(term2(p, smp.y1, smp.y2, 1.0));
    const Complex d = s0.term1 * t2p[1] - t2p[0] * s1.term1;
    const Complex k1 = (s0.lhs * t2p[1] - t2p[0] * s1.lhs) / d;
    const Complex k2 = (s0.term1 * s1.lhs - s0.lhs * s1.term1) / d;
    double worst = 0;
    for (std::size_t s = 2; s < all.size(); ++s)
      worst = std::max(worst, std::abs(all[s].lhs - k1 * all[s].term1 - k2 * t2p[s]) /
                                  std::abs(all[s].lhs));
    rep.notes.push_back("note: with prefactor (-y2)^(+b) on the second term the same fit leaves "
                        "residual " + sci(worst) + "; the exponent must be -b");
  }

  // (4) the two right-hand functions are not proportional
  const Complex rho0 = all[0].term1 / all[0].term2;
  for (const auto& smp : all)
    rep.ratio_spread = std::max(rep.ratio_spread, std::abs(smp.term1 / smp.term2 - rho0) / std::abs(rho0));
  rep.notes.push_back("step 4: relative spread of term1/term2 across samples " +
                      sci(rep.ratio_spread));
  {
    const Complex k3 = all[0].lhs / all[0].term2;
    for (std::size_t s = 1; s < all.size(); ++s)
      rep.single_term_residual = std::max(
          rep.single_term_residual, std::abs(all[s].lhs - k3 * all[s].term2) / std::abs(all[s].lhs));
    rep.notes.push_back("single-term form K3 (-y2)^(-b) F4(b-c'+1, b; c, b-a+1; y1/y2, 1/y2) "
                        "fitted at one sample leaves residual " +
                        sci(rep.single_term_residual));
  }

  // (5) verdict
  std::vector<std::string> failures;
  if (!rep.symmetry_exact)
    failures.push_back("symmetry check failed");
  if (!rep.parameter_map_consistent)
    failures.push_back("parameter map differs from the second term");
  if (!(rep.max_residual < threshold))
    failures.push_back("two-term fit residual too large");
  if (!(rep.ratio_spread > 1e-2))
    failures.push_back("right-hand functions look proportional");
  if (failures.empty()) {
    rep.verdict = "contradiction reproduced";
  } else {
    rep.verdict = "not reproduced";
    for (const auto& f : failures)
      rep.notes.push_back("failure: " + f);
  }
  return rep;
}

} // namespace gkz
