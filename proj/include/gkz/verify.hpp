#ifndef GKZ_VERIFY_HPP
#define GKZ_VERIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gkz/evaluate.hpp"
#include "gkz/transforms.hpp"

namespace gkz {

struct SamplePoint {
  std::vector<Complex> beta;
  std::vector<Complex> x;
};

struct SampleGrid {
  std::vector<SamplePoint> points;
};

struct Residual {
  std::string label;
  double value = 0;
  double threshold = 0;
};

/// Outcome of a numeric identity check. The verdict is pass iff every residual
/// is below its threshold and any fitted constant was stable.
struct IdentityReport {
  std::string description;
  std::vector<SamplePoint> samples;
  std::vector<Complex> lhs;
  std::vector<Complex> rhs;
  Complex fitted_constant = 1.0;
  std::vector<Residual> residuals;
  std::map<std::string, Complex> values;  // named auxiliary quantities
  std::vector<std::string> notes;
  bool fit_stable = true;

  double max_residual() const;
  bool passed() const;
  std::string verdict() const { return passed() ? "pass" : "fail"; }
};

/// Convergence-safe sample points for gauss, quadric and square: a fixed
/// beta and count coefficient vectors.
SampleGrid default_grid(const CatalogEntry& entry, unsigned count = 6);

using Evaluator =
    std::function<Complex(std::span<const Complex> beta, std::span<const Complex> x)>;

/// Quadrature of the dehomogenized integral; throws NotConverged on failure.
Evaluator integral_evaluator(const StandardForm& sf, const CycleSpec& cycle,
                             const QuadratureSettings& settings = {});
Evaluator classical_evaluator(const CatalogEntry& entry);

/// Lattice basis of ker A, size reduced.
std::vector<IntVector> kernel_basis(const PointConfiguration& config);
/// k = u - v with u, v nonnegative and disjointly supported.
std::pair<std::vector<unsigned>, std::vector<unsigned>> split_kernel_vector(const IntVector& k);

/// Toric and Euler operator residuals of the integral at one point.
IdentityReport verify_pde(const StandardForm& sf, std::span<const Complex> beta,
                          std::span<const Complex> x, const CycleSpec& cycle,
                          const QuadratureSettings& settings = {}, double toric_threshold = 1e-6,
                          double euler_threshold = 1e-8);
IdentityReport verify_pde(const PointConfiguration& config, std::span<const Complex> beta,
                          std::span<const Complex> x, const CycleSpec& cycle,
                          const QuadratureSettings& settings = {});

/// F(beta; x) against scale * F(T beta; x') with kappa fitted at the first
/// sample and reused at the rest.
IdentityReport verify_linear_transformation(const PointConfiguration& config,
                                            const LinearTransformation& tr,
                                            const SampleGrid& grid, const Evaluator& evaluator,
                                            double threshold = 1e-6);

/// Both Pfaff forms of 2F1 at random |x| < 1/2.
IdentityReport verify_pfaff(unsigned samples, unsigned seed = 1, double threshold = 1e-10);

/// Reversal and rotation identities for the quadric integral on the positive
/// axis (F1) and the axis rotated by -pi (F2), plus the composed phase.
IdentityReport verify_quadric_multivaluedness(const QuadratureSettings& settings = {},
                                              double threshold = 1e-8);

/// LHS quadrature against the finite sum of term quadratures at each x.
IdentityReport verify_binomial_identity(const BinomialIdentity& id,
                                        const std::vector<std::vector<Complex>>& xs,
                                        const CycleSpec& cycle,
                                        const QuadratureSettings& settings = {},
                                        double threshold = 1e-6);

/// Evaluation of the published finite sum for the quadric (K = 0..N-1 with
/// second parameter 1 - K); records divergence or mismatch as notes.
std::vector<std::string> published_quadric_sum_notes(const BinomialIdentity& id,
                                                     const std::vector<Complex>& x,
                                                     const QuadratureSettings& settings = {});

struct F4Sample {
  Complex y1, y2;
  Complex lhs;
  Complex term1, term2;  // the two functions multiplying K1 and K2
  double residual = 0;
};

struct F4Report {
  IntMatrix T;
  Permutation perm;  // 0-based
  bool symmetry_exact = false;
  std::map<std::string, std::string> parameter_map;
  bool parameter_map_consistent = false;
  Complex K1 = 0, K2 = 0;
  std::vector<F4Sample> fit_samples;
  std::vector<F4Sample> check_samples;
  double max_residual = 0;
  double ratio_spread = 0;
  double single_term_residual = 0;
  std::vector<std::string> notes;
  std::string verdict;

  bool passed() const { return verdict == "contradiction reproduced"; }
};

F4Report f4_nonexistence_report(double threshold = 1e-8);

/// F4 continued to |y2| > 1 by summing 2F1(a+r, b+r; c'; y2) over r with
/// Pfaff-continued 2F1; needs Re y2 < 1/2 and small y1.
Complex appell_f4_continued(Complex a, Complex b, Complex c, Complex cp, Complex y1, Complex y2);

} // namespace gkz

#endif // GKZ_VERIFY_HPP
