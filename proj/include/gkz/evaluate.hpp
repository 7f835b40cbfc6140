#ifndef GKZ_EVALUATE_HPP
#define GKZ_EVALUATE_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gkz/catalog.hpp"
#include "gkz/configs.hpp"
#include "gkz/quadrature.hpp"
#include "gkz/special_functions.hpp"

namespace gkz {

enum class CycleKind { PositiveAxis, NegativeAxis, RealLine, UnitInterval, UnitCircle };

struct AxisCycle {
  CycleKind kind = CycleKind::PositiveAxis;
  double theta = 0;  // rotation angle of a positive axis

  static AxisCycle positive_axis(double theta = 0) { return {CycleKind::PositiveAxis, theta}; }
  static AxisCycle negative_axis() { return {CycleKind::NegativeAxis, 0}; }
  static AxisCycle real_line() { return {CycleKind::RealLine, 0}; }
  static AxisCycle unit_interval() { return {CycleKind::UnitInterval, 0}; }
  static AxisCycle unit_circle() { return {CycleKind::UnitCircle, 0}; }
};

/// One entry per dehomogenized variable.
using CycleSpec = std::vector<AxisCycle>;

std::string to_string(const AxisCycle& c);
/// Parses "positive_axis", "positive_axis(1.5)", "negative_axis", "real_line",
/// "unit_interval", "unit_circle".
AxisCycle parse_axis_cycle(const std::string& text);

struct EvaluationResult {
  Complex value = 0;
  double error_estimate = 0;
  double abs_integral = 0;
  bool converged = true;
  std::vector<std::string> warnings;
};

/// Dehomogenized Euler integral
///   M(beta; x) = int prod_k w_k^{-b_{m+k}} prod_i f_i(w)^{b_i} prod_k dw_k / w_k
/// with b = U beta. On a ray w = e^{i theta} t the power is exp(alpha (ln t + i theta));
/// powers of f_i use the principal branch. Throws SingularOnCycle and, unless
/// NotConverged results are tolerated by the caller, reports converged = false.
EvaluationResult euler_integral(const StandardForm& sf, std::span<const Complex> beta,
                                std::span<const Complex> x, const CycleSpec& cycle,
                                const QuadratureSettings& settings = {});

/// d^u M(beta; x) = prod_i (b_i)_{|u_i|} int w^{-b''} prod_i f_i^{b_i - |u_i|} w^{sum_j u_j e_j} dw/w
/// with descending factorials per block; u = 0 is euler_integral.
EvaluationResult derivative_integral(const StandardForm& sf, std::span<const Complex> beta,
                                     std::span<const Complex> x, std::span<const unsigned> u,
                                     const CycleSpec& cycle,
                                     const QuadratureSettings& settings = {});

/// K(beta; tau) over the torus skeleton normalized by (2 pi i)^m: 1 for m = 1,
/// the multinomial coefficient for nonnegative integer beta_head.
Complex homogenization_constant(std::size_t m, std::span<const Complex> beta_head);

/// Classical parameters (a, b, c, ...) recovered from beta for catalog entries
/// that carry a classical dictionary.
std::map<std::string, Complex> classical_parameters(const CatalogEntry& entry,
                                                    std::span<const Complex> beta);

/// Prefactor times series for gauss, square, lauricella_fc and appell_f4.
/// Principal branch powers; a base on the negative real axis adds a warning.
Complex classical_solution(const CatalogEntry& entry, const std::map<std::string, Complex>& params,
                           std::span<const Complex> x, std::vector<std::string>* warnings = nullptr);

Complex classical_solution_beta(const CatalogEntry& entry, std::span<const Complex> beta,
                                std::span<const Complex> x,
                                std::vector<std::string>* warnings = nullptr);

} // namespace gkz

#endif // GKZ_EVALUATE_HPP
