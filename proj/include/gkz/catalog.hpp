#ifndef GKZ_CATALOG_HPP
#define GKZ_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "gkz/configs.hpp"

namespace gkz {

/// An affine expression such as "c'-1" or "-a-b+c+c'-2" in named classical
/// parameters. Names may contain letters, digits, '_' and '\''.
class AffineExpression {
public:
  static AffineExpression parse(const std::string& text);

  Complex evaluate(const std::map<std::string, Complex>& values) const;
  std::string text() const { return text_; }
  const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
  const Rational& constant() const { return constant_; }

private:
  std::string text_;
  std::map<std::string, Rational> coeffs_;
  Rational constant_ = 0;
};

enum class CatalogKind { Gauss, Quadric, Square, LauricellaFC, AppellF4, Pfq };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  unsigned order = 0;  // m for lauricella_fc, p for pfq
  PointConfiguration config;
  /// beta_i as affine expressions in the classical parameters, keyed "beta1".."betad".
  std::map<std::string, std::string> classical_params;
  std::vector<std::string> parameter_names;
  std::string prefactor;

  /// beta from classical parameter values.
  std::vector<Complex> beta(const std::map<std::string, Complex>& values) const;
};

/// One of gauss, quadric, square, lauricella_fc(m), appell_f4, pfq(p).
CatalogEntry catalog(const std::string& name);

std::vector<std::string> catalog_names();

} // namespace gkz

#endif // GKZ_CATALOG_HPP
