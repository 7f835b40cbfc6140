#include "gkz/catalog.hpp"

#include <cctype>
#include <regex>

namespace gkz {

namespace {

bool is_name_char(char ch)
{
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
}

IntMatrix lauricella_fc_matrix(unsigned m)
{
  const std::size_t d = m + 2, n = 2 * m + 2;
  IntMatrix A(d, n);
  for (std::size_t j = 0; j < n; ++j)
    A(0, j) = 1;
  for (std::size_t j = 0; j <= m; ++j)
    A(1, j) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    A(2 + i, 1 + i) = 1;
    A(2 + i, m + 2 + i) = -1;
  }
  return A;
}

IntMatrix pfq_matrix(unsigned p)
{
  const std::size_t d = 2 * p - 1, n = 2 * p;
  IntMatrix A(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    A(i, i) = 1;
    A(i, n - 1) = i < p ? 1 : -1;
  }
  return A;
}

} // namespace

AffineExpression AffineExpression::parse(const std::string& text)
{
  AffineExpression e;
  e.text_ = text;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  bool first = true;
  skip();
  if (i == text.size())
    throw Error(ErrorCode::ParseError, "empty affine expression");
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in \"" + text + "\"");
    }
    first = false;
    Rational coeff = sign;
    bool have_number = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    if (i > start) {
      coeff *= Rational(text.substr(start, i - start).c_str());
      have_number = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    start = i;
    while (i < text.size() && is_name_char(text[i]))
      ++i;
    if (i > start) {
      e.coeffs_[text.substr(start, i - start)] += coeff;
    } else if (have_number) {
      e.constant_ += coeff;
    } else {
      throw Error(ErrorCode::ParseError, "malformed term in \"" + text + "\"");
    }
    skip();
  }
  return e;
}

Complex AffineExpression::evaluate(const std::map<std::string, Complex>& values) const
{
  Complex v = constant_.convert_to<double>();
  for (const auto& [name, c] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end())
      throw Error(ErrorCode::UnknownName, "no value for parameter " + name);
    v += c.convert_to<double>() * it->second;
  }
  return v;
}

std::vector<Complex> CatalogEntry::beta(const std::map<std::string, Complex>& values) const
{
  std::vector<Complex> b(config.d());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = classical_params.find("beta" + std::to_string(i + 1));
    if (it == classical_params.end())
      throw Error(ErrorCode::UnknownName, name + " has no classical parameter dictionary");
    b[i] = AffineExpression::parse(it->second).evaluate(values);
  }
  return b;
}

std::vector<std::string> catalog_names()
{
  return {"gauss", "quadric", "square", "lauricella_fc(m)", "appell_f4", "pfq(p)"};
}

CatalogEntry catalog(const std::string& name)
{
  static const std::regex indexed(R"(^\s*(lauricella_fc|pfq)\s*[\(:]\s*(\d+)\s*\)?\s*$)");
  std::smatch match;
  if (name == "gauss") {
    return {"gauss", CatalogKind::Gauss, 0,
            validate_configuration({{1, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
            {{"beta1", "c-1"}, {"beta2", "-a"}, {"beta3", "-b"}},
            {"a", "b", "c"},
            "x1^(c-1) x2^(-a) x3^(-b) 2F1(a,b;c; x1*x4/(x2*x3))"};
  }
  if (name == "quadric") {
    return {"quadric", CatalogKind::Quadric, 0, validate_configuration({{1, 1, 1}, {0, 1, 2}}),
            {}, {}, "Euler integral of (x1 + x2 z + x3 z^2)^beta1 z^(-beta2)"};
  }
  if (name == "square") {
    return {"square", CatalogKind::Square, 0,
            validate_configuration({{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}}),
            {{"beta1", "-c"}, {"beta2", "-a"}, {"beta3", "-b"}},
            {"a", "b", "c"},
            "G(a)G(b)G(c-a)G(c-b)/G(c)^2 x1^(beta1-beta2-beta3) x2^beta3 x3^beta2 "
            "2F1(a,b;c; 1 - x1*x4/(x2*x3)), the positive orthant integral"};
  }
  if (name == "appell_f4") {
    return {"appell_f4", CatalogKind::AppellF4, 2,
            validate_configuration(lauricella_fc_matrix(2)),
            {{"beta1", "-a-b+c+c'-2"}, {"beta2", "-a+c+c'-2"}, {"beta3", "c-1"}, {"beta4", "c'-1"}},
            {"a", "b", "c", "c'"},
            "x2^(c-1) x3^(c'-1) / (x1^a x4^b) F4(a,b;c,c'; x2*x5/(x1*x4), x3*x6/(x1*x4)); "
            "beta = A*kappa, kappa = (-a, c-1, c'-1, -b, 0, 0)"};
  }
  if (std::regex_match(name, match, indexed)) {
    const unsigned k = static_cast<unsigned>(std::stoul(match[2].str()));
    if (match[1] == "lauricella_fc") {
      if (k < 1)
        throw Error(ErrorCode::UnknownName, "lauricella_fc needs m >= 1");
      std::map<std::string, std::string> params;
      std::vector<std::string> names{"a", "b"};
      std::string csum;
      for (unsigned i = 1; i <= k; ++i) {
        names.push_back("c" + std::to_string(i));
        csum += "+c" + std::to_string(i);
        params["beta" + std::to_string(i + 2)] = "c" + std::to_string(i) + "-1";
      }
      params["beta1"] = "-a-b" + csum + "-" + std::to_string(k);
      params["beta2"] = "-a" + csum + "-" + std::to_string(k);
      return {"lauricella_fc(" + std::to_string(k) + ")", CatalogKind::LauricellaFC, k,
              validate_configuration(lauricella_fc_matrix(k)), params, names,
              "x2^(c1-1)...x(m+1)^(cm-1) / (x1^a x(m+2)^b) FC(a,b;c; x(1+i) x(m+2+i)/(x1 x(m+2)))"};
    }
    if (k < 1)
      throw Error(ErrorCode::UnknownName, "pfq needs p >= 1");
    return {"pfq(" + std::to_string(k) + ")", CatalogKind::Pfq, k,
            validate_configuration(pfq_matrix(k)), {}, {},
            "identity block with one extra +-1 column; kernel spanned by (1,...,1,-1,...,-1)"};
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named \"" + name + "\"");
}

} // namespace gkz
