#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "birkhoff/error.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

/// Exponent vector; variable 0 is the most significant in the lex order.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a std::map so iteration order is the lex order on
/// exponent vectors; zero coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  /// c_0 x_0 + ... + c_{n-1} x_{n-1} + offset.
  static Polynomial linear(const std::vector<Rational>& coeffs, const Rational& offset = 0);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Replaces variable `index` by `value` everywhere.
  Polynomial substitute(std::size_t index, const Polynomial& value) const;

  bool operator==(const Polynomial& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

  std::string to_string() const;

private:
  void check_compatible(const Polynomial& o) const;

  std::size_t num_vars_;
  std::map<Monomial, Rational> terms_;
};

/// True iff `form` divides p over Q. Substitutes the hyperplane solution
/// for the leading variable of `form` and tests for zero.
bool divides_linear(const Polynomial& form, const Polynomial& p);

struct LinearDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division algorithm by a degree-one polynomial in the lex order.
LinearDivision divide_by_linear(const Polynomial& form, const Polynomial& p);

/// Integral divisibility: p = form * q with q having integer coefficients.
bool divides_linear_integral(const Polynomial& form, const Polynomial& p);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t num_vars);

}  // namespace birkhoff
