#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "jkres/linalg.hpp"

namespace jkres {

using Exponents = std::vector<int>;

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

// Sparse multivariate polynomial with rational coefficients. Zero
// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(Exponents e, const Rational& c);
  // sum_i coeffs[i] * x_i
  static Polynomial linear_form(const Vec& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // kMinusInfinity for the zero polynomial.
  int degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int k) const;
  Polynomial homogeneous_part(int d) const;
  std::vector<int> occurring_degrees() const;
  Polynomial derivative(int var) const;
  Polynomial directional_derivative(const Vec& v) const;
  Rational evaluate(const Vec& x) const;

  // Composition: x_i -> images[i]. All images have target_nvars variables.
  Polynomial compose(const std::vector<Polynomial>& images, int target_nvars) const;
  // x_i -> sum_j m[i][j] y_j, with m of size nvars x target_nvars.
  Polynomial linear_change(const Matrix& m, int target_nvars) const;

  // Maximal total degree in the listed variables (others treated as
  // constants); kMinusInfinity for zero.
  int degree_in(const std::vector<int>& vars) const;

  // Graded lexicographic, highest first, e.g. "h1^2 - 1/2*h1*h2 + 3".
  std::string to_string(const std::string& var_prefix = "x") const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

// Multinomial enumeration: all exponent vectors of length n and total k.
// Graded lexicographic order, higher total degree first.
bool grlex_greater(const Exponents& a, const Exponents& b);

std::vector<Exponents> compositions(int n, int k);
Rational factorial(int n);

}  // namespace jkres
