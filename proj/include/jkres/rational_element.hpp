#pragma once

#include <climits>
#include <map>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/polynomial.hpp"

namespace jkres {

// form index -> positive exponent
using DenomMap = std::map<int, int>;

struct FractionTerm {
  Polynomial numerator;
  DenomMap denominator;

  std::vector<int> support() const;
  int denominator_degree() const;
};

// An element of Delta^{-1} S(V): a formal sum of polynomial numerators over
// products of powers of arrangement forms. Polynomials are in z_1..z_r.
class RationalElement {
 public:
  explicit RationalElement(ArrangementPtr arr) : arr_(std::move(arr)) {}
  RationalElement(ArrangementPtr arr, std::vector<FractionTerm> terms);

  // 1 / prod_{i in sigma} alpha_i (forms).
  static RationalElement phi(ArrangementPtr arr, const std::vector<int>& sigma);
  static RationalElement fraction(ArrangementPtr arr, Polynomial numerator, DenomMap denominator);
  static RationalElement polynomial(ArrangementPtr arr, Polynomial p);
  // Denominator given on input vector indices; scalars of merged inputs are
  // folded into the numerator.
  static RationalElement from_inputs(ArrangementPtr arr, Polynomial numerator,
                                     const std::vector<std::pair<int, int>>& input_powers);

  const ArrangementPtr& arrangement() const { return arr_; }
  int dim() const { return arr_->dim(); }
  const std::vector<FractionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(FractionTerm t);
  RationalElement& operator+=(const RationalElement& o);
  RationalElement& operator-=(const RationalElement& o);
  RationalElement& operator*=(const Rational& c);
  friend RationalElement operator+(RationalElement a, const RationalElement& b) { return a += b; }
  friend RationalElement operator-(RationalElement a, const RationalElement& b) { return a -= b; }
  friend RationalElement operator*(RationalElement a, const Rational& c) { return a *= c; }
  friend RationalElement operator*(const Rational& c, RationalElement a) { return a *= c; }
  friend RationalElement operator*(const RationalElement& a, const RationalElement& b);
  RationalElement times(const Polynomial& p) const;

  std::string to_string() const;

 private:
  ArrangementPtr arr_;
  std::vector<FractionTerm> terms_;
};

Rational evaluate(const RationalElement& phi, const Vec& y);

// Exact zero test: reduce to a common denominator and compare numerators.
bool is_zero(const RationalElement& phi);
inline bool equal(const RationalElement& a, const RationalElement& b) { return is_zero(a - b); }

// Numerator over prod alpha^{N_alpha} with N_alpha the maximal exponent.
FractionTerm common_denominator(const RationalElement& phi);

RationalElement graded_component(const RationalElement& phi, int d);
std::vector<int> occurring_degrees(const RationalElement& phi);

RationalElement derivative(const RationalElement& phi, const Vec& v);

inline constexpr int kVanishesIdentically = INT_MAX;
int vanish_order_at_infinity(const RationalElement& phi);

// Output of reduce: every support independent.
struct ReducedForm {
  // Basis supports: constant numerators.
  std::map<DenomMap, Rational> g_terms;
  // Non-generating supports: numerators only involve coordinates
  // complementary to the support.
  std::map<DenomMap, Polynomial> ng_terms;
};

ReducedForm reduce(const RationalElement& phi);

}  // namespace jkres
