#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace jkres {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
// Row-major; rows()[i] is row i.
using Matrix = std::vector<Vec>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

// Integer vector with gcd 1 and first nonzero entry positive, together with
// the scalar s such that v = s * primitive(v).
struct PrimitiveForm {
  Vec vector;
  Rational scalar;
};
PrimitiveForm primitive(const Vec& v);

// If a = t * b for some nonzero t, returns t.
std::optional<Rational> proportionality(const Vec& a, const Vec& b);

std::size_t rank(const std::vector<Vec>& vectors);
bool independent(const std::vector<Vec>& vectors);
Rational determinant(Matrix m);

// Coordinates x with v = sum_i x_i * basis[i]; nullopt when v is outside
// the span. basis must be linearly independent.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v);

// Inverse of a square nonsingular matrix; throws Degenerate otherwise.
Matrix inverse(const Matrix& m);
Matrix transpose(const Matrix& m);
Vec apply(const Matrix& m, const Vec& v);

// Basis of { x : <row, x> = 0 for every row }, in reduced echelon order.
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t n);

// Completes an independent family to a basis of Q^n with standard unit
// vectors, taken in increasing index order. Returns the added vectors.
std::vector<Vec> complete_with_units(const std::vector<Vec>& family, std::size_t n);

std::string to_string(const Rational& q);
std::string to_string(const Vec& v);
Rational parse_rational(const std::string& text);
// Comma separated list of rationals, e.g. "1,-1/2,3".
Vec parse_vec(const std::string& text);

}  // namespace jkres
