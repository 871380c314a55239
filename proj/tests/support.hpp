#pragma once

#include <random>
#include <vector>

#include "jkres/rational_element.hpp"

namespace jkres::testing {

Rational q(long num, long den = 1);
Vec vec(std::initializer_list<long> xs);

// Deterministic generator shared by the randomized suites.
std::mt19937_64& rng();
void reseed(std::uint64_t seed);
long uniform(long lo, long hi);

// Rational point avoiding every form of the arrangement.
Vec random_regular_point(const Arrangement& arr, long bound = 9);

Polynomial random_polynomial(int nvars, int max_degree, int max_terms);

// Random element with up to `nterms` terms, denominators over arbitrary
// subsets of forms with exponents <= max_exp.
RationalElement random_element(const ArrangementPtr& arr, int nterms, int max_exp, int max_num_degree);

// Random element of G_Delta: sum of c / prod_{b} alpha^{n} over bases b
// with total exponent <= r + extra.
RationalElement random_g_element(const ArrangementPtr& arr, int nterms, int extra);

// Generic 4-line arrangement of rank 2.
ArrangementPtr arrangement_four_lines();

}  // namespace jkres::testing
