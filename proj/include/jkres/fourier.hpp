#pragma once

#include <vector>

#include "jkres/geometry.hpp"
#include "jkres/laplace.hpp"

namespace jkres {

struct ConeTerm {
  Polynomial coefficient;  // in h_1..h_r
  SimplicialCone cone;
};

// Finite combination of (semi-open) simplicial cone indicators with
// polynomial coefficients.
struct ConeFunction {
  int dim = 0;
  std::vector<ConeTerm> terms;
};

ConeFunction a_gamma(const std::vector<Vec>& sigma, const Chamber& gamma);

// Rewrites every generator to be positive on delta's witness using
// [C(-a)] = -[C(a)^0] modulo functions constant along a line.
ConeFunction representative_in_dual_cone(const ConeFunction& f, const Chamber& delta);

ConeFunction stratified_fourier(const RationalElement& phi, const Chamber& gamma, const Chamber& delta);

Rational evaluate_total(const ConeFunction& f, const Vec& h);

}  // namespace jkres
