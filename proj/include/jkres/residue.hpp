#pragma once

#include <vector>

#include "jkres/nbc.hpp"

namespace jkres {

struct GTerm {
  Rational coefficient;
  BasisTuple basis;            // sorted form indices
  std::vector<int> exponents;  // one per basis element, all >= 1
};

struct SplitForm {
  ArrangementPtr arrangement;
  std::vector<GTerm> g_part;
  std::vector<FractionTerm> ng_part;

  RationalElement g_element() const;
  RationalElement ng_element() const;
};

// Every support independent; basis-supported terms carry constant numerators
// and are written canonically in the nbc supports.
RationalElement normalize(const RationalElement& phi);
SplitForm split(const RationalElement& phi);

// Coordinates over nbc_basis of the S_Delta component of phi.
Vec jk_residue(const RationalElement& phi);

// Coordinates (polynomials in h_1..h_r) of Res(e^{sign <h,z>} phi).
std::vector<Polynomial> jk_residue_exp(const RationalElement& phi, int sign);

// Differential operators D_b with Princ(phi) = sum_b D_b(d/dz) phi_b,
// computed in closed form from the reduced G part (independent of
// jk_residue_exp).
std::vector<Polynomial> principal_operators(const RationalElement& phi);

// D(d/dz) applied to phi_b, expanded into pure fractions over b.
RationalElement apply_operator(const ArrangementPtr& arr, const Polynomial& d, const BasisTuple& b);

}  // namespace jkres
