#pragma once

#include <vector>

#include "jkres/rational_element.hpp"

namespace jkres {

// Index tuple into Arrangement::forms(). Unordered bases are kept sorted.
using BasisTuple = std::vector<int>;

// All bases (sorted tuples), colex order.
std::vector<BasisTuple> all_bases(const Arrangement& arr);

// The no-broken-circuit bases for the stored order, colex order.
std::vector<BasisTuple> nbc_basis(const Arrangement& arr);

// phi_sigma - sum_beta c_beta phi_{sigma + alpha - beta}, where
// alpha = sum_beta c_beta beta.
RationalElement os_relation(const ArrangementPtr& arr, const BasisTuple& sigma, int alpha);

// Res_{b_1} ... Res_{b_r} of 1/prod sigma, for ordered bases b and sigma
// given as vectors. Innermost residue is along b_r.
Rational iterated_residue_of_phi(const std::vector<Vec>& b, const std::vector<Vec>& sigma);

// Iterated residue along the ordered tuple b (form indices) applied to the
// S_Delta part of phi.
Rational iterated_residue(const BasisTuple& b, const RationalElement& phi);

// Coordinates over nbc_basis via the dual pairing.
Vec express_in_B(const RationalElement& phi);

// Coordinates of phi_sigma over nbc_basis.
Vec phi_coordinates(const Arrangement& arr, const std::vector<BasisTuple>& basis, const BasisTuple& sigma);

}  // namespace jkres
