#pragma once

#include <utility>
#include <vector>

#include "jkres/residue.hpp"

namespace jkres {

// A hyperplane V0 of V spanned by arrangement forms.
//
// Coordinates: the frame f_1..f_{r-1} (the first independent forms of
// Delta0, in order) identifies V0 with Q^{r-1}; g is the first scaled unit
// vector with <z0, g> = 1. Points of V* get coordinates w_k = <f_k, z> and
// s = <g, z>. `induced` is Delta0 written in frame coordinates, with input
// i corresponding to delta0[i].
struct WallData {
  ArrangementPtr arrangement;
  std::vector<int> span;    // indices given by the caller
  Vec equation;             // z0, primitive, first nonzero entry positive
  std::vector<int> delta0;  // forms with <z0, alpha> = 0
  std::vector<int> delta1;
  std::vector<Vec> frame;
  Vec transversal;          // g
  ArrangementPtr induced;
  // |1 / det[g, f_1, ..., f_{r-1}]|: converts the contracted volume form to
  // the frame's positive density.
  Rational density;

  // Frame coordinates of a vector of V0.
  Vec to_frame(const Vec& v) const;
  // sum_k x_k f_k
  Vec from_frame(const Vec& x) const;
};

WallData make_wall(const ArrangementPtr& arr, const std::vector<int>& span);

// Every hyperplane spanned by r-1 forms, once, in order of first spanning
// subset (colex).
std::vector<WallData> walls(const ArrangementPtr& arr);

// Residue at infinity along z0, as an element over the induced arrangement
// in w-coordinates, scaled by the frame density.
RationalElement wall_residue(const RationalElement& phi, const WallData& w);

// D_b(h) = <phi^b, Res(e^{-<h,z>} phi)> for every b with D_b != 0.
std::vector<std::pair<BasisTuple, Polynomial>> separate_variables(const RationalElement& phi);

// Trace on S_Delta of psi -> Res(phi * psi(y - .)).
Rational cauchy_trace(const RationalElement& phi, const Vec& y);

}  // namespace jkres
