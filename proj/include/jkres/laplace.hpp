#pragma once

#include <memory>
#include <vector>

#include "jkres/geometry.hpp"
#include "jkres/wall.hpp"

namespace jkres {

// Locally polynomial function on the regular set of V: one polynomial in
// h_1..h_r per primal chamber, zero outside the dual cone of delta.
struct PiecewisePoly {
  ArrangementPtr arrangement;
  std::shared_ptr<const Fan> fan;  // primal chambers of the arrangement
  Chamber delta;
  std::vector<Polynomial> pieces;  // indexed by chamber id

  const Polynomial& piece_at(const Vec& h) const { return pieces[fan->locate(h)]; }
};

std::shared_ptr<const Fan> primal_fan(const Arrangement& arr);

// Chamber-wise Jeffrey-Kirwan formula.
PiecewisePoly inverse_laplace(const RationalElement& phi, const Chamber& delta);
PiecewisePoly inverse_laplace(const RationalElement& phi, const Chamber& delta, std::shared_ptr<const Fan> fan);

// Exact Laplace transform: each chamber closure is triangulated and every
// monomial integrated in closed form over its simplicial cones. Throws
// NotRepresentable if the result is not an element over the arrangement.
RationalElement forward_laplace(const PiecewisePoly& pp);

// Jump of a piecewise polynomial across a wall, cell by cell. Cells are the
// chambers of V0 cut by every other wall; polynomials are in the frame
// coordinates of the wall. "+" is the side where <z0, h> > 0.
struct WallJump {
  WallData wall;
  std::shared_ptr<const Fan> cells;  // fan in frame coordinates
  std::vector<Polynomial> values;    // f+ - f-, per cell
};

std::shared_ptr<const Fan> wall_cells(const WallData& w);
WallJump jump(const PiecewisePoly& pp, const WallData& w);

// Dual chamber of the induced arrangement containing the restriction of
// delta's witness.
Chamber default_wall_chamber(const WallData& w, const Chamber& delta);

struct JumpComparison {
  WallJump lhs;
  std::vector<Polynomial> rhs;  // inverse Laplace of the wall residue, per cell
  bool equal;
};

JumpComparison compare_jump(const RationalElement& phi, const WallData& w, const Chamber& delta,
                            const std::optional<Chamber>& delta0 = std::nullopt);
bool check_jump_formula(const RationalElement& phi, const WallData& w, const Chamber& delta,
                        const std::optional<Chamber>& delta0 = std::nullopt);

// vanish order of the G part minus 2; kVanishesIdentically for G part 0.
int smoothness_class(const RationalElement& phi);

}  // namespace jkres
