#include <gtest/gtest.h>

#include "jkres/errors.hpp"
#include "jkres/laplace.hpp"
#include "support.hpp"

using namespace jkres;
using jkres::testing::q;
using jkres::testing::vec;

namespace {

Polynomial h(int r, int i) { return Polynomial::variable(r, i); }

Chamber positive_dual(const ArrangementPtr& a) {
  Vec y(a->dim());
  for (int i = 0; i < a->dim(); ++i) y[i] = Rational(a->dim() + 1 - i);
  return find_chamber(*a, y, Space::Dual);
}

RationalElement frac(const ArrangementPtr& a, std::vector<std::pair<int, int>> powers) {
  return RationalElement::from_inputs(a, Polynomial::constant(a->dim(), Rational(1)), powers);
}

// h lies in the dual cone of delta iff it pairs nonnegatively with every
// extreme ray of delta's closure.
bool in_dual_cone(const Fan& dual, const Chamber& delta, const Vec& x) {
  const auto& d = dual.chamber(dual.locate(delta.witness));
  for (const auto& ray : chamber_rays(dual, d))
    if (dot(ray, x) < 0) return false;
  return true;
}

std::vector<ArrangementPtr> suite() {
  return {arrangement_a2(), jkres::testing::arrangement_four_lines(), arrangement_a3()};
}

}  // namespace

TEST(Laplace, InverseMinFunction) {
  auto a2 = arrangement_a2();
  const auto pp = inverse_laplace(frac(a2, {{0, 1}, {1, 1}, {2, 1}}), positive_dual(a2));
  EXPECT_EQ(pp.piece_at(vec({1, 2})), h(2, 0));
  EXPECT_EQ(pp.piece_at(vec({2, 1})), h(2, 1));
  EXPECT_TRUE(pp.piece_at(vec({-1, 2})).is_zero());
  EXPECT_TRUE(pp.piece_at(vec({-1, -3})).is_zero());
  EXPECT_TRUE(pp.piece_at(vec({3, -1})).is_zero());
}

TEST(Laplace, InverseIndicatorAndNg) {
  auto a2 = arrangement_a2();
  const auto pp = inverse_laplace(frac(a2, {{0, 1}, {1, 1}}), positive_dual(a2));
  const Polynomial one = Polynomial::constant(2, Rational(1));
  EXPECT_EQ(pp.piece_at(vec({1, 2})), one);
  EXPECT_EQ(pp.piece_at(vec({2, 1})), one);
  EXPECT_TRUE(pp.piece_at(vec({-1, 1})).is_zero());
  for (const auto& p : inverse_laplace(frac(a2, {{0, 1}}), positive_dual(a2)).pieces) EXPECT_TRUE(p.is_zero());
}

TEST(Laplace, ForwardExamples) {
  auto a = make_arrangement({{1, 0}, {0, 1}});
  PiecewisePoly pp{a, primal_fan(*a), positive_dual(a), {}};
  pp.pieces.assign(pp.fan->chambers().size(), Polynomial(2));
  pp.pieces[pp.fan->locate(vec({1, 1}))] = Polynomial::constant(2, Rational(1));
  EXPECT_TRUE(is_zero(forward_laplace(pp) - frac(a, {{0, 1}, {1, 1}})));
  pp.pieces[pp.fan->locate(vec({1, 1}))] = h(2, 0);
  EXPECT_TRUE(is_zero(forward_laplace(pp) - frac(a, {{0, 2}, {1, 1}})));

  auto a2 = arrangement_a2();
  const RationalElement phi = frac(a2, {{0, 1}, {1, 1}, {2, 1}});
  EXPECT_TRUE(is_zero(forward_laplace(inverse_laplace(phi, positive_dual(a2))) - phi));
}

TEST(Laplace, ForwardMatchesPointEvaluation) {
  // Two-dimensional sanity check on a cone with non-unit volume:
  // int_{C(e1, e1+2e2)} e^{-<y,h>} dh = 2 / (y1 (y1 + 2 y2)).
  auto a = make_arrangement({{1, 0}, {1, 2}, {0, 1}});
  PiecewisePoly pp{a, primal_fan(*a), positive_dual(a), {}};
  pp.pieces.assign(pp.fan->chambers().size(), Polynomial(2));
  pp.pieces[pp.fan->locate(vec({2, 1}))] = Polynomial::constant(2, Rational(1));
  const RationalElement f = forward_laplace(pp);
  for (int k = 0; k < 10; ++k) {
    const Vec y = jkres::testing::random_regular_point(*a);
    EXPECT_EQ(evaluate(f, y), 2 / (y[0] * (y[0] + 2 * y[1])));
  }
}

TEST(Laplace, ForwardRejectsForeignCones) {
  auto a = make_arrangement({{1, 0}, {0, 1}});
  auto fan = std::make_shared<const Fan>(2, std::vector<Vec>{vec({1, 0}), vec({0, 1}), vec({1, -1})});
  PiecewisePoly pp{a, fan, positive_dual(a), {}};
  pp.pieces.assign(fan->chambers().size(), Polynomial(2));
  pp.pieces[fan->locate(vec({2, 1}))] = Polynomial::constant(2, Rational(1));
  EXPECT_THROW(forward_laplace(pp), NotRepresentable);
}

TEST(Laplace, RoundTripOverAllDualChambers) {
  jkres::testing::reseed(11);
  for (const auto& a : suite()) {
    const int n = a->dim() == 3 ? 4 : 12;
    for (int k = 0; k < n; ++k) {
      const RationalElement phi = jkres::testing::random_g_element(a, 3, 3);
      const RationalElement g = split(phi).g_element();
      for (const auto& d : chambers(*a, Space::Dual))
        ASSERT_TRUE(is_zero(forward_laplace(inverse_laplace(phi, d)) - g)) << phi.to_string();
    }
  }
}

TEST(Laplace, RoundTripDropsNgPart) {
  jkres::testing::reseed(12);
  auto a = jkres::testing::arrangement_four_lines();
  for (int k = 0; k < 10; ++k) {
    const RationalElement phi = jkres::testing::random_element(a, 3, 2, 2);
    const Chamber d = chambers(*a, Space::Dual)[k % 8];
    EXPECT_TRUE(is_zero(forward_laplace(inverse_laplace(phi, d)) - split(phi).g_element()));
  }
}

TEST(Laplace, DerivationIntertwining) {
  jkres::testing::reseed(13);
  for (const auto& a : suite()) {
    const int r = a->dim();
    for (int k = 0; k < 4; ++k) {
      const RationalElement phi = jkres::testing::random_g_element(a, 2, 2);
      const Chamber d = chambers(*a, Space::Dual)[k];
      const auto base = inverse_laplace(phi, d);
      for (int i = 0; i < r; ++i) {
        const auto moved = inverse_laplace(phi.times(Polynomial::variable(r, i)), d, base.fan);
        for (std::size_t c = 0; c < base.pieces.size(); ++c) EXPECT_EQ(base.pieces[c].derivative(i), moved.pieces[c]);
      }
    }
  }
}

TEST(Laplace, ResidueTable) {
  for (const auto& a : suite()) {
    const auto fan = primal_fan(*a);
    for (const auto& d : chambers(*a, Space::Dual)) {
      for (const auto& b : all_bases(*a)) {
        const auto sigma = a->vectors(b);
        if (sigma_delta(sigma, d).epsilon != 1 || sigma_delta(sigma, d).generators != sigma) continue;
        const auto pp = inverse_laplace(RationalElement::phi(a, b), d, fan);
        const auto cone = closed_cone(sigma);
        for (const auto& g : fan->chambers()) {
          const Rational expected = cone_contains(cone, g.witness) ? 1 / volume(sigma) : Rational(0);
          EXPECT_EQ(pp.pieces[g.id], Polynomial::constant(a->dim(), expected));
        }
      }
    }
  }
}

TEST(Laplace, SupportInDualCone) {
  jkres::testing::reseed(14);
  for (const auto& a : suite()) {
    const RationalElement phi = jkres::testing::random_g_element(a, 3, 2);
    const Fan dual = Fan::dual(*a);
    for (const auto& d : dual.chambers()) {
      const auto pp = inverse_laplace(phi, d);
      for (const auto& g : pp.fan->chambers())
        if (!in_dual_cone(dual, d, g.witness)) EXPECT_TRUE(pp.pieces[g.id].is_zero());
    }
  }
}

TEST(Laplace, JumpExamples) {
  auto a2 = arrangement_a2();
  const Chamber d = positive_dual(a2);
  const auto ind = inverse_laplace(frac(a2, {{0, 1}, {1, 1}}), d);
  const WallJump j = jump(ind, make_wall(a2, {0}));
  ASSERT_EQ(j.values.size(), 2u);
  for (std::size_t c = 0; c < 2; ++c) {
    const bool positive = j.cells->chamber(c).witness[0] > 0;
    EXPECT_EQ(j.values[c], Polynomial::constant(1, Rational(positive ? 1 : 0)));
  }
  const auto mn = inverse_laplace(frac(a2, {{0, 1}, {1, 1}, {2, 1}}), d);
  for (const auto& v : jump(mn, make_wall(a2, {2})).values) EXPECT_TRUE(v.is_zero());
  PiecewisePoly zero = mn;
  for (auto& p : zero.pieces) p = Polynomial(2);
  for (const auto& w : walls(a2))
    for (const auto& v : jump(zero, w).values) EXPECT_TRUE(v.is_zero());
}

TEST(Laplace, JumpFormulaExamples) {
  auto a2 = arrangement_a2();
  const Chamber d = positive_dual(a2);
  EXPECT_TRUE(check_jump_formula(frac(a2, {{0, 1}, {1, 1}}), make_wall(a2, {0}), d));
  const auto cmp = compare_jump(frac(a2, {{0, 1}, {1, 1}, {2, 1}}), make_wall(a2, {2}), d);
  EXPECT_TRUE(cmp.equal);
  for (const auto& v : cmp.rhs) EXPECT_TRUE(v.is_zero());
  const auto ng = compare_jump(frac(a2, {{0, 2}}), make_wall(a2, {0}), d);
  EXPECT_TRUE(ng.equal);
  for (const auto& v : ng.lhs.values) EXPECT_TRUE(v.is_zero());
}

TEST(Laplace, JumpFormulaRejectsIncompatibleWallChamber) {
  auto a2 = arrangement_a2();
  const WallData w = make_wall(a2, {0});
  const Chamber bad = find_chamber(*w.induced, vec({-1}), Space::Dual);
  EXPECT_THROW(check_jump_formula(frac(a2, {{0, 1}, {1, 1}}), w, positive_dual(a2), bad), ChamberMismatch);
}

TEST(Laplace, JumpFormulaOnEveryWall) {
  jkres::testing::reseed(15);
  for (const auto& a : suite()) {
    const auto ws = walls(a);
    const auto ds = chambers(*a, Space::Dual);
    const int n = a->dim() == 3 ? 3 : 8;
    for (int k = 0; k < n; ++k) {
      const RationalElement phi = k % 2 ? jkres::testing::random_element(a, 3, 2, 1)
                                        : jkres::testing::random_g_element(a, 3, 2);
      const Chamber& d = ds[static_cast<std::size_t>(k) % ds.size()];
      for (const auto& w : ws) EXPECT_TRUE(check_jump_formula(phi, w, d)) << phi.to_string();
    }
  }
}

TEST(Laplace, SmoothnessExamples) {
  auto a2 = arrangement_a2();
  EXPECT_EQ(smoothness_class(frac(a2, {{0, 1}, {1, 1}, {2, 1}})), 0);
  EXPECT_EQ(smoothness_class(frac(a2, {{0, 1}, {1, 1}})), -1);
  EXPECT_EQ(smoothness_class(frac(a2, {{0, 2}, {1, 2}, {2, 1}})), 1);
  EXPECT_EQ(smoothness_class(frac(a2, {{0, 3}})), kVanishesIdentically);
}

TEST(Laplace, ContinuityCriterion) {
  jkres::testing::reseed(16);
  auto a2 = arrangement_a2();
  auto four = jkres::testing::arrangement_four_lines();
  std::vector<RationalElement> cases{frac(a2, {{0, 1}, {1, 1}, {2, 1}}), frac(a2, {{0, 1}, {1, 1}}),
                                     frac(four, {{0, 1}, {1, 1}, {2, 1}, {3, 1}})};
  for (int k = 0; k < 10; ++k) cases.push_back(jkres::testing::random_g_element(k % 2 ? a2 : four, 2, 2));
  for (const auto& phi : cases) {
    const auto a = phi.arrangement();
    const bool smooth = smoothness_class(phi) >= 0;
    bool residues_vanish = true, jumps_vanish = true;
    for (const auto& w : walls(a)) {
      residues_vanish = residues_vanish && split(wall_residue(phi, w)).g_part.empty();
      for (const auto& d : chambers(*a, Space::Dual))
        for (const auto& v : jump(inverse_laplace(phi, d), w).values) jumps_vanish = jumps_vanish && v.is_zero();
    }
    EXPECT_EQ(smooth, residues_vanish) << phi.to_string();
    EXPECT_EQ(smooth, jumps_vanish) << phi.to_string();
  }
}
