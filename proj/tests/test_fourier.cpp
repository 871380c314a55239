#include <gtest/gtest.h>

#include "jkres/fourier.hpp"
#include "support.hpp"

using namespace jkres;
using jkres::testing::q;
using jkres::testing::vec;

namespace {

Vec small_point(int dim, long bound) {
  Vec h;
  for (int i = 0; i < dim; ++i) h.push_back(q(jkres::testing::uniform(-bound, bound), jkres::testing::uniform(1, 2)));
  return h;
}

// Integer points of a box plus random rationals: hits the origin and every
// wall of small arrangements.
std::vector<Vec> test_points(int dim, std::size_t extra) {
  std::vector<Vec> pts;
  const long b = dim == 3 ? 2 : 3;
  Vec x(dim, Rational(-b));
  for (;;) {
    pts.push_back(x);
    int i = 0;
    while (i < dim && x[i] == b) x[i++] = -b;
    if (i == dim) break;
    x[i] += 1;
  }
  while (pts.size() < extra) pts.push_back(small_point(dim, 6));
  return pts;
}

RationalElement frac(const ArrangementPtr& a, std::vector<std::pair<int, int>> powers) {
  return RationalElement::from_inputs(a, Polynomial::constant(a->dim(), Rational(1)), powers);
}

Chamber positive_dual(const ArrangementPtr& a) {
  Vec y(a->dim());
  for (int i = 0; i < a->dim(); ++i) y[i] = Rational(a->dim() + 1 - i);
  return find_chamber(*a, y, Space::Dual);
}

ConeFunction combine(std::initializer_list<std::pair<int, ConeFunction>> parts) {
  ConeFunction out{parts.begin()->second.dim, {}};
  for (const auto& [c, f] : parts)
    for (auto t : f.terms) {
      t.coefficient *= Rational(c);
      out.terms.push_back(std::move(t));
    }
  return out;
}

bool inside_dual(const std::vector<Vec>& delta_rays, const Vec& h) {
  for (const auto& v : delta_rays)
    if (dot(v, h) < 0) return false;
  return true;
}

}  // namespace

TEST(Fourier, AGammaExamples) {
  auto a2 = arrangement_a2();
  const std::vector<Vec> sigma{vec({1, 0}), vec({0, 1})};
  auto f = a_gamma(sigma, find_chamber(*a2, vec({2, 1}), Space::Primal));
  ASSERT_EQ(f.terms.size(), 1u);
  EXPECT_EQ(f.terms[0].cone.strict, (std::vector<bool>{false, false}));
  EXPECT_EQ(evaluate_total(f, vec({0, 0})), 1);
  f = a_gamma(sigma, find_chamber(*a2, vec({-1, 2}), Space::Primal));
  EXPECT_EQ(evaluate_total(f, vec({1, 0})), 1);
  EXPECT_EQ(evaluate_total(f, vec({0, 1})), 0);
  EXPECT_EQ(evaluate_total(f, vec({0, 0})), 0);
}

TEST(Fourier, EvaluateTotalExamples) {
  ConeFunction f{2, {{Polynomial::constant(2, Rational(1)), closed_cone({vec({1, 0}), vec({0, 1})})}}};
  EXPECT_EQ(evaluate_total(f, vec({0, 0})), 1);
  ConeFunction g{2, {{Polynomial::constant(2, Rational(-1)), {{vec({1, 0}), vec({0, 1})}, {true, false}}}}};
  EXPECT_EQ(evaluate_total(g, vec({0, 1})), 0);
  EXPECT_EQ(evaluate_total(g, vec({1, 1})), -1);
}

TEST(Fourier, RepresentativeExamples) {
  auto a2 = arrangement_a2();
  const Chamber d = positive_dual(a2);
  // [C(-e1)] -> -[C(e1)^0] on the line.
  auto one_dim = make_arrangement({{1}});
  ConeFunction f{1, {{Polynomial::constant(1, Rational(1)), closed_cone({vec({-1})})}}};
  auto rep = representative_in_dual_cone(f, find_chamber(*one_dim, vec({1}), Space::Dual));
  ASSERT_EQ(rep.terms.size(), 1u);
  EXPECT_EQ(rep.terms[0].cone.generators[0], vec({1}));
  EXPECT_EQ(rep.terms[0].cone.strict, std::vector<bool>{true});
  EXPECT_EQ(rep.terms[0].coefficient, Polynomial::constant(1, Rational(-1)));

  ConeFunction g{2, {{Polynomial::constant(2, Rational(1)), closed_cone({vec({1, 0}), vec({0, -1})})}}};
  rep = representative_in_dual_cone(g, d);
  EXPECT_EQ(rep.terms[0].cone.generators, (std::vector<Vec>{vec({1, 0}), vec({0, 1})}));
  EXPECT_EQ(rep.terms[0].cone.strict, (std::vector<bool>{false, true}));
  EXPECT_EQ(rep.terms[0].coefficient, Polynomial::constant(2, Rational(-1)));
  // The two differ by the indicator of {h1 >= 0}, constant along e2.
  for (int k = 0; k < 200; ++k) {
    const Vec h = small_point(2, 5);
    const Rational diff = evaluate_total(g, h) - evaluate_total(rep, h);
    EXPECT_EQ(diff, h[0] >= 0 ? 1 : 0);
  }

  ConeFunction already{2, {{Polynomial::constant(2, Rational(2)), closed_cone({vec({1, 0}), vec({1, 1})})}}};
  rep = representative_in_dual_cone(already, d);
  EXPECT_EQ(rep.terms[0].cone.generators, already.terms[0].cone.generators);
  EXPECT_EQ(rep.terms[0].cone.strict, already.terms[0].cone.strict);
  EXPECT_EQ(rep.terms[0].coefficient, already.terms[0].coefficient);
}

TEST(Fourier, RelationsHoldModuloLines) {
  // For a3 = a a1 + b a2: |det| phi relation reads
  // A(a1,a2) = sgn(a) A(a3,a2) + sgn(b) A(a1,a3).
  auto a2 = arrangement_a2();
  const std::vector<Vec> closure{vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({-1, 0}), vec({0, -1}), vec({-1, -1})};
  const auto pts = test_points(2, 500);
  const auto deltas = chambers(*a2, Space::Dual);
  int checked = 0;
  for (const auto& g : chambers(*a2, Space::Primal)) {
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t j = 0; j < closure.size(); ++j) {
        for (std::size_t k = 0; k < closure.size(); ++k) {
          const Vec &a1 = closure[i], &a2v = closure[j], &a3 = closure[k];
          if (rank({a1, a2v}) != 2 || rank({a1, a3}) != 2 || rank({a3, a2v}) != 2) continue;
          const Vec c = *coordinates({a1, a2v}, a3);
          const ConeFunction rel = combine({{1, a_gamma({a1, a2v}, g)},
                                            {-sgn(c[0]), a_gamma({a3, a2v}, g)},
                                            {-sgn(c[1]), a_gamma({a1, a3}, g)}});
          const Chamber& d = deltas[(i + j + k) % deltas.size()];
          const ConeFunction rep = representative_in_dual_cone(rel, d);
          for (const auto& h : pts) ASSERT_EQ(evaluate_total(rep, h), 0) << to_string(h);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Fourier, RepresentativeIsUnique) {
  auto a2 = arrangement_a2();
  const auto pts = test_points(2, 300);
  for (const auto& d : chambers(*a2, Space::Dual)) {
    const Fan dual = Fan::dual(*a2);
    const auto rays = chamber_rays(dual, dual.chamber(dual.locate(d.witness)));
    for (const auto& g : chambers(*a2, Space::Primal)) {
      // The same function written twice: one cone and its subdivision.
      const std::vector<Vec> whole{vec({-1, 0}), vec({1, 1})};
      const ConeFunction f1 = a_gamma(whole, g);
      const ConeFunction f2 =
          combine({{1, a_gamma({vec({-1, 0}), vec({0, 1})}, g)}, {1, a_gamma({vec({0, 1}), vec({1, 1})}, g)}});
      for (const auto& h : pts) ASSERT_EQ(evaluate_total(f1, h), evaluate_total(f2, h));
      const auto r1 = representative_in_dual_cone(f1, d);
      const auto r2 = representative_in_dual_cone(f2, d);
      for (const auto& h : pts) {
        if (!inside_dual(rays, h)) continue;
        EXPECT_EQ(evaluate_total(r1, h), evaluate_total(r2, h)) << to_string(h);
      }
    }
  }
}

TEST(Fourier, StratifiedExamples) {
  auto a2 = arrangement_a2();
  const Chamber d = positive_dual(a2);
  const auto f = stratified_fourier(frac(a2, {{0, 1}, {1, 1}}), find_chamber(*a2, vec({2, 1}), Space::Primal), d);
  for (const auto& h : test_points(2, 100))
    EXPECT_EQ(evaluate_total(f, h), (h[0] >= 0 && h[1] >= 0) ? 1 : 0) << to_string(h);

  const Chamber gamma = find_chamber(*a2, vec({3, 1}), Space::Primal);
  const auto mn = stratified_fourier(frac(a2, {{0, 1}, {1, 1}, {2, 1}}), gamma, d);
  EXPECT_EQ(evaluate_total(mn, vec({1, 1})), 1);

  EXPECT_TRUE(stratified_fourier(frac(a2, {{0, 1}}), gamma, d).terms.empty());
}

TEST(Fourier, LimitConsistency) {
  jkres::testing::reseed(21);
  for (const auto& a : {arrangement_a2(), jkres::testing::arrangement_four_lines(), arrangement_a3()}) {
    const auto fan = primal_fan(*a);
    const auto deltas = chambers(*a, Space::Dual);
    const auto pts = test_points(a->dim(), a->dim() == 3 ? 130 : 100);
    std::vector<RationalElement> suite{jkres::testing::random_g_element(a, 3, 2),
                                       jkres::testing::random_element(a, 2, 2, 1)};
    for (const auto& phi : suite) {
      for (std::size_t di = 0; di < deltas.size(); di += a->dim() == 3 ? 5 : 1) {
        const auto pp = inverse_laplace(phi, deltas[di], fan);
        for (const auto& g : fan->chambers()) {
          const auto sf = stratified_fourier(phi, g, deltas[di]);
          for (const auto& h : pts) {
            const Rational limit = pp.pieces[fan->locate_limit(h, g.witness)].evaluate(h);
            ASSERT_EQ(evaluate_total(sf, h), limit) << to_string(h) << " " << phi.to_string();
          }
        }
      }
    }
  }
}

TEST(Fourier, ExtendsInverseLaplace) {
  jkres::testing::reseed(22);
  auto a = jkres::testing::arrangement_four_lines();
  const auto fan = primal_fan(*a);
  const RationalElement phi = jkres::testing::random_g_element(a, 4, 3);
  for (const auto& d : chambers(*a, Space::Dual)) {
    const auto pp = inverse_laplace(phi, d, fan);
    for (const auto& g : fan->chambers()) {
      const auto sf = stratified_fourier(phi, g, d);
      for (int k = 0; k < 40; ++k) {
        const Vec h = small_point(2, 7);
        if (!fan->sign_vector(h)) continue;
        EXPECT_EQ(evaluate_total(sf, h), pp.piece_at(h).evaluate(h));
      }
    }
  }
}

TEST(Fourier, ContinuousCaseIndependentOfGamma) {
  auto a2 = arrangement_a2();
  auto four = jkres::testing::arrangement_four_lines();
  const std::vector<RationalElement> smooth{frac(a2, {{0, 1}, {1, 1}, {2, 1}}), frac(a2, {{0, 2}, {1, 2}, {2, 1}}),
                                            frac(four, {{0, 1}, {1, 1}, {2, 1}, {3, 1}})};
  for (const auto& phi : smooth) {
    ASSERT_GE(smoothness_class(phi), 0);
    const auto a = phi.arrangement();
    const auto pts = test_points(2, 150);
    for (const auto& d : chambers(*a, Space::Dual)) {
      const auto gammas = chambers(*a, Space::Primal);
      const auto ref = stratified_fourier(phi, gammas[0], d);
      for (std::size_t i = 1; i < gammas.size(); ++i) {
        const auto sf = stratified_fourier(phi, gammas[i], d);
        for (const auto& h : pts) ASSERT_EQ(evaluate_total(sf, h), evaluate_total(ref, h)) << to_string(h);
      }
    }
  }
}

TEST(Fourier, DiscontinuousCaseDependsOnGamma) {
  auto a2 = arrangement_a2();
  const Chamber d = positive_dual(a2);
  const RationalElement phi = frac(a2, {{0, 1}, {1, 1}});
  // On the positive h1-axis the indicator is 1 from above and 0 from below.
  const auto above = stratified_fourier(phi, find_chamber(*a2, vec({2, 1}), Space::Primal), d);
  const auto below = stratified_fourier(phi, find_chamber(*a2, vec({1, -3}), Space::Primal), d);
  EXPECT_EQ(evaluate_total(above, vec({1, 0})), 1);
  EXPECT_EQ(evaluate_total(below, vec({1, 0})), 0);
}
