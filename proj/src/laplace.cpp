#include "jkres/laplace.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

std::shared_ptr<const Fan> primal_fan(const Arrangement& arr) { return std::make_shared<const Fan>(Fan::primal(arr)); }

PiecewisePoly inverse_laplace(const RationalElement& phi, const Chamber& delta) {
  return inverse_laplace(phi, delta, primal_fan(*phi.arrangement()));
}

PiecewisePoly inverse_laplace(const RationalElement& phi, const Chamber& delta, std::shared_ptr<const Fan> fan) {
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  PiecewisePoly pp{phi.arrangement(), fan, delta, std::vector<Polynomial>(fan->chambers().size(), Polynomial(r))};
  const auto basis = nbc_basis(arr);
  const auto c = jk_residue_exp(phi, 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k].is_zero()) continue;
    const FlippedBasis fl = sigma_delta(arr.vectors(basis[k]), delta);
    const Polynomial contribution = c[k] * (Rational(fl.epsilon) / volume(fl.generators));
    const SimplicialCone cone = closed_cone(fl.generators);
    for (const auto& gamma : fan->chambers())
      if (cone_contains(cone, gamma.witness)) pp.pieces[gamma.id] += contribution;
  }
  return pp;
}

RationalElement forward_laplace(const PiecewisePoly& pp) {
  const auto& arr = *pp.arrangement;
  const int r = arr.dim();
  const std::size_t n = arr.size();

  struct Simplex {
    std::vector<Vec> rays;
    const Polynomial* poly;
  };
  std::vector<Simplex> simplices;
  std::vector<Vec> inputs = arr.forms();
  for (const auto& c : pp.fan->chambers()) {
    if (pp.pieces[c.id].is_zero()) continue;
    for (auto& s : triangulate(chamber_rays(*pp.fan, c), pp.fan->normals())) {
      for (const auto& v : s)
        if (std::find(inputs.begin() + n, inputs.end(), v) == inputs.end()) inputs.push_back(v);
      simplices.push_back({std::move(s), &pp.pieces[c.id]});
    }
  }
  const ArrangementPtr ext = make_arrangement(r, inputs);
  auto input_index = [&](const Vec& v) {
    return static_cast<int>(std::find(inputs.begin() + n, inputs.end(), v) - inputs.begin());
  };

  // int_{C(g)} t^m e^{-<y, sum t_k g_k>} |det g| dt = |det g| prod m_k! / <g_k, y>^{m_k+1}
  RationalElement total(ext);
  for (const auto& s : simplices) {
    Matrix m(r, Vec(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m[j][k] = s.rays[k][j];
    const Rational vol = volume(s.rays);
    const Polynomial in_rays = s.poly->linear_change(m, r);
    for (const auto& [e, c] : in_rays.terms()) {
      Rational coef = c * vol;
      std::vector<std::pair<int, int>> powers;
      for (int k = 0; k < r; ++k) {
        coef *= factorial(e[k]);
        powers.emplace_back(input_index(s.rays[k]), e[k] + 1);
      }
      total += RationalElement::from_inputs(ext, Polynomial::constant(r, coef), powers);
    }
  }

  RationalElement out(pp.arrangement);
  const RationalElement normal = normalize(total);
  for (const auto& t : normal.terms()) {
    for (const auto& [i, p] : t.denominator)
      if (static_cast<std::size_t>(i) >= n)
        throw NotRepresentable("piecewise function is not a combination of cones over the arrangement");
    if (t.denominator.empty() || static_cast<int>(t.denominator.size()) < r)
      throw NotRepresentable("piecewise function produced a non-generating term");
    out.add_term(t);
  }
  return out;
}

std::shared_ptr<const Fan> wall_cells(const WallData& w) {
  const int r0 = static_cast<int>(w.frame.size());
  std::vector<Vec> normals;
  for (const auto& n : primal_normals(*w.arrangement)) {
    Vec c(r0);
    for (int k = 0; k < r0; ++k) c[k] = dot(n, w.frame[k]);
    if (is_zero(c)) continue;
    c = primitive(c).vector;
    if (std::find(normals.begin(), normals.end(), c) == normals.end()) normals.push_back(std::move(c));
  }
  return std::make_shared<const Fan>(r0, std::move(normals), Space::Primal);
}

WallJump jump(const PiecewisePoly& pp, const WallData& w) {
  const int r = pp.arrangement->dim();
  const int r0 = r - 1;
  WallJump out{w, wall_cells(w), {}};
  Matrix m(r, Vec(r0));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r0; ++k) m[j][k] = w.frame[k][j];
  for (const auto& cell : out.cells->chambers()) {
    const Vec h = w.from_frame(cell.witness);
    const auto& plus = pp.pieces[pp.fan->locate_limit(h, w.transversal)];
    const auto& minus = pp.pieces[pp.fan->locate_limit(h, negate(w.transversal))];
    out.values.push_back((plus - minus).linear_change(m, r0));
  }
  return out;
}

Chamber default_wall_chamber(const WallData& w, const Chamber& delta) {
  Vec y0;
  for (const auto& f : w.frame) y0.push_back(dot(f, delta.witness));
  return find_chamber(*w.induced, y0, Space::Dual);
}

JumpComparison compare_jump(const RationalElement& phi, const WallData& w, const Chamber& delta,
                            const std::optional<Chamber>& delta0) {
  const Chamber d0 = delta0 ? *delta0 : default_wall_chamber(w, delta);
  const auto& arr = *phi.arrangement();
  for (std::size_t p = 0; p < w.delta0.size(); ++p) {
    const int s = sgn(dot(arr.form(w.delta0[p]), delta.witness));
    const int s0 = sgn(dot(w.induced->input_vectors()[p], d0.witness));
    if (s != s0) throw ChamberMismatch("wall chamber is not compatible with the chosen dual chamber");
  }
  JumpComparison out{jump(inverse_laplace(phi, delta), w), {}, true};
  const PiecewisePoly rhs = inverse_laplace(wall_residue(phi, w), d0, primal_fan(*w.induced));
  for (std::size_t c = 0; c < out.lhs.values.size(); ++c) {
    out.rhs.push_back(rhs.piece_at(out.lhs.cells->chamber(c).witness));
    if (out.rhs.back() != out.lhs.values[c]) out.equal = false;
  }
  return out;
}

bool check_jump_formula(const RationalElement& phi, const WallData& w, const Chamber& delta,
                        const std::optional<Chamber>& delta0) {
  return compare_jump(phi, w, delta, delta0).equal;
}

int smoothness_class(const RationalElement& phi) {
  const int v = vanish_order_at_infinity(split(phi).g_element());
  return v == kVanishesIdentically ? v : v - 2;
}

}  // namespace jkres
