#include "jkres/fourier.hpp"

namespace jkres {

ConeFunction a_gamma(const std::vector<Vec>& sigma, const Chamber& gamma) {
  const int r = static_cast<int>(gamma.witness.size());
  return {r, {{Polynomial::constant(r, Rational(1)), cprime(sigma, gamma)}}};
}

ConeFunction representative_in_dual_cone(const ConeFunction& f, const Chamber& delta) {
  ConeFunction out{f.dim, {}};
  for (const auto& t : f.terms) {
    ConeTerm u = t;
    for (std::size_t i = 0; i < u.cone.generators.size(); ++i) {
      if (sgn(dot(u.cone.generators[i], delta.witness)) >= 0) continue;
      u.cone.generators[i] = negate(u.cone.generators[i]);
      u.cone.strict[i] = !u.cone.strict[i];
      u.coefficient = -u.coefficient;
    }
    out.terms.push_back(std::move(u));
  }
  return out;
}

ConeFunction stratified_fourier(const RationalElement& phi, const Chamber& gamma, const Chamber& delta) {
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  ConeFunction out{r, {}};
  const auto basis = nbc_basis(arr);
  const auto c = jk_residue_exp(phi, 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k].is_zero()) continue;
    const FlippedBasis fl = sigma_delta(arr.vectors(basis[k]), delta);
    out.terms.push_back({c[k] * (Rational(fl.epsilon) / volume(fl.generators)), cprime(fl.generators, gamma)});
  }
  return out;
}

Rational evaluate_total(const ConeFunction& f, const Vec& h) {
  Rational total = 0;
  for (const auto& t : f.terms)
    if (cone_contains(t.cone, h)) total += t.coefficient.evaluate(h);
  return total;
}

}  // namespace jkres
