#include "jkres/residue.hpp"

#include "jkres/errors.hpp"

namespace jkres {

namespace {

std::vector<int> keys_of(const DenomMap& d) {
  std::vector<int> s;
  for (const auto& [i, n] : d) s.push_back(i);
  return s;
}

// c / prod alpha_i^{n_i} = c * prod (-1)^{n_i-1}/(n_i-1)! * w_i(d/dz)^{n_i-1}
// phi_sigma, with (w_i) dual to (alpha_i); then phi_sigma = sum_b lambda_b
// phi_b with lambda_b the iterated residue along b.
std::vector<Polynomial> operators_from_reduced(const Arrangement& arr, const std::vector<BasisTuple>& basis,
                                               const ReducedForm& reduced) {
  const int r = arr.dim();
  std::vector<Polynomial> d(basis.size(), Polynomial(r));
  std::vector<std::vector<Vec>> basis_vectors;
  for (const auto& b : basis) basis_vectors.push_back(arr.vectors(b));
  for (const auto& [key, c] : reduced.g_terms) {
    const auto sigma = keys_of(key);
    const auto sv = arr.vectors(sigma);
    const Matrix inv = inverse(sv);
    Polynomial op = Polynomial::constant(r, c);
    for (int i = 0; i < r; ++i) {
      const int n = key.at(sigma[i]);
      if (n == 1) continue;
      Vec w(r);
      for (int k = 0; k < r; ++k) w[k] = inv[k][i];
      Rational f = (n % 2 == 1 ? 1 : -1) / factorial(n - 1);
      op = op * Polynomial::linear_form(w).pow(n - 1) * f;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational lambda = iterated_residue_of_phi(basis_vectors[k], sv);
      if (lambda != 0) d[k] += op * lambda;
    }
  }
  return d;
}

}  // namespace

RationalElement SplitForm::g_element() const {
  RationalElement e(arrangement);
  const int r = arrangement->dim();
  for (const auto& g : g_part) {
    DenomMap d;
    for (std::size_t i = 0; i < g.basis.size(); ++i) d[g.basis[i]] = g.exponents[i];
    e.add_term({Polynomial::constant(r, g.coefficient), std::move(d)});
  }
  return e;
}

RationalElement SplitForm::ng_element() const { return RationalElement(arrangement, ng_part); }

RationalElement apply_operator(const ArrangementPtr& arr, const Polynomial& d, const BasisTuple& b) {
  const int r = arr->dim();
  Matrix m(r, Vec(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) m[j][k] = arr->form(b[k])[j];
  const Polynomial in_t = d.linear_change(m, r);
  RationalElement out(arr);
  for (const auto& [e, c] : in_t.terms()) {
    Rational coef = c;
    DenomMap den;
    for (int k = 0; k < r; ++k) {
      coef *= factorial(e[k]);
      if (e[k] % 2) coef = -coef;
      den[b[k]] = e[k] + 1;
    }
    out.add_term({Polynomial::constant(r, coef), std::move(den)});
  }
  return out;
}

std::vector<Polynomial> principal_operators(const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  return operators_from_reduced(arr, nbc_basis(arr), reduce(phi));
}

RationalElement normalize(const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  const auto basis = nbc_basis(arr);
  const ReducedForm reduced = reduce(phi);
  const auto ops = operators_from_reduced(arr, basis, reduced);
  RationalElement out(phi.arrangement());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!ops[k].is_zero()) out += apply_operator(phi.arrangement(), ops[k], basis[k]);
  }
  for (const auto& [key, p] : reduced.ng_terms) out.add_term({p, key});
  return out;
}

SplitForm split(const RationalElement& phi) {
  const int r = phi.dim();
  SplitForm s{phi.arrangement(), {}, {}};
  const RationalElement normal = normalize(phi);
  for (const auto& t : normal.terms()) {
    if (static_cast<int>(t.denominator.size()) == r) {
      GTerm g{t.numerator.constant_term(), {}, {}};
      for (const auto& [i, n] : t.denominator) {
        g.basis.push_back(i);
        g.exponents.push_back(n);
      }
      s.g_part.push_back(std::move(g));
    } else {
      s.ng_part.push_back(t);
    }
  }
  return s;
}

Vec jk_residue(const RationalElement& phi) { return express_in_B(phi); }

std::vector<Polynomial> jk_residue_exp(const RationalElement& phi, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  const std::size_t nb = nbc_basis(arr).size();
  std::vector<Polynomial> out(nb, Polynomial(r));
  for (int d : occurring_degrees(phi)) {
    if (d > -r) continue;
    const int k = -r - d;
    const RationalElement piece = graded_component(phi, d);
    for (const auto& m : compositions(r, k)) {
      Rational coef = (k % 2 == 1 && sign < 0) ? -1 : 1;
      for (int x : m) coef /= factorial(x);
      const Vec res = jk_residue(piece.times(Polynomial::monomial(m, Rational(1))));
      for (std::size_t b = 0; b < nb; ++b)
        if (res[b] != 0) out[b] += Polynomial::monomial(m, coef * res[b]);
    }
  }
  return out;
}

}  // namespace jkres
