#include "jkres/wall.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

Vec WallData::to_frame(const Vec& v) const {
  auto x = coordinates(frame, v);
  if (!x) throw InvalidArgument("vector " + to_string(v) + " is not in the wall");
  return *x;
}

Vec WallData::from_frame(const Vec& x) const {
  Vec v = zero_vec(arrangement->dim());
  for (std::size_t k = 0; k < frame.size(); ++k) v = add(v, scale(frame[k], x[k]));
  return v;
}

WallData make_wall(const ArrangementPtr& arr, const std::vector<int>& span) {
  const int r = arr->dim();
  const auto sv = arr->vectors(span);
  if (static_cast<int>(rank(sv)) != r - 1) throw InvalidArgument("wall span must have rank r-1");
  WallData w;
  w.arrangement = arr;
  w.span = span;
  w.equation = primitive(kernel(sv, r).at(0)).vector;
  for (int i = 0; i < static_cast<int>(arr->size()); ++i) {
    if (dot(w.equation, arr->form(i)) == 0) {
      w.delta0.push_back(i);
      auto trial = w.frame;
      trial.push_back(arr->form(i));
      if (independent(trial)) w.frame = std::move(trial);
    } else {
      w.delta1.push_back(i);
    }
  }
  int i = 0;
  while (w.equation[i] == 0) ++i;
  w.transversal = scale(unit_vec(r, i), 1 / w.equation[i]);
  Matrix p(r, Vec(r));
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j + 1 < r; ++j) p[k][j] = w.frame[j][k];
    p[k][r - 1] = w.transversal[k];
  }
  w.density = abs(1 / determinant(p));
  std::vector<Vec> induced;
  for (int a : w.delta0) induced.push_back(w.to_frame(arr->form(a)));
  w.induced = make_arrangement(r - 1, std::move(induced));
  return w;
}

std::vector<WallData> walls(const ArrangementPtr& arr) {
  const int r = arr->dim();
  const int n = static_cast<int>(arr->size());
  std::vector<std::vector<int>> subsets;
  if (r == 0) return {};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r - 1) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  std::vector<WallData> out;
  std::vector<Vec> seen;
  for (const auto& s : subsets) {
    const auto sv = arr->vectors(s);
    if (static_cast<int>(rank(sv)) != r - 1) continue;
    Vec z0 = primitive(kernel(sv, r).at(0)).vector;
    if (std::find(seen.begin(), seen.end(), z0) != seen.end()) continue;
    seen.push_back(z0);
    out.push_back(make_wall(arr, s));
  }
  return out;
}

RationalElement wall_residue(const RationalElement& phi, const WallData& w) {
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  const int r0 = r - 1;

  // z = sum_k w_k f*_k + s z0, with (f*, z0) dual to (f, g).
  Matrix p(r, Vec(r));
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j < r0; ++j) p[k][j] = w.frame[j][k];
    p[k][r0] = w.transversal[k];
  }
  const Matrix change = transpose(inverse(p));

  std::vector<int> pos0(arr.size(), -1);
  for (std::size_t k = 0; k < w.delta0.size(); ++k) pos0[w.delta0[k]] = static_cast<int>(k);
  auto basis_fg = w.frame;
  basis_fg.push_back(w.transversal);

  RationalElement out(w.induced);
  for (const auto& t : phi.terms()) {
    std::vector<std::pair<int, int>> den0;
    struct Off {
      Polynomial ell;
      Rational b;
      int n;
    };
    std::vector<Off> den1;
    int m_total = 0;
    for (const auto& [i, n] : t.denominator) {
      if (pos0[i] >= 0) {
        den0.emplace_back(pos0[i], n);
        continue;
      }
      Vec c = *coordinates(basis_fg, arr.form(i));
      Rational b = c.back();
      c.pop_back();
      den1.push_back({Polynomial::linear_form(c), b, n});
      m_total += n;
    }
    if (den1.empty()) continue;

    // Numerator in (w, s), grouped by the power of s.
    const Polynomial in_ws = t.numerator.linear_change(change, r);
    std::map<int, Polynomial> by_s;
    for (const auto& [e, c] : in_ws.terms()) {
      Exponents f(e.begin(), e.end() - 1);
      auto [it, ins] = by_s.try_emplace(e.back(), r0);
      it->second.add_term(f, c);
    }

    Polynomial num(r0);
    for (const auto& [d, psi] : by_s) {
      const int k_total = d - m_total + 1;
      if (k_total < 0) continue;
      for (const auto& ks : compositions(static_cast<int>(den1.size()), k_total)) {
        Polynomial prod = psi;
        for (std::size_t j = 0; j < den1.size(); ++j) {
          const auto& o = den1[j];
          const int k = ks[j];
          // binom(-n, k) = (-1)^k binom(n+k-1, k)
          Rational coef = factorial(o.n + k - 1) / (factorial(k) * factorial(o.n - 1));
          if (k % 2) coef = -coef;
          Rational bp = 1;
          for (int x = 0; x < o.n + k; ++x) bp *= o.b;
          prod = prod * o.ell.pow(k) * (coef / bp);
        }
        num += prod;
      }
    }
    if (num.is_zero()) continue;
    out += RationalElement::from_inputs(w.induced, num * w.density, den0);
  }
  return out;
}

std::vector<std::pair<BasisTuple, Polynomial>> separate_variables(const RationalElement& phi) {
  const auto basis = nbc_basis(*phi.arrangement());
  const auto d = jk_residue_exp(phi, -1);
  std::vector<std::pair<BasisTuple, Polynomial>> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!d[k].is_zero()) out.emplace_back(basis[k], d[k]);
  return out;
}

Rational cauchy_trace(const RationalElement& phi, const Vec& y) {
  const auto& arr = phi.arrangement();
  const int r = arr->dim();
  const auto basis = nbc_basis(*arr);
  for (const auto& a : arr->forms())
    if (dot(a, y) == 0) throw SingularPoint("point " + to_string(y) + " is not regular");
  const auto d = jk_residue_exp(phi, -1);
  Rational trace = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const RationalElement pb = RationalElement::phi(arr, basis[k]);
    for (const auto& [e, c] : d[k].terms()) {
      RationalElement v = pb;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < e[i]; ++j) v = derivative(v, unit_vec(r, i));
      trace += c * evaluate(v, y);
    }
  }
  return trace;
}

}  // namespace jkres
