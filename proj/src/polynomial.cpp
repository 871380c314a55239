#include "jkres/polynomial.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const Vec& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = kMinusInfinity;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.terms_.emplace(e, c);
  }
  return r;
}

std::vector<int> Polynomial::occurring_degrees() const {
  std::vector<int> ds;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    ds.push_back(s);
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::directional_derivative(const Vec& v) const {
  Polynomial r(nvars_);
  for (int i = 0; i < nvars_; ++i)
    if (v[i] != 0) r += derivative(i) * v[i];
  return r;
}

Rational Polynomial::evaluate(const Vec& x) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    }
    total += m;
  }
  return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, int target) const {
  Polynomial r(target);
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(target, Rational(1)));
  for (const auto& [e, c] : terms_) {
    Polynomial m = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) m = m * powers[i][e[i]];
    }
    r += m;
  }
  return r;
}

Polynomial Polynomial::linear_change(const Matrix& m, int target) const {
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) images.push_back(linear_form(m[i]));
  return compose(images, target);
}

int Polynomial::degree_in(const std::vector<int>& vars) const {
  int d = kMinusInfinity;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    d = std::max(d, s);
  }
  return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  std::vector<std::string> names;
  for (int i = 0; i < nvars_; ++i) names.push_back(var_prefix + std::to_string(i + 1));
  return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational a = abs(c);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty()) {
      body = jkres::to_string(a);
    } else if (a == 1) {
      body = mono;
    } else {
      body = jkres::to_string(a) + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::vector<Exponents> compositions(int n, int k) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // Recursive fill of e[i..] with remaining total.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      e[i] = x;
      self(self, i + 1, remaining - x);
    }
  };
  rec(rec, 0, k);
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace jkres
