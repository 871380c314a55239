#include "jkres/rational_element.hpp"

#include <algorithm>
#include <set>

#include "jkres/errors.hpp"

namespace jkres {

std::vector<int> FractionTerm::support() const {
  std::vector<int> s;
  for (const auto& [i, n] : denominator) s.push_back(i);
  return s;
}

int FractionTerm::denominator_degree() const {
  int d = 0;
  for (const auto& [i, n] : denominator) d += n;
  return d;
}

RationalElement::RationalElement(ArrangementPtr arr, std::vector<FractionTerm> terms) : arr_(std::move(arr)) {
  for (auto& t : terms) add_term(std::move(t));
}

RationalElement RationalElement::phi(ArrangementPtr arr, const std::vector<int>& sigma) {
  DenomMap d;
  for (int i : sigma) d[i] += 1;
  const int r = arr->dim();
  return fraction(std::move(arr), Polynomial::constant(r, Rational(1)), std::move(d));
}

RationalElement RationalElement::fraction(ArrangementPtr arr, Polynomial numerator, DenomMap denominator) {
  RationalElement e(std::move(arr));
  e.add_term({std::move(numerator), std::move(denominator)});
  return e;
}

RationalElement RationalElement::polynomial(ArrangementPtr arr, Polynomial p) {
  return fraction(std::move(arr), std::move(p), {});
}

RationalElement RationalElement::from_inputs(ArrangementPtr arr, Polynomial numerator,
                                             const std::vector<std::pair<int, int>>& input_powers) {
  DenomMap d;
  Rational scale = 1;
  for (const auto& [idx, power] : input_powers) {
    if (idx < 0 || idx >= static_cast<int>(arr->input_vectors().size()))
      throw InvalidArgument("denominator index " + std::to_string(idx) + " out of range");
    if (power <= 0) throw InvalidArgument("denominator exponents must be positive: " + std::to_string(idx) + "^" + std::to_string(power));
    const auto& cls = arr->input_class(idx);
    d[static_cast<int>(cls.form)] += power;
    for (int k = 0; k < power; ++k) scale /= cls.scalar;
  }
  return fraction(std::move(arr), numerator * scale, std::move(d));
}

void RationalElement::add_term(FractionTerm t) {
  if (t.numerator.is_zero()) return;
  for (auto it = t.denominator.begin(); it != t.denominator.end();) {
    if (it->second < 0) throw InvalidArgument("negative denominator exponent");
    it = it->second == 0 ? t.denominator.erase(it) : std::next(it);
  }
  for (auto& u : terms_) {
    if (u.denominator == t.denominator) {
      u.numerator += t.numerator;
      if (u.numerator.is_zero()) {
        terms_.erase(terms_.begin() + (&u - terms_.data()));
      }
      return;
    }
  }
  terms_.push_back(std::move(t));
}

RationalElement& RationalElement::operator+=(const RationalElement& o) {
  for (const auto& t : o.terms_) add_term(t);
  return *this;
}

RationalElement& RationalElement::operator-=(const RationalElement& o) {
  for (const auto& t : o.terms_) add_term({-t.numerator, t.denominator});
  return *this;
}

RationalElement& RationalElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.numerator *= c;
  return *this;
}

RationalElement operator*(const RationalElement& a, const RationalElement& b) {
  RationalElement r(a.arr_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      DenomMap d = s.denominator;
      for (const auto& [i, n] : t.denominator) d[i] += n;
      r.add_term({s.numerator * t.numerator, std::move(d)});
    }
  }
  return r;
}

RationalElement RationalElement::times(const Polynomial& p) const {
  RationalElement r(arr_);
  for (const auto& t : terms_) r.add_term({t.numerator * p, t.denominator});
  return r;
}

std::string RationalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k) out += " + ";
    out += "(" + t.numerator.to_string("z") + ")";
    if (t.denominator.empty()) continue;
    out += "/(";
    bool first = true;
    for (const auto& [i, n] : t.denominator) {
      if (!first) out += "*";
      first = false;
      out += "(" + Polynomial::linear_form(arr_->form(i)).to_string("z") + ")";
      if (n > 1) out += "^" + std::to_string(n);
    }
    out += ")";
  }
  return out;
}

Rational evaluate(const RationalElement& phi, const Vec& y) {
  const auto& arr = *phi.arrangement();
  if (static_cast<int>(y.size()) != arr.dim()) throw InvalidArgument("evaluation point has wrong dimension");
  std::map<int, Rational> values;
  Rational total = 0;
  for (const auto& t : phi.terms()) {
    Rational den = 1;
    for (const auto& [i, n] : t.denominator) {
      auto it = values.find(i);
      if (it == values.end()) it = values.emplace(i, dot(arr.form(i), y)).first;
      if (it->second == 0) throw SingularPoint("form " + to_string(arr.form(i)) + " vanishes at " + to_string(y));
      for (int k = 0; k < n; ++k) den *= it->second;
    }
    total += t.numerator.evaluate(y) / den;
  }
  return total;
}

FractionTerm common_denominator(const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  DenomMap common;
  for (const auto& t : phi.terms())
    for (const auto& [i, n] : t.denominator) common[i] = std::max(common[i], n);
  std::map<int, std::vector<Polynomial>> powers;
  for (const auto& [i, n] : common) {
    powers[i].push_back(Polynomial::constant(r, Rational(1)));
    Polynomial f = Polynomial::linear_form(arr.form(i));
    for (int k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * f);
  }
  Polynomial num(r);
  for (const auto& t : phi.terms()) {
    Polynomial p = t.numerator;
    for (const auto& [i, n] : common) {
      auto it = t.denominator.find(i);
      const int missing = n - (it == t.denominator.end() ? 0 : it->second);
      if (missing) p = p * powers[i][missing];
    }
    num += p;
  }
  return {std::move(num), std::move(common)};
}

bool is_zero(const RationalElement& phi) { return common_denominator(phi).numerator.is_zero(); }

RationalElement graded_component(const RationalElement& phi, int d) {
  RationalElement r(phi.arrangement());
  for (const auto& t : phi.terms()) {
    r.add_term({t.numerator.homogeneous_part(d + t.denominator_degree()), t.denominator});
  }
  return r;
}

std::vector<int> occurring_degrees(const RationalElement& phi) {
  std::set<int> ds;
  for (const auto& t : phi.terms()) {
    const int n = t.denominator_degree();
    for (int k : t.numerator.occurring_degrees()) ds.insert(k - n);
  }
  return {ds.begin(), ds.end()};
}

RationalElement derivative(const RationalElement& phi, const Vec& v) {
  const auto& arr = *phi.arrangement();
  RationalElement r(phi.arrangement());
  for (const auto& t : phi.terms()) {
    r.add_term({t.numerator.directional_derivative(v), t.denominator});
    for (const auto& [i, n] : t.denominator) {
      const Rational c = -n * dot(arr.form(i), v);
      if (c == 0) continue;
      DenomMap d = t.denominator;
      d[i] += 1;
      r.add_term({t.numerator * c, std::move(d)});
    }
  }
  return r;
}

namespace {

// Change of variables z -> coordinates of the columns of `cols`, i.e. the
// polynomial p(sum_j v_j cols[j]) in the variables v.
Polynomial in_column_coordinates(const Polynomial& p, const std::vector<Vec>& cols, int r) {
  Matrix m(r, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = cols[j][i];
  return p.linear_change(m, r);
}

}  // namespace

int vanish_order_at_infinity(const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  const int r = arr.dim();
  FractionTerm cd = common_denominator(phi);
  if (cd.numerator.is_zero()) return kVanishesIdentically;
  std::vector<int> support = cd.support();

  // Flats of the support of proper rank, each stored as its member set.
  std::set<std::vector<int>> flats{{}};
  std::vector<std::vector<int>> queue{{}};
  while (!queue.empty()) {
    std::vector<int> f = queue.back();
    queue.pop_back();
    for (int a : support) {
      if (std::binary_search(f.begin(), f.end(), a)) continue;
      std::vector<int> gen = f;
      gen.push_back(a);
      const auto gen_vecs = arr.vectors(gen);
      const std::size_t rk = rank(gen_vecs);
      if (static_cast<int>(rk) >= r) continue;
      std::vector<int> closure;
      for (int b : support) {
        auto with = gen_vecs;
        with.push_back(arr.form(b));
        if (rank(with) == rk) closure.push_back(b);
      }
      if (flats.insert(closure).second) queue.push_back(closure);
    }
  }

  int best = INT_MAX;
  for (const auto& f : flats) {
    std::vector<Vec> lperp = f.empty() ? std::vector<Vec>{} : kernel(arr.vectors(f), r);
    if (f.empty()) {
      for (int i = 0; i < r; ++i) lperp.push_back(unit_vec(r, i));
    }
    std::vector<Vec> cols = lperp;
    for (auto& c : complete_with_units(lperp, r)) cols.push_back(std::move(c));
    std::vector<int> vars;
    for (int j = 0; j < static_cast<int>(lperp.size()); ++j) vars.push_back(j);
    const int num_deg = in_column_coordinates(cd.numerator, cols, r).degree_in(vars);
    int den_deg = 0;
    for (const auto& [i, n] : cd.denominator)
      if (!std::binary_search(f.begin(), f.end(), i)) den_deg += n;
    best = std::min(best, den_deg - num_deg);
  }
  return std::max(best, 0);
}

namespace {

class Reducer {
 public:
  explicit Reducer(const Arrangement& arr) : arr_(arr), r_(arr.dim()) {}

  ReducedForm run(const RationalElement& phi) {
    for (const auto& t : phi.terms()) push(t.denominator, t.numerator);
    while (!pending_.empty()) {
      auto node = pending_.extract(std::prev(pending_.end()));
      const DenomMap& key = node.key();
      if (node.mapped().is_zero()) continue;
      std::vector<int> s;
      for (const auto& [i, n] : key) s.push_back(i);
      if (rank(arr_.vectors(s)) < s.size()) {
        rewrite_dependent(key, s, node.mapped());
      } else {
        cancel_in_support(key, s, node.mapped());
      }
    }
    return std::move(out_);
  }

 private:
  void push(const DenomMap& key, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = pending_.try_emplace(key, p);
    if (!inserted) it->second += p;
  }

  // 1 = sum_beta c_beta beta / alpha over a circuit with alpha its minimal
  // element; raises the exponent of alpha and lowers every other one.
  void rewrite_dependent(const DenomMap& key, const std::vector<int>& s, const Polynomial& num) {
    const std::size_t rk = rank(arr_.vectors(s));
    int j = -1;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      std::vector<int> rest;
      for (int x : s)
        if (x != *it) rest.push_back(x);
      if (rank(arr_.vectors(rest)) == rk) {
        j = *it;
        break;
      }
    }
    std::vector<int> t;
    for (int x : s)
      if (x != j) t.push_back(x);
    for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
      std::vector<int> smaller = t;
      smaller.erase(smaller.begin() + k);
      auto v = arr_.vectors(smaller);
      const std::size_t rs = rank(v);
      v.push_back(arr_.form(j));
      if (rank(v) == rs) t = smaller;
    }
    t.push_back(j);
    std::sort(t.begin(), t.end());
    const int alpha = t.front();
    std::vector<int> betas(t.begin() + 1, t.end());
    const Vec c = *coordinates(arr_.vectors(betas), arr_.form(alpha));
    for (std::size_t k = 0; k < betas.size(); ++k) {
      DenomMap d = key;
      d[alpha] += 1;
      if (--d[betas[k]] == 0) d.erase(betas[k]);
      push(d, num * c[k]);
    }
  }

  // Independent support: expand the numerator in coordinates adapted to the
  // support and cancel what it can.
  void cancel_in_support(const DenomMap& key, const std::vector<int>& s, const Polynomial& num) {
    const std::size_t k = s.size();
    if (k == 0) {
      // Over the zero space the empty support is a basis.
      if (r_ == 0) {
        add_g(key, num.constant_term());
      } else {
        add_ng(key, num);
      }
      return;
    }
    Matrix a = arr_.vectors(s);
    for (auto& u : complete_with_units(a, r_)) a.push_back(std::move(u));
    const Polynomial in_u = num.linear_change(inverse(a), r_);
    std::map<DenomMap, Polynomial> groups;
    for (const auto& [e, c] : in_u.terms()) {
      DenomMap d;
      Exponents f = e;
      for (std::size_t p = 0; p < k; ++p) {
        const int n = key.at(s[p]);
        if (e[p] >= n) {
          f[p] = e[p] - n;
        } else {
          f[p] = 0;
          d[s[p]] = n - e[p];
        }
      }
      auto [it, ins] = groups.try_emplace(d, r_);
      it->second.add_term(f, c);
    }
    for (auto& [d, p] : groups) {
      if (p.is_zero()) continue;
      const Polynomial back = p.linear_change(a, r_);
      if (d.size() < k) {
        push(d, back);
      } else if (static_cast<int>(k) == r_) {
        add_g(d, p.constant_term());
      } else {
        add_ng(d, back);
      }
    }
  }

  void add_g(const DenomMap& key, const Rational& c) {
    auto [it, inserted] = out_.g_terms.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out_.g_terms.erase(it);
    }
  }

  void add_ng(const DenomMap& key, const Polynomial& p) {
    auto [it, inserted] = out_.ng_terms.try_emplace(key, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) out_.ng_terms.erase(it);
    }
  }

  const Arrangement& arr_;
  int r_;
  std::map<DenomMap, Polynomial> pending_;
  ReducedForm out_;
};

}  // namespace

ReducedForm reduce(const RationalElement& phi) { return Reducer(*phi.arrangement()).run(phi); }

}  // namespace jkres
