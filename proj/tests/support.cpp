#include "support.hpp"

#include "jkres/nbc.hpp"

namespace jkres::testing {

Rational q(long num, long den) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

void reseed(std::uint64_t seed) { rng().seed(seed); }

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Vec random_regular_point(const Arrangement& arr, long bound) {
  for (;;) {
    Vec y;
    for (int i = 0; i < arr.dim(); ++i) y.push_back(q(uniform(-bound, bound), uniform(1, 4)));
    bool ok = true;
    for (const auto& a : arr.forms()) ok = ok && dot(a, y) != 0;
    if (ok) return y;
  }
}

Polynomial random_polynomial(int nvars, int max_degree, int max_terms) {
  Polynomial p(nvars);
  const int n = static_cast<int>(uniform(1, max_terms));
  for (int t = 0; t < n; ++t) {
    Exponents e(nvars, 0);
    int budget = static_cast<int>(uniform(0, max_degree));
    for (int k = 0; k < budget; ++k) e[uniform(0, nvars - 1)] += 1;
    p.add_term(e, q(uniform(-5, 5), uniform(1, 3)));
  }
  return p;
}

RationalElement random_element(const ArrangementPtr& arr, int nterms, int max_exp, int max_num_degree) {
  RationalElement phi(arr);
  const int n = static_cast<int>(arr->size());
  for (int t = 0; t < nterms; ++t) {
    DenomMap d;
    const int k = static_cast<int>(uniform(0, std::min(n, arr->dim() + 1)));
    for (int j = 0; j < k; ++j) d[static_cast<int>(uniform(0, n - 1))] = static_cast<int>(uniform(1, max_exp));
    phi.add_term({random_polynomial(arr->dim(), max_num_degree, 2), d});
  }
  return phi;
}

RationalElement random_g_element(const ArrangementPtr& arr, int nterms, int extra) {
  const auto bases = all_bases(*arr);
  const int r = arr->dim();
  RationalElement phi(arr);
  for (int t = 0; t < nterms; ++t) {
    const auto& b = bases[uniform(0, static_cast<long>(bases.size()) - 1)];
    DenomMap d;
    for (int i : b) d[i] = 1;
    const int more = static_cast<int>(uniform(0, extra));
    for (int k = 0; k < more; ++k) d[b[uniform(0, r - 1)]] += 1;
    phi.add_term({Polynomial::constant(r, q(uniform(-4, 4), uniform(1, 3))), d});
  }
  return phi;
}

ArrangementPtr arrangement_four_lines() { return make_arrangement({vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, -2})}); }

}  // namespace jkres::testing
