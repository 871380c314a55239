#include "selftest.hpp"

#include <functional>
#include <random>
#include <string>

#include "jkres/fourier.hpp"

namespace jkres {

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Vec regular_point(const Arrangement& arr) {
    for (;;) {
      Vec y;
      for (int i = 0; i < arr.dim(); ++i) y.push_back(Rational(uniform(-9, 9), uniform(1, 4)));
      for (auto& x : y) x.canonicalize();
      bool ok = true;
      for (const auto& a : arr.forms()) ok = ok && dot(a, y) != 0;
      if (ok) return y;
    }
  }

  Vec any_point(int dim) {
    Vec y;
    for (int i = 0; i < dim; ++i) y.push_back(Rational(uniform(-3, 3)));
    return y;
  }

  RationalElement element(const ArrangementPtr& arr) {
    const int r = arr->dim();
    RationalElement phi(arr);
    const int nterms = static_cast<int>(uniform(1, 3));
    for (int k = 0; k < nterms; ++k) {
      Polynomial num(r);
      const int deg = static_cast<int>(uniform(0, 1));
      for (int m = 0; m < 2; ++m) {
        Exponents e(r, 0);
        for (int d = 0; d < deg; ++d) e[uniform(0, r - 1)] += 1;
        num.add_term(e, Rational(uniform(-4, 4)));
      }
      DenomMap den;
      for (std::size_t i = 0; i < arr->size(); ++i)
        if (uniform(0, 2) == 0) den[static_cast<int>(i)] = static_cast<int>(uniform(1, 2));
      phi += RationalElement::fraction(arr, num, den);
    }
    return phi;
  }

  RationalElement g_element(const ArrangementPtr& arr) {
    const auto bases = all_bases(*arr);
    RationalElement phi(arr);
    for (int k = 0; k < 3; ++k) {
      const auto& b = bases[uniform(0, static_cast<long>(bases.size()) - 1)];
      DenomMap den;
      for (int i : b) den[i] = 1;
      for (int e = 0; e < uniform(0, 2); ++e) den[b[uniform(0, static_cast<long>(b.size()) - 1)]] += 1;
      phi += RationalElement::fraction(arr, Polynomial::constant(arr->dim(), Rational(uniform(-5, 5))), den);
    }
    return phi;
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<ArrangementPtr> arrangements() {
  return {arrangement_a2(), make_arrangement({{1, 0}, {0, 1}, {1, 1}, {1, -2}}), arrangement_a3()};
}

}  // namespace

bool selftest(std::uint64_t seed, int count, std::ostream& out) {
  Gen gen(seed);
  bool all = true;
  out << "seed " << seed << "\n";
  auto check = [&](const std::string& name, const std::function<bool(const ArrangementPtr&)>& body) {
    int cases = 0;
    bool ok = true;
    for (const auto& arr : arrangements()) {
      const int n = arr->dim() == 3 ? std::max(1, count / 4) : count;
      for (int k = 0; k < n && ok; ++k, ++cases) ok = body(arr);
    }
    out << (ok ? "PASS " : "FAIL ") << name << " (" << cases << " cases)\n";
    all = all && ok;
  };

  check("split is sound", [&](const ArrangementPtr& arr) {
    const RationalElement phi = gen.element(arr);
    const SplitForm s = split(phi);
    const RationalElement sum = s.g_element() + s.ng_element();
    for (int k = 0; k < 5; ++k) {
      const Vec y = gen.regular_point(*arr);
      if (evaluate(sum, y) != evaluate(phi, y)) return false;
    }
    return true;
  });
  check("residue kills derivatives", [&](const ArrangementPtr& arr) {
    const RationalElement phi = gen.element(arr);
    for (int i = 0; i < arr->dim(); ++i)
      for (const auto& c : jk_residue(derivative(phi, unit_vec(arr->dim(), i))))
        if (c != 0) return false;
    return true;
  });
  check("laplace round trip", [&](const ArrangementPtr& arr) {
    const RationalElement phi = gen.g_element(arr);
    const auto ds = chambers(*arr, Space::Dual);
    const Chamber& d = ds[gen.uniform(0, static_cast<long>(ds.size()) - 1)];
    return is_zero(forward_laplace(inverse_laplace(phi, d)) - split(phi).g_element());
  });
  check("jump formula", [&](const ArrangementPtr& arr) {
    const RationalElement phi = gen.element(arr);
    const auto ds = chambers(*arr, Space::Dual);
    const Chamber& d = ds[gen.uniform(0, static_cast<long>(ds.size()) - 1)];
    const auto ws = walls(arr);
    return check_jump_formula(phi, ws[gen.uniform(0, static_cast<long>(ws.size()) - 1)], d);
  });
  check("stratified limit", [&](const ArrangementPtr& arr) {
    const RationalElement phi = gen.g_element(arr);
    const auto fan = primal_fan(*arr);
    const auto ds = chambers(*arr, Space::Dual);
    const Chamber& d = ds[gen.uniform(0, static_cast<long>(ds.size()) - 1)];
    const Chamber& g = fan->chamber(gen.uniform(0, static_cast<long>(fan->chambers().size()) - 1));
    const auto pp = inverse_laplace(phi, d, fan);
    const auto sf = stratified_fourier(phi, g, d);
    for (int k = 0; k < 10; ++k) {
      const Vec h = gen.any_point(arr->dim());
      if (evaluate_total(sf, h) != pp.pieces[fan->locate_limit(h, g.witness)].evaluate(h)) return false;
    }
    return true;
  });
  return all;
}

}  // namespace jkres
