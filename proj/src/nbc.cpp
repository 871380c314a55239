#include "jkres/nbc.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

bool colex_less(const BasisTuple& a, const BasisTuple& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<BasisTuple> subsets(int n, int k) {
  std::vector<BasisTuple> out;
  BasisTuple cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

// Image of v in V / Q alpha, realized by deleting the pivot coordinate p
// of alpha (largest index with alpha_p != 0) after scaling alpha_p to 1.
Vec quotient_image(const Vec& v, const Vec& alpha) {
  int p = static_cast<int>(alpha.size()) - 1;
  while (alpha[p] == 0) --p;
  const Rational f = v[p] / alpha[p];
  Vec w;
  w.reserve(v.size() - 1);
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (i != p) w.push_back(v[i] - f * alpha[i]);
  return w;
}

}  // namespace

std::vector<BasisTuple> all_bases(const Arrangement& arr) {
  std::vector<BasisTuple> out;
  for (auto& s : subsets(static_cast<int>(arr.size()), arr.dim()))
    if (independent(arr.vectors(s))) out.push_back(std::move(s));
  return out;
}

std::vector<BasisTuple> nbc_basis(const Arrangement& arr) {
  const int n = static_cast<int>(arr.size());
  std::vector<BasisTuple> out;
  for (auto& b : all_bases(arr)) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      if (std::binary_search(b.begin(), b.end(), j)) continue;
      std::vector<Vec> set{arr.form(j)};
      for (int i : b)
        if (i > j) set.push_back(arr.form(i));
      ok = independent(set);
    }
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

RationalElement os_relation(const ArrangementPtr& arr, const BasisTuple& sigma, int alpha) {
  if (std::find(sigma.begin(), sigma.end(), alpha) != sigma.end())
    throw AlphaInSigma("index " + std::to_string(alpha) + " already belongs to sigma");
  if (static_cast<int>(sigma.size()) != arr->dim() || !independent(arr->vectors(sigma)))
    throw NotABasis("sigma is not a basis");
  const Vec c = *coordinates(arr->vectors(sigma), arr->form(alpha));
  RationalElement rel = RationalElement::phi(arr, sigma);
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (c[k] == 0) continue;
    BasisTuple tau = sigma;
    tau[k] = alpha;
    rel -= RationalElement::phi(arr, tau) * c[k];
  }
  return rel;
}

Rational iterated_residue_of_phi(const std::vector<Vec>& b, const std::vector<Vec>& sigma) {
  if (b.empty()) return 1;
  const Vec& alpha = b.back();
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    auto s = proportionality(sigma[k], alpha);
    if (!s) continue;
    std::vector<Vec> b2, sigma2;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) b2.push_back(quotient_image(b[i], alpha));
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (i != k) sigma2.push_back(quotient_image(sigma[i], alpha));
    return iterated_residue_of_phi(b2, sigma2) / *s;
  }
  return 0;
}

Rational iterated_residue(const BasisTuple& b, const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  const auto bv = arr.vectors(b);
  Rational total = 0;
  for (const auto& [key, c] : reduce(graded_component(phi, -arr.dim())).g_terms) {
    std::vector<int> sigma;
    for (const auto& [i, n] : key) sigma.push_back(i);
    total += c * iterated_residue_of_phi(bv, arr.vectors(sigma));
  }
  return total;
}

Vec express_in_B(const RationalElement& phi) {
  const auto& arr = *phi.arrangement();
  Vec out;
  const auto reduced = reduce(graded_component(phi, -arr.dim()));
  for (const auto& b : nbc_basis(arr)) {
    const auto bv = arr.vectors(b);
    Rational total = 0;
    for (const auto& [key, c] : reduced.g_terms) {
      std::vector<int> sigma;
      for (const auto& [i, n] : key) sigma.push_back(i);
      total += c * iterated_residue_of_phi(bv, arr.vectors(sigma));
    }
    out.push_back(total);
  }
  return out;
}

Vec phi_coordinates(const Arrangement& arr, const std::vector<BasisTuple>& basis, const BasisTuple& sigma) {
  Vec out;
  const auto sv = arr.vectors(sigma);
  for (const auto& b : basis) out.push_back(iterated_residue_of_phi(arr.vectors(b), sv));
  return out;
}

}  // namespace jkres
