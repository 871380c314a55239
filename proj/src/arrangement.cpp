#include "jkres/arrangement.hpp"

#include "jkres/errors.hpp"

namespace jkres {

Arrangement::Arrangement(int dim, std::vector<Vec> input_vectors) : dim_(dim), inputs_(std::move(input_vectors)) {
  if (dim < 0) throw InvalidArgument("negative dimension");
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    const Vec& v = inputs_[i];
    if (static_cast<int>(v.size()) != dim)
      throw InvalidArgument("vector " + std::to_string(i) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(dim));
    if (is_zero(v)) throw InvalidArgument("vector " + std::to_string(i) + " is zero");
    PrimitiveForm p = primitive(v);
    std::size_t k = 0;
    while (k < forms_.size() && forms_[k] != p.vector) ++k;
    if (k == forms_.size()) forms_.push_back(p.vector);
    classes_.push_back({k, p.scalar});
  }
  if (static_cast<int>(rank(forms_)) != dim) throw NotSpanning("the vectors do not span Q^" + std::to_string(dim));
}

std::vector<Vec> Arrangement::symmetric_closure() const {
  std::vector<Vec> out;
  for (const auto& a : forms_) {
    out.push_back(a);
    out.push_back(negate(a));
  }
  return out;
}

std::vector<Vec> Arrangement::vectors(const std::vector<int>& indices) const {
  std::vector<Vec> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(forms_[i]);
  return out;
}

ArrangementPtr make_arrangement(int dim, std::vector<Vec> vectors) {
  return std::make_shared<const Arrangement>(dim, std::move(vectors));
}

ArrangementPtr make_arrangement(std::vector<Vec> vectors) {
  if (vectors.empty()) throw InvalidArgument("empty arrangement needs an explicit dimension");
  const int dim = static_cast<int>(vectors[0].size());
  return make_arrangement(dim, std::move(vectors));
}

ArrangementPtr arrangement_a2() { return make_arrangement({{1, 0}, {0, 1}, {1, 1}}); }

ArrangementPtr arrangement_a3() {
  return make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
}

}  // namespace jkres
