#pragma once

#include <memory>
#include <vector>

#include "jkres/linalg.hpp"

namespace jkres {

// A finite ordered family of nonzero vectors spanning Q^dim.
//
// Proportional inputs are merged: every input vector is stored as a
// positive or negative multiple of a primitive integer representative
// (content removed, first nonzero coordinate positive). The
// representatives ("forms") keep the order of their first occurrence and
// are what every other part of the library indexes into.
class Arrangement {
 public:
  struct ClassRef {
    std::size_t form;  // index into forms()
    Rational scalar;   // input = scalar * forms()[form]
  };

  Arrangement(int dim, std::vector<Vec> input_vectors);

  int dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }
  const Vec& form(std::size_t i) const { return forms_[i]; }
  const std::vector<Vec>& forms() const { return forms_; }
  const std::vector<Vec>& input_vectors() const { return inputs_; }
  const ClassRef& input_class(std::size_t input_index) const { return classes_[input_index]; }

  // {+a, -a} for every form a, in the order a_1, -a_1, a_2, -a_2, ...
  std::vector<Vec> symmetric_closure() const;
  std::vector<Vec> vectors(const std::vector<int>& indices) const;

 private:
  int dim_;
  std::vector<Vec> inputs_;
  std::vector<Vec> forms_;
  std::vector<ClassRef> classes_;
};

using ArrangementPtr = std::shared_ptr<const Arrangement>;

ArrangementPtr make_arrangement(int dim, std::vector<Vec> vectors);
ArrangementPtr make_arrangement(std::vector<Vec> vectors);

// Frequently used test arrangements.
ArrangementPtr arrangement_a2();  // (e1, e2, e1+e2)
ArrangementPtr arrangement_a3();  // (e1, e2, e3, e1+e2, e2+e3, e1+e2+e3)

}  // namespace jkres
