#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "jkres/arrangement.hpp"

namespace jkres {

enum class Space { Primal, Dual };

inline constexpr int kMaxEnumerationRank = 3;

struct Chamber {
  Space space = Space::Primal;
  int id = -1;             // position in the owning fan, -1 if standalone
  std::vector<int> signs;  // one entry +1/-1 per cutting normal
  Vec witness;
};

// A complete central fan cut out by hyperplanes through the origin.
class Fan {
 public:
  Fan(int dim, std::vector<Vec> normals, Space space = Space::Primal);

  static Fan primal(const Arrangement& arr);
  static Fan dual(const Arrangement& arr);

  int dim() const { return dim_; }
  Space space() const { return space_; }
  const std::vector<Vec>& normals() const { return normals_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const Chamber& chamber(std::size_t i) const { return chambers_[i]; }

  // Signs of all normals at x; nullopt if x lies on some hyperplane.
  std::optional<std::vector<int>> sign_vector(const Vec& x) const;
  // Index of the chamber containing x; throws OnWall.
  std::size_t locate(const Vec& x) const;
  // Chamber containing x + eps p for infinitesimal eps > 0.
  std::size_t locate_limit(const Vec& x, const Vec& p) const;

 private:
  int dim_;
  Space space_;
  std::vector<Vec> normals_;
  std::vector<Chamber> chambers_;
};

// Normals of the walls of V: primitive covectors vanishing on r-1
// independent forms.
std::vector<Vec> primal_normals(const Arrangement& arr);

std::vector<Chamber> chambers(const Arrangement& arr, Space space);
Chamber find_chamber(const Arrangement& arr, const Vec& x, Space space);

// Strictly feasible point of {signs_i <normals_i, x> > 0}, or nullopt.
std::optional<Vec> strict_witness(int dim, const std::vector<Vec>& normals, const std::vector<int>& signs);

struct FlippedBasis {
  std::vector<Vec> generators;
  int epsilon;
};

// Flip each generator to be positive on the witness of the dual chamber.
FlippedBasis sigma_delta(const std::vector<Vec>& sigma, const Chamber& delta);

struct SimplicialCone {
  std::vector<Vec> generators;
  std::vector<bool> strict;  // true: coefficient must be > 0
};

SimplicialCone closed_cone(std::vector<Vec> generators);
bool cone_contains(const SimplicialCone& c, const Vec& h);
Rational volume(const std::vector<Vec>& sigma);
// C(sigma)'_p for the witness p of gamma.
SimplicialCone cprime(const std::vector<Vec>& sigma, const Chamber& gamma);

// Extreme rays of the closure of a pointed chamber.
std::vector<Vec> chamber_rays(const Fan& fan, const Chamber& c);
// Simplicial subdivision of a pointed polyhedral cone given by its rays,
// using the fan normals as candidate facet normals.
std::vector<std::vector<Vec>> triangulate(const std::vector<Vec>& rays, const std::vector<Vec>& normals);

}  // namespace jkres
