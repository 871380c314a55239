#include "jkres/geometry.hpp"

#include <algorithm>
#include <map>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

// Positive rescaling to a primitive integer vector (direction kept).
Vec positive_primitive(const Vec& v) {
  if (is_zero(v)) return v;
  PrimitiveForm p = primitive(v);
  return p.scalar > 0 ? p.vector : negate(p.vector);
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
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
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace

std::optional<Vec> strict_witness(int dim, const std::vector<Vec>& normals, const std::vector<int>& signs) {
  // Fourier-Motzkin on the strict homogeneous system a.x > 0.
  std::vector<std::vector<Vec>> stages;
  std::vector<Vec> sys;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Vec a = signs[i] > 0 ? normals[i] : negate(normals[i]);
    if (is_zero(a)) return std::nullopt;
    sys.push_back(positive_primitive(a));
  }
  for (int k = 0; k < dim; ++k) {
    std::sort(sys.begin(), sys.end());
    sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
    stages.push_back(sys);
    std::vector<Vec> next, pos, neg;
    for (auto& a : sys) {
      if (a[k] > 0) {
        pos.push_back(a);
      } else if (a[k] < 0) {
        neg.push_back(a);
      } else {
        next.push_back(a);
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Vec c = add(scale(p, -n[k]), scale(n, p[k]));
        if (is_zero(c)) return std::nullopt;
        next.push_back(positive_primitive(c));
      }
    }
    sys = std::move(next);
  }
  if (!sys.empty()) return std::nullopt;

  Vec x = zero_vec(dim);
  for (int k = dim - 1; k >= 0; --k) {
    std::optional<Rational> lo, hi;
    for (const auto& a : stages[k]) {
      if (a[k] == 0) continue;
      Rational rest = 0;
      for (int j = k + 1; j < dim; ++j) rest += a[j] * x[j];
      const Rational bound = -rest / a[k];
      if (a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      x[k] = (*lo + *hi) / 2;
    } else if (lo) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      x[k] = Rational(f + 1);
    } else if (hi) {
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      x[k] = Rational(c - 1);
    } else {
      x[k] = 0;
    }
  }
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (sign_of(dot(normals[i], x)) != signs[i]) throw Degenerate("witness construction failed");
  return positive_primitive(x);
}

Fan::Fan(int dim, std::vector<Vec> normals, Space space) : dim_(dim), space_(space), normals_(std::move(normals)) {
  if (dim > kMaxEnumerationRank)
    throw RankTooLarge("chamber enumeration is limited to rank " + std::to_string(kMaxEnumerationRank));
  std::vector<std::vector<int>> prefixes{{}};
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    std::vector<std::vector<int>> next;
    std::vector<Vec> head(normals_.begin(), normals_.begin() + i + 1);
    for (const auto& p : prefixes) {
      for (int s : {1, -1}) {
        auto q = p;
        q.push_back(s);
        if (strict_witness(dim_, head, q)) next.push_back(std::move(q));
      }
    }
    prefixes = std::move(next);
  }
  for (auto& s : prefixes) {
    Chamber c;
    c.space = space_;
    c.id = static_cast<int>(chambers_.size());
    c.witness = *strict_witness(dim_, normals_, s);
    c.signs = std::move(s);
    chambers_.push_back(std::move(c));
  }
}

std::vector<Vec> primal_normals(const Arrangement& arr) {
  const int r = arr.dim();
  std::vector<Vec> out;
  for (const auto& s : index_subsets(static_cast<int>(arr.size()), r - 1)) {
    const auto sv = arr.vectors(s);
    if (static_cast<int>(rank(sv)) != r - 1) continue;
    Vec n = primitive(kernel(sv, r).at(0)).vector;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

Fan Fan::primal(const Arrangement& arr) { return Fan(arr.dim(), primal_normals(arr), Space::Primal); }

Fan Fan::dual(const Arrangement& arr) { return Fan(arr.dim(), arr.forms(), Space::Dual); }

std::optional<std::vector<int>> Fan::sign_vector(const Vec& x) const {
  std::vector<int> s;
  for (const auto& n : normals_) {
    const int v = sign_of(dot(n, x));
    if (v == 0) return std::nullopt;
    s.push_back(v);
  }
  return s;
}

std::size_t Fan::locate(const Vec& x) const {
  auto s = sign_vector(x);
  if (!s) throw OnWall("point " + to_string(x) + " lies on a wall");
  for (const auto& c : chambers_)
    if (c.signs == *s) return static_cast<std::size_t>(c.id);
  throw Degenerate("sign vector not found among chambers");
}

std::size_t Fan::locate_limit(const Vec& x, const Vec& p) const {
  std::vector<int> s;
  for (const auto& n : normals_) {
    int v = sign_of(dot(n, x));
    if (v == 0) v = sign_of(dot(n, p));
    if (v == 0) throw OnWall("perturbation direction lies on a wall through " + to_string(x));
    s.push_back(v);
  }
  for (const auto& c : chambers_)
    if (c.signs == s) return static_cast<std::size_t>(c.id);
  throw Degenerate("sign vector not found among chambers");
}

std::vector<Chamber> chambers(const Arrangement& arr, Space space) {
  return (space == Space::Primal ? Fan::primal(arr) : Fan::dual(arr)).chambers();
}

Chamber find_chamber(const Arrangement& arr, const Vec& x, Space space) {
  const auto normals = space == Space::Primal ? primal_normals(arr) : arr.forms();
  Chamber c;
  c.space = space;
  for (const auto& n : normals) {
    const int v = sign_of(dot(n, x));
    if (v == 0) throw OnWall("point " + to_string(x) + " lies on a hyperplane");
    c.signs.push_back(v);
  }
  c.witness = x;
  return c;
}

FlippedBasis sigma_delta(const std::vector<Vec>& sigma, const Chamber& delta) {
  FlippedBasis out{{}, 1};
  for (const auto& a : sigma) {
    const int v = sign_of(dot(a, delta.witness));
    if (v == 0) throw OnWall("generator vanishes on the dual chamber witness");
    if (v < 0) {
      out.generators.push_back(negate(a));
      out.epsilon = -out.epsilon;
    } else {
      out.generators.push_back(a);
    }
  }
  return out;
}

SimplicialCone closed_cone(std::vector<Vec> generators) {
  const std::size_t n = generators.size();
  return {std::move(generators), std::vector<bool>(n, false)};
}

bool cone_contains(const SimplicialCone& c, const Vec& h) {
  auto x = coordinates(c.generators, h);
  if (!x) return false;
  for (std::size_t i = 0; i < x->size(); ++i) {
    if ((*x)[i] < 0) return false;
    if (c.strict[i] && (*x)[i] == 0) return false;
  }
  return true;
}

Rational volume(const std::vector<Vec>& sigma) {
  if (sigma.empty() || sigma.size() != sigma[0].size()) throw Degenerate("volume needs a square family");
  Rational d = determinant(sigma);
  if (d == 0) throw Degenerate("dependent family has no volume");
  return abs(d);
}

SimplicialCone cprime(const std::vector<Vec>& sigma, const Chamber& gamma) {
  auto p = coordinates(sigma, gamma.witness);
  if (!p) throw Degenerate("cone generators do not span");
  SimplicialCone c = closed_cone(sigma);
  for (std::size_t i = 0; i < p->size(); ++i) {
    if ((*p)[i] == 0) throw OnWall("chamber witness lies on a face of the cone");
    c.strict[i] = (*p)[i] < 0;
  }
  return c;
}

std::vector<Vec> chamber_rays(const Fan& fan, const Chamber& c) {
  const int d = fan.dim();
  const auto& normals = fan.normals();
  std::vector<Vec> rays;
  for (const auto& s : index_subsets(static_cast<int>(normals.size()), d - 1)) {
    std::vector<Vec> rows;
    for (int i : s) rows.push_back(normals[i]);
    if (static_cast<int>(rank(rows)) != d - 1) continue;
    Vec v = kernel(rows, d).at(0);
    for (const Vec& cand : {v, negate(v)}) {
      bool ok = true;
      for (std::size_t i = 0; i < normals.size() && ok; ++i) ok = sign_of(dot(normals[i], cand)) * c.signs[i] >= 0;
      if (!ok) continue;
      Vec pp = positive_primitive(cand);
      if (std::find(rays.begin(), rays.end(), pp) == rays.end()) rays.push_back(pp);
    }
  }
  return rays;
}

std::vector<std::vector<Vec>> triangulate(const std::vector<Vec>& rays, const std::vector<Vec>& normals) {
  const std::size_t d = rank(rays);
  if (rays.size() == d) return {rays};
  const Vec& v0 = rays[0];
  std::vector<std::vector<Vec>> out;
  std::vector<std::vector<int>> seen;
  for (const auto& n : normals) {
    if (dot(n, v0) == 0) continue;
    std::vector<int> zero_idx;
    int side = 0;
    bool supporting = true;
    for (std::size_t i = 0; i < rays.size() && supporting; ++i) {
      const int v = sign_of(dot(n, rays[i]));
      if (v == 0) {
        zero_idx.push_back(static_cast<int>(i));
      } else if (side == 0) {
        side = v;
      } else if (side != v) {
        supporting = false;
      }
    }
    if (!supporting || zero_idx.empty()) continue;
    std::vector<Vec> facet;
    for (int i : zero_idx) facet.push_back(rays[i]);
    if (rank(facet) != d - 1) continue;
    if (std::find(seen.begin(), seen.end(), zero_idx) != seen.end()) continue;
    seen.push_back(zero_idx);
    for (auto& simplex : triangulate(facet, normals)) {
      simplex.insert(simplex.begin(), v0);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace jkres
