#include "jkres/linalg.hpp"

#include <sstream>

#include "jkres/errors.hpp"

namespace jkres {

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

Vec negate(const Vec& a) { return scale(a, Rational(-1)); }

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

PrimitiveForm primitive(const Vec& v) {
  if (is_zero(v)) throw InvalidArgument("primitive form of the zero vector");
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (den / x.get_den());
    g = gcd(g, n);
  }
  Rational s(g, den);
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) s = -s;
      break;
    }
  }
  s.canonicalize();
  Vec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / s;
  return {std::move(p), s};
}

std::optional<Rational> proportionality(const Vec& a, const Vec& b) {
  std::optional<Rational> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) {
      if (a[i] != 0) return std::nullopt;
      continue;
    }
    Rational q = a[i] / b[i];
    if (t && *t != q) return std::nullopt;
    t = q;
  }
  if (!t || *t == 0) return std::nullopt;
  return t;
}

namespace {

// In-place row reduction; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m = vectors;
  return row_reduce(m, m[0].size()).size();
}

bool independent(const std::vector<Vec>& vectors) { return rank(vectors) == vectors.size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Augmented system [basis^T | v].
  Matrix m(n, Vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  auto pivots = row_reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw Degenerate("coordinates: family is not independent");
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) x[pivots[i]] = m[i][k];
  return x;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix m(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  auto pivots = row_reduce(m, n);
  if (pivots.size() != n) throw Degenerate("matrix is singular");
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Vec apply(const Matrix& m, const Vec& v) {
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t n) {
  Matrix m = rows;
  auto pivots = row_reduce(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x = zero_vec(n);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec> complete_with_units(const std::vector<Vec>& family, std::size_t n) {
  std::vector<Vec> all = family;
  std::vector<Vec> added;
  for (std::size_t i = 0; i < n && all.size() < n; ++i) {
    all.push_back(unit_vec(n, i));
    if (rank(all) == all.size()) {
      added.push_back(all.back());
    } else {
      all.pop_back();
    }
  }
  return added;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') throw ParseError("malformed rational '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

Vec parse_vec(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw ParseError("empty vector '" + text + "'");
  return v;
}

}  // namespace jkres
