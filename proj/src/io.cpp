#include "jkres/io.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Vec vec_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_vec(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (!j.is_array() || j.empty()) fail(where, "expected a vector string \"a,b,...\" or a nonempty array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

Polynomial polynomial_from_json(const Json& j, int nvars, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return Polynomial::constant(nvars, rational_from_json(j, where));
  if (!j.is_array()) fail(where, "expected a list of [exponents, coefficient] pairs");
  Polynomial p(nvars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    const Json& t = j[i];
    if (!t.is_array() || t.size() != 2) fail(w, "expected [exponents, coefficient]");
    const Json& e = t[0];
    if (!e.is_array() || static_cast<int>(e.size()) != nvars)
      fail(w + "/0", "exponent vector must have " + std::to_string(nvars) + " entries");
    Exponents ex;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const int x = int_from_json(e[k], w + "/0/" + std::to_string(k));
      if (x < 0) fail(w + "/0/" + std::to_string(k), "negative exponent");
      ex.push_back(x);
    }
    p.add_term(ex, rational_from_json(t[1], w + "/1"));
  }
  return p;
}

RationalElement element_from_json(const Json& j, const ArrangementPtr& arr, const std::string& where) {
  const Json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  const int r = arr->dim();
  const int n = static_cast<int>(arr->input_vectors().size());
  RationalElement out(arr);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = where + "/terms/" + std::to_string(i);
    const Json& t = terms[i];
    Polynomial num = Polynomial::constant(r, Rational(1));
    if (t.is_object() && t.contains("numerator")) num = polynomial_from_json(t["numerator"], r, w + "/numerator");
    std::vector<std::pair<int, int>> den;
    if (t.is_object() && t.contains("denominator")) {
      const Json& d = t["denominator"];
      if (!d.is_array()) fail(w + "/denominator", "expected a list of [index, exponent] pairs");
      for (std::size_t k = 0; k < d.size(); ++k) {
        const std::string wk = w + "/denominator/" + std::to_string(k);
        if (!d[k].is_array() || d[k].size() != 2) fail(wk, "expected [index, exponent]");
        const int idx = int_from_json(d[k][0], wk + "/0");
        const int pw = int_from_json(d[k][1], wk + "/1");
        if (idx < 0 || idx >= n) fail(wk + "/0", "vector index " + std::to_string(idx) + " out of range");
        if (pw <= 0) fail(wk + "/1", "exponent must be positive");
        den.emplace_back(idx, pw);
      }
    } else if (!t.is_object()) {
      fail(w, "expected an object");
    }
    out += RationalElement::from_inputs(arr, num, den);
  }
  return out;
}

Problem parse_problem(const Json& j) {
  Problem p;
  if (!j.is_object()) fail("", "expected an object");
  std::vector<Vec> vectors;
  const Json& vs = member(j, "vectors", "");
  if (!vs.is_array() || vs.empty()) fail("/vectors", "expected a nonempty array");
  for (std::size_t i = 0; i < vs.size(); ++i) vectors.push_back(vec_from_json(vs[i], "/vectors/" + std::to_string(i)));
  int dim = static_cast<int>(vectors[0].size());
  if (j.contains("dim")) dim = int_from_json(j["dim"], "/dim");
  if (dim <= 0) fail("/dim", "dimension must be positive");
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (static_cast<int>(vectors[i].size()) != dim)
      fail("/vectors/" + std::to_string(i), "expected " + std::to_string(dim) + " coordinates");
  // Arrangement errors (zero vectors, non-spanning) are preconditions, not
  // parse errors, and propagate unchanged.
  p.arrangement = make_arrangement(dim, std::move(vectors));
  if (j.contains("expression")) p.expression = element_from_json(j["expression"], p.arrangement, "/expression");
  if (j.contains("options")) {
    if (!j["options"].is_object()) fail("/options", "expected an object");
    p.options = j["options"];
  }
  return p;
}

Problem parse_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

Json arrangement_to_json(const Arrangement& arr) {
  Json vs = Json::array();
  for (const auto& v : arr.input_vectors()) vs.push_back(to_string(v));
  return {{"dim", arr.dim()}, {"vectors", vs}};
}

Json forms_to_json(const Arrangement& arr) {
  Json vs = Json::array();
  for (const auto& v : arr.forms()) vs.push_back(to_string(v));
  return {{"dim", arr.dim()}, {"vectors", vs}};
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  std::vector<std::pair<Exponents, Rational>> ordered(p.terms().begin(), p.terms().end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
  for (const auto& [e, c] : ordered) out.push_back(Json::array({e, to_string(c)}));
  return out;
}

Json element_to_json(const RationalElement& phi) {
  Json terms = Json::array();
  for (const auto& t : phi.terms()) {
    Json den = Json::array();
    for (const auto& [i, n] : t.denominator) den.push_back(Json::array({i, n}));
    terms.push_back({{"numerator", polynomial_to_json(t.numerator)}, {"denominator", den}});
  }
  return {{"terms", terms}};
}

Json element_document(const RationalElement& phi) {
  Json doc = forms_to_json(*phi.arrangement());
  doc["expression"] = element_to_json(phi);
  return doc;
}

}  // namespace jkres
