#include "jkres/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

std::string paren(const Vec& v) { return "(" + to_string(v) + ")"; }

std::string vectors_text(const Arrangement& arr, const BasisTuple& b) {
  std::string s;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? " " : "") + paren(arr.form(b[k]));
  return s;
}

Json vectors_json(const Arrangement& arr, const BasisTuple& b) {
  Json out = Json::array();
  for (int i : b) out.push_back(to_string(arr.form(i)));
  return out;
}

const RationalElement& require_expression(const Problem& p) {
  if (!p.expression) throw ParseError("/expression: missing key \"expression\" required by this command");
  return *p.expression;
}

Json base_json(const std::string& name, const Arrangement& arr) {
  Json j = forms_to_json(arr);
  j = Json{{"command", name}, {"dim", j["dim"]}, {"vectors", j["vectors"]}};
  return j;
}

Chamber dual_chamber(const Arrangement& arr, const CommandOptions& o) {
  if (o.delta_witness) {
    if (static_cast<int>(o.delta_witness->size()) != arr.dim())
      throw InvalidArgument("delta witness has the wrong dimension");
    return find_chamber(arr, *o.delta_witness, Space::Dual);
  }
  return Fan::dual(arr).chamber(0);
}

Chamber primal_chamber(const Arrangement& arr, const CommandOptions& o) {
  if (o.gamma_witness) {
    if (static_cast<int>(o.gamma_witness->size()) != arr.dim())
      throw InvalidArgument("gamma witness has the wrong dimension");
    return find_chamber(arr, *o.gamma_witness, Space::Primal);
  }
  return Fan::primal(arr).chamber(0);
}

std::vector<WallData> selected_walls(const ArrangementPtr& arr, const CommandOptions& o) {
  if (!o.wall) return walls(arr);
  std::vector<int> span;
  for (int i : *o.wall) {
    if (i < 0 || i >= static_cast<int>(arr->input_vectors().size()))
      throw InvalidArgument("wall index " + std::to_string(i) + " out of range");
    span.push_back(static_cast<int>(arr->input_class(i).form));
  }
  return {make_wall(arr, span)};
}

Json chamber_json(const Chamber& c) { return {{"witness", to_string(c.witness)}, {"signs", c.signs}}; }

std::string signs_text(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

Json wall_json(const WallData& w) {
  Json frame = Json::array();
  for (const auto& f : w.frame) frame.push_back(to_string(f));
  return {{"equation", to_string(w.equation)}, {"frame", frame}, {"density", to_string(w.density)}};
}

// Pieces of an inverse Laplace transform, one line per chamber.
void emit_pieces(const PiecewisePoly& pp, std::ostringstream& text, Json& pieces) {
  for (const auto& c : pp.fan->chambers()) {
    const Polynomial& p = pp.pieces[c.id];
    text << "chamber " << paren(c.witness) << " " << signs_text(c.signs) << ": " << p.to_string("h") << "\n";
    Json cj = chamber_json(c);
    cj["piece"] = polynomial_to_json(p);
    cj["text"] = p.to_string("h");
    pieces.push_back(cj);
  }
}

CommandResult cmd_normalize(const Problem& p) {
  const RationalElement n = normalize(require_expression(p));
  Json j = base_json("normalize", *n.arrangement());
  j["expression"] = element_to_json(n);
  return {n.to_string() + "\n", j};
}

CommandResult cmd_split(const Problem& p) {
  const SplitForm s = split(require_expression(p));
  const auto& arr = *s.arrangement;
  Json j = base_json("split", arr);
  j["g"] = element_to_json(s.g_element());
  j["ng"] = element_to_json(s.ng_element());
  Json gt = Json::array();
  for (const auto& t : s.g_part)
    gt.push_back({{"coefficient", to_string(t.coefficient)}, {"basis", t.basis}, {"exponents", t.exponents}});
  j["g_terms"] = gt;
  std::ostringstream text;
  text << "G: " << s.g_element().to_string() << "\n";
  text << "NG: " << s.ng_element().to_string() << "\n";
  return {text.str(), j};
}

CommandResult cmd_jk_residue(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  const auto basis = nbc_basis(arr);
  Json j = base_json("jk-residue", arr);
  Json coords = Json::array();
  std::ostringstream text;
  if (o.exp_sign) {
    if (*o.exp_sign != 1 && *o.exp_sign != -1) throw InvalidArgument("exponential sign must be +1 or -1");
    j["exp_sign"] = *o.exp_sign;
    const auto c = jk_residue_exp(phi, *o.exp_sign);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      text << vectors_text(arr, basis[k]) << ": " << c[k].to_string("h") << "\n";
      coords.push_back({{"basis", basis[k]}, {"value", polynomial_to_json(c[k])}, {"text", c[k].to_string("h")}});
    }
  } else {
    const Vec c = jk_residue(phi);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      text << vectors_text(arr, basis[k]) << ": " << to_string(c[k]) << "\n";
      coords.push_back({{"basis", basis[k]}, {"value", to_string(c[k])}});
    }
  }
  j["coordinates"] = coords;
  return {text.str(), j};
}

CommandResult cmd_nbc_basis(const Problem& p) {
  const auto& arr = *p.arrangement;
  const auto basis = nbc_basis(arr);
  Json j = base_json("nbc-basis", arr);
  Json list = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    text << "b" << k + 1 << ": " << vectors_text(arr, basis[k]) << "\n";
    list.push_back({{"indices", basis[k]}, {"vectors", vectors_json(arr, basis[k])}});
  }
  j["basis"] = list;
  return {text.str(), j};
}

CommandResult cmd_dual_check(const Problem& p) {
  const auto& arrp = p.arrangement;
  const auto basis = nbc_basis(*arrp);
  Json j = base_json("dual-check", *arrp);
  Json rows = Json::array();
  std::ostringstream text;
  bool identity = true;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational v = iterated_residue(basis[a], RationalElement::phi(arrp, basis[b]));
      identity = identity && v == (a == b ? 1 : 0);
      row.push_back(to_string(v));
      text << (b ? " " : "") << to_string(v);
    }
    rows.push_back(row);
    text << "\n";
  }
  text << "identity: " << (identity ? "true" : "false") << "\n";
  j["matrix"] = rows;
  j["identity"] = identity;
  return {text.str(), j};
}

CommandResult cmd_wall_residue(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  Json j = base_json("wall-residue", *phi.arrangement());
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& w : selected_walls(phi.arrangement(), o)) {
    const RationalElement res = wall_residue(phi, w);
    text << "wall " << paren(w.equation) << " = 0: " << res.to_string() << "\n";
    Json wj = wall_json(w);
    wj["residue"] = element_document(res);
    list.push_back(wj);
  }
  j["walls"] = list;
  return {text.str(), j};
}

CommandResult cmd_separate(const Problem& p) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  Json j = base_json("separate", arr);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& [b, d] : separate_variables(phi)) {
    text << vectors_text(arr, b) << ": " << d.to_string("h") << "\n";
    list.push_back({{"basis", b}, {"operator", polynomial_to_json(d)}, {"text", d.to_string("h")}});
  }
  j["operators"] = list;
  return {text.str(), j};
}

CommandResult cmd_inverse_laplace(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  const Chamber delta = dual_chamber(arr, o);
  const PiecewisePoly pp = inverse_laplace(phi, delta);
  Json j = base_json("inverse-laplace", arr);
  j["delta"] = chamber_json(delta);
  Json pieces = Json::array();
  std::ostringstream text;
  text << "delta " << paren(delta.witness) << "\n";
  emit_pieces(pp, text, pieces);
  j["pieces"] = pieces;
  return {text.str(), j};
}

CommandResult cmd_jump_check(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  const Chamber delta = dual_chamber(arr, o);
  Json j = base_json("jump-check", arr);
  j["delta"] = chamber_json(delta);
  Json list = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& w : selected_walls(phi.arrangement(), o)) {
    const JumpComparison cmp = compare_jump(phi, w, delta);
    all = all && cmp.equal;
    text << "wall " << paren(w.equation) << " = 0: " << (cmp.equal ? "equal" : "DIFFERENT") << "\n";
    Json cells = Json::array();
    for (std::size_t c = 0; c < cmp.lhs.values.size(); ++c) {
      const auto& cell = cmp.lhs.cells->chamber(c);
      text << "  cell " << paren(cell.witness) << ": jump " << cmp.lhs.values[c].to_string("w") << ", residue side "
           << cmp.rhs[c].to_string("w") << "\n";
      cells.push_back({{"witness", to_string(cell.witness)},
                       {"jump", polynomial_to_json(cmp.lhs.values[c])},
                       {"residue_side", polynomial_to_json(cmp.rhs[c])}});
    }
    Json wj = wall_json(w);
    wj["equal"] = cmp.equal;
    wj["cells"] = cells;
    list.push_back(wj);
  }
  text << "all equal: " << (all ? "true" : "false") << "\n";
  j["walls"] = list;
  j["equal"] = all;
  return {text.str(), j};
}

CommandResult cmd_smoothness(const Problem& p) {
  const RationalElement& phi = require_expression(p);
  const int k = smoothness_class(phi);
  Json j = base_json("smoothness", *phi.arrangement());
  if (k == kVanishesIdentically) {
    j["class"] = "infinity";
    return {"infinity\n", j};
  }
  j["class"] = k;
  return {std::to_string(k) + "\n", j};
}

CommandResult cmd_fourier(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  const Chamber delta = dual_chamber(arr, o);
  const Chamber gamma = primal_chamber(arr, o);
  const ConeFunction f = stratified_fourier(phi, gamma, delta);
  Json j = base_json("fourier", arr);
  j["delta"] = chamber_json(delta);
  j["gamma"] = chamber_json(gamma);
  Json terms = Json::array();
  std::ostringstream text;
  for (const auto& t : f.terms) {
    Json gens = Json::array();
    std::string g;
    for (std::size_t k = 0; k < t.cone.generators.size(); ++k) {
      gens.push_back(to_string(t.cone.generators[k]));
      g += (k ? " " : "") + paren(t.cone.generators[k]) + (t.cone.strict[k] ? "'" : "");
    }
    text << t.coefficient.to_string("h") << " on cone " << g << "\n";
    std::vector<bool> strict(t.cone.strict.begin(), t.cone.strict.end());
    terms.push_back({{"coefficient", polynomial_to_json(t.coefficient)},
                     {"generators", gens},
                     {"strict", strict},
                     {"text", t.coefficient.to_string("h")}});
  }
  j["terms"] = terms;
  if (o.point) {
    if (static_cast<int>(o.point->size()) != arr.dim()) throw InvalidArgument("point has the wrong dimension");
    const Rational v = evaluate_total(f, *o.point);
    text << "value at " << paren(*o.point) << ": " << to_string(v) << "\n";
    j["point"] = to_string(*o.point);
    j["value"] = to_string(v);
  }
  return {text.str(), j};
}

CommandResult cmd_chambers(const Problem& p, const CommandOptions& o) {
  const auto& arr = *p.arrangement;
  const Space space = o.space.value_or(Space::Primal);
  const Fan fan = space == Space::Primal ? Fan::primal(arr) : Fan::dual(arr);
  Json j = base_json("chambers", arr);
  j["space"] = space == Space::Primal ? "primal" : "dual";
  Json normals = Json::array();
  for (const auto& n : fan.normals()) normals.push_back(to_string(n));
  j["normals"] = normals;
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& c : fan.chambers()) {
    text << c.id << ": " << signs_text(c.signs) << " witness " << paren(c.witness) << "\n";
    list.push_back(chamber_json(c));
  }
  j["chambers"] = list;
  return {text.str(), j};
}

CommandResult cmd_plot(const Problem& p, const CommandOptions& o) {
  const RationalElement& phi = require_expression(p);
  const auto& arr = *phi.arrangement();
  if (arr.dim() != 2) throw InvalidArgument("plot needs a rank-2 arrangement");
  const PiecewisePoly pp = inverse_laplace(phi, dual_chamber(arr, o));
  const std::string svg = render_svg(pp);
  Json j = base_json("plot", arr);
  j["svg"] = svg;
  return {svg, j};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') {
      out += "&lt;";
    } else if (c == '>') {
      out += "&gt;";
    } else if (c == '&') {
      out += "&amp;";
    } else {
      out += c;
    }
  }
  return out;
}

// Scale a direction so that its largest coordinate has absolute value 1.
std::pair<double, double> to_box(const Vec& v) {
  const double x = v[0].get_d(), y = v[1].get_d();
  const double m = std::max(std::abs(x), std::abs(y));
  return {x / m, y / m};
}

}  // namespace

std::string render_svg(const PiecewisePoly& pp) {
  constexpr double kCenter = 200, kScale = 180;
  auto px = [&](double x) { return fmt(kCenter + kScale * x); };
  auto py = [&](double y) { return fmt(kCenter - kScale * y); };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 "
       "400\">\n";
  s << "  <rect x=\"" << px(-1) << "\" y=\"" << py(1) << "\" width=\"" << fmt(2 * kScale) << "\" height=\""
    << fmt(2 * kScale) << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& n : pp.fan->normals()) {
    const auto [x, y] = to_box({-n[1], n[0]});
    s << "  <line x1=\"" << px(-x) << "\" y1=\"" << py(-y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(y)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& c : pp.fan->chambers()) {
    double x = 0, y = 0;
    for (const auto& r : chamber_rays(*pp.fan, c)) {
      const auto [rx, ry] = to_box(r);
      x += rx;
      y += ry;
    }
    const double m = std::max(std::abs(x), std::abs(y));
    if (m == 0) {
      std::tie(x, y) = to_box(c.witness);
    } else {
      x /= m;
      y /= m;
    }
    s << "  <text x=\"" << px(0.6 * x) << "\" y=\"" << py(0.6 * y)
      << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
      << xml_escape(pp.pieces[c.id].to_string("h")) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

Space parse_space(const std::string& s) {
  if (s == "primal") return Space::Primal;
  if (s == "dual") return Space::Dual;
  throw ParseError("space must be \"primal\" or \"dual\", got \"" + s + "\"");
}

CommandOptions options_from_json(const Json& options) {
  CommandOptions o;
  if (options.contains("delta_witness")) o.delta_witness = vec_from_json(options["delta_witness"], "/options/delta_witness");
  if (options.contains("gamma_witness")) o.gamma_witness = vec_from_json(options["gamma_witness"], "/options/gamma_witness");
  if (options.contains("point")) o.point = vec_from_json(options["point"], "/options/point");
  if (options.contains("wall")) {
    const Json& w = options["wall"];
    if (!w.is_array()) throw ParseError("/options/wall: expected a list of vector indices");
    std::vector<int> idx;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number_integer()) throw ParseError("/options/wall/" + std::to_string(i) + ": expected an integer");
      idx.push_back(w[i].get<int>());
    }
    o.wall = idx;
  }
  if (options.contains("space")) {
    if (!options["space"].is_string()) throw ParseError("/options/space: expected a string");
    o.space = parse_space(options["space"].get<std::string>());
  }
  if (options.contains("exp_sign")) {
    if (!options["exp_sign"].is_number_integer()) throw ParseError("/options/exp_sign: expected 1 or -1");
    o.exp_sign = options["exp_sign"].get<int>();
  }
  return o;
}

CommandOptions merge(CommandOptions base, const CommandOptions& overrides) {
  if (overrides.delta_witness) base.delta_witness = overrides.delta_witness;
  if (overrides.gamma_witness) base.gamma_witness = overrides.gamma_witness;
  if (overrides.point) base.point = overrides.point;
  if (overrides.wall) base.wall = overrides.wall;
  if (overrides.exp_sign) base.exp_sign = overrides.exp_sign;
  if (overrides.space) base.space = overrides.space;
  return base;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"normalize",  "split",          "jk-residue", "nbc-basis",
                                              "dual-check", "wall-residue",   "separate",   "inverse-laplace",
                                              "jump-check", "smoothness",     "fourier",    "chambers",
                                              "plot"};
  return names;
}

CommandResult run_command(const std::string& name, const Problem& problem, const CommandOptions& options) {
  if (name == "normalize") return cmd_normalize(problem);
  if (name == "split") return cmd_split(problem);
  if (name == "jk-residue") return cmd_jk_residue(problem, options);
  if (name == "nbc-basis") return cmd_nbc_basis(problem);
  if (name == "dual-check") return cmd_dual_check(problem);
  if (name == "wall-residue") return cmd_wall_residue(problem, options);
  if (name == "separate") return cmd_separate(problem);
  if (name == "inverse-laplace") return cmd_inverse_laplace(problem, options);
  if (name == "jump-check") return cmd_jump_check(problem, options);
  if (name == "smoothness") return cmd_smoothness(problem);
  if (name == "fourier") return cmd_fourier(problem, options);
  if (name == "chambers") return cmd_chambers(problem, options);
  if (name == "plot") return cmd_plot(problem, options);
  throw ParseError("unknown command \"" + name + "\"");
}

}  // namespace jkres
