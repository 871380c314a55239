#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jkres/fourier.hpp"
#include "jkres/io.hpp"

namespace jkres {

struct CommandOptions {
  std::optional<Vec> delta_witness;
  std::optional<Vec> gamma_witness;
  std::optional<Vec> point;
  std::optional<std::vector<int>> wall;  // indices of input vectors spanning the wall
  std::optional<Space> space;            // chambers: primal (default) or dual
  std::optional<int> exp_sign;           // jk-residue of e^{sign <h,z>} phi
};

// Options stored in a problem file, then overridden field by field.
CommandOptions options_from_json(const Json& options);
CommandOptions merge(CommandOptions base, const CommandOptions& overrides);
Space parse_space(const std::string& s);

struct CommandResult {
  std::string text;
  Json json;
};

const std::vector<std::string>& command_names();

// Runs one analysis command. Throws ParseError for malformed input and
// jkres::Error for violated preconditions.
CommandResult run_command(const std::string& name, const Problem& problem, const CommandOptions& options);

// SVG 1.1 drawing of the primal fan of a rank-2 arrangement clipped to the
// unit box, each chamber labelled with its piece.
std::string render_svg(const PiecewisePoly& pp);

}  // namespace jkres
