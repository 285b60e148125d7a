#ifndef MEDRX_CONFIG_HPP
#define MEDRX_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "medrx/explorer.hpp"

// Tool configuration: calibration constants, default design objects and
// run limits. A user file (JSON) is merged over the built-in defaults with
// unknown keys rejected; every emitted report echoes the resolved config
// hash so outputs are traceable to the exact calibration that produced them.

namespace medrx::config {

struct Limits {
  std::size_t max_grid_points = 200000;
  std::size_t max_sim_samples = 200000000;
};

struct ToolConfig {
  std::uint64_t seed = 1;
  Limits limits;
  explorer::ModelContext model;
  explorer::DesignPoint defaults;

  static ToolConfig builtin();

  // Parses `text` (JSON), merges it over the built-in defaults and
  // validates. Unknown or wrongly-typed keys raise std::invalid_argument
  // with the dotted path of the offender.
  static ToolConfig from_json_text(const std::string& text);
  static ToolConfig from_file(const std::string& path);

  nlohmann::json to_json() const;

  // FNV-1a 64-bit hash of the canonical serialized form, hex encoded.
  std::string hash() const;

  void validate() const;
};

}  // namespace medrx::config

#endif  // MEDRX_CONFIG_HPP
