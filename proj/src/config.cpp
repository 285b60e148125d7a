#include "medrx/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace medrx::config {

namespace dm = medrx::devicemodels;
namespace lb = medrx::linkbudget;
using nlohmann::json;

namespace {

std::string feedback_to_string(dm::FeedbackKind k) {
  return k == dm::FeedbackKind::resistor ? "resistor" : "off-transistor";
}

dm::FeedbackKind feedback_from_string(const std::string& s) {
  if (s == "resistor") return dm::FeedbackKind::resistor;
  if (s == "off-transistor") return dm::FeedbackKind::off_transistor;
  throw std::invalid_argument("lna.feedback: unknown value '" + s + "'");
}

std::string mode_to_string(dm::LnaMode m) {
  return m == dm::LnaMode::rf ? "rf" : "baseband-differential";
}

dm::LnaMode mode_from_string(const std::string& s) {
  if (s == "rf") return dm::LnaMode::rf;
  if (s == "baseband-differential") return dm::LnaMode::baseband_differential;
  throw std::invalid_argument("lna.mode: unknown value '" + s + "'");
}

// Recursively merges `user` over `base`, rejecting keys absent from the
// schema and scalar/type mismatches. Arrays replace wholesale.
void merge_checked(json& base, const json& user, const std::string& path) {
  if (!user.is_object() || !base.is_object()) {
    if (user.type() != base.type() &&
        !(user.is_number() && base.is_number())) {
      throw std::invalid_argument("config: type mismatch at '" + path + "'");
    }
    base = user;
    return;
  }
  for (const auto& [key, value] : user.items()) {
    const std::string sub = path.empty() ? key : path + "." + key;
    if (!base.contains(key)) {
      throw std::invalid_argument("config: unknown key '" + sub + "'");
    }
    if (base[key].is_object() && value.is_object()) {
      merge_checked(base[key], value, sub);
    } else if (base[key].is_array() && value.is_array()) {
      base[key] = value;
    } else if (base[key].type() == value.type() ||
               (base[key].is_number() && value.is_number())) {
      base[key] = value;
    } else {
      throw std::invalid_argument("config: type mismatch at '" + sub + "'");
    }
  }
}

ToolConfig from_tree(const json& j) {
  ToolConfig cfg;
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.limits.max_grid_points = j.at("limits").at("max_grid_points").get<std::size_t>();
  cfg.limits.max_sim_samples = j.at("limits").at("max_sim_samples").get<std::size_t>();

  const json& cal = j.at("calibration");
  auto& model = cfg.model;
  model.transistor.intrinsic_gain_k = cal.at("intrinsic_gain_k").get<double>();
  model.transistor.max_width_m = cal.at("max_width").get<double>();
  model.transistor.table.clear();
  for (const auto& row : cal.at("transistor_table")) {
    for (const auto& [key, v] : row.items()) {
      if (key != "gate_bias" && key != "gm_over_id" && key != "current_density") {
        throw std::invalid_argument(
            "config: unknown key 'calibration.transistor_table[]." + key + "'");
      }
    }
    model.transistor.table.push_back({row.at("gate_bias").get<double>(),
                                      row.at("gm_over_id").get<double>(),
                                      row.at("current_density").get<double>()});
  }
  model.lna_cal.gamma_eff = cal.at("gamma_eff").get<double>();
  model.lna_cal.off_feedback_resistance_ohm =
      cal.at("off_feedback_resistance").get<double>();
  model.lna_cal.match_sizing_fraction =
      cal.at("match_sizing_fraction").get<double>();
  model.drive_cal.gate_cap_per_width_f_m = cal.at("gate_cap_per_width").get<double>();
  model.drive_cal.fixed_load_cap_f = cal.at("fixed_load_cap").get<double>();
  model.drive_cal.flipflop.effective_switched_cap_f =
      cal.at("divider").at("flipflop_cap").get<double>();
  model.drive_cal.circular.effective_switched_cap_f =
      cal.at("divider").at("circular_cap").get<double>();
  model.drive_cal.flipflop.activity_factor =
      cal.at("divider").at("activity_factor").get<double>();
  model.drive_cal.circular.activity_factor =
      model.drive_cal.flipflop.activity_factor;
  model.mixer_conversion_gain_db = cal.at("mixer_conversion_gain_db").get<double>();
  model.implementation_loss_db = cal.at("implementation_loss_db").get<double>();

  const json& defs = j.at("defaults");
  auto& pt = cfg.defaults;
  const json& link = defs.at("link");
  pt.link.carrier_freq_hz = link.at("carrier_freq").get<double>();
  pt.link.distance_m = link.at("distance").get<double>();
  pt.link.eirp_dbm = link.at("eirp").get<double>();
  pt.link.channel_bw_hz = link.at("channel_bw").get<double>();
  pt.link.data_rate_bps = link.at("data_rate").get<double>();
  pt.link.ber_target = link.at("ber_target").get<double>();
  pt.link.detector = lb::detector_from_string(link.at("detector").get<std::string>());
  pt.data_rate_bps = pt.link.data_rate_bps;

  const json& lna = defs.at("lna");
  pt.lna.width_p_m = lna.at("width_p").get<double>();
  pt.lna.width_n_m = lna.at("width_n").get<double>();
  pt.lna.gate_bias_v = lna.at("gate_bias").get<double>();
  pt.lna.supply_v = lna.at("supply").get<double>();
  pt.lna.feedback = feedback_from_string(lna.at("feedback").get<std::string>());
  pt.lna.feedback_resistance = lna.at("feedback_resistance").get<double>();
  pt.lna.load_cap_f = lna.at("load_cap").get<double>();
  pt.lna.mode = mode_from_string(lna.at("mode").get<std::string>());

  const json& mixer = defs.at("mixer");
  pt.mixer.n_paths = mixer.at("n_paths").get<int>();
  pt.mixer.duty = mixer.at("duty").get<double>();
  pt.mixer.switch_width_m = mixer.at("switch_width").get<double>();
  pt.mixer.rsw_unit_ohm_m = cal.at("rsw_unit").get<double>();
  pt.mixer.source_impedance_ohm = mixer.at("source_impedance").get<double>();
  pt.mixer.baseband_cap_f = mixer.at("baseband_cap").get<double>();
  pt.mixer.lo_freq_hz = mixer.at("lo_freq").get<double>();
  pt.mixer.divider_arch =
      dm::divider_arch_from_string(mixer.at("divider_arch").get<std::string>());
  pt.mixer.supply_v = mixer.at("supply").get<double>();

  const json& match = defs.at("matching");
  pt.matching.rm_ohm = match.at("rm").get<double>();
  pt.matching.lm_h = match.at("lm").get<double>();
  pt.matching.cm_f = match.at("cm").get<double>();
  pt.matching.topology =
      dm::match_topology_from_string(match.at("topology").get<std::string>());

  cfg.validate();
  return cfg;
}

}  // namespace

ToolConfig ToolConfig::builtin() {
  ToolConfig cfg;
  cfg.seed = 1;
  // model and defaults already carry their in-class calibration defaults;
  // keep the mixer's rsw_unit in sync with the calibration section.
  cfg.defaults.mixer.rsw_unit_ohm_m = 1e-4;
  return cfg;
}

nlohmann::json ToolConfig::to_json() const {
  json j;
  j["seed"] = seed;
  j["limits"] = {{"max_grid_points", limits.max_grid_points},
                 {"max_sim_samples", limits.max_sim_samples}};

  json table = json::array();
  for (const auto& row : model.transistor.table) {
    table.push_back({{"gate_bias", row.gate_bias_v},
                     {"gm_over_id", row.gm_over_id},
                     {"current_density", row.current_density}});
  }
  j["calibration"] = {
      {"intrinsic_gain_k", model.transistor.intrinsic_gain_k},
      {"max_width", model.transistor.max_width_m},
      {"transistor_table", table},
      {"gamma_eff", model.lna_cal.gamma_eff},
      {"off_feedback_resistance", model.lna_cal.off_feedback_resistance_ohm},
      {"match_sizing_fraction", model.lna_cal.match_sizing_fraction},
      {"rsw_unit", defaults.mixer.rsw_unit_ohm_m},
      {"gate_cap_per_width", model.drive_cal.gate_cap_per_width_f_m},
      {"fixed_load_cap", model.drive_cal.fixed_load_cap_f},
      {"divider",
       {{"flipflop_cap", model.drive_cal.flipflop.effective_switched_cap_f},
        {"circular_cap", model.drive_cal.circular.effective_switched_cap_f},
        {"activity_factor", model.drive_cal.flipflop.activity_factor}}},
      {"mixer_conversion_gain_db", model.mixer_conversion_gain_db},
      {"implementation_loss_db", model.implementation_loss_db},
  };

  j["defaults"] = {
      {"link",
       {{"carrier_freq", defaults.link.carrier_freq_hz},
        {"distance", defaults.link.distance_m},
        {"eirp", defaults.link.eirp_dbm},
        {"channel_bw", defaults.link.channel_bw_hz},
        {"data_rate", defaults.link.data_rate_bps},
        {"ber_target", defaults.link.ber_target},
        {"detector", lb::to_string(defaults.link.detector)}}},
      {"lna",
       {{"width_p", defaults.lna.width_p_m},
        {"width_n", defaults.lna.width_n_m},
        {"gate_bias", defaults.lna.gate_bias_v},
        {"supply", defaults.lna.supply_v},
        {"feedback", feedback_to_string(defaults.lna.feedback)},
        {"feedback_resistance", defaults.lna.feedback_resistance},
        {"load_cap", defaults.lna.load_cap_f},
        {"mode", mode_to_string(defaults.lna.mode)}}},
      {"mixer",
       {{"n_paths", defaults.mixer.n_paths},
        {"duty", defaults.mixer.duty},
        {"switch_width", defaults.mixer.switch_width_m},
        {"source_impedance", defaults.mixer.source_impedance_ohm},
        {"baseband_cap", defaults.mixer.baseband_cap_f},
        {"lo_freq", defaults.mixer.lo_freq_hz},
        {"divider_arch", dm::to_string(defaults.mixer.divider_arch)},
        {"supply", defaults.mixer.supply_v}}},
      {"matching",
       {{"rm", defaults.matching.rm_ohm},
        {"lm", defaults.matching.lm_h},
        {"cm", defaults.matching.cm_f},
        {"topology", dm::to_string(defaults.matching.topology)}}},
  };
  return j;
}

ToolConfig ToolConfig::from_json_text(const std::string& text) {
  json user;
  try {
    user = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  json base = builtin().to_json();
  merge_checked(base, user, "");
  return from_tree(base);
}

ToolConfig ToolConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ToolConfig::hash() const {
  const std::string canon = to_json().dump();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

void ToolConfig::validate() const {
  model.transistor.validate();
  defaults.mixer.validate();
  defaults.lna.validate(model.transistor);
  defaults.link.validate();
  if (limits.max_grid_points == 0)
    throw std::domain_error("limits.max_grid_points: must be > 0");
  if (limits.max_sim_samples == 0)
    throw std::domain_error("limits.max_sim_samples: must be > 0");
  if (!(model.drive_cal.circular.effective_switched_cap_f <
        model.drive_cal.flipflop.effective_switched_cap_f)) {
    throw std::domain_error(
        "calibration.divider: circular_cap must stay below flipflop_cap");
  }
}

}  // namespace medrx::config
