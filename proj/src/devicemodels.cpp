#include "medrx/devicemodels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "medrx/units.hpp"

namespace medrx::devicemodels {

void TransistorModel::validate() const {
  if (table.empty())
    throw std::domain_error("TransistorModel.table: needs at least one bias entry");
  if (!(intrinsic_gain_k >= 1.0) || !(intrinsic_gain_k <= 100.0))
    throw std::domain_error("TransistorModel.intrinsic_gain_k: must be in [1, 100]");
  if (!(max_width_m > 0.0))
    throw std::domain_error("TransistorModel.max_width: must be > 0");
  for (const auto& row : table) {
    if (!(row.gate_bias_v > 0.0) || !(row.gm_over_id > 0.0) ||
        !(row.current_density > 0.0)) {
      throw std::domain_error("TransistorModel.table: entries must be positive");
    }
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (!(table[i].gate_bias_v > table[i - 1].gate_bias_v))
      throw std::domain_error("TransistorModel.table: biases must be strictly increasing");
  }
}

BiasPoint TransistorModel::at_bias(double gate_bias_v) const {
  validate();
  if (gate_bias_v < table.front().gate_bias_v - 1e-12 ||
      gate_bias_v > table.back().gate_bias_v + 1e-12) {
    throw std::out_of_range(
        "gate_bias " + std::to_string(gate_bias_v) + " V outside calibrated range [" +
        std::to_string(table.front().gate_bias_v) + ", " +
        std::to_string(table.back().gate_bias_v) + "]");
  }
  if (gate_bias_v <= table.front().gate_bias_v) return table.front();
  if (gate_bias_v >= table.back().gate_bias_v) return table.back();
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (gate_bias_v <= table[i].gate_bias_v) {
      const auto& lo = table[i - 1];
      const auto& hi = table[i];
      const double t = (gate_bias_v - lo.gate_bias_v) /
                       (hi.gate_bias_v - lo.gate_bias_v);
      return BiasPoint{gate_bias_v,
                       lo.gm_over_id + t * (hi.gm_over_id - lo.gm_over_id),
                       lo.current_density +
                           t * (hi.current_density - lo.current_density)};
    }
  }
  return table.back();
}

TransistorModel TransistorModel::default_65nm() {
  TransistorModel m;
  m.intrinsic_gain_k = 10.5;
  m.max_width_m = 1.2e-3;
  // Three usable gate biases; below the lowest the required device width
  // exceeds practical limits.
  m.table = {{0.45, 25.0, 0.10}, {0.50, 18.0, 0.90}, {0.55, 12.0, 3.30}};
  return m;
}

void LnaDesign::validate(const TransistorModel& model) const {
  model.validate();
  if (!(width_p_m > 0.0) || width_p_m > model.max_width_m)
    throw std::domain_error("LnaDesign.width_p: must be in (0, max_width]");
  if (!(width_n_m > 0.0) || width_n_m > model.max_width_m)
    throw std::domain_error("LnaDesign.width_n: must be in (0, max_width]");
  if (!(supply_v > 0.0)) throw std::domain_error("LnaDesign.supply: must be > 0");
  if (!(load_cap_f > 0.0)) throw std::domain_error("LnaDesign.load_cap: must be > 0");
  if (feedback == FeedbackKind::resistor && !(feedback_resistance > 0.0))
    throw std::domain_error("LnaDesign.feedback_resistance: must be > 0");
}

std::vector<std::string> LnaDesign::warnings() const {
  std::vector<std::string> out;
  const double ratio = width_p_m / width_n_m;
  if (ratio < 1.5 || ratio > 2.5) {
    out.push_back("P:N width ratio " + std::to_string(ratio) +
                  " far from the 2:1 mobility-compensating ratio; output "
                  "node will not bias near VDD/2");
  }
  return out;
}

void DividerModel::validate() const {
  if (!(effective_switched_cap_f > 0.0))
    throw std::domain_error("DividerModel.effective_switched_cap: must be > 0");
  if (!(supply_v > 0.0)) throw std::domain_error("DividerModel.supply: must be > 0");
  if (!(activity_factor > 0.0))
    throw std::domain_error("DividerModel.activity_factor: must be > 0");
}

std::string to_string(DividerArch a) {
  return a == DividerArch::flip_flop ? "flip-flop" : "circular";
}

DividerArch divider_arch_from_string(const std::string& s) {
  if (s == "flip-flop") return DividerArch::flip_flop;
  if (s == "circular") return DividerArch::circular;
  throw std::invalid_argument("divider_arch: unknown value '" + s + "'");
}

void MixerDesign::validate() const {
  if (n_paths != 1 && n_paths != 2 && n_paths != 4)
    throw std::domain_error("MixerDesign.n_paths: must be 1, 2 or 4");
  if (!(duty > 0.0) || n_paths * duty > 1.0 + 1e-12)
    throw std::domain_error("MixerDesign.duty: need n_paths*duty <= 1 for non-overlap");
  if (!(switch_width_m > 0.0))
    throw std::domain_error("MixerDesign.switch_width: must be > 0");
  if (!(rsw_unit_ohm_m > 0.0))
    throw std::domain_error("MixerDesign.rsw_unit: must be > 0");
  if (!(baseband_cap_f > 0.0))
    throw std::domain_error("MixerDesign.baseband_cap: must be > 0");
  if (!(lo_freq_hz > 0.0)) throw std::domain_error("MixerDesign.lo_freq: must be > 0");
  if (!(supply_v > 0.0)) throw std::domain_error("MixerDesign.supply: must be > 0");
  const double rsw = rsw_unit_ohm_m / switch_width_m;
  if (!(source_impedance_ohm > rsw)) {
    throw std::domain_error(
        "MixerDesign.source_impedance: must exceed the switch resistance (" +
        std::to_string(rsw) + " ohm) for the noise model to hold");
  }
}

double lna_input_impedance(double rf_ohm, double gm_s, double ro_ohm) {
  if (!(rf_ohm > 0.0) || !(gm_s > 0.0) || !(ro_ohm > 0.0))
    throw std::domain_error("lna_input_impedance: all arguments must be > 0");
  const double denom = 1.0 + gm_s * ro_ohm;
  return rf_ohm / denom + ro_ohm / denom;
}

double solve_feedback_resistor(double zin_target_ohm, double gm_s, double k) {
  if (!(zin_target_ohm > 0.0) || !(gm_s > 0.0) || k < 0.0)
    throw std::domain_error("solve_feedback_resistor: invalid arguments");
  const double rf = zin_target_ohm * (1.0 + k) - k / gm_s;
  if (!(rf > 0.0)) {
    const double zin_min = k / (gm_s * (1.0 + k));
    throw std::domain_error(
        "solve_feedback_resistor: target " + std::to_string(zin_target_ohm) +
        " ohm unreachable; minimum achievable Zin is " +
        std::to_string(zin_min) + " ohm at this gm and k");
  }
  return rf;
}

double lna_stage_nf_db(double gm_s, double z_source_ohm, double gamma_eff) {
  if (!(gm_s > 0.0) || !(z_source_ohm > 0.0) || !(gamma_eff > 0.0))
    throw std::domain_error("lna_stage_nf: arguments must be > 0");
  return db_from_ratio(1.0 + gamma_eff / (gm_s * z_source_ohm));
}

LnaReport lna_operating_point(const LnaDesign& design,
                              const TransistorModel& model,
                              const LnaCalibration& cal) {
  design.validate(model);
  const BiasPoint bias = model.at_bias(design.gate_bias_v);

  LnaReport rep;
  const double current =
      bias.current_density * (design.width_p_m + design.width_n_m);
  rep.power_w = design.supply_v * current;
  rep.gm_s = bias.gm_over_id * current;
  rep.ro_ohm = model.intrinsic_gain_k / rep.gm_s;
  rep.rf_used_ohm = design.feedback == FeedbackKind::resistor
                        ? design.feedback_resistance
                        : cal.off_feedback_resistance_ohm;

  const double r_out = 1.0 / (1.0 / rep.ro_ohm + 1.0 / rep.rf_used_ohm);
  rep.bandwidth_hz = 1.0 / (2.0 * kPi * r_out * design.load_cap_f);
  rep.flat_band_gain_db = db_from_amplitude(rep.gm_s * r_out);
  rep.zin_ohm = lna_input_impedance(rep.rf_used_ohm, rep.gm_s, rep.ro_ohm);
  rep.nf_db = lna_stage_nf_db(rep.gm_s, rep.zin_ohm, cal.gamma_eff);
  return rep;
}

LnaDesign size_lna_for_match(double zin_target_ohm, double gate_bias_v,
                             const TransistorModel& model,
                             const LnaCalibration& cal, double load_cap_f) {
  if (!(zin_target_ohm > 0.0))
    throw std::domain_error("size_lna_for_match: zin_target must be > 0");
  const BiasPoint bias = model.at_bias(gate_bias_v);
  const double k = model.intrinsic_gain_k;
  const double beta = cal.match_sizing_fraction;
  if (!(beta > 0.0) || !(beta < 1.0))
    throw std::domain_error("match_sizing_fraction: must be in (0, 1)");

  // Split the (1+k)*Zin budget between k/gm and Rf; beta fixes the split.
  const double gm = k / (beta * (1.0 + k) * zin_target_ohm);
  const double current = gm / bias.gm_over_id;
  const double total_width = current / bias.current_density;
  if (total_width > 1.5 * model.max_width_m) {
    throw std::domain_error(
        "size_lna_for_match: matching to " + std::to_string(zin_target_ohm) +
        " ohm at bias " + std::to_string(gate_bias_v) + " V needs total width " +
        std::to_string(total_width * 1e6) + " um, beyond device limits");
  }

  LnaDesign d;
  d.width_p_m = total_width * 2.0 / 3.0;
  d.width_n_m = total_width / 3.0;
  d.gate_bias_v = gate_bias_v;
  d.supply_v = 1.0;
  d.feedback = FeedbackKind::resistor;
  d.feedback_resistance = solve_feedback_resistor(zin_target_ohm, gm, k);
  d.load_cap_f = load_cap_f;
  d.mode = LnaMode::rf;
  return d;
}

double mixer_noise_figure_db(double rsw_ohm, double rs_ohm) {
  if (rsw_ohm < 0.0 || !(rs_ohm > 0.0))
    throw std::domain_error("mixer_noise_figure: need rsw >= 0 and rs > 0");
  const double r = rsw_ohm / rs_ohm;
  if (r >= 1.0)
    throw std::domain_error(
        "mixer_noise_figure: rsw must be below rs (formula pole at rsw = rs)");
  const double nf_lin = (kPi * kPi / 4.0) * (1.0 + r) / (1.0 - r);
  return db_from_ratio(nf_lin);
}

double switch_resistance(double width_m, const MixerDesign& mixer) {
  if (!(width_m > 0.0))
    throw std::domain_error("switch_resistance: width must be > 0");
  return mixer.rsw_unit_ohm_m / width_m;
}

double divider_power_w(const DividerModel& model, double freq_hz) {
  model.validate();
  if (freq_hz < 0.0) throw std::domain_error("divider_power: freq must be >= 0");
  return model.activity_factor * model.effective_switched_cap_f *
         model.supply_v * model.supply_v * freq_hz;
}

const DividerModel& MixerDriveCalibration::divider_for(DividerArch arch) const {
  return arch == DividerArch::flip_flop ? flipflop : circular;
}

double mixer_drive_power_w(const MixerDesign& mixer, double freq_hz,
                           const MixerDriveCalibration& cal,
                           bool include_fixed_load) {
  mixer.validate();
  DividerModel d = cal.divider_for(mixer.divider_arch);
  d.supply_v = mixer.supply_v;
  d.effective_switched_cap_f +=
      mixer.n_paths * cal.gate_cap_per_width_f_m * mixer.switch_width_m;
  if (include_fixed_load) d.effective_switched_cap_f += cal.fixed_load_cap_f;
  return divider_power_w(d, freq_hz);
}

std::string to_string(MatchTopology t) {
  return t == MatchTopology::series_c_shunt_l ? "series-c-shunt-l"
                                              : "series-l-shunt-c";
}

MatchTopology match_topology_from_string(const std::string& s) {
  if (s == "series-c-shunt-l") return MatchTopology::series_c_shunt_l;
  if (s == "series-l-shunt-c") return MatchTopology::series_l_shunt_c;
  throw std::invalid_argument("match_topology: unknown value '" + s + "'");
}

std::complex<double> matching_transform(double rm_ohm, double lm_h, double cm_f,
                                        double freq_hz,
                                        MatchTopology topology) {
  if (!(rm_ohm > 0.0) || !(lm_h > 0.0) || !(cm_f > 0.0))
    throw std::domain_error("matching_transform: component values must be > 0");
  if (!(freq_hz >= 0.0))
    throw std::domain_error("matching_transform: freq must be >= 0");
  const double w = 2.0 * kPi * freq_hz;
  const std::complex<double> zl(0.0, w * lm_h);
  const std::complex<double> zc =
      w > 0.0 ? std::complex<double>(0.0, -1.0 / (w * cm_f))
              : std::complex<double>(0.0, 0.0);

  if (topology == MatchTopology::series_l_shunt_c) {
    // Mixer node: shunt C, then series L to the rm termination.
    if (w == 0.0) return {rm_ohm, 0.0};
    const std::complex<double> branch = rm_ohm + zl;
    return zc * branch / (zc + branch);
  }
  // Mixer node: shunt L, then series C to the rm termination.
  if (w == 0.0) return {0.0, 0.0};
  const std::complex<double> branch = rm_ohm + zc;
  return zl * branch / (zl + branch);
}

double cascade_nf_db(const std::vector<NoiseStage>& stages) {
  if (stages.empty())
    throw std::domain_error("cascade_nf: needs at least one stage");
  double f_total = 0.0;
  double gain_product = 1.0;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const NoiseStage& st = stages[i];
    if (std::isnan(st.gain_db) || (std::isinf(st.gain_db) && st.gain_db < 0.0))
      throw std::domain_error("cascade_nf: gains must be finite or +inf");
    if (st.nf_db < 0.0)
      throw std::domain_error("cascade_nf: stage NF below 0 dB is unphysical");
    const double f = ratio_from_db(st.nf_db);
    f_total = (i == 0) ? f : f_total + (f - 1.0) / gain_product;
    gain_product *= std::isinf(st.gain_db)
                        ? std::numeric_limits<double>::infinity()
                        : ratio_from_db(st.gain_db);
  }
  return db_from_ratio(f_total);
}

}  // namespace medrx::devicemodels
