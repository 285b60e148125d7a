#ifndef MEDRX_DEVICEMODELS_HPP
#define MEDRX_DEVICEMODELS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

// Analytic and calibrated trend models of the front-end blocks: the
// resistive-feedback LNA (matching, power/bandwidth/gain/NF), the N-path
// passive mixer noise figure, divider and switch-drive dynamic power, the
// off-chip step-up matching network, and noise-figure cascading.
//
// The LNA model is a parametric trend model keyed on a small calibration
// table (gate bias -> gm/Id, current density), not transistor physics; the
// table defaults reproduce the ordinal behavior of a 65 nm inverter-based
// design without claiming device accuracy.

namespace medrx::devicemodels {

struct BiasPoint {
  double gate_bias_v = 0.0;
  double gm_over_id = 0.0;      // 1/V
  double current_density = 0.0; // A per meter of total width
};

struct TransistorModel {
  double intrinsic_gain_k = 10.5;  // k = gm*ro
  double max_width_m = 1.2e-3;
  std::vector<BiasPoint> table;  // sorted by gate bias

  void validate() const;
  // Linear interpolation; throws std::out_of_range outside the table.
  BiasPoint at_bias(double gate_bias_v) const;

  static TransistorModel default_65nm();
};

enum class FeedbackKind { resistor, off_transistor };
enum class LnaMode { rf, baseband_differential };

struct LnaDesign {
  double width_p_m = 20e-6;
  double width_n_m = 10e-6;
  double gate_bias_v = 0.45;
  double supply_v = 1.0;
  FeedbackKind feedback = FeedbackKind::off_transistor;
  double feedback_resistance = 0.0;  // used when feedback == resistor
  double load_cap_f = 3.84e-12;
  LnaMode mode = LnaMode::baseband_differential;

  void validate(const TransistorModel& model) const;
  // Non-fatal design advisories (e.g. P:N width ratio far from 2:1).
  std::vector<std::string> warnings() const;
};

struct LnaReport {
  double power_w = 0.0;
  double bandwidth_hz = 0.0;
  double flat_band_gain_db = 0.0;
  double nf_db = 0.0;  // at the matched source impedance (the design's own Zin)
  double zin_ohm = 0.0;
  double rf_used_ohm = 0.0;
  double gm_s = 0.0;
  double ro_ohm = 0.0;
};

struct DividerModel {
  std::string arch = "circular";
  double effective_switched_cap_f = 30e-15;
  double supply_v = 1.0;
  double activity_factor = 1.0;

  void validate() const;
};

enum class DividerArch { flip_flop, circular };

std::string to_string(DividerArch a);
DividerArch divider_arch_from_string(const std::string& s);

struct MixerDesign {
  int n_paths = 2;  // 2 or 4
  double duty = 0.25;
  double switch_width_m = 10e-6;
  double rsw_unit_ohm_m = 1e-4;  // resistance-width product
  double source_impedance_ohm = 50.0;
  double baseband_cap_f = 4.4e-9;
  double lo_freq_hz = 403.5e6;
  DividerArch divider_arch = DividerArch::circular;
  double supply_v = 1.0;

  void validate() const;
};

// --- LNA matching math -----------------------------------------------------

// Z = rf/(1+gm*ro) + ro/(1+gm*ro).
double lna_input_impedance(double rf_ohm, double gm_s, double ro_ohm);

// rf = zin*(1+k) - k/gm; throws when no positive resistor achieves the
// target, naming the minimum reachable input impedance k/(gm*(1+k)).
double solve_feedback_resistor(double zin_target_ohm, double gm_s, double k);

struct LnaCalibration {
  double gamma_eff = 1.0;
  double off_feedback_resistance_ohm = 1e7;
  // Fraction of the (1+k)*Zin budget carried by k/gm under matched sizing.
  double match_sizing_fraction = 0.5;
};

// Excess-noise model F = 1 + gamma/(gm*z_source), in dB.
double lna_stage_nf_db(double gm_s, double z_source_ohm, double gamma_eff);

LnaReport lna_operating_point(const LnaDesign& design,
                              const TransistorModel& model,
                              const LnaCalibration& cal = {});

// Sizes an LNA (2:1 P:N ratio) and solves the feedback resistor so the
// input matches `zin_target` at the given bias.
LnaDesign size_lna_for_match(double zin_target_ohm, double gate_bias_v,
                             const TransistorModel& model,
                             const LnaCalibration& cal = {},
                             double load_cap_f = 150e-15);

// --- N-path mixer ------------------------------------------------------------

// NF = (pi^2/4) * (1 + rsw/rs) / (1 - rsw/rs), in dB. Requires 0 <= rsw < rs.
double mixer_noise_figure_db(double rsw_ohm, double rs_ohm);

// rsw = rsw_unit / width.
double switch_resistance(double width_m, const MixerDesign& mixer);

// P = activity * C_eff * V^2 * f.
double divider_power_w(const DividerModel& model, double freq_hz);

struct MixerDriveCalibration {
  double gate_cap_per_width_f_m = 5e-10;  // F per meter of switch width
  double fixed_load_cap_f = 5e-12;        // bench load, applied on request
  DividerModel flipflop{"flip-flop", 100e-15, 1.0, 1.0};
  DividerModel circular{"circular", 30e-15, 1.0, 1.0};

  const DividerModel& divider_for(DividerArch arch) const;
};

// Divider power with the switch gate capacitance (and optionally the fixed
// bench load) added to the switched capacitance.
double mixer_drive_power_w(const MixerDesign& mixer, double freq_hz,
                           const MixerDriveCalibration& cal = {},
                           bool include_fixed_load = false);

// --- Matching network --------------------------------------------------------

// Element order as seen from the mixer looking toward the antenna-side
// termination rm. series_c_shunt_l (shunt inductor at the mixer node,
// series capacitor toward rm) realizes the in-band step-up with the stock
// 180 nH / 2 pF values; series_l_shunt_c is the complementary reading and
// reduces to rm at DC.
enum class MatchTopology { series_c_shunt_l, series_l_shunt_c };

std::string to_string(MatchTopology t);
MatchTopology match_topology_from_string(const std::string& s);

std::complex<double> matching_transform(double rm_ohm, double lm_h,
                                        double cm_f, double freq_hz,
                                        MatchTopology topology =
                                            MatchTopology::series_c_shunt_l);

// --- Cascade -----------------------------------------------------------------

struct NoiseStage {
  double nf_db = 0.0;
  double gain_db = 0.0;  // gain preceding the next stage; last stage's unused
};

// Friis cascade: F = F1 + sum_i (Fi - 1)/prod_{j<i} Gj, in dB.
double cascade_nf_db(const std::vector<NoiseStage>& stages);

}  // namespace medrx::devicemodels

#endif  // MEDRX_DEVICEMODELS_HPP
