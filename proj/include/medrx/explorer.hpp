#ifndef MEDRX_EXPLORER_HPP
#define MEDRX_EXPLORER_HPP

#include <map>
#include <string>
#include <vector>

#include "medrx/devicemodels.hpp"
#include "medrx/linkbudget.hpp"

// Whole-receiver composition: evaluates candidate front-end design points
// (power, cascaded NF, sensitivity, energy per bit), runs exhaustive grid
// sweeps, extracts Pareto fronts and finds minimum-power compliant designs.

namespace medrx::explorer {

using devicemodels::LnaDesign;
using devicemodels::MatchTopology;
using devicemodels::MixerDesign;
using linkbudget::LinkParams;

struct MatchingNetwork {
  double rm_ohm = 50.0;
  double lm_h = 180e-9;
  double cm_f = 2e-12;
  MatchTopology topology = MatchTopology::series_c_shunt_l;
};

struct DesignPoint {
  LnaDesign lna;
  MixerDesign mixer;
  MatchingNetwork matching;
  LinkParams link;
  double data_rate_bps = 300e3;
};

struct Feasibility {
  bool ok = true;
  std::string reason;
};

struct DesignMetrics {
  double total_power_w = 0.0;
  double power_lna_w = 0.0;
  double power_divider_w = 0.0;
  double power_mixer_drive_w = 0.0;  // switch-gate drive on top of the divider
  double system_nf_db = 0.0;
  double sensitivity_dbm = 0.0;
  double energy_per_bit_j = 0.0;
  double lna_bandwidth_hz = 0.0;
  Feasibility feasible;

  std::map<std::string, double> breakdown() const;
};

// Calibration context shared by all explorer evaluations.
struct ModelContext {
  devicemodels::TransistorModel transistor =
      devicemodels::TransistorModel::default_65nm();
  devicemodels::LnaCalibration lna_cal;
  devicemodels::MixerDriveCalibration drive_cal;
  // Mixer voltage conversion gain used in the cascade; the default is the
  // simulator-measured value for the 2-path 25% duty configuration.
  double mixer_conversion_gain_db = 5.09;
  double implementation_loss_db = 0.0;
};

DesignMetrics evaluate_design(const DesignPoint& point, const ModelContext& ctx);

struct SweepAxis {
  std::string path;            // e.g. "lna.gate_bias", "mixer.switch_width"
  std::vector<double> values;
};

struct SweepSpec {
  std::vector<SweepAxis> axes;
  DesignPoint base;
  std::vector<std::string> objective_tags;
};

// All parameter paths accepted by SweepAxis / set_parameter.
std::vector<std::string> known_parameter_paths();

void set_parameter(DesignPoint& point, const std::string& path, double value);
double get_parameter(const DesignPoint& point, const std::string& path);

struct SweepRow {
  DesignPoint point;
  DesignMetrics metrics;
};

// Full Cartesian evaluation in row-major axis order. Evaluation failures are
// recorded inline (feasible=false, NaN metrics), never dropped.
std::vector<SweepRow> sweep(const SweepSpec& spec, const ModelContext& ctx,
                            std::size_t max_grid_points = 200000);

struct Objective {
  std::string key;  // total_power | sensitivity | energy_per_bit | system_nf | lna_bandwidth
  bool minimize = true;
};

// Indices of the non-dominated subset, stably ordered by the first
// objective; duplicates are retained.
std::vector<std::size_t> pareto_front(const std::vector<DesignMetrics>& points,
                                      const std::vector<Objective>& objectives);

struct OptimizeTargets {
  double sensitivity_dbm = -83.0;
  double data_rate_bps = 300e3;
};

struct OptimizeResult {
  bool found = false;
  DesignPoint point;
  DesignMetrics metrics;
  std::string note;  // near-miss description when infeasible
};

// Exhaustive search for the minimum-power point meeting the sensitivity
// target at the given rate. Infeasibility is a result, not an exception.
OptimizeResult optimize_min_power(const OptimizeTargets& targets,
                                  const SweepSpec& space,
                                  const ModelContext& ctx,
                                  std::size_t max_grid_points = 200000);

struct EnergyCurvePoint {
  double data_rate_bps = 0.0;
  double sensitivity_target_dbm = 0.0;
  bool found = false;
  double energy_per_bit_j = 0.0;
  DesignMetrics metrics;
  DesignPoint point;
};

// For each rate, reruns optimize_min_power against the bandwidth-scaled
// sensitivity target sens_ref + 10log10(rate/rate_ref).
std::vector<EnergyCurvePoint> energy_per_bit_curve(
    const std::vector<double>& rates_bps, const SweepSpec& space,
    const ModelContext& ctx, double sens_ref_dbm = -83.0,
    double rate_ref_bps = 300e3, std::size_t max_grid_points = 200000);

struct BreakdownReport {
  std::map<std::string, double> watts;
  std::map<std::string, double> fractions;
  double total_power_w = 0.0;
};

BreakdownReport power_breakdown_report(const DesignPoint& point,
                                       const ModelContext& ctx);

}  // namespace medrx::explorer

#endif  // MEDRX_EXPLORER_HPP
