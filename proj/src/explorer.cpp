#include "medrx/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "medrx/units.hpp"

namespace medrx::explorer {

namespace dm = medrx::devicemodels;
namespace lb = medrx::linkbudget;

std::map<std::string, double> DesignMetrics::breakdown() const {
  return {{"lna", power_lna_w},
          {"divider_nlo", power_divider_w},
          {"mixer_drive", power_mixer_drive_w}};
}

DesignMetrics evaluate_design(const DesignPoint& point, const ModelContext& ctx) {
  point.mixer.validate();
  point.lna.validate(ctx.transistor);
  point.link.validate();
  if (!(point.data_rate_bps > 0.0))
    throw std::domain_error("DesignPoint.data_rate: must be > 0");

  DesignMetrics m;

  // Power first: all three blocks are defined for any valid point.
  const dm::LnaReport lna =
      dm::lna_operating_point(point.lna, ctx.transistor, ctx.lna_cal);
  m.power_lna_w = lna.power_w;
  m.lna_bandwidth_hz = lna.bandwidth_hz;

  dm::DividerModel div = ctx.drive_cal.divider_for(point.mixer.divider_arch);
  div.supply_v = point.mixer.supply_v;
  m.power_divider_w = dm::divider_power_w(div, point.mixer.lo_freq_hz);
  m.power_mixer_drive_w =
      dm::mixer_drive_power_w(point.mixer, point.mixer.lo_freq_hz, ctx.drive_cal) -
      m.power_divider_w;
  m.total_power_w = m.power_lna_w + m.power_divider_w + m.power_mixer_drive_w;
  m.energy_per_bit_j = m.total_power_w / point.data_rate_bps;

  // Noise cascade: source impedance as transformed by the matching network.
  const auto zmix = dm::matching_transform(
      point.matching.rm_ohm, point.matching.lm_h, point.matching.cm_f,
      point.link.carrier_freq_hz, point.matching.topology);
  const double rs_eff = zmix.real();
  const double rsw = dm::switch_resistance(point.mixer.switch_width_m, point.mixer);
  if (!(rs_eff > rsw)) {
    throw std::domain_error(
        "matching: transformed source resistance " + std::to_string(rs_eff) +
        " ohm does not exceed the switch resistance " + std::to_string(rsw) +
        " ohm; the mixer noise model breaks down");
  }
  const double mixer_nf = dm::mixer_noise_figure_db(rsw, rs_eff);
  const double lna_nf =
      dm::lna_stage_nf_db(lna.gm_s, rs_eff, ctx.lna_cal.gamma_eff);
  m.system_nf_db = dm::cascade_nf_db(
      {{mixer_nf, ctx.mixer_conversion_gain_db}, {lna_nf, 0.0}});

  // Sensitivity: DDR convention, the data bandwidth equals the data rate.
  const double bw = point.data_rate_bps;
  const double snr_req =
      lb::required_snr_ook_db(point.link.ber_target, point.link.detector);
  const double snr_out = lb::snr_from_ebn0_db(snr_req, point.data_rate_bps, bw) +
                         ctx.implementation_loss_db;
  m.sensitivity_dbm = lb::sensitivity(bw, snr_out, m.system_nf_db).sensitivity_dbm;

  if (point.data_rate_bps > lna.bandwidth_hz) {
    m.feasible.ok = false;
    m.feasible.reason = "lna: bandwidth " + std::to_string(lna.bandwidth_hz) +
                        " Hz below the data rate";
  }
  return m;
}

namespace {

struct PathAccessor {
  std::function<void(DesignPoint&, double)> set;
  std::function<double(const DesignPoint&)> get;
};

const std::map<std::string, PathAccessor>& path_table() {
  static const std::map<std::string, PathAccessor> table = {
      {"lna.width_p",
       {[](DesignPoint& p, double v) { p.lna.width_p_m = v; },
        [](const DesignPoint& p) { return p.lna.width_p_m; }}},
      {"lna.width_n",
       {[](DesignPoint& p, double v) { p.lna.width_n_m = v; },
        [](const DesignPoint& p) { return p.lna.width_n_m; }}},
      {"lna.total_width",
       {[](DesignPoint& p, double v) {
          p.lna.width_p_m = v * 2.0 / 3.0;  // keep the 2:1 P:N ratio
          p.lna.width_n_m = v / 3.0;
        },
        [](const DesignPoint& p) { return p.lna.width_p_m + p.lna.width_n_m; }}},
      {"lna.gate_bias",
       {[](DesignPoint& p, double v) { p.lna.gate_bias_v = v; },
        [](const DesignPoint& p) { return p.lna.gate_bias_v; }}},
      {"lna.supply",
       {[](DesignPoint& p, double v) { p.lna.supply_v = v; },
        [](const DesignPoint& p) { return p.lna.supply_v; }}},
      {"lna.load_cap",
       {[](DesignPoint& p, double v) { p.lna.load_cap_f = v; },
        [](const DesignPoint& p) { return p.lna.load_cap_f; }}},
      {"lna.feedback_resistance",
       {[](DesignPoint& p, double v) {
          p.lna.feedback = dm::FeedbackKind::resistor;
          p.lna.feedback_resistance = v;
        },
        [](const DesignPoint& p) { return p.lna.feedback_resistance; }}},
      {"mixer.n_paths",
       {[](DesignPoint& p, double v) { p.mixer.n_paths = static_cast<int>(v); },
        [](const DesignPoint& p) { return static_cast<double>(p.mixer.n_paths); }}},
      {"mixer.duty",
       {[](DesignPoint& p, double v) { p.mixer.duty = v; },
        [](const DesignPoint& p) { return p.mixer.duty; }}},
      {"mixer.switch_width",
       {[](DesignPoint& p, double v) { p.mixer.switch_width_m = v; },
        [](const DesignPoint& p) { return p.mixer.switch_width_m; }}},
      {"mixer.source_impedance",
       {[](DesignPoint& p, double v) { p.mixer.source_impedance_ohm = v; },
        [](const DesignPoint& p) { return p.mixer.source_impedance_ohm; }}},
      {"mixer.baseband_cap",
       {[](DesignPoint& p, double v) { p.mixer.baseband_cap_f = v; },
        [](const DesignPoint& p) { return p.mixer.baseband_cap_f; }}},
      {"mixer.lo_freq",
       {[](DesignPoint& p, double v) { p.mixer.lo_freq_hz = v; },
        [](const DesignPoint& p) { return p.mixer.lo_freq_hz; }}},
      {"mixer.supply",
       {[](DesignPoint& p, double v) { p.mixer.supply_v = v; },
        [](const DesignPoint& p) { return p.mixer.supply_v; }}},
      {"matching.rm",
       {[](DesignPoint& p, double v) { p.matching.rm_ohm = v; },
        [](const DesignPoint& p) { return p.matching.rm_ohm; }}},
      {"matching.lm",
       {[](DesignPoint& p, double v) { p.matching.lm_h = v; },
        [](const DesignPoint& p) { return p.matching.lm_h; }}},
      {"matching.cm",
       {[](DesignPoint& p, double v) { p.matching.cm_f = v; },
        [](const DesignPoint& p) { return p.matching.cm_f; }}},
      {"link.carrier_freq",
       {[](DesignPoint& p, double v) {
          p.link.carrier_freq_hz = v;
          p.mixer.lo_freq_hz = v;  // zero-IF receiver
        },
        [](const DesignPoint& p) { return p.link.carrier_freq_hz; }}},
      {"link.distance",
       {[](DesignPoint& p, double v) { p.link.distance_m = v; },
        [](const DesignPoint& p) { return p.link.distance_m; }}},
      {"link.eirp",
       {[](DesignPoint& p, double v) { p.link.eirp_dbm = v; },
        [](const DesignPoint& p) { return p.link.eirp_dbm; }}},
      {"link.ber_target",
       {[](DesignPoint& p, double v) { p.link.ber_target = v; },
        [](const DesignPoint& p) { return p.link.ber_target; }}},
      {"data_rate",
       {[](DesignPoint& p, double v) {
          p.data_rate_bps = v;
          p.link.data_rate_bps = v;
          p.link.channel_bw_hz = v;  // DDR: occupied bandwidth = rate
        },
        [](const DesignPoint& p) { return p.data_rate_bps; }}},
  };
  return table;
}

const PathAccessor& accessor(const std::string& path) {
  const auto& table = path_table();
  const auto it = table.find(path);
  if (it == table.end()) {
    std::string known;
    for (const auto& [k, v] : table) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown parameter path '" + path +
                                "'; known paths: " + known);
  }
  return it->second;
}

double metric_value(const DesignMetrics& m, const std::string& key) {
  if (key == "total_power" || key == "power") return m.total_power_w;
  if (key == "sensitivity") return m.sensitivity_dbm;
  if (key == "energy_per_bit") return m.energy_per_bit_j;
  if (key == "system_nf") return m.system_nf_db;
  if (key == "lna_bandwidth") return m.lna_bandwidth_hz;
  throw std::invalid_argument(
      "unknown objective key '" + key +
      "'; known: total_power, sensitivity, energy_per_bit, system_nf, "
      "lna_bandwidth");
}

}  // namespace

std::vector<std::string> known_parameter_paths() {
  std::vector<std::string> out;
  for (const auto& [k, v] : path_table()) out.push_back(k);
  return out;
}

void set_parameter(DesignPoint& point, const std::string& path, double value) {
  accessor(path).set(point, value);
}

double get_parameter(const DesignPoint& point, const std::string& path) {
  return accessor(path).get(point);
}

std::vector<SweepRow> sweep(const SweepSpec& spec, const ModelContext& ctx,
                            std::size_t max_grid_points) {
  if (spec.axes.empty())
    throw std::invalid_argument("sweep: at least one axis is required");
  std::size_t total = 1;
  for (const auto& axis : spec.axes) {
    if (axis.values.empty())
      throw std::invalid_argument("sweep: axis '" + axis.path + "' is empty");
    accessor(axis.path);  // validates the path up front
    total *= axis.values.size();
    if (total > max_grid_points) {
      throw std::invalid_argument(
          "sweep: grid of " + std::to_string(total) +
          "+ points exceeds the limit of " + std::to_string(max_grid_points));
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(total);
  std::vector<std::size_t> idx(spec.axes.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    DesignPoint point = spec.base;
    std::size_t rem = flat;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      idx[a] = rem % spec.axes[a].values.size();
      rem /= spec.axes[a].values.size();
    }
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      set_parameter(point, spec.axes[a].path, spec.axes[a].values[idx[a]]);
    }
    SweepRow row;
    row.point = point;
    try {
      row.metrics = evaluate_design(point, ctx);
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.metrics = DesignMetrics{};
      row.metrics.total_power_w = nan;
      row.metrics.system_nf_db = nan;
      row.metrics.sensitivity_dbm = nan;
      row.metrics.energy_per_bit_j = nan;
      row.metrics.lna_bandwidth_hz = nan;
      row.metrics.feasible = {false, e.what()};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::size_t> pareto_front(const std::vector<DesignMetrics>& points,
                                      const std::vector<Objective>& objectives) {
  if (points.empty()) throw std::invalid_argument("pareto_front: empty input");
  if (objectives.empty())
    throw std::invalid_argument("pareto_front: no objectives");

  // Objective matrix in minimization orientation.
  std::vector<std::vector<double>> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& obj : objectives) {
      const double raw = metric_value(points[i], obj.key);
      if (std::isnan(raw))
        throw std::domain_error("pareto_front: NaN objective at index " +
                                std::to_string(i));
      v[i].push_back(obj.minimize ? raw : -raw);
    }
  }
  auto dominates = [&](std::size_t a, std::size_t b) {
    bool strict = false;
    for (std::size_t k = 0; k < v[a].size(); ++k) {
      if (v[a][k] > v[b][k]) return false;
      if (v[a][k] < v[b][k]) strict = true;
    }
    return strict;
  };

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return v[a][0] < v[b][0];
  });

  // Scan in first-objective order; only already-kept points can dominate.
  std::vector<std::size_t> front;
  for (const std::size_t cand : order) {
    bool dominated = false;
    for (const std::size_t kept : front) {
      if (dominates(kept, cand)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(cand);
  }
  return front;
}

OptimizeResult optimize_min_power(const OptimizeTargets& targets,
                                  const SweepSpec& space, const ModelContext& ctx,
                                  std::size_t max_grid_points) {
  SweepSpec spec = space;
  set_parameter(spec.base, "data_rate", targets.data_rate_bps);
  const auto rows = sweep(spec, ctx, max_grid_points);

  OptimizeResult result;
  const SweepRow* best = nullptr;
  const SweepRow* near_miss = nullptr;
  for (const auto& row : rows) {
    if (!row.metrics.feasible.ok || std::isnan(row.metrics.total_power_w))
      continue;
    if (row.metrics.sensitivity_dbm <= targets.sensitivity_dbm) {
      if (!best || row.metrics.total_power_w < best->metrics.total_power_w)
        best = &row;
    } else if (!near_miss || row.metrics.sensitivity_dbm <
                                 near_miss->metrics.sensitivity_dbm) {
      near_miss = &row;
    }
  }
  if (best) {
    result.found = true;
    result.point = best->point;
    result.metrics = best->metrics;
    return result;
  }
  result.found = false;
  if (near_miss) {
    result.point = near_miss->point;
    result.metrics = near_miss->metrics;
    result.note = "infeasible: best achievable sensitivity " +
                  std::to_string(near_miss->metrics.sensitivity_dbm) +
                  " dBm misses the " + std::to_string(targets.sensitivity_dbm) +
                  " dBm target";
  } else {
    result.note = "infeasible: no evaluable point in the search space";
  }
  return result;
}

std::vector<EnergyCurvePoint> energy_per_bit_curve(
    const std::vector<double>& rates_bps, const SweepSpec& space,
    const ModelContext& ctx, double sens_ref_dbm, double rate_ref_bps,
    std::size_t max_grid_points) {
  if (rates_bps.empty())
    throw std::invalid_argument("energy_per_bit_curve: empty rate list");
  for (std::size_t i = 0; i < rates_bps.size(); ++i) {
    if (!(rates_bps[i] > 0.0))
      throw std::domain_error("energy_per_bit_curve: rates must be > 0");
    if (i > 0 && rates_bps[i] <= rates_bps[i - 1])
      throw std::invalid_argument(
          "energy_per_bit_curve: rates must be sorted ascending");
  }

  std::vector<EnergyCurvePoint> curve;
  curve.reserve(rates_bps.size());
  for (const double rate : rates_bps) {
    EnergyCurvePoint pt;
    pt.data_rate_bps = rate;
    // Eq.-5 scaling: widening the data bandwidth relaxes the target.
    pt.sensitivity_target_dbm =
        sens_ref_dbm + db_from_ratio(rate / rate_ref_bps);
    const OptimizeResult opt = optimize_min_power(
        {pt.sensitivity_target_dbm, rate}, space, ctx, max_grid_points);
    pt.found = opt.found;
    if (opt.found) {
      pt.energy_per_bit_j = opt.metrics.energy_per_bit_j;
      pt.metrics = opt.metrics;
      pt.point = opt.point;
    } else {
      pt.energy_per_bit_j = std::numeric_limits<double>::quiet_NaN();
      pt.metrics = opt.metrics;
      pt.point = opt.point;
    }
    curve.push_back(std::move(pt));
  }
  return curve;
}

BreakdownReport power_breakdown_report(const DesignPoint& point,
                                       const ModelContext& ctx) {
  const DesignMetrics m = evaluate_design(point, ctx);
  BreakdownReport rep;
  rep.watts = m.breakdown();
  rep.total_power_w = m.total_power_w;
  for (const auto& [name, w] : rep.watts) {
    rep.fractions[name] = w / m.total_power_w;
  }
  return rep;
}

}  // namespace medrx::explorer
