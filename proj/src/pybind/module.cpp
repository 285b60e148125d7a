#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "medrx/berlab.hpp"
#include "medrx/config.hpp"
#include "medrx/devicemodels.hpp"
#include "medrx/explorer.hpp"
#include "medrx/linkbudget.hpp"
#include "medrx/npathsim.hpp"
#include "medrx/version.hpp"

namespace py = pybind11;

using namespace medrx;

namespace {

void bind_linkbudget(py::module_& m) {
  auto lb = m.def_submodule("linkbudget", "Link-budget arithmetic");

  py::enum_<linkbudget::Detector>(lb, "Detector")
      .value("coherent_threshold", linkbudget::Detector::coherent_threshold)
      .value("envelope", linkbudget::Detector::envelope);

  py::class_<linkbudget::LinkParams>(lb, "LinkParams")
      .def(py::init<>())
      .def_readwrite("carrier_freq_hz", &linkbudget::LinkParams::carrier_freq_hz)
      .def_readwrite("distance_m", &linkbudget::LinkParams::distance_m)
      .def_readwrite("eirp_dbm", &linkbudget::LinkParams::eirp_dbm)
      .def_readwrite("channel_bw_hz", &linkbudget::LinkParams::channel_bw_hz)
      .def_readwrite("data_rate_bps", &linkbudget::LinkParams::data_rate_bps)
      .def_readwrite("ber_target", &linkbudget::LinkParams::ber_target)
      .def_readwrite("detector", &linkbudget::LinkParams::detector)
      .def("validate", &linkbudget::LinkParams::validate);

  py::class_<linkbudget::SensitivityReport>(lb, "SensitivityReport")
      .def_readonly("sensitivity_dbm", &linkbudget::SensitivityReport::sensitivity_dbm)
      .def_readonly("noise_floor_term_db",
                    &linkbudget::SensitivityReport::noise_floor_term_db)
      .def_readonly("snr_out_db", &linkbudget::SensitivityReport::snr_out_db)
      .def_readonly("nf_db", &linkbudget::SensitivityReport::nf_db)
      .def_readonly("margin_vs_link_db",
                    &linkbudget::SensitivityReport::margin_vs_link_db);

  lb.def("fspl_db", &linkbudget::fspl_db, py::arg("carrier_freq_hz"),
         py::arg("distance_m"));
  lb.def("required_sensitivity_dbm", &linkbudget::required_sensitivity_dbm,
         py::arg("link"), py::arg("extra_loss_db"));
  lb.def("sensitivity", &linkbudget::sensitivity, py::arg("channel_bw_hz"),
         py::arg("snr_out_db"), py::arg("nf_db"),
         py::arg("link_requirement_dbm") = std::optional<double>{});
  lb.def("snr_from_ebn0_db", &linkbudget::snr_from_ebn0_db, py::arg("ebn0_db"),
         py::arg("data_rate_bps"), py::arg("data_bw_hz"));
  lb.def("required_snr_ook_db", &linkbudget::required_snr_ook_db,
         py::arg("ber_target"), py::arg("detector"));
}

void bind_devicemodels(py::module_& m) {
  auto dm = m.def_submodule("devicemodels", "Front-end block models");

  py::class_<devicemodels::BiasPoint>(dm, "BiasPoint")
      .def(py::init<>())
      .def_readwrite("gate_bias_v", &devicemodels::BiasPoint::gate_bias_v)
      .def_readwrite("gm_over_id", &devicemodels::BiasPoint::gm_over_id)
      .def_readwrite("current_density", &devicemodels::BiasPoint::current_density);

  py::class_<devicemodels::TransistorModel>(dm, "TransistorModel")
      .def(py::init<>())
      .def_static("default_65nm", &devicemodels::TransistorModel::default_65nm)
      .def_readwrite("intrinsic_gain_k",
                     &devicemodels::TransistorModel::intrinsic_gain_k)
      .def_readwrite("max_width_m", &devicemodels::TransistorModel::max_width_m)
      .def_readwrite("table", &devicemodels::TransistorModel::table)
      .def("at_bias", &devicemodels::TransistorModel::at_bias);

  py::enum_<devicemodels::FeedbackKind>(dm, "FeedbackKind")
      .value("resistor", devicemodels::FeedbackKind::resistor)
      .value("off_transistor", devicemodels::FeedbackKind::off_transistor);

  py::enum_<devicemodels::LnaMode>(dm, "LnaMode")
      .value("rf", devicemodels::LnaMode::rf)
      .value("baseband_differential", devicemodels::LnaMode::baseband_differential);

  py::class_<devicemodels::LnaDesign>(dm, "LnaDesign")
      .def(py::init<>())
      .def_readwrite("width_p_m", &devicemodels::LnaDesign::width_p_m)
      .def_readwrite("width_n_m", &devicemodels::LnaDesign::width_n_m)
      .def_readwrite("gate_bias_v", &devicemodels::LnaDesign::gate_bias_v)
      .def_readwrite("supply_v", &devicemodels::LnaDesign::supply_v)
      .def_readwrite("feedback", &devicemodels::LnaDesign::feedback)
      .def_readwrite("feedback_resistance",
                     &devicemodels::LnaDesign::feedback_resistance)
      .def_readwrite("load_cap_f", &devicemodels::LnaDesign::load_cap_f)
      .def_readwrite("mode", &devicemodels::LnaDesign::mode)
      .def("warnings", &devicemodels::LnaDesign::warnings);

  py::class_<devicemodels::LnaReport>(dm, "LnaReport")
      .def_readonly("power_w", &devicemodels::LnaReport::power_w)
      .def_readonly("bandwidth_hz", &devicemodels::LnaReport::bandwidth_hz)
      .def_readonly("flat_band_gain_db", &devicemodels::LnaReport::flat_band_gain_db)
      .def_readonly("nf_db", &devicemodels::LnaReport::nf_db)
      .def_readonly("zin_ohm", &devicemodels::LnaReport::zin_ohm)
      .def_readonly("rf_used_ohm", &devicemodels::LnaReport::rf_used_ohm)
      .def_readonly("gm_s", &devicemodels::LnaReport::gm_s)
      .def_readonly("ro_ohm", &devicemodels::LnaReport::ro_ohm);

  py::enum_<devicemodels::DividerArch>(dm, "DividerArch")
      .value("flip_flop", devicemodels::DividerArch::flip_flop)
      .value("circular", devicemodels::DividerArch::circular);

  py::class_<devicemodels::MixerDesign>(dm, "MixerDesign")
      .def(py::init<>())
      .def_readwrite("n_paths", &devicemodels::MixerDesign::n_paths)
      .def_readwrite("duty", &devicemodels::MixerDesign::duty)
      .def_readwrite("switch_width_m", &devicemodels::MixerDesign::switch_width_m)
      .def_readwrite("rsw_unit_ohm_m", &devicemodels::MixerDesign::rsw_unit_ohm_m)
      .def_readwrite("source_impedance_ohm",
                     &devicemodels::MixerDesign::source_impedance_ohm)
      .def_readwrite("baseband_cap_f", &devicemodels::MixerDesign::baseband_cap_f)
      .def_readwrite("lo_freq_hz", &devicemodels::MixerDesign::lo_freq_hz)
      .def_readwrite("divider_arch", &devicemodels::MixerDesign::divider_arch)
      .def_readwrite("supply_v", &devicemodels::MixerDesign::supply_v)
      .def("validate", &devicemodels::MixerDesign::validate);

  py::class_<devicemodels::DividerModel>(dm, "DividerModel")
      .def(py::init<>())
      .def_readwrite("arch", &devicemodels::DividerModel::arch)
      .def_readwrite("effective_switched_cap_f",
                     &devicemodels::DividerModel::effective_switched_cap_f)
      .def_readwrite("supply_v", &devicemodels::DividerModel::supply_v)
      .def_readwrite("activity_factor", &devicemodels::DividerModel::activity_factor);

  py::enum_<devicemodels::MatchTopology>(dm, "MatchTopology")
      .value("series_c_shunt_l", devicemodels::MatchTopology::series_c_shunt_l)
      .value("series_l_shunt_c", devicemodels::MatchTopology::series_l_shunt_c);

  py::class_<devicemodels::LnaCalibration>(dm, "LnaCalibration")
      .def(py::init<>())
      .def_readwrite("gamma_eff", &devicemodels::LnaCalibration::gamma_eff)
      .def_readwrite("off_feedback_resistance_ohm",
                     &devicemodels::LnaCalibration::off_feedback_resistance_ohm)
      .def_readwrite("match_sizing_fraction",
                     &devicemodels::LnaCalibration::match_sizing_fraction);

  py::class_<devicemodels::MixerDriveCalibration>(dm, "MixerDriveCalibration")
      .def(py::init<>())
      .def_readwrite("gate_cap_per_width_f_m",
                     &devicemodels::MixerDriveCalibration::gate_cap_per_width_f_m)
      .def_readwrite("fixed_load_cap_f",
                     &devicemodels::MixerDriveCalibration::fixed_load_cap_f)
      .def_readwrite("flipflop", &devicemodels::MixerDriveCalibration::flipflop)
      .def_readwrite("circular", &devicemodels::MixerDriveCalibration::circular);

  py::class_<devicemodels::NoiseStage>(dm, "NoiseStage")
      .def(py::init<double, double>(), py::arg("nf_db"), py::arg("gain_db"))
      .def_readwrite("nf_db", &devicemodels::NoiseStage::nf_db)
      .def_readwrite("gain_db", &devicemodels::NoiseStage::gain_db);

  dm.def("lna_input_impedance", &devicemodels::lna_input_impedance,
         py::arg("rf_ohm"), py::arg("gm_s"), py::arg("ro_ohm"));
  dm.def("solve_feedback_resistor", &devicemodels::solve_feedback_resistor,
         py::arg("zin_target_ohm"), py::arg("gm_s"), py::arg("k"));
  dm.def("lna_operating_point", &devicemodels::lna_operating_point,
         py::arg("design"), py::arg("model"),
         py::arg("cal") = devicemodels::LnaCalibration{});
  dm.def("size_lna_for_match", &devicemodels::size_lna_for_match,
         py::arg("zin_target_ohm"), py::arg("gate_bias_v"), py::arg("model"),
         py::arg("cal") = devicemodels::LnaCalibration{},
         py::arg("load_cap_f") = 150e-15);
  dm.def("mixer_noise_figure_db", &devicemodels::mixer_noise_figure_db,
         py::arg("rsw_ohm"), py::arg("rs_ohm"));
  dm.def("switch_resistance", &devicemodels::switch_resistance,
         py::arg("width_m"), py::arg("mixer"));
  dm.def("divider_power_w", &devicemodels::divider_power_w, py::arg("model"),
         py::arg("freq_hz"));
  dm.def("mixer_drive_power_w", &devicemodels::mixer_drive_power_w,
         py::arg("mixer"), py::arg("freq_hz"),
         py::arg("cal") = devicemodels::MixerDriveCalibration{},
         py::arg("include_fixed_load") = false);
  dm.def("matching_transform", &devicemodels::matching_transform,
         py::arg("rm_ohm"), py::arg("lm_h"), py::arg("cm_f"), py::arg("freq_hz"),
         py::arg("topology") = devicemodels::MatchTopology::series_c_shunt_l);
  dm.def("cascade_nf_db", &devicemodels::cascade_nf_db, py::arg("stages"));
}

void bind_berlab(py::module_& m) {
  auto bl = m.def_submodule("berlab", "OOK Monte Carlo laboratory");

  py::class_<berlab::OokParams>(bl, "OokParams")
      .def(py::init<>())
      .def_readwrite("amplitude_on", &berlab::OokParams::amplitude_on)
      .def_readwrite("bit_rate_bps", &berlab::OokParams::bit_rate_bps)
      .def_readwrite("samples_per_bit", &berlab::OokParams::samples_per_bit)
      .def_readwrite("detector", &berlab::OokParams::detector)
      .def_readwrite("threshold", &berlab::OokParams::threshold);

  py::class_<berlab::BerResult>(bl, "BerResult")
      .def_readonly("bits_sent", &berlab::BerResult::bits_sent)
      .def_readonly("bit_errors", &berlab::BerResult::bit_errors)
      .def_readonly("ber_point", &berlab::BerResult::ber_point)
      .def_readonly("ci_low", &berlab::BerResult::ci_low)
      .def_readonly("ci_high", &berlab::BerResult::ci_high)
      .def_readonly("snr_db", &berlab::BerResult::snr_db)
      .def_readonly("seed", &berlab::BerResult::seed)
      .def_readonly("payload_bytes", &berlab::BerResult::payload_bytes)
      .def_readonly("payload_byte_errors", &berlab::BerResult::payload_byte_errors);

  py::class_<berlab::LineCodeBlock>(bl, "LineCodeBlock")
      .def_readonly("payload", &berlab::LineCodeBlock::payload)
      .def_readonly("encoded", &berlab::LineCodeBlock::encoded)
      .def_readonly("running_disparity_trace",
                    &berlab::LineCodeBlock::running_disparity_trace)
      .def_readonly("final_disparity", &berlab::LineCodeBlock::final_disparity);

  bl.def("encode_8b10b", &berlab::encode_8b10b, py::arg("payload"),
         py::arg("initial_disparity") = -1);
  bl.def("decode_8b10b", &berlab::decode_8b10b, py::arg("bits"),
         py::arg("initial_disparity") = -1);
  bl.def("max_run_length", &berlab::max_run_length, py::arg("bits"));
  bl.def("ook_modulate", &berlab::ook_modulate, py::arg("bits"), py::arg("params"));
  bl.def("add_awgn", &berlab::add_awgn, py::arg("samples"), py::arg("snr_db"),
         py::arg("seed"));
  bl.def("ook_demodulate", &berlab::ook_demodulate, py::arg("samples"),
         py::arg("params"), py::arg("operating_snr_db"));
  bl.def("analytic_ber_ook_coherent_db", &berlab::analytic_ber_ook_coherent_db,
         py::arg("snr_db"));
  bl.def("analytic_ber_ook_envelope_db", &berlab::analytic_ber_ook_envelope_db,
         py::arg("snr_db"));
  bl.def("run_ber", &berlab::run_ber, py::arg("snr_db"), py::arg("n_bits"),
         py::arg("params"), py::arg("seed"));
}

void bind_npathsim(py::module_& m) {
  auto np = m.def_submodule("npathsim", "N-path mixer behavioral simulator");

  py::class_<npathsim::NloWaveforms>(np, "NloWaveforms")
      .def_readonly("sample_rate_hz", &npathsim::NloWaveforms::sample_rate_hz)
      .def_readonly("lo_freq_hz", &npathsim::NloWaveforms::lo_freq_hz)
      .def_readonly("duty", &npathsim::NloWaveforms::duty)
      .def_readonly("phases", &npathsim::NloWaveforms::phases);

  py::class_<npathsim::WaveformSpec>(np, "WaveformSpec")
      .def(py::init<>())
      .def_static("tone", &npathsim::WaveformSpec::tone, py::arg("freq_hz"),
                  py::arg("amplitude"), py::arg("phase_rad") = 0.0)
      .def("add_tone",
           [](npathsim::WaveformSpec& self, double f, double a, double ph) {
             self.tones.push_back({f, a, ph});
           },
           py::arg("freq_hz"), py::arg("amplitude"), py::arg("phase_rad") = 0.0)
      .def("add_noise",
           [](npathsim::WaveformSpec& self, double psd) {
             self.noises.push_back({psd});
           },
           py::arg("psd_v2_hz"));

  py::class_<npathsim::NpathRunResult>(np, "NpathRunResult")
      .def_readonly("sample_rate_hz", &npathsim::NpathRunResult::sample_rate_hz)
      .def_readonly("time_axis_s", &npathsim::NpathRunResult::time_axis_s)
      .def_readonly("per_path_cap_v", &npathsim::NpathRunResult::per_path_cap_v)
      .def_readonly("combined_baseband_v",
                    &npathsim::NpathRunResult::combined_baseband_v)
      .def_readonly("input_waveform_v", &npathsim::NpathRunResult::input_waveform_v);

  py::class_<npathsim::ConversionReport>(np, "ConversionReport")
      .def_readonly("gain_db", &npathsim::ConversionReport::gain_db)
      .def_readonly("if_freq_hz", &npathsim::ConversionReport::if_freq_hz)
      .def_readonly("image_rejection_db",
                    &npathsim::ConversionReport::image_rejection_db)
      .def_readonly("fft_bin_hz", &npathsim::ConversionReport::fft_bin_hz);

  np.def("gen_nlo", &npathsim::gen_nlo, py::arg("n_paths"), py::arg("duty"),
         py::arg("lo_freq_hz"), py::arg("sample_rate_hz"), py::arg("n_samples"));
  np.def("simulate_npath",
         [](const devicemodels::MixerDesign& mixer,
            const npathsim::WaveformSpec& input, double duration_s,
            std::uint64_t seed, double sample_rate_hz) {
           npathsim::SimOptions opts;
           opts.sample_rate_hz = sample_rate_hz;
           return npathsim::simulate_npath(mixer, input, duration_s, seed, opts);
         },
         py::arg("mixer"), py::arg("input"), py::arg("duration_s"),
         py::arg("seed"), py::arg("sample_rate_hz") = 0.0);
  np.def("measure_conversion", &npathsim::measure_conversion, py::arg("result"),
         py::arg("f_rf_hz"), py::arg("f_lo_hz"));
  np.def("expected_corner_hz", &npathsim::expected_corner_hz, py::arg("mixer"));
  np.def("simulated_noise_figure_db", &npathsim::simulated_noise_figure_db,
         py::arg("mixer"), py::arg("seed"));
}

void bind_explorer(py::module_& m) {
  auto ex = m.def_submodule("explorer", "Design-space exploration");

  py::class_<explorer::MatchingNetwork>(ex, "MatchingNetwork")
      .def(py::init<>())
      .def_readwrite("rm_ohm", &explorer::MatchingNetwork::rm_ohm)
      .def_readwrite("lm_h", &explorer::MatchingNetwork::lm_h)
      .def_readwrite("cm_f", &explorer::MatchingNetwork::cm_f)
      .def_readwrite("topology", &explorer::MatchingNetwork::topology);

  py::class_<explorer::DesignPoint>(ex, "DesignPoint")
      .def(py::init<>())
      .def_readwrite("lna", &explorer::DesignPoint::lna)
      .def_readwrite("mixer", &explorer::DesignPoint::mixer)
      .def_readwrite("matching", &explorer::DesignPoint::matching)
      .def_readwrite("link", &explorer::DesignPoint::link)
      .def_readwrite("data_rate_bps", &explorer::DesignPoint::data_rate_bps);

  py::class_<explorer::Feasibility>(ex, "Feasibility")
      .def_readonly("ok", &explorer::Feasibility::ok)
      .def_readonly("reason", &explorer::Feasibility::reason);

  py::class_<explorer::DesignMetrics>(ex, "DesignMetrics")
      .def_readonly("total_power_w", &explorer::DesignMetrics::total_power_w)
      .def_readonly("power_lna_w", &explorer::DesignMetrics::power_lna_w)
      .def_readonly("power_divider_w", &explorer::DesignMetrics::power_divider_w)
      .def_readonly("power_mixer_drive_w",
                    &explorer::DesignMetrics::power_mixer_drive_w)
      .def_readonly("system_nf_db", &explorer::DesignMetrics::system_nf_db)
      .def_readonly("sensitivity_dbm", &explorer::DesignMetrics::sensitivity_dbm)
      .def_readonly("energy_per_bit_j", &explorer::DesignMetrics::energy_per_bit_j)
      .def_readonly("lna_bandwidth_hz", &explorer::DesignMetrics::lna_bandwidth_hz)
      .def_readonly("feasible", &explorer::DesignMetrics::feasible)
      .def("breakdown", &explorer::DesignMetrics::breakdown);

  py::class_<explorer::ModelContext>(ex, "ModelContext")
      .def(py::init<>())
      .def_readwrite("transistor", &explorer::ModelContext::transistor)
      .def_readwrite("mixer_conversion_gain_db",
                     &explorer::ModelContext::mixer_conversion_gain_db)
      .def_readwrite("implementation_loss_db",
                     &explorer::ModelContext::implementation_loss_db);

  py::class_<explorer::SweepAxis>(ex, "SweepAxis")
      .def(py::init<>())
      .def(py::init([](const std::string& path, std::vector<double> values) {
             return explorer::SweepAxis{path, std::move(values)};
           }),
           py::arg("path"), py::arg("values"))
      .def_readwrite("path", &explorer::SweepAxis::path)
      .def_readwrite("values", &explorer::SweepAxis::values);

  py::class_<explorer::SweepSpec>(ex, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("axes", &explorer::SweepSpec::axes)
      .def_readwrite("base", &explorer::SweepSpec::base)
      .def_readwrite("objective_tags", &explorer::SweepSpec::objective_tags);

  py::class_<explorer::SweepRow>(ex, "SweepRow")
      .def_readonly("point", &explorer::SweepRow::point)
      .def_readonly("metrics", &explorer::SweepRow::metrics);

  py::class_<explorer::Objective>(ex, "Objective")
      .def(py::init([](const std::string& key, bool minimize) {
             return explorer::Objective{key, minimize};
           }),
           py::arg("key"), py::arg("minimize") = true)
      .def_readwrite("key", &explorer::Objective::key)
      .def_readwrite("minimize", &explorer::Objective::minimize);

  py::class_<explorer::OptimizeTargets>(ex, "OptimizeTargets")
      .def(py::init([](double sens, double rate) {
             return explorer::OptimizeTargets{sens, rate};
           }),
           py::arg("sensitivity_dbm"), py::arg("data_rate_bps"))
      .def_readwrite("sensitivity_dbm", &explorer::OptimizeTargets::sensitivity_dbm)
      .def_readwrite("data_rate_bps", &explorer::OptimizeTargets::data_rate_bps);

  py::class_<explorer::OptimizeResult>(ex, "OptimizeResult")
      .def_readonly("found", &explorer::OptimizeResult::found)
      .def_readonly("point", &explorer::OptimizeResult::point)
      .def_readonly("metrics", &explorer::OptimizeResult::metrics)
      .def_readonly("note", &explorer::OptimizeResult::note);

  py::class_<explorer::EnergyCurvePoint>(ex, "EnergyCurvePoint")
      .def_readonly("data_rate_bps", &explorer::EnergyCurvePoint::data_rate_bps)
      .def_readonly("sensitivity_target_dbm",
                    &explorer::EnergyCurvePoint::sensitivity_target_dbm)
      .def_readonly("found", &explorer::EnergyCurvePoint::found)
      .def_readonly("energy_per_bit_j", &explorer::EnergyCurvePoint::energy_per_bit_j)
      .def_readonly("metrics", &explorer::EnergyCurvePoint::metrics)
      .def_readonly("point", &explorer::EnergyCurvePoint::point);

  py::class_<explorer::BreakdownReport>(ex, "BreakdownReport")
      .def_readonly("watts", &explorer::BreakdownReport::watts)
      .def_readonly("fractions", &explorer::BreakdownReport::fractions)
      .def_readonly("total_power_w", &explorer::BreakdownReport::total_power_w);

  ex.def("evaluate_design", &explorer::evaluate_design, py::arg("point"),
         py::arg("ctx"));
  ex.def("known_parameter_paths", &explorer::known_parameter_paths);
  ex.def("set_parameter", &explorer::set_parameter, py::arg("point"),
         py::arg("path"), py::arg("value"));
  ex.def("get_parameter", &explorer::get_parameter, py::arg("point"),
         py::arg("path"));
  ex.def("sweep", &explorer::sweep, py::arg("spec"), py::arg("ctx"),
         py::arg("max_grid_points") = 200000);
  ex.def("pareto_front", &explorer::pareto_front, py::arg("points"),
         py::arg("objectives"));
  ex.def("optimize_min_power", &explorer::optimize_min_power, py::arg("targets"),
         py::arg("space"), py::arg("ctx"), py::arg("max_grid_points") = 200000);
  ex.def("energy_per_bit_curve", &explorer::energy_per_bit_curve,
         py::arg("rates_bps"), py::arg("space"), py::arg("ctx"),
         py::arg("sens_ref_dbm") = -83.0, py::arg("rate_ref_bps") = 300e3,
         py::arg("max_grid_points") = 200000);
  ex.def("power_breakdown_report", &explorer::power_breakdown_report,
         py::arg("point"), py::arg("ctx"));
}

void bind_config(py::module_& m) {
  auto cf = m.def_submodule("config", "Tool configuration");

  py::class_<config::ToolConfig>(cf, "ToolConfig")
      .def_static("builtin", &config::ToolConfig::builtin)
      .def_static("from_file", &config::ToolConfig::from_file, py::arg("path"))
      .def_static("from_json_text", &config::ToolConfig::from_json_text,
                  py::arg("text"))
      .def_readwrite("seed", &config::ToolConfig::seed)
      .def_readwrite("model", &config::ToolConfig::model)
      .def_readwrite("defaults", &config::ToolConfig::defaults)
      .def("hash", &config::ToolConfig::hash)
      .def("to_json_text",
           [](const config::ToolConfig& c) { return c.to_json().dump(2); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mixer-first MedRadio receiver front-end modeling toolkit";
  m.attr("__version__") = medrx::kVersion;

  bind_linkbudget(m);
  bind_devicemodels(m);
  bind_berlab(m);
  bind_npathsim(m);
  bind_explorer(m);
  bind_config(m);
}
