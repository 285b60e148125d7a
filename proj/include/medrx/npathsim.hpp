#ifndef MEDRX_NPATHSIM_HPP
#define MEDRX_NPATHSIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "medrx/devicemodels.hpp"

// Discrete-time behavioral simulation of the N-path passive mixer driven by
// non-overlapping LO phases. Each connected capacitor takes an exact
// exponential RC step toward the source EMF through R_s + R_sw; disconnected
// capacitors hold bit-exactly. Used to verify frequency translation,
// filtering and the analytic mixer noise figure independently of the
// closed-form model.

namespace medrx::npathsim {

using devicemodels::MixerDesign;

// Minimum oversampling of both the LO and the highest input tone.
constexpr double kMinOversampling = 32.0;

struct NloWaveforms {
  double sample_rate_hz = 0.0;
  double lo_freq_hz = 0.0;
  double duty = 0.0;
  std::vector<std::vector<std::uint8_t>> phases;  // [phase][sample]

  void validate() const;
};

// Index of the active phase at a sample (or -1 when all switches are open).
// Shared by gen_nlo and the simulator so the two can never disagree.
int phase_index_at(std::uint64_t sample, double lo_over_fs, int n_paths,
                   double duty);

NloWaveforms gen_nlo(int n_paths, double duty, double lo_freq_hz,
                     double sample_rate_hz, std::size_t n_samples);

struct ToneSpec {
  double freq_hz = 0.0;
  double amplitude = 1.0;
  double phase_rad = 0.0;
};

struct NoiseSpec {
  double psd_v2_hz = 0.0;  // one-sided EMF noise density
};

// Input EMF = sum of deterministic tones plus independent white Gaussian
// noise components (each drawn from its own seed-derived substream).
struct WaveformSpec {
  std::vector<ToneSpec> tones;
  std::vector<NoiseSpec> noises;

  static WaveformSpec tone(double freq_hz, double amplitude,
                           double phase_rad = 0.0);
  double max_tone_freq() const;
};

// baseband_only keeps just the combined baseband (long noise runs would not
// fit in memory otherwise); full records everything for dumps and
// measurement.
enum class RecordMode { full, baseband_only };

struct NpathRunResult {
  double sample_rate_hz = 0.0;
  double lo_freq_hz = 0.0;
  int n_paths = 0;
  std::vector<double> time_axis_s;                  // full mode only
  std::vector<std::vector<double>> per_path_cap_v;  // full mode only
  std::vector<double> combined_baseband_v;  // 0-180 degree differential
  std::vector<double> input_waveform_v;     // source EMF; full mode only
};

struct SimOptions {
  double sample_rate_hz = 0.0;  // 0 -> 32x max(f_LO, f_RF) automatically
  RecordMode record = RecordMode::full;
};

NpathRunResult simulate_npath(const MixerDesign& mixer,
                              const WaveformSpec& input, double duration_s,
                              std::uint64_t seed, const SimOptions& opts = {});

struct ConversionReport {
  double gain_db = 0.0;       // baseband amplitude over input amplitude at f_RF
  double if_freq_hz = 0.0;    // located FFT peak
  double image_rejection_db = 0.0;  // IF peak over the strongest other spur
  double fft_bin_hz = 0.0;
  std::string window = "flattop";
};

// Windowed-FFT measurement; the leading quarter of the run is discarded as
// settling. Requires at least 8 IF cycles in the analysis window.
ConversionReport measure_conversion(const NpathRunResult& result, double f_rf_hz,
                                    double f_lo_hz);

// Expected first-order baseband corner of the switched-RC network.
double expected_corner_hz(const MixerDesign& mixer);

// Spot noise figure at a small offset from the LO: a noiseless tone run
// fixes the conversion gain, a noise-only run (independent 4kTR EMF streams
// for R_s and R_sw) fixes the output noise density, and the ratio against
// the kT source reference gives F. Deterministic given the seed.
double simulated_noise_figure_db(const MixerDesign& mixer, std::uint64_t seed);

// Waveform CSV dump: header `t,<phase columns>,<cap columns>,bb`, SI units.
std::string waveform_csv(const NpathRunResult& result,
                         const NloWaveforms& nlo);

}  // namespace medrx::npathsim

#endif  // MEDRX_NPATHSIM_HPP
