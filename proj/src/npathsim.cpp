#include "medrx/npathsim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "medrx/berlab.hpp"
#include "medrx/dsp.hpp"
#include "medrx/units.hpp"

namespace medrx::npathsim {

namespace {

void check_oversampling(double sample_rate_hz, double highest_freq_hz,
                        const char* label) {
  if (sample_rate_hz < kMinOversampling * highest_freq_hz) {
    throw std::domain_error(
        std::string(label) + ": sample rate " + std::to_string(sample_rate_hz) +
        " Hz is below the " + std::to_string(kMinOversampling) +
        "x oversampling floor for " + std::to_string(highest_freq_hz) + " Hz");
  }
}

}  // namespace

void NloWaveforms::validate() const {
  if (phases.empty()) throw std::domain_error("NloWaveforms: no phases");
  const std::size_t n = phases.front().size();
  for (const auto& p : phases) {
    if (p.size() != n) throw std::domain_error("NloWaveforms: ragged phases");
  }
  for (std::size_t s = 0; s < n; ++s) {
    int high = 0;
    for (const auto& p : phases) high += p[s];
    if (high > 1)
      throw std::domain_error("NloWaveforms: overlap at sample " +
                              std::to_string(s));
  }
}

int phase_index_at(std::uint64_t sample, double lo_over_fs, int n_paths,
                   double duty) {
  const double x = std::fmod(static_cast<double>(sample) * lo_over_fs, 1.0);
  const double xn = x * n_paths;
  int slot = static_cast<int>(xn);
  if (slot >= n_paths) slot = n_paths - 1;  // guards fmod edge at 1.0
  return (xn - slot) < duty * n_paths ? slot : -1;
}

NloWaveforms gen_nlo(int n_paths, double duty, double lo_freq_hz,
                     double sample_rate_hz, std::size_t n_samples) {
  if (n_paths < 1) throw std::domain_error("gen_nlo: n_paths must be >= 1");
  if (!(duty > 0.0) || n_paths * duty > 1.0 + 1e-12)
    throw std::domain_error("gen_nlo: need 0 < n_paths*duty <= 1");
  if (!(lo_freq_hz > 0.0)) throw std::domain_error("gen_nlo: lo_freq must be > 0");
  check_oversampling(sample_rate_hz, lo_freq_hz, "gen_nlo");

  NloWaveforms nlo;
  nlo.sample_rate_hz = sample_rate_hz;
  nlo.lo_freq_hz = lo_freq_hz;
  nlo.duty = duty;
  nlo.phases.assign(n_paths, std::vector<std::uint8_t>(n_samples, 0));
  const double r = lo_freq_hz / sample_rate_hz;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const int idx = phase_index_at(s, r, n_paths, duty);
    if (idx >= 0) nlo.phases[idx][s] = 1;
  }
  return nlo;
}

WaveformSpec WaveformSpec::tone(double freq_hz, double amplitude,
                                double phase_rad) {
  WaveformSpec spec;
  spec.tones.push_back({freq_hz, amplitude, phase_rad});
  return spec;
}

double WaveformSpec::max_tone_freq() const {
  double f = 0.0;
  for (const auto& t : tones) f = std::max(f, t.freq_hz);
  return f;
}

NpathRunResult simulate_npath(const MixerDesign& mixer,
                              const WaveformSpec& input, double duration_s,
                              std::uint64_t seed, const SimOptions& opts) {
  mixer.validate();
  if (!(duration_s > 0.0))
    throw std::domain_error("simulate_npath: duration must be > 0");
  const double highest = std::max(mixer.lo_freq_hz, input.max_tone_freq());
  const double fs = opts.sample_rate_hz > 0.0 ? opts.sample_rate_hz
                                              : kMinOversampling * highest;
  check_oversampling(fs, highest, "simulate_npath");
  if (duration_s * mixer.lo_freq_hz < 64.0) {
    throw std::domain_error(
        "simulate_npath: duration must cover at least 64 LO cycles, got " +
        std::to_string(duration_s * mixer.lo_freq_hz));
  }

  const std::size_t n_samples =
      static_cast<std::size_t>(std::llround(duration_s * fs));
  const int n = mixer.n_paths;
  const double rsw = devicemodels::switch_resistance(mixer.switch_width_m, mixer);
  const double tau = (mixer.source_impedance_ohm + rsw) * mixer.baseband_cap_f;
  const double h = 1.0 / fs;
  const double alpha = 1.0 - std::exp(-h / tau);
  const double lo_over_fs = mixer.lo_freq_hz / fs;

  // One RNG substream per noise component, advanced every sample so the
  // realization does not depend on switch connectivity.
  std::vector<std::mt19937_64> engines;
  std::vector<double> sigmas;
  for (std::size_t j = 0; j < input.noises.size(); ++j) {
    engines.emplace_back(berlab::mix_seed(seed, j));
    sigmas.push_back(std::sqrt(input.noises[j].psd_v2_hz * fs / 2.0));
  }
  std::normal_distribution<double> gauss(0.0, 1.0);

  NpathRunResult res;
  res.sample_rate_hz = fs;
  res.lo_freq_hz = mixer.lo_freq_hz;
  res.n_paths = n;
  const bool full = opts.record == RecordMode::full;
  res.combined_baseband_v.resize(n_samples);
  if (full) {
    res.input_waveform_v.resize(n_samples);
    res.time_axis_s.resize(n_samples);
    res.per_path_cap_v.assign(n, std::vector<double>(n_samples));
  }

  std::vector<double> vcap(n, 0.0);
  const int diff_path = n >= 2 ? n / 2 : -1;  // 180-degree counterpart of path 0
  for (std::size_t s = 0; s < n_samples; ++s) {
    const double t_mid = (static_cast<double>(s) + 0.5) * h;
    double emf = 0.0;
    for (const auto& tone : input.tones) {
      emf += tone.amplitude *
             std::cos(2.0 * kPi * tone.freq_hz * t_mid + tone.phase_rad);
    }
    for (std::size_t j = 0; j < engines.size(); ++j) {
      emf += sigmas[j] * gauss(engines[j]);
    }

    const int active = phase_index_at(s, lo_over_fs, n, mixer.duty);
    if (active >= 0) {
      vcap[active] += (emf - vcap[active]) * alpha;
    }

    res.combined_baseband_v[s] =
        diff_path >= 0 ? vcap[0] - vcap[diff_path] : vcap[0];
    if (full) {
      res.input_waveform_v[s] = emf;
      res.time_axis_s[s] = static_cast<double>(s) * h;
      for (int p = 0; p < n; ++p) res.per_path_cap_v[p][s] = vcap[p];
    }
  }
  return res;
}

ConversionReport measure_conversion(const NpathRunResult& result, double f_rf_hz,
                                    double f_lo_hz) {
  const double fs = result.sample_rate_hz;
  const double f_if = std::abs(f_rf_hz - f_lo_hz);
  if (!(f_if > 0.0))
    throw std::domain_error("measure_conversion: RF and LO must differ");

  const std::size_t skip = result.combined_baseband_v.size() / 4;
  const std::size_t len = result.combined_baseband_v.size() - skip;
  const double window_s = static_cast<double>(len) / fs;
  if (window_s * f_if < 8.0) {
    throw std::domain_error(
        "measure_conversion: IF of " + std::to_string(f_if) +
        " Hz is below spectral resolution; analysis window holds only " +
        std::to_string(window_s * f_if) + " IF cycles (need >= 8)");
  }

  if (result.input_waveform_v.size() != result.combined_baseband_v.size()) {
    throw std::invalid_argument(
        "measure_conversion: needs a full-record run (input waveform missing)");
  }
  std::span<const double> bb(result.combined_baseband_v.data() + skip, len);
  std::span<const double> in(result.input_waveform_v.data() + skip, len);

  const auto amp = dsp::amplitude_spectrum(bb, fs, dsp::Window::flattop);
  const std::size_t nfft = (amp.size() - 1) * 2;
  const double bin = fs / static_cast<double>(nfft);
  const std::size_t k0 = 2;  // DC guard
  std::size_t peak = k0;
  for (std::size_t k = k0; k < amp.size(); ++k) {
    if (amp[k] > amp[peak]) peak = k;
  }

  // Strongest component away from the located IF line and the DC guard.
  double spur = 0.0;
  for (std::size_t k = k0; k < amp.size(); ++k) {
    if (k + 6 > peak && k < peak + 6) continue;
    spur = std::max(spur, amp[k]);
  }

  const double in_amp = dsp::tone_amplitude(in, fs, f_rf_hz);

  ConversionReport rep;
  rep.fft_bin_hz = bin;
  rep.if_freq_hz = static_cast<double>(peak) * bin;
  rep.gain_db = db_from_amplitude(amp[peak] / in_amp);
  rep.image_rejection_db =
      spur > 0.0 ? db_from_amplitude(amp[peak] / spur) : 200.0;
  return rep;
}

double expected_corner_hz(const MixerDesign& mixer) {
  const double rsw = devicemodels::switch_resistance(mixer.switch_width_m, mixer);
  // The capacitor is connected for `duty` of the time, so the effective
  // charging time constant is RC/duty. With duty = 1/N this is the familiar
  // 1/(2*pi*N*(Rs+Rsw)*C).
  return mixer.duty /
         (2.0 * kPi * (mixer.source_impedance_ohm + rsw) * mixer.baseband_cap_f);
}

double simulated_noise_figure_db(const MixerDesign& mixer, std::uint64_t seed) {
  mixer.validate();
  const double rs = mixer.source_impedance_ohm;
  const double rsw = devicemodels::switch_resistance(mixer.switch_width_m, mixer);
  const double corner = expected_corner_hz(mixer);
  const double df = corner / 4.0;
  const double fs = kMinOversampling * (mixer.lo_freq_hz + df);

  // Welch segment sized so the offset tone sits at least 8 bins up; the
  // segment count and band width set the Monte Carlo spread (~0.15 dB for
  // typical mixers). The total sample budget caps memory and runtime.
  constexpr std::size_t kSampleBudget = 24000000;
  std::size_t seg = dsp::next_pow2(static_cast<std::size_t>(8.0 * fs / df));
  seg = std::min<std::size_t>(seg, 1u << 21);
  const std::size_t n_segments = std::clamp<std::size_t>(
      2 * kSampleBudget / seg - 1, 16, 288);
  const std::size_t analysis = seg * (n_segments + 1) / 2;
  const std::size_t settle = static_cast<std::size_t>(
      std::ceil(12.0 / (2.0 * kPi * corner) * fs));
  const double duration = static_cast<double>(analysis + settle) / fs;

  SimOptions opts;
  opts.sample_rate_hz = fs;
  opts.record = RecordMode::baseband_only;

  // Conversion-gain run: clean tone, one sideband above the LO.
  const double amp_in = 1.0;
  WaveformSpec sig = WaveformSpec::tone(mixer.lo_freq_hz + df, amp_in);
  const NpathRunResult sig_run = simulate_npath(mixer, sig, duration, seed, opts);
  std::span<const double> sig_bb(sig_run.combined_baseband_v.data() + settle,
                                 analysis);
  const double amp_out = dsp::tone_amplitude(sig_bb, fs, df);
  const double p_out = amp_out * amp_out / 2.0;             // V^2
  const double p_avail = amp_in * amp_in / (8.0 * rs);      // W
  const double gain = p_out / p_avail;                      // V^2 per W

  // Noise run: independent thermal EMF streams for Rs and Rsw.
  WaveformSpec noise;
  noise.noises.push_back({4.0 * kBoltzmann * kReferenceTempK * rs});
  if (rsw > 0.0) {
    noise.noises.push_back({4.0 * kBoltzmann * kReferenceTempK * rsw});
  }
  const NpathRunResult noise_run =
      simulate_npath(mixer, noise, duration, seed, opts);
  std::span<const double> noise_bb(noise_run.combined_baseband_v.data() + settle,
                                   analysis);
  const auto psd = dsp::welch_psd(noise_bb, fs, seg);
  const double n_out = dsp::band_density(psd, df, 5);  // V^2/Hz

  const double f = n_out / (gain * kBoltzmann * kReferenceTempK);
  return db_from_ratio(f);
}

std::string waveform_csv(const NpathRunResult& result, const NloWaveforms& nlo) {
  if (result.per_path_cap_v.empty() || result.time_axis_s.empty()) {
    throw std::invalid_argument(
        "waveform_csv: needs a full-record simulation result");
  }
  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (std::size_t p = 0; p < nlo.phases.size(); ++p) os << ",phase" << p;
  for (std::size_t p = 0; p < result.per_path_cap_v.size(); ++p) os << ",cap" << p;
  os << ",bb\n";
  const std::size_t n =
      std::min(result.time_axis_s.size(), nlo.phases.front().size());
  for (std::size_t s = 0; s < n; ++s) {
    os << result.time_axis_s[s];
    for (const auto& ph : nlo.phases) os << "," << static_cast<int>(ph[s]);
    for (const auto& cap : result.per_path_cap_v) os << "," << cap[s];
    os << "," << result.combined_baseband_v[s] << "\n";
  }
  return os.str();
}

}  // namespace medrx::npathsim
