#ifndef MEDRX_DSP_HPP
#define MEDRX_DSP_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Small spectral-measurement kit shared by the simulator and the BER lab:
// radix-2 FFT, measurement windows, single-tone amplitude estimation and
// Welch noise-density estimation.

namespace medrx::dsp {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& data);

std::size_t next_pow2(std::size_t n);

enum class Window : std::uint8_t { rectangular, hann, flattop };

std::vector<double> make_window(Window kind, std::size_t n);

struct SpectrumPeak {
  double freq_hz = 0.0;      // bin center frequency
  double amplitude = 0.0;    // window-corrected tone amplitude estimate
  std::size_t bin = 0;
  double bin_width_hz = 0.0;
};

// Windowed FFT magnitude spectrum of a real sequence, amplitude-normalized
// so a full-scale tone reads its own amplitude. Flat-top keeps the estimate
// within ~0.02 dB of truth regardless of where the tone falls in the bin.
std::vector<double> amplitude_spectrum(std::span<const double> samples,
                                       double sample_rate, Window window);

// Dominant spectral peak above `min_freq_hz` (DC guard).
SpectrumPeak find_peak(std::span<const double> samples, double sample_rate,
                       Window window, double min_freq_hz);

// Tone amplitude at a known frequency via least-squares projection onto
// {1, cos, sin} over an integer number of cycles. Used as the measurement
// route independent of the FFT path.
double tone_amplitude(std::span<const double> samples, double sample_rate,
                      double freq_hz);

// Welch one-sided PSD estimate [V^2/Hz], Hann window, 50% overlap.
struct PsdEstimate {
  std::vector<double> psd;
  double bin_width_hz = 0.0;
  std::size_t segments = 0;
};

PsdEstimate welch_psd(std::span<const double> samples, double sample_rate,
                      std::size_t segment_len);

// Mean one-sided PSD over [f_center - half_bins*bin, f_center + half_bins*bin].
double band_density(const PsdEstimate& est, double f_center, int half_bins);

// Total power in [f_lo, f_hi] from a PSD estimate.
double band_power(const PsdEstimate& est, double f_lo, double f_hi);

}  // namespace medrx::dsp

#endif  // MEDRX_DSP_HPP
