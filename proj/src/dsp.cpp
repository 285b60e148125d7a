#include "medrx/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "medrx/units.hpp"

namespace medrx::dsp {

void fft(std::vector<std::complex<double>>& data) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft: size must be a nonzero power of two");
  }
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> make_window(Window kind, std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (n <= 1) return w;
  const double denom = static_cast<double>(n - 1);
  switch (kind) {
    case Window::rectangular:
      break;
    case Window::hann:
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / denom);
      }
      break;
    case Window::flattop: {
      // SRS flat-top coefficients; near-zero scalloping loss.
      const double a0 = 0.21557895, a1 = 0.41663158, a2 = 0.277263158,
                   a3 = 0.083578947, a4 = 0.006947368;
      for (std::size_t i = 0; i < n; ++i) {
        const double x = 2.0 * kPi * static_cast<double>(i) / denom;
        w[i] = a0 - a1 * std::cos(x) + a2 * std::cos(2 * x) -
               a3 * std::cos(3 * x) + a4 * std::cos(4 * x);
      }
      break;
    }
  }
  return w;
}

std::vector<double> amplitude_spectrum(std::span<const double> samples,
                                       double sample_rate, Window window) {
  if (samples.size() < 8) {
    throw std::invalid_argument("amplitude_spectrum: need at least 8 samples");
  }
  const std::size_t n = samples.size();
  const auto w = make_window(window, n);
  double wsum = 0.0;
  for (double v : w) wsum += v;

  const std::size_t nfft = next_pow2(n);
  std::vector<std::complex<double>> buf(nfft, 0.0);
  for (std::size_t i = 0; i < n; ++i) buf[i] = samples[i] * w[i];
  fft(buf);

  std::vector<double> amp(nfft / 2 + 1);
  for (std::size_t k = 0; k < amp.size(); ++k) {
    const double scale = (k == 0 || k == nfft / 2) ? 1.0 : 2.0;
    amp[k] = scale * std::abs(buf[k]) / wsum;
  }
  (void)sample_rate;
  return amp;
}

SpectrumPeak find_peak(std::span<const double> samples, double sample_rate,
                       Window window, double min_freq_hz) {
  const auto amp = amplitude_spectrum(samples, sample_rate, window);
  const std::size_t nfft = (amp.size() - 1) * 2;
  const double bin_width = sample_rate / static_cast<double>(nfft);
  std::size_t k0 = static_cast<std::size_t>(std::ceil(min_freq_hz / bin_width));
  if (k0 >= amp.size()) k0 = amp.size() - 1;
  std::size_t best = k0;
  for (std::size_t k = k0; k < amp.size(); ++k) {
    if (amp[k] > amp[best]) best = k;
  }
  SpectrumPeak p;
  p.bin = best;
  p.bin_width_hz = bin_width;
  p.freq_hz = static_cast<double>(best) * bin_width;
  p.amplitude = amp[best];
  return p;
}

double tone_amplitude(std::span<const double> samples, double sample_rate,
                      double freq_hz) {
  if (!(freq_hz > 0.0) || !(sample_rate > 0.0)) {
    throw std::domain_error("tone_amplitude: frequency and rate must be > 0");
  }
  // Trim to an integer number of cycles so the {1,cos,sin} projection is
  // orthogonal up to O(1/n) terms.
  const double samples_per_cycle = sample_rate / freq_hz;
  const std::size_t cycles =
      static_cast<std::size_t>(std::floor(static_cast<double>(samples.size()) /
                                          samples_per_cycle));
  if (cycles < 1) {
    throw std::domain_error("tone_amplitude: window shorter than one cycle");
  }
  const std::size_t n =
      std::min(samples.size(),
               static_cast<std::size_t>(std::llround(cycles * samples_per_cycle)));
  double sc = 0.0, ss = 0.0, sm = 0.0;
  const double wstep = 2.0 * kPi * freq_hz / sample_rate;
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = wstep * static_cast<double>(i);
    sc += samples[i] * std::cos(ph);
    ss += samples[i] * std::sin(ph);
    sm += samples[i];
  }
  const double inv = 2.0 / static_cast<double>(n);
  (void)sm;
  const double a = sc * inv;
  const double b = ss * inv;
  return std::sqrt(a * a + b * b);
}

PsdEstimate welch_psd(std::span<const double> samples, double sample_rate,
                      std::size_t segment_len) {
  if (segment_len == 0 || (segment_len & (segment_len - 1)) != 0) {
    throw std::invalid_argument("welch_psd: segment length must be a power of two");
  }
  if (samples.size() < segment_len) {
    throw std::invalid_argument("welch_psd: fewer samples than one segment");
  }
  const auto w = make_window(Window::hann, segment_len);
  double w2 = 0.0;
  for (double v : w) w2 += v * v;

  PsdEstimate est;
  est.psd.assign(segment_len / 2 + 1, 0.0);
  est.bin_width_hz = sample_rate / static_cast<double>(segment_len);

  const std::size_t hop = segment_len / 2;
  std::vector<std::complex<double>> buf(segment_len);
  std::size_t count = 0;
  for (std::size_t start = 0; start + segment_len <= samples.size();
       start += hop) {
    for (std::size_t i = 0; i < segment_len; ++i) {
      buf[i] = samples[start + i] * w[i];
    }
    fft(buf);
    for (std::size_t k = 0; k < est.psd.size(); ++k) {
      const double scale = (k == 0 || k == segment_len / 2) ? 1.0 : 2.0;
      est.psd[k] += scale * std::norm(buf[k]) / (sample_rate * w2);
    }
    ++count;
  }
  for (double& v : est.psd) v /= static_cast<double>(count);
  est.segments = count;
  return est;
}

double band_density(const PsdEstimate& est, double f_center, int half_bins) {
  const long k_center = std::lround(f_center / est.bin_width_hz);
  double sum = 0.0;
  int n = 0;
  for (long k = k_center - half_bins; k <= k_center + half_bins; ++k) {
    if (k < 1 || k >= static_cast<long>(est.psd.size())) continue;
    sum += est.psd[static_cast<std::size_t>(k)];
    ++n;
  }
  if (n == 0) throw std::domain_error("band_density: band outside spectrum");
  return sum / n;
}

double band_power(const PsdEstimate& est, double f_lo, double f_hi) {
  double sum = 0.0;
  for (std::size_t k = 0; k < est.psd.size(); ++k) {
    const double f = static_cast<double>(k) * est.bin_width_hz;
    if (f >= f_lo && f <= f_hi) sum += est.psd[k] * est.bin_width_hz;
  }
  return sum;
}

}  // namespace medrx::dsp
