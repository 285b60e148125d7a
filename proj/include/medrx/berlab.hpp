#ifndef MEDRX_BERLAB_HPP
#define MEDRX_BERLAB_HPP

#include <cstdint>
#include <vector>

#include "medrx/linecode.hpp"
#include "medrx/linkbudget.hpp"

// OOK modulation/demodulation Monte Carlo laboratory. SNR throughout is the
// average signal power over the noise power in the data bandwidth, i.e. the
// power ratio seen by the per-bit decision statistic. With that definition
// coherent threshold detection obeys BER = Q(sqrt(SNR/2)).

namespace medrx::berlab {

using linkbudget::Detector;

struct OokParams {
  double amplitude_on = 1.0;
  double bit_rate_bps = 300e3;
  unsigned samples_per_bit = 1;
  Detector detector = Detector::coherent_threshold;
  double threshold = 0.5;  // fraction of amplitude_on; coherent only

  void validate() const;
};

struct BerResult {
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors = 0;
  double ber_point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double snr_db = 0.0;
  std::uint64_t seed = 0;
  // Supplementary post-decode statistics (8b/10b layer).
  std::uint64_t payload_bytes = 0;
  std::uint64_t payload_byte_errors = 0;
};

// bit 1 -> amplitude_on held for samples_per_bit samples, bit 0 -> 0.
std::vector<double> ook_modulate(const std::vector<std::uint8_t>& bits,
                                 const OokParams& params);

// Adds white Gaussian noise with variance mean(s^2)/snr_lin. Deterministic
// given seed; +inf SNR returns the input unchanged.
std::vector<double> add_awgn(const std::vector<double>& samples, double snr_db,
                             std::uint64_t seed);

// Per-bit decision. Coherent: mean > threshold*amplitude_on (ties -> 0).
// Envelope: mean of |sample| against a threshold optimized for the supplied
// operating SNR (the Rice/Rayleigh crossing).
std::vector<std::uint8_t> ook_demodulate(const std::vector<double>& samples,
                                         const OokParams& params,
                                         double operating_snr_db);

// BER = Q(sqrt(SNR/2)) for coherent threshold detection of OOK.
double analytic_ber_ook_coherent_db(double snr_db);

// Envelope (noncoherent) detection: 0.5*[P(Rice < t) + P(Rayleigh > t)]
// minimized over the threshold t by golden-section search.
double analytic_ber_ook_envelope_db(double snr_db);

// Threshold (absolute, for amplitude_on = 1) minimizing the envelope BER.
double optimal_envelope_threshold(double snr_db);

// Full chain: payload -> 8b/10b -> OOK -> AWGN -> demod. BER is counted on
// channel bits before decoding; decoded-byte errors are reported alongside.
// Work is split into fixed-size blocks with per-block RNG substreams so the
// result is independent of any parallel scheduling.
BerResult run_ber(double snr_db, std::uint64_t n_bits, const OokParams& params,
                  std::uint64_t seed);

// Wilson 95% score interval for k errors out of n trials.
void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo,
                     double& hi);

// Exponentially scaled modified Bessel function I0(x)*exp(-x), x >= 0.
double bessel_i0_scaled(double x);

// splitmix64 step; used to derive independent RNG substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace medrx::berlab

#endif  // MEDRX_BERLAB_HPP
