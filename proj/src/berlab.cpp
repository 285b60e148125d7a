#include "medrx/berlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "medrx/units.hpp"

namespace medrx::berlab {
namespace {

constexpr double kZ95 = 1.959963984540054;

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix_seed(seed, stream));
}

// Adaptive Simpson quadrature.
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double eps,
               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, eps, 48);
}

// P(Rice(nu, sigma) < t): CDF of the envelope of a tone in Gaussian noise.
double rice_cdf(double t, double nu, double sigma) {
  if (t <= 0.0) return 0.0;
  const double s2 = sigma * sigma;
  auto pdf = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double z = x * nu / s2;
    // (x/s2)*exp(-(x^2+nu^2)/(2 s2))*I0(z) with the overflow-safe split
    // exp(-(x-nu)^2/(2 s2)) * [I0(z) e^-z].
    return (x / s2) * std::exp(-(x - nu) * (x - nu) / (2.0 * s2)) *
           bessel_i0_scaled(z);
  };
  const double cdf = integrate(pdf, 0.0, t, 1e-13);
  return std::clamp(cdf, 0.0, 1.0);
}

// Envelope-detection BER at threshold t for on-amplitude 1, half the bits on.
double envelope_ber_at(double t, double sigma) {
  const double p_miss = rice_cdf(t, 1.0, sigma);
  const double p_false = std::exp(-t * t / (2.0 * sigma * sigma));
  return 0.5 * (p_miss + p_false);
}

double sigma_from_snr(double snr_db) {
  // Average power of the unit-amplitude OOK stream is 1/2.
  return std::sqrt(0.5 / ratio_from_db(snr_db));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void OokParams::validate() const {
  if (!(amplitude_on > 0.0))
    throw std::domain_error("OokParams.amplitude_on: must be > 0");
  if (!(bit_rate_bps > 0.0))
    throw std::domain_error("OokParams.bit_rate: must be > 0");
  if (samples_per_bit < 1)
    throw std::domain_error("OokParams.samples_per_bit: must be >= 1");
  if (!(threshold > 0.0) || !(threshold < 1.0))
    throw std::domain_error("OokParams.threshold: must be in (0, 1)");
}

std::vector<double> ook_modulate(const std::vector<std::uint8_t>& bits,
                                 const OokParams& params) {
  params.validate();
  std::vector<double> out;
  out.reserve(bits.size() * params.samples_per_bit);
  for (const std::uint8_t b : bits) {
    const double level = b ? params.amplitude_on : 0.0;
    for (unsigned s = 0; s < params.samples_per_bit; ++s) out.push_back(level);
  }
  return out;
}

std::vector<double> add_awgn(const std::vector<double>& samples, double snr_db,
                             std::uint64_t seed) {
  if (samples.empty()) throw std::domain_error("add_awgn: empty input");
  double power = 0.0;
  for (const double s : samples) power += s * s;
  power /= static_cast<double>(samples.size());
  if (!(power > 0.0)) throw std::domain_error("add_awgn: zero-power input");
  if (std::isinf(snr_db) && snr_db > 0.0) return samples;

  const double sigma = std::sqrt(power / ratio_from_db(snr_db));
  auto rng = make_engine(seed, 0);
  std::normal_distribution<double> gauss(0.0, sigma);
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i] + gauss(rng);
  return out;
}

std::vector<std::uint8_t> ook_demodulate(const std::vector<double>& samples,
                                         const OokParams& params,
                                         double operating_snr_db) {
  params.validate();
  if (samples.size() % params.samples_per_bit != 0) {
    throw std::invalid_argument(
        "ook_demodulate: sample count not a multiple of samples_per_bit");
  }
  const std::size_t n_bits = samples.size() / params.samples_per_bit;
  std::vector<std::uint8_t> bits(n_bits);

  double thr;
  const bool envelope = params.detector == Detector::envelope;
  if (envelope) {
    thr = params.amplitude_on * optimal_envelope_threshold(operating_snr_db);
  } else {
    thr = params.amplitude_on * params.threshold;
  }
  for (std::size_t i = 0; i < n_bits; ++i) {
    double acc = 0.0;
    for (unsigned s = 0; s < params.samples_per_bit; ++s) {
      const double x = samples[i * params.samples_per_bit + s];
      acc += envelope ? std::abs(x) : x;
    }
    acc /= params.samples_per_bit;
    bits[i] = acc > thr ? 1 : 0;  // tie resolves to 0
  }
  return bits;
}

double analytic_ber_ook_coherent_db(double snr_db) {
  if (std::isinf(snr_db)) return snr_db > 0.0 ? 0.0 : 0.5;
  return qfunc(std::sqrt(ratio_from_db(snr_db) / 2.0));
}

double optimal_envelope_threshold(double snr_db) {
  const double sigma = sigma_from_snr(snr_db);
  // Golden-section search; envelope_ber_at is unimodal in the threshold.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-6, b = 1.0 + 4.0 * sigma;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = envelope_ber_at(c, sigma), fd = envelope_ber_at(d, sigma);
  for (int i = 0; i < 120 && (b - a) > 1e-12; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = envelope_ber_at(c, sigma);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = envelope_ber_at(d, sigma);
    }
  }
  return 0.5 * (a + b);
}

double analytic_ber_ook_envelope_db(double snr_db) {
  const double sigma = sigma_from_snr(snr_db);
  return envelope_ber_at(optimal_envelope_threshold(snr_db), sigma);
}

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo,
                     double& hi) {
  if (trials == 0) throw std::domain_error("wilson_interval: zero trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  lo = std::max(0.0, center - half);
  hi = std::min(1.0, center + half);
}

double bessel_i0_scaled(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0_scaled: x must be >= 0");
  if (x < 600.0) {
    // std::cyl_bessel_i is accurate here and exp(-x) cannot underflow to
    // distort the product.
    return std::cyl_bessel_i(0.0, x) * std::exp(-x);
  }
  // Abramowitz & Stegun 9.8.2 asymptotic fit.
  const double t = 3.75 / x;
  const double poly =
      0.39894228 +
      t * (0.01328592 +
           t * (0.00225319 +
                t * (-0.00157565 +
                     t * (0.00916281 +
                          t * (-0.02057706 +
                               t * (0.02635537 +
                                    t * (-0.01647633 + t * 0.00392377)))))));
  return poly / std::sqrt(x);
}

BerResult run_ber(double snr_db, std::uint64_t n_bits, const OokParams& params,
                  std::uint64_t seed) {
  params.validate();
  if (n_bits < 1000) {
    throw std::domain_error("run_ber: n_bits must be >= 1000");
  }

  // Each block is framed independently (8b/10b restarted at RD-) so blocks
  // can be processed in any order with per-block noise substreams.
  constexpr std::uint64_t kBytesPerBlock = 2048;  // 20480 channel bits
  constexpr std::uint64_t kBitsPerBlock = kBytesPerBlock * 10;
  const std::uint64_t n_blocks = (n_bits + kBitsPerBlock - 1) / kBitsPerBlock;

  // The requested SNR is defined in the data bandwidth; spreading each bit
  // over S samples divides the per-sample SNR by S.
  const double sample_snr_db =
      snr_db - db_from_ratio(static_cast<double>(params.samples_per_bit));

  BerResult result;
  result.snr_db = snr_db;
  result.seed = seed;

  std::uint64_t bits_remaining = n_bits;
  for (std::uint64_t blk = 0; blk < n_blocks && bits_remaining > 0; ++blk) {
    auto payload_rng = make_engine(seed, 2 * blk + 1);
    std::vector<std::uint8_t> payload(kBytesPerBlock);
    for (auto& b : payload) b = static_cast<std::uint8_t>(payload_rng() & 0xFF);

    const LineCodeBlock coded = encode_8b10b(payload, -1);
    const std::vector<double> tx = ook_modulate(coded.encoded, params);
    const std::vector<double> rx =
        add_awgn(tx, sample_snr_db, mix_seed(seed, 2 * blk + 2));
    const std::vector<std::uint8_t> bits = ook_demodulate(rx, params, snr_db);

    const std::uint64_t take =
        std::min<std::uint64_t>(bits_remaining, kBitsPerBlock);
    for (std::uint64_t i = 0; i < take; ++i) {
      result.bit_errors += bits[i] != coded.encoded[i];
    }
    result.bits_sent += take;
    bits_remaining -= take;

    result.payload_bytes += payload.size();
    for (std::size_t i = 0; i < payload.size(); ++i) {
      const auto value = decode_group_value(bits.data() + i * 10);
      result.payload_byte_errors += !(value && *value == payload[i]);
    }
  }

  result.ber_point =
      static_cast<double>(result.bit_errors) / static_cast<double>(result.bits_sent);
  wilson_interval(result.bit_errors, result.bits_sent, result.ci_low,
                  result.ci_high);
  return result;
}

}  // namespace medrx::berlab
