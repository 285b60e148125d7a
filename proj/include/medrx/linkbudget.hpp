#ifndef MEDRX_LINKBUDGET_HPP
#define MEDRX_LINKBUDGET_HPP

#include <optional>
#include <string>

// Analytic link-budget arithmetic for the 401-406 MHz band: free-space path
// loss, receiver sensitivity, SNR/EbN0 conversion and required-SNR lookup
// for OOK. Everything here is pure and stateless.

namespace medrx::linkbudget {

enum class Detector { coherent_threshold, envelope };

std::string to_string(Detector d);
Detector detector_from_string(const std::string& s);

struct LinkParams {
  double carrier_freq_hz = 403.5e6;
  double distance_m = 3.0;
  double eirp_dbm = -16.0;
  double channel_bw_hz = 300e3;
  double data_rate_bps = 300e3;
  double ber_target = 1e-3;
  Detector detector = Detector::coherent_threshold;

  // Throws std::domain_error naming the offending field.
  void validate() const;
};

struct SensitivityReport {
  double sensitivity_dbm = 0.0;
  double noise_floor_term_db = 0.0;  // the 10*log10(BW) term
  double snr_out_db = 0.0;
  double nf_db = 0.0;
  double margin_vs_link_db = 0.0;  // NaN unless a link requirement was given
};

// Free-space path loss 20*log10(4*pi*d*f/c) in dB.
double fspl_db(double carrier_freq_hz, double distance_m);

// EIRP minus path loss minus caller-supplied margin (body loss, fading, ...).
double required_sensitivity_dbm(const LinkParams& link, double extra_loss_db);

// -174 + 10log10(BW) + SNRo + NF. `link_requirement_dbm`, when given, fills
// the margin field (positive margin = sensitivity better than required).
SensitivityReport sensitivity(double channel_bw_hz, double snr_out_db,
                              double nf_db,
                              std::optional<double> link_requirement_dbm = {});

// Eb/N0 -> power SNR: snr = ebn0 + 10log10(rate/bw).
double snr_from_ebn0_db(double ebn0_db, double data_rate_bps, double data_bw_hz);

// SNR (average signal power over noise power in the data bandwidth) needed
// to hit `ber_target` with the given detector. Coherent threshold detection
// inverts BER = Q(sqrt(SNR/2)) in closed form; the envelope detector is
// inverted numerically against the Rice/Rayleigh model in the BER lab.
double required_snr_ook_db(double ber_target, Detector detector);

}  // namespace medrx::linkbudget

#endif  // MEDRX_LINKBUDGET_HPP
