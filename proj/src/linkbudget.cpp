#include "medrx/linkbudget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "medrx/berlab.hpp"
#include "medrx/units.hpp"

namespace medrx::linkbudget {

std::string to_string(Detector d) {
  return d == Detector::coherent_threshold ? "coherent-threshold" : "envelope";
}

Detector detector_from_string(const std::string& s) {
  if (s == "coherent-threshold") return Detector::coherent_threshold;
  if (s == "envelope") return Detector::envelope;
  throw std::invalid_argument("detector: unknown value '" + s +
                              "' (expected coherent-threshold or envelope)");
}

void LinkParams::validate() const {
  if (!(carrier_freq_hz > 0.0))
    throw std::domain_error("LinkParams.carrier_freq: must be > 0");
  if (!(distance_m > 0.0))
    throw std::domain_error("LinkParams.distance: must be > 0");
  if (!(channel_bw_hz > 0.0))
    throw std::domain_error("LinkParams.channel_bw: must be > 0");
  if (!(data_rate_bps > 0.0))
    throw std::domain_error("LinkParams.data_rate: must be > 0");
  if (!(ber_target > 0.0) || !(ber_target < 0.5))
    throw std::domain_error("LinkParams.ber_target: must be in (0, 0.5)");
}

double fspl_db(double carrier_freq_hz, double distance_m) {
  if (!(carrier_freq_hz > 0.0))
    throw std::domain_error("fspl: carrier_freq must be > 0");
  if (!(distance_m > 0.0))
    throw std::domain_error("fspl: distance must be > 0");
  return db_from_amplitude(4.0 * kPi * distance_m * carrier_freq_hz /
                           kSpeedOfLight);
}

double required_sensitivity_dbm(const LinkParams& link, double extra_loss_db) {
  link.validate();
  return link.eirp_dbm - fspl_db(link.carrier_freq_hz, link.distance_m) -
         extra_loss_db;
}

SensitivityReport sensitivity(double channel_bw_hz, double snr_out_db,
                              double nf_db,
                              std::optional<double> link_requirement_dbm) {
  if (!(channel_bw_hz > 0.0))
    throw std::domain_error("sensitivity: channel_bw must be > 0");
  SensitivityReport rep;
  rep.noise_floor_term_db = db_from_ratio(channel_bw_hz);
  rep.snr_out_db = snr_out_db;
  rep.nf_db = nf_db;
  rep.sensitivity_dbm =
      kThermalFloorDbmHz + rep.noise_floor_term_db + snr_out_db + nf_db;
  rep.margin_vs_link_db =
      link_requirement_dbm ? (*link_requirement_dbm - rep.sensitivity_dbm)
                           : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

double snr_from_ebn0_db(double ebn0_db, double data_rate_bps,
                        double data_bw_hz) {
  if (!(data_rate_bps > 0.0))
    throw std::domain_error("snr_from_ebn0: data_rate must be > 0");
  if (!(data_bw_hz > 0.0))
    throw std::domain_error("snr_from_ebn0: data_bw must be > 0");
  return ebn0_db + db_from_ratio(data_rate_bps / data_bw_hz);
}

double required_snr_ook_db(double ber_target, Detector detector) {
  if (!(ber_target > 0.0) || !(ber_target < 0.5))
    throw std::domain_error("required_snr_ook: ber_target must be in (0, 0.5)");
  if (detector == Detector::coherent_threshold) {
    const double q = qfunc_inv(ber_target);
    return db_from_ratio(2.0 * q * q);
  }
  // Envelope detector: bisection on the analytic Rice/Rayleigh BER, which is
  // strictly decreasing in SNR.
  double lo = -20.0, hi = 60.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (berlab::analytic_ber_ook_envelope_db(mid) > ber_target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-10) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace medrx::linkbudget
