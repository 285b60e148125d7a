#ifndef MEDRX_UNITS_HPP
#define MEDRX_UNITS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

// Shared physical constants and the single dB<->linear helper pair used
// everywhere else in the library. All other modules must convert through
// these helpers so the conventions cannot drift.

namespace medrx {

constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kBoltzmann = 1.380649e-23;    // J/K
constexpr double kReferenceTempK = 290.0;      // standard noise temperature

// kT at 290 K expressed in dBm/Hz is -173.975...; the receiver equations
// use the conventional rounded constant.
constexpr double kThermalFloorDbmHz = -174.0;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Power-quantity conversions: x [linear power ratio] <-> dB.
inline double db_from_ratio(double ratio) {
  if (!(ratio > 0.0)) {
    throw std::domain_error("db_from_ratio: ratio must be > 0, got " +
                            std::to_string(ratio));
  }
  return 10.0 * std::log10(ratio);
}

inline double ratio_from_db(double db) { return std::pow(10.0, db / 10.0); }

// Amplitude-quantity conversions (20 log10).
inline double db_from_amplitude(double amp_ratio) {
  if (!(amp_ratio > 0.0)) {
    throw std::domain_error("db_from_amplitude: ratio must be > 0, got " +
                            std::to_string(amp_ratio));
  }
  return 20.0 * std::log10(amp_ratio);
}

inline double amplitude_from_db(double db) { return std::pow(10.0, db / 20.0); }

inline double dbm_from_watts(double watts) { return db_from_ratio(watts) + 30.0; }
inline double watts_from_dbm(double dbm) { return ratio_from_db(dbm - 30.0); }

// Gaussian tail probability Q(x) = P(N(0,1) > x).
// erfc-based; relative accuracy is that of std::erfc (< 1e-12 over the
// ranges used here).
inline double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Inverse of qfunc on (0, 0.5]; bisection, monotone and self-correcting.
inline double qfunc_inv(double p) {
  if (!(p > 0.0) || !(p < 0.5)) {
    throw std::domain_error("qfunc_inv: argument must be in (0, 0.5), got " +
                            std::to_string(p));
  }
  double lo = 0.0;
  double hi = 40.0;  // Q(40) ~ 1e-349, below double underflow of interest
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (qfunc(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace medrx

#endif  // MEDRX_UNITS_HPP
