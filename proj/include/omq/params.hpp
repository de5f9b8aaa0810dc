#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "omq/constants.hpp"

namespace omq {

/// Thermal occupancy 1/(exp(hbar*omega/kT) - 1); 0 at T = 0.
inline double bose_occupancy(double omega, double temperature) {
  if (temperature <= 0.0) return 0.0;
  const double x = constants::hbar * omega / (constants::k_boltzmann * temperature);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

/// Ground-state position spread sqrt(hbar / 2 m Omega).
inline double zero_point_motion(double mass, double mech_freq) {
  return std::sqrt(constants::hbar / (2.0 * mass * mech_freq));
}

inline double laser_frequency(double wavelength) {
  return constants::two_pi * constants::speed_of_light / wavelength;
}

/// Amplitude decay rate of a cavity of length L and finesse F. The line FWHM
/// is pi*c/(L*F); fields decay at half of that.
inline double cavity_decay_from_finesse(double length, double finesse) {
  return constants::pi * constants::speed_of_light / (2.0 * length * finesse);
}

/// Map a quoted line bandwidth (FWHM, rad/s) to the amplitude decay rate
/// used throughout this library.
inline double cavity_decay_from_bandwidth(double fwhm) { return fwhm / 2.0; }

/// Frequency pull per unit mirror displacement, omega_L / L.
inline double frequency_pull(double wavelength, double length) {
  return laser_frequency(wavelength) / length;
}

/// Single-photon optomechanical coupling g0 = (omega_L/L) * x_zpf.
inline double vacuum_coupling(double wavelength, double length, double mass, double mech_freq) {
  return frequency_pull(wavelength, length) * zero_point_motion(mass, mech_freq);
}

/// Full optomechanical operating point. All frequencies and rates are in
/// rad/s; `cavity_decay` is the amplitude decay rate (field ~ e^{-kappa t}).
/// Derived fields (mech_damping, n_th, g) are stored explicitly and checked
/// for consistency by validate().
struct SystemParams {
  double mass = 0.0;           // kg
  double mech_freq = 0.0;      // rad/s
  double mech_q = 0.0;         // dimensionless
  double mech_damping = 0.0;   // rad/s, = mech_freq / mech_q
  double temperature = 0.0;    // K
  double n_th = 0.0;           // thermal occupancy at mech_freq
  double cavity_decay = 0.0;   // rad/s, amplitude convention
  double cavity_length = 0.0;  // m
  double finesse = 0.0;        // dimensionless
  double wavelength = 0.0;     // m
  double input_power = 0.0;    // W
  double detuning = 0.0;       // rad/s, cavity minus laser
  double g0 = 0.0;             // rad/s, single-photon coupling
  double g = 0.0;              // rad/s, linearized (drive-enhanced) coupling

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("SystemParams: ") + name + " must be positive");
      }
    };
    positive(mass, "mass");
    positive(mech_freq, "mech_freq");
    positive(mech_q, "mech_q");
    positive(mech_damping, "mech_damping");
    positive(cavity_decay, "cavity_decay");
    positive(cavity_length, "cavity_length");
    positive(finesse, "finesse");
    positive(wavelength, "wavelength");
    if (input_power < 0.0) throw std::invalid_argument("SystemParams: input_power must be >= 0");
    if (temperature < 0.0) throw std::invalid_argument("SystemParams: temperature must be >= 0");
    if (std::abs(mech_q * mech_damping - mech_freq) > 1e-12 * mech_freq) {
      throw std::invalid_argument("SystemParams: Q != mech_freq / mech_damping");
    }
    const double n_ref = bose_occupancy(mech_freq, temperature);
    const double scale = std::max(n_ref, 1.0);
    if (std::abs(n_th - n_ref) > 1e-12 * scale) {
      throw std::invalid_argument("SystemParams: n_th inconsistent with temperature");
    }
  }

  /// Fill mech_damping, n_th, finesse/cavity_decay and g0 from the primary
  /// fields. Call after setting mass, mech_freq, mech_q, temperature,
  /// wavelength, cavity_length and one of {finesse, cavity_decay}.
  SystemParams& derive() {
    mech_damping = mech_freq / mech_q;
    n_th = bose_occupancy(mech_freq, temperature);
    if (cavity_decay <= 0.0 && finesse > 0.0) {
      cavity_decay = cavity_decay_from_finesse(cavity_length, finesse);
    } else if (finesse <= 0.0 && cavity_decay > 0.0) {
      finesse = constants::pi * constants::speed_of_light / (2.0 * cavity_length * cavity_decay);
    }
    if (g0 <= 0.0) g0 = vacuum_coupling(wavelength, cavity_length, mass, mech_freq);
    return *this;
  }
};

}  // namespace omq
