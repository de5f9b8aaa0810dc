#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "omq/constants.hpp"
#include "omq/params.hpp"

namespace omq {

/// Single-photon Michelson with a movable end mirror: eta = g0 / Omega_M
/// measures the photon-induced mirror displacement in zero-point units.
struct InterferometerParams {
  double eta = 0.0;
  double mech_freq = 0.0;  // rad/s
  double n_bar = 0.0;      // thermal occupancy of the mirror

  void validate() const {
    if (eta < 0.0 || mech_freq <= 0.0 || n_bar < 0.0) {
      throw std::invalid_argument("InterferometerParams: eta, n_bar >= 0, Omega_M > 0");
    }
  }
};

/// Off-diagonal element of the photon's reduced density matrix for a mirror
/// prepared in the coherent state beta.
inline std::complex<double> coherence_pure(const InterferometerParams& p,
                                           std::complex<double> beta, double t) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("coherence_pure: t >= 0");
  const double wt = p.mech_freq * t;
  const double e2 = p.eta * p.eta;
  const double modulus = 0.5 * std::exp(-e2 * (1.0 - std::cos(wt)));
  const std::complex<double> rot(std::cos(wt), std::sin(wt));
  const double phase =
      e2 * (wt - std::sin(wt)) + p.eta * (beta * (1.0 - rot)).imag();
  return modulus * std::exp(std::complex<double>(0.0, phase));
}

/// Thermal average of coherence_pure over the Gaussian distribution of beta.
inline std::complex<double> coherence_thermal(const InterferometerParams& p, double t) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("coherence_thermal: t >= 0");
  const double wt = p.mech_freq * t;
  const double e2 = p.eta * p.eta;
  const double modulus = 0.5 * std::exp(-e2 * (2.0 * p.n_bar + 1.0) * (1.0 - std::cos(wt)));
  const double phase = e2 * (wt - std::sin(wt));
  return modulus * std::exp(std::complex<double>(0.0, phase));
}

/// Interference visibility: twice the modulus of the off-diagonal element.
inline double visibility_thermal(const InterferometerParams& p, double t) {
  return 2.0 * std::abs(coherence_thermal(p, t));
}

/// Environmental suppression of coherence between mirror positions a
/// distance dx apart (Ohmic bath):
/// exp[-(Gamma_M k T m dx^2 / hbar^2)(t + sin(w t) cos(w t) / w)].
inline double decoherence_factor(double gamma_m, double temperature, double mass, double dx,
                                 double mech_freq, double t) {
  if (gamma_m <= 0.0 || temperature < 0.0 || mass <= 0.0 || dx < 0.0 || mech_freq <= 0.0) {
    throw std::invalid_argument("decoherence_factor: bad arguments");
  }
  const double rate = gamma_m * constants::k_boltzmann * temperature * mass * dx * dx /
                      (constants::hbar * constants::hbar);
  const double wt = mech_freq * t;
  return std::exp(-rate * (t + std::sin(wt) * std::cos(wt) / mech_freq));
}

/// Full width at half maximum of the visibility revival at t = 2 pi / Omega_M,
/// measured on the modulus curve by bisection.
inline double revival_fwhm(const InterferometerParams& p, double rel_tol = 1e-6) {
  p.validate();
  const double t0 = constants::two_pi / p.mech_freq;
  const double peak = visibility_thermal(p, t0);
  const double half = peak / 2.0;
  // Bracket the half-crossing to the right of the peak.
  double lo = t0;
  double hi = t0 + 0.5 * t0;
  double step = t0 * 1e-6;
  while (visibility_thermal(p, t0 + step) > half) {
    step *= 2.0;
    if (t0 + step > hi) break;
  }
  lo = t0 + step / 2.0;
  hi = std::min(t0 + step, hi);
  while ((hi - lo) > rel_tol * (hi - t0)) {
    const double mid = (lo + hi) / 2.0;
    (visibility_thermal(p, mid) > half ? lo : hi) = mid;
  }
  return 2.0 * ((lo + hi) / 2.0 - t0);
}

struct FeasibilityInputs {
  double cavity_length = 0.0;    // m
  double wavelength = 0.0;       // m
  double mass = 0.0;             // kg
  double roundtrips = 0.0;       // N, photon roundtrips per mirror period
  double temperature = 0.0;      // K
  double quality = 0.0;          // mechanical Q
  double survival_target = 0.01; // photon fraction alive after a full period
  double transmission = 1e-7;    // per mirror encounter
};

struct FeasibilityReport {
  double mech_freq;            // rad/s, from 2 N L / c = 2 pi / Omega_M
  double condition_value;      // 2 hbar N^3 L / (pi c m lambda^2) = eta^2
  bool condition_met;          // >= 1
  double eta;
  double n_bar;                // thermal occupancy at mech_freq
  double revival_width;        // s, 2 / (eta Omega_M sqrt(n_bar))
  double q_threshold;          // k T / hbar Omega_M
  double q_margin;             // Q / threshold
  bool q_met;
  double required_loss;        // per reflection, for the survival target
};

/// Order-of-magnitude feasibility checks for the interferometer; all
/// thresholds are reported with margins, none are hard gates.
inline FeasibilityReport feasibility(const FeasibilityInputs& in) {
  if (in.cavity_length <= 0.0 || in.wavelength <= 0.0 || in.mass <= 0.0 ||
      in.roundtrips <= 0.0 || in.quality <= 0.0) {
    throw std::invalid_argument("feasibility: bad inputs");
  }
  FeasibilityReport r;
  r.mech_freq = constants::pi * constants::speed_of_light / (in.roundtrips * in.cavity_length);
  r.condition_value = 2.0 * constants::hbar * std::pow(in.roundtrips, 3) * in.cavity_length /
                      (constants::pi * constants::speed_of_light * in.mass * in.wavelength *
                       in.wavelength);
  r.condition_met = r.condition_value >= 1.0;
  r.eta = std::sqrt(r.condition_value);
  r.n_bar = bose_occupancy(r.mech_freq, in.temperature);
  r.revival_width = (r.n_bar > 0.0 && r.eta > 0.0)
                        ? 2.0 / (r.eta * r.mech_freq * std::sqrt(r.n_bar))
                        : 0.0;
  r.q_threshold = in.temperature > 0.0 ? constants::k_boltzmann * in.temperature /
                                             (constants::hbar * r.mech_freq)
                                       : 0.0;
  r.q_margin = r.q_threshold > 0.0 ? in.quality / r.q_threshold : std::numeric_limits<double>::infinity();
  r.q_met = in.quality >= r.q_threshold;
  // Two mirror encounters per roundtrip, each losing (loss + transmission).
  r.required_loss =
      -std::log(in.survival_target) / (2.0 * in.roundtrips) - in.transmission;
  return r;
}

/// Survival probability after N roundtrips at a given per-reflection loss.
inline double photon_survival(double roundtrips, double loss_per_reflection,
                              double transmission = 1e-7) {
  return std::exp(-2.0 * roundtrips * (loss_per_reflection + transmission));
}

}  // namespace omq
