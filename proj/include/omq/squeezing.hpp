#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "omq/constants.hpp"
#include "omq/errors.hpp"
#include "omq/params.hpp"

namespace omq {

/// chi_M(omega) = 1 / [m (Omega_M^2 - omega^2 - i Gamma_M omega)].
struct MechanicalSusceptibility {
  double mass;
  double mech_freq;
  double mech_damping;

  std::complex<double> operator()(double omega) const {
    const std::complex<double> den(mass * (mech_freq * mech_freq - omega * omega),
                                   -mass * mech_damping * omega);
    return 1.0 / den;
  }
};

/// Effective radiation-pressure strength hbar G^2 alpha_s^2 entering the
/// output spectra; G is the frequency pull per unit displacement.
struct RadiationPressureStrength {
  double value;  // hbar G^2 alpha_s^2, rad/s per unit susceptibility

  static RadiationPressureStrength from_pull(double pull, double alpha_s) {
    return {constants::hbar * pull * pull * alpha_s * alpha_s};
  }
  /// Same strength expressed through the single-photon coupling and the
  /// zero-point motion, G = g0 / x_zpf.
  static RadiationPressureStrength from_vacuum_coupling(double g0, double alpha_s,
                                                        double x_zpf) {
    const double pull = g0 / x_zpf;
    return from_pull(pull, alpha_s);
  }
};

/// Stationary intracavity amplitude for the one-sided cavity drive
/// convention used here: alpha_s = sqrt(2 kappa P / hbar omega_L) /
/// sqrt(kappa^2/4 + Delta^2); real and positive.
inline double steady_amplitude(const SystemParams& p) {
  p.validate();
  const double wl = laser_frequency(p.wavelength);
  const double num = std::sqrt(2.0 * p.cavity_decay * p.input_power / (constants::hbar * wl));
  return num / std::sqrt(p.cavity_decay * p.cavity_decay / 4.0 + p.detuning * p.detuning);
}

/// Output quadrature spectra of the resonantly driven cavity, shot noise = 1.
struct SqueezingSpectra {
  Eigen::VectorXd omega;
  Eigen::VectorXd s_x;      // amplitude quadrature, identically 1 at Delta = 0
  Eigen::VectorXd s_y;      // phase quadrature
  Eigen::VectorXd s_xy;     // cross spectrum
  Eigen::VectorXd s_r;      // residual (thermal + backaction) term
  Eigen::VectorXd s_opt;    // minimum over homodyne phase
  Eigen::VectorXd phi_opt;  // optimal homodyne phase, rad
};

/// Homodyne spectrum at phase phi from the three quadrature spectra.
inline double quadrature_spectrum(double s_x, double s_y, double s_xy, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return s_x * c * c + s_y * s * s + s_xy * std::sin(2.0 * phi);
}

namespace detail {

struct SpectrumPoint {
  double s_x, s_y, s_xy, s_r, s_opt, phi_opt;
};

inline SpectrumPoint spectra_at(const SystemParams& p, double strength, double omega) {
  const MechanicalSusceptibility chi{p.mass, p.mech_freq, p.mech_damping};
  const std::complex<double> x = chi(omega);
  const double k = p.cavity_decay;
  const double lorentz = k / (k * k / 4.0 + omega * omega);
  const double s_xy = strength * lorentz * x.real();
  const double back = strength * lorentz * x.imag();
  double coth = 1.0;
  if (p.temperature > 0.0) {
    const double arg = constants::hbar * omega / (2.0 * constants::k_boltzmann * p.temperature);
    coth = 1.0 / std::tanh(arg);
  }
  const double s_r = back * back + back * coth;
  const double s_x = 1.0;
  const double s_y = 1.0 + s_xy * s_xy + s_r;

  const double disc = std::sqrt((s_x - s_y) * (s_x - s_y) + 4.0 * s_xy * s_xy);
  const double s_opt = (2.0 * s_x * s_y - 2.0 * s_xy * s_xy) / (s_x + s_y + disc);

  // The optimal-phase arctan is two-valued; take the branch with the
  // smaller homodyne spectrum.
  double phi = 0.0;
  if (s_xy != 0.0 || s_x != s_y) {
    phi = 0.5 * std::atan2(2.0 * s_xy, s_x - s_y);
    const double alt = phi + (phi > 0.0 ? -constants::pi / 2.0 : constants::pi / 2.0);
    if (quadrature_spectrum(s_x, s_y, s_xy, alt) < quadrature_spectrum(s_x, s_y, s_xy, phi)) {
      phi = alt;
    }
  }
  return {s_x, s_y, s_xy, s_r, s_opt, phi};
}

inline double effective_strength(const SystemParams& p) {
  const double alpha = steady_amplitude(p);
  return RadiationPressureStrength::from_pull(frequency_pull(p.wavelength, p.cavity_length),
                                              alpha)
      .value;
}

}  // namespace detail

/// Logarithmic grid over [1e-3, 3] Omega_M; resolves both the low-frequency
/// Kerr band and the resonance dip. The grid never includes omega = 0, where
/// the classical thermal factor diverges.
inline Eigen::VectorXd default_squeezing_grid(double mech_freq, int points = 2000) {
  Eigen::VectorXd grid(points);
  const double lo = std::log(1e-3 * mech_freq);
  const double hi = std::log(3.0 * mech_freq);
  for (int i = 0; i < points; ++i) {
    grid(i) = std::exp(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
  }
  return grid;
}

/// Output squeezing spectra of the resonantly driven (Delta = 0) one-sided
/// cavity on a strictly positive, increasing frequency grid.
inline SqueezingSpectra compute_spectra(const SystemParams& p, const Eigen::VectorXd& grid) {
  p.validate();
  if (p.detuning != 0.0) {
    throw InvalidDetuning("compute_spectra requires Delta = 0 (resonant drive)");
  }
  if (grid.size() == 0 || grid(0) <= 0.0) {
    throw std::invalid_argument("compute_spectra: grid must be strictly positive");
  }
  for (int i = 1; i < grid.size(); ++i) {
    if (grid(i) <= grid(i - 1)) {
      throw std::invalid_argument("compute_spectra: grid must be increasing");
    }
  }
  const double strength = detail::effective_strength(p);
  SqueezingSpectra out;
  const auto n = grid.size();
  out.omega = grid;
  out.s_x.resize(n);
  out.s_y.resize(n);
  out.s_xy.resize(n);
  out.s_r.resize(n);
  out.s_opt.resize(n);
  out.phi_opt.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto pt = detail::spectra_at(p, strength, grid(i));
    out.s_x(i) = pt.s_x;
    out.s_y(i) = pt.s_y;
    out.s_xy(i) = pt.s_xy;
    out.s_r(i) = pt.s_r;
    out.s_opt(i) = pt.s_opt;
    out.phi_opt(i) = pt.phi_opt;
  }
  return out;
}

/// (S_XY)^2 / S_r at one frequency; squeezing requires this >> 1, and in that
/// limit S_opt ~ (S_XY)^-2. Returns +inf when the residual noise vanishes.
inline double squeezing_figure_of_merit(const SystemParams& p, double omega) {
  p.validate();
  if (p.detuning != 0.0) {
    throw InvalidDetuning("squeezing_figure_of_merit requires Delta = 0");
  }
  const auto pt = detail::spectra_at(p, detail::effective_strength(p), omega);
  if (pt.s_r == 0.0) return std::numeric_limits<double>::infinity();
  return pt.s_xy * pt.s_xy / pt.s_r;
}

}  // namespace omq
