#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "omq/constants.hpp"
#include "omq/covariance.hpp"
#include "omq/params.hpp"

namespace omq {

/// Pulsed-protocol operating point. g is the drive-enhanced coupling, G =
/// g^2/kappa the two-photon gain, r = G tau the squeezing parameter.
struct PulseParams {
  double g = 0.0;          // rad/s
  double kappa = 0.0;      // rad/s, cavity amplitude decay
  double mech_freq = 0.0;  // rad/s
  double duration = 0.0;   // s
  double n0 = 0.0;         // initial mechanical occupancy
  double n_th = 0.0;       // bath occupancy
  double mech_damping = 0.0;  // rad/s
  double photons = 0.0;    // photons per pulse (bookkeeping)

  double gain() const { return g * g / kappa; }
  double squeezing_r() const { return gain() * duration; }

  void validate() const {
    if (g < 0.0 || kappa <= 0.0 || mech_freq <= 0.0 || duration <= 0.0 || n0 < 0.0 ||
        n_th < 0.0 || mech_damping < 0.0) {
      throw std::invalid_argument("PulseParams: bad values");
    }
  }

  /// Coupling from the pulse energy: g = g0 sqrt(2 kappa (N_ph/tau) / (Delta^2 + kappa^2)).
  static double coupling_from_pulse(double g0, double kappa, double detuning, double photons,
                                    double duration) {
    return g0 * std::sqrt(2.0 * kappa * (photons / duration) /
                          (detuning * detuning + kappa * kappa));
  }
};

/// Means and covariance of (mechanical mode B, temporal light mode A),
/// ordering (X_m, P_m, X_l, P_l), vacuum variance 1/2.
struct TwoModeMoments {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = 0.5 * Eigen::Matrix4d::Identity();

  static TwoModeMoments thermal_vacuum(double n0) {
    TwoModeMoments m;
    m.cov.topLeftCorner<2, 2>() = (n0 + 0.5) * Eigen::Matrix2d::Identity();
    return m;
  }

  CovarianceMatrix covariance() const { return CovarianceMatrix(cov); }
};

/// Symplectic matrix of the blue-detuned (two-mode-squeezing) pulse,
/// A_out = -e^r A_in - i sqrt(e^{2r}-1) B_in^+ and its partner.
inline Eigen::Matrix4d entangling_symplectic(double r) {
  const double c = std::exp(r);
  const double s = std::sqrt(std::expm1(2.0 * r));
  Eigen::Matrix4d m;
  m <<  c,  0.0, 0.0,  s,
        0.0, c,   s,   0.0,
        0.0, -s, -c,   0.0,
       -s,  0.0, 0.0, -c;
  return m;
}

/// Symplectic matrix of the red-detuned (beam-splitter / state-swap) pulse,
/// A'_out = -e^{-r} A'_in + i sqrt(1-e^{-2r}) B_in and its partner.
inline Eigen::Matrix4d swap_symplectic(double r) {
  const double c = std::exp(-r);
  const double q = std::sqrt(-std::expm1(-2.0 * r));
  Eigen::Matrix4d m;
  m <<  c,  0.0, 0.0,  q,
        0.0, c,  -q,   0.0,
        0.0, -q, -c,   0.0,
        q,  0.0, 0.0, -c;
  return m;
}

inline TwoModeMoments entangling_transform(const TwoModeMoments& in, double r) {
  if (r < 0.0) throw std::invalid_argument("entangling_transform: r >= 0");
  const Eigen::Matrix4d s = entangling_symplectic(r);
  TwoModeMoments out;
  out.mean = s * in.mean;
  out.cov = s * in.cov * s.transpose();
  return out;
}

inline TwoModeMoments state_swap_transform(const TwoModeMoments& in, double r) {
  if (r < 0.0) throw std::invalid_argument("state_swap_transform: r >= 0");
  const Eigen::Matrix4d s = swap_symplectic(r);
  TwoModeMoments out;
  out.mean = s * in.mean;
  out.cov = s * in.cov * s.transpose();
  return out;
}

/// EPR variance of a two-mode state: Var(X_m + P_l) + Var(P_m + X_l);
/// entangled iff < 2.
inline double epr_variance(const TwoModeMoments& m) {
  const Eigen::Vector4d h1(1.0, 0.0, 0.0, 1.0);
  const Eigen::Vector4d h2(0.0, 1.0, 1.0, 0.0);
  return h1.dot(m.cov * h1) + h2.dot(m.cov * h2);
}

/// Closed form after the entangling pulse on (thermal n0) x (vacuum):
/// 2 (n0 + 1)(e^r - sqrt(e^{2r} - 1))^2.
inline double epr_variance(double n0, double r) {
  if (n0 < 0.0 || r < 0.0) throw std::invalid_argument("epr_variance: n0, r >= 0");
  const double f = std::exp(r) - std::sqrt(std::expm1(2.0 * r));
  return 2.0 * (n0 + 1.0) * f * f;
}

/// Squeezing threshold r0 = (1/2) ln[(n0+2)^2 / 4(n0+1)] beyond which the
/// pulse entangles; grows like (1/2) ln n0.
inline double entanglement_threshold(double n0) {
  if (n0 < 0.0) throw std::invalid_argument("entanglement_threshold: n0 >= 0");
  return 0.5 * std::log((n0 + 2.0) * (n0 + 2.0) / (4.0 * (n0 + 1.0)));
}

/// Noise added per quadrature by the teleportation protocol, equal to
/// Delta_EPR / 2 in each of X and P; the total added noise is the EPR variance.
inline std::pair<double, double> teleportation_added_noise(double n0, double r) {
  const double per_quad = epr_variance(n0, r) / 2.0;
  return {per_quad, per_quad};
}

struct RegimeReport {
  double margin_decoherence;  // (1/tau) / (n_th Gamma_M)
  double margin_pulse;        // g tau
  double margin_adiabatic;    // kappa / g
  double margin_sideband;     // Omega_M / kappa
  double overall;             // min of the four
  bool decoherence_ok;        // n_th Gamma_M tau < 1
  double thermal_freq;        // k_B T / hbar, rad/s
  double qf_product;          // Q * Omega_M, rad/s
  double qf_margin;           // qf_product / thermal_freq
  std::string summary;
};

/// Margins of the chain n_th Gamma_M << 1/tau << g << kappa << Omega_M and
/// the Q f-product comparison k_B T / hbar << Q Omega_M.
inline RegimeReport regime_validator(const PulseParams& p, double temperature) {
  p.validate();
  RegimeReport r;
  const double decoherence_rate = p.n_th * p.mech_damping;
  r.margin_decoherence = decoherence_rate > 0.0
                             ? 1.0 / (p.duration * decoherence_rate)
                             : std::numeric_limits<double>::infinity();
  r.margin_pulse = p.g * p.duration;
  r.margin_adiabatic = p.kappa / p.g;
  r.margin_sideband = p.mech_freq / p.kappa;
  r.overall = std::min(std::min(r.margin_decoherence, r.margin_pulse),
                       std::min(r.margin_adiabatic, r.margin_sideband));
  r.decoherence_ok = decoherence_rate * p.duration < 1.0;
  r.thermal_freq = constants::k_boltzmann * temperature / constants::hbar;
  const double quality = p.mech_damping > 0.0 ? p.mech_freq / p.mech_damping
                                              : std::numeric_limits<double>::infinity();
  r.qf_product = quality * p.mech_freq;
  r.qf_margin = r.thermal_freq > 0.0 ? r.qf_product / r.thermal_freq
                                     : std::numeric_limits<double>::infinity();
  r.summary = r.decoherence_ok ? "coherent over the pulse" : "DECOHERENCE within the pulse";
  return r;
}

}  // namespace omq
