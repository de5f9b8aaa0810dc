#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "omq/detail/quadrature.hpp"
#include "omq/errors.hpp"
#include "omq/langevin.hpp"
#include "omq/params.hpp"

namespace omq {

/// Squeezed-vacuum input field: occupancy-like N, anomalous correlation M,
/// Lorentzian bandwidths b_x (squeezed) and b_y (antisqueezed), and the
/// center detuning of the squeezing spectrum from the drive.
struct SqueezedInputParams {
  double n_corr = 0.0;                    // N
  std::complex<double> m_corr = 0.0;      // M
  double bw_x = 0.0;                      // rad/s
  double bw_y = 0.0;                      // rad/s
  double center_detuning = 0.0;           // Delta_s, rad/s

  void validate() const {
    if (n_corr < 0.0 || bw_x <= 0.0 || bw_y <= 0.0) {
      throw std::invalid_argument("SqueezedInputParams: N >= 0 and bandwidths > 0 required");
    }
    if (std::norm(m_corr) > n_corr * (n_corr + 1.0) * (1.0 + 1e-12)) {
      throw InvalidSqueezing("|M|^2 > N(N+1)");
    }
  }

  bool is_pure(double tol = 1e-9) const {
    return std::abs(std::norm(m_corr) - n_corr * (n_corr + 1.0)) <=
           tol * std::max(1.0, n_corr * (n_corr + 1.0));
  }

  /// Pure squeezing has only two free parameters: |M| = sqrt(N(N+1)) and
  /// b_y = b_x sqrt(2(N+|M|)+1).
  static SqueezedInputParams pure(double n, double bw_x, double phase = 0.0,
                                  double center_detuning = 0.0) {
    SqueezedInputParams s;
    s.n_corr = n;
    s.m_corr = std::polar(std::sqrt(n * (n + 1.0)), phase);
    s.bw_x = bw_x;
    s.bw_y = bw_x * std::sqrt(2.0 * (n + std::abs(s.m_corr)) + 1.0);
    s.center_detuning = center_detuning;
    return s;
  }

  /// Fourier transforms of the two correlation functions.
  double number_spectrum(double u) const {
    const double bx2 = bw_x * bw_x;
    const double by2 = bw_y * bw_y;
    return n_corr * bx2 * by2 / ((bx2 + u * u) * (by2 + u * u));
  }
  std::complex<double> anomalous_spectrum(double u) const {
    const double bx2 = bw_x * bw_x;
    const double by2 = bw_y * bw_y;
    return m_corr * bx2 * by2 * (bx2 + by2 + 2.0 * u * u) /
           ((bx2 + by2) * (bx2 + u * u) * (by2 + u * u));
  }
};

/// White-noise-limit variance of the rotating-frame mechanical quadrature
/// X_phi after cooling plus squeezing transfer:
///   (N + 1/2 - Re{M e^{2 i phi}}) + (Gamma_M / Gamma_eff)(n_th + 1/2).
inline double transferred_variance(const SqueezedInputParams& sq, double phi, double gamma_m,
                                   double gamma_eff, double n_th) {
  sq.validate();
  if (gamma_m < 0.0 || gamma_eff <= 0.0 || n_th < 0.0) {
    throw std::invalid_argument("transferred_variance: bad rates");
  }
  const double input_part =
      sq.n_corr + 0.5 - (sq.m_corr * std::exp(std::complex<double>(0.0, 2.0 * phi))).real();
  return input_part + (gamma_m / gamma_eff) * (n_th + 0.5);
}

enum class BandwidthRegime { white, finite };

struct TransferReport {
  double cavity_resonance_mismatch;   // |Delta - Omega_M|, rad/s
  double squeeze_resonance_mismatch;  // |Delta_s + Omega_M|, rad/s
  double gamma_eff;                   // cooled linewidth from the drift matrix
  bool resonance_ok;                  // mismatches small vs Gamma_eff
  bool resolved_sideband;             // kappa < Omega_M
  BandwidthRegime regime;             // b_x >> Omega_M -> white
  bool bad_cavity_finite_bandwidth_advised;
  std::string summary;
};

/// Checks of the two resonance conditions (Delta = Omega_M, Delta_s =
/// -Omega_M), the sideband resolution, and the input-bandwidth regime.
inline TransferReport squeezing_condition_report(const SystemParams& p,
                                                 const SqueezedInputParams& sq) {
  p.validate();
  sq.validate();
  TransferReport r;
  r.cavity_resonance_mismatch = std::abs(p.detuning - p.mech_freq);
  r.squeeze_resonance_mismatch = std::abs(sq.center_detuning + p.mech_freq);
  r.gamma_eff = effective_mech_linewidth(build_drift_diffusion(p).drift);
  r.resonance_ok = r.cavity_resonance_mismatch < r.gamma_eff &&
                   r.squeeze_resonance_mismatch < r.gamma_eff;
  r.resolved_sideband = p.cavity_decay < p.mech_freq;
  r.regime = (sq.bw_x > 10.0 * p.mech_freq) ? BandwidthRegime::white : BandwidthRegime::finite;
  r.bad_cavity_finite_bandwidth_advised = !r.resolved_sideband;
  r.summary = std::string("resonance ") + (r.resonance_ok ? "ok" : "MISMATCH") +
              (r.resolved_sideband ? ", resolved sideband" : ", bad cavity") +
              (r.regime == BandwidthRegime::white ? ", white squeezing" : ", finite bandwidth");
  if (r.bad_cavity_finite_bandwidth_advised) {
    r.summary += "; transfer improves with a finite optimal input bandwidth";
  }
  return r;
}

namespace detail {

/// Complex transfer matrix of (b, b+, a, a+) against the base noises
/// (f, a_in, a_in+) for the laser-frame linearized dynamics.
struct TransferModel {
  double mech_freq, mech_damping, cavity_decay, detuning, g;

  Eigen::Matrix4cd system(double omega) const {
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    a(0, 0) = -i * mech_freq - mech_damping / 2.0;
    a(0, 1) = mech_damping / 2.0;
    a(0, 2) = a(0, 3) = -i * g;
    a(1, 0) = mech_damping / 2.0;
    a(1, 1) = i * mech_freq - mech_damping / 2.0;
    a(1, 2) = a(1, 3) = i * g;
    a(2, 0) = a(2, 1) = -i * g;
    a(2, 2) = -i * detuning - cavity_decay;
    a(3, 0) = a(3, 1) = i * g;
    a(3, 3) = i * detuning - cavity_decay;
    Eigen::Matrix4cd l = -a;
    l.diagonal().array() -= cd(0.0, omega);
    return l;
  }

  Eigen::Matrix<std::complex<double>, 4, 3> transfer(double omega) const {
    using cd = std::complex<double>;
    Eigen::Matrix<cd, 4, 3> b = Eigen::Matrix<cd, 4, 3>::Zero();
    const double sg = std::sqrt(mech_damping);
    const double sk = std::sqrt(2.0 * cavity_decay);
    b(0, 0) = cd(0.0, -sg);
    b(1, 0) = cd(0.0, sg);
    b(2, 1) = -sk;
    b(3, 2) = -sk;
    return system(omega).partialPivLu().solve(b);
  }
};

}  // namespace detail

/// Variance of the rotating-frame quadrature X_phi for a colored squeezed
/// input, by spectral integration of the full linearized dynamics. The
/// anomalous (M-type) input correlations enter through a two-frequency
/// pairing at 2 Omega_bar, stationary in the rotating frame when the
/// squeezing is centered on the cavity (Delta_s = -Omega_M); away from exact
/// resonance this returns the co-rotating (time-averaged) variance.
inline double finite_bandwidth_variance(const SystemParams& p, const SqueezedInputParams& sq,
                                        double phi, double rel_tol = 1e-7) {
  p.validate();
  sq.validate();
  const detail::TransferModel model{p.mech_freq, p.mech_damping, p.cavity_decay, p.detuning,
                                    p.g};
  const double om_bar = -sq.center_detuning;  // squeezing center above the drive
  const double n_th = p.n_th;
  const double om_m = p.mech_freq;

  using M1 = Eigen::Matrix<std::complex<double>, 1, 1>;
  // <b+ b> = (1/2pi) int |T|^2-weighted input spectra; the conjugation
  // symmetry of the (b, b+, a, a+) system folds the negative-frequency half
  // onto the same transfer matrix.
  auto occ_integrand = [&](double omega) -> M1 {
    const auto t = model.transfer(omega);
    const double uf_p = n_th + 0.5 + omega / (2.0 * om_m);
    const double uf_m = n_th + 0.5 - omega / (2.0 * om_m);
    const double n_lo = sq.number_spectrum(omega - om_bar);
    const double n_hi = sq.number_spectrum(omega + om_bar);
    M1 r;
    r(0, 0) = std::norm(t(1, 0)) * uf_p + std::norm(t(0, 0)) * uf_m +
              std::norm(t(1, 1)) * (1.0 + n_lo) + std::norm(t(0, 2)) * (1.0 + n_hi) +
              std::norm(t(1, 2)) * n_hi + std::norm(t(0, 1)) * n_lo;
    return r;
  };
  // <b b> from the anomalous pairing <a_in(w) a_in(w')> at w + w' = 2 Omega_bar.
  auto anom_integrand = [&](double omega) -> M1 {
    const auto t1 = model.transfer(omega);
    const auto t2 = model.transfer(2.0 * om_bar - omega);
    M1 r;
    r(0, 0) = t1(0, 1) * t2(0, 1) * sq.anomalous_spectrum(omega - om_bar);
    return r;
  };

  std::vector<detail::SpectralLine> lines;
  const double gamma_eff = effective_mech_linewidth(build_drift_diffusion(p).drift);
  lines.push_back({om_m, std::max(gamma_eff / 2.0, 1e-9 * om_m)});
  lines.push_back({p.detuning, p.cavity_decay});
  lines.push_back({om_bar, sq.bw_x});
  lines.push_back({om_bar, sq.bw_y});
  lines.push_back({2.0 * om_bar - om_m, std::max(gamma_eff / 2.0, 1e-9 * om_m)});
  lines.push_back({2.0 * om_bar + om_m, std::max(gamma_eff / 2.0, 1e-9 * om_m)});
  lines.push_back({2.0 * om_bar - p.detuning, p.cavity_decay});
  lines.push_back({2.0 * om_bar + p.detuning, p.cavity_decay});
  const double window =
      10.0 * std::max({om_m, std::abs(om_bar) + 10.0 * sq.bw_y, p.cavity_decay});

  detail::QuadOptions qopt;
  qopt.rel_tol = rel_tol;
  const double occ =
      detail::integrate_adaptive<M1>(occ_integrand, lines, {}, window, qopt)(0, 0).real() /
      constants::two_pi;

  // The anomalous integrand is not fold-symmetric; integrate both half lines.
  auto anom_full = [&](double omega) -> M1 {
    M1 r = anom_integrand(omega);
    r += anom_integrand(-omega);
    return r;
  };
  const std::complex<double> anom =
      detail::integrate_adaptive<M1>(anom_full, lines, {}, window, qopt)(0, 0) /
      constants::two_pi;

  return 0.5 + occ + (std::exp(std::complex<double>(0.0, 2.0 * phi)) * anom).real();
}

}  // namespace omq
