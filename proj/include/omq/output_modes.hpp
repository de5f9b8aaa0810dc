#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "omq/covariance.hpp"
#include "omq/detail/quadrature.hpp"
#include "omq/errors.hpp"
#include "omq/filters.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/params.hpp"

namespace omq {

struct OutputIntegrationInfo {
  int evaluations = 0;
  int refinements = 0;
  double window = 0.0;
  double achieved_delta = 0.0;
};

/// Stationary covariance of (mirror, filtered output modes) plus the filter
/// bank and quadrature metadata that produced it.
struct OutputCorrelation {
  CovarianceMatrix cov;
  FilterBank filters;
  OutputIntegrationInfo info;
};

namespace detail {

/// Transfer description of the linearized system seen from the outputs:
/// o = (x_m, p_m, X_out, Y_out) with o~(w) = T(w) n~(w),
/// T(w) = C (-iw - A)^{-1} B + E over base noises n = (f, X_in, Y_in).
struct SpectralModel {
  Eigen::Matrix4d drift;
  Eigen::Matrix<double, 4, 3> noise_in;   // B
  Eigen::Matrix4d pickoff;                // C
  Eigen::Matrix<double, 4, 3> feedthrough;  // E
  Eigen::Vector3d sym_spectra;            // diag of symmetrized input spectra
  double mech_freq;

  static SpectralModel from_params(const SystemParams& p) {
    SpectralModel m;
    m.drift = build_drift_diffusion(p).drift;
    m.noise_in.setZero();
    m.noise_in(1, 0) = -std::sqrt(2.0 * p.mech_damping);
    m.noise_in(2, 1) = -std::sqrt(2.0 * p.cavity_decay);
    m.noise_in(3, 2) = -std::sqrt(2.0 * p.cavity_decay);
    // With the Langevin coupling -sqrt(2 kappa) a_in, the consistent
    // input-output relation is a_out = a_in + sqrt(2 kappa) a; the g = 0
    // reflection is then an all-pass.
    m.pickoff.setIdentity();
    m.pickoff(2, 2) = m.pickoff(3, 3) = std::sqrt(2.0 * p.cavity_decay);
    m.feedthrough.setZero();
    m.feedthrough(2, 1) = 1.0;
    m.feedthrough(3, 2) = 1.0;
    m.sym_spectra << p.n_th + 0.5, 0.5, 0.5;
    m.mech_freq = p.mech_freq;
    return m;
  }

  Eigen::Matrix<std::complex<double>, 4, 3> transfer(double omega) const {
    Eigen::Matrix4cd l = -drift.cast<std::complex<double>>();
    l.diagonal().array() -= std::complex<double>(0.0, omega);
    Eigen::Matrix<std::complex<double>, 4, 3> t =
        l.partialPivLu().solve(noise_in.cast<std::complex<double>>());
    return pickoff.cast<std::complex<double>>() * t +
           feedthrough.cast<std::complex<double>>();
  }

  /// Symmetrized output spectral matrix S_o(w) = T S T^dag.
  Eigen::Matrix4cd spectrum(double omega) const {
    const auto t = transfer(omega);
    return t * sym_spectra.asDiagonal() * t.adjoint();
  }

  /// Commutator spectral matrix: mechanical Brownian noise carries the Ohmic
  /// antisymmetric part w/Omega_M, optical vacuum the canonical i Omega_2.
  Eigen::Matrix4cd commutator_spectrum(double omega) const {
    const auto t = transfer(omega);
    Eigen::Matrix3cd k = Eigen::Matrix3cd::Zero();
    k(0, 0) = omega / mech_freq;
    k(1, 2) = std::complex<double>(0.0, 1.0);
    k(2, 1) = std::complex<double>(0.0, -1.0);
    return t * k * t.adjoint();
  }
};

inline std::vector<SpectralLine> integration_lines(const SpectralModel& model,
                                                   const FilterBank& bank) {
  std::vector<SpectralLine> lines;
  for (const auto& [nu, hw] : spectral_features(model.drift)) {
    lines.push_back({nu, std::max(hw, 1e-9 * model.mech_freq)});
  }
  const double sinc_width = constants::two_pi / bank.duration();
  for (const auto& f : bank.specs()) {
    lines.push_back({f.center_freq, sinc_width});
  }
  return lines;
}

}  // namespace detail

struct OutputModeOptions {
  double rel_tol = 1e-6;
  int max_refine = 10;
};

/// Stationary covariance matrix of the mirror and N filtered output modes,
/// ordering (x_m, p_m, X_1, Y_1, ..., X_N, Y_N).
///
/// The mode blocks are frequency-domain integrals of the output spectral
/// matrix mapped through the filter kernels; the exact vacuum floor
/// (1/2) delta_jk is split off analytically so the numerical integrand decays
/// fast. The mirror block is the algebraic steady state, which is the same
/// integral done exactly.
inline OutputCorrelation output_covariance(const SystemParams& p, const FilterBank& bank,
                                           const OutputModeOptions& opt = {}) {
  p.validate();
  const auto dd = build_drift_diffusion(p);
  if (!is_stable(dd.drift)) {
    throw UnstableSystem("output_covariance: linearized system is unstable");
  }
  const auto model = detail::SpectralModel::from_params(p);
  const int n_modes = static_cast<int>(bank.size());
  const int dim = 2 + 2 * n_modes;

  using Work = Eigen::MatrixXd;
  std::vector<Eigen::Matrix2cd> kernels(n_modes);
  auto integrand = [&](double omega) -> Work {
    const Eigen::Matrix4cd s = model.spectrum(omega);
    for (int k = 0; k < n_modes; ++k) {
      kernels[k] = detail::filter_quadrature_kernel(bank.specs()[k], omega);
    }
    const Eigen::Matrix2cd s_ml = s.block<2, 2>(0, 2);
    Eigen::Matrix2cd s_ll = s.block<2, 2>(2, 2);
    s_ll(0, 0) -= 0.5;
    s_ll(1, 1) -= 0.5;
    Work out = Work::Zero(dim, dim);
    for (int k = 0; k < n_modes; ++k) {
      out.block<2, 2>(0, 2 + 2 * k) = 2.0 * (s_ml * kernels[k].adjoint()).real();
      for (int j = 0; j <= k; ++j) {
        const Eigen::Matrix2d b = 2.0 * (kernels[j] * s_ll * kernels[k].adjoint()).real();
        out.block<2, 2>(2 + 2 * j, 2 + 2 * k) = b;
      }
    }
    return out;
  };

  const double sinc_width = constants::two_pi / bank.duration();
  double window = 4.0 * model.mech_freq;
  for (const auto& f : bank.specs()) {
    window = std::max(window, std::abs(f.center_freq) + 40.0 * sinc_width);
  }
  for (const auto& [nu, hw] : spectral_features(model.drift)) {
    window = std::max(window, std::abs(nu) + 60.0 * hw);
  }

  detail::QuadOptions qopt;
  qopt.rel_tol = opt.rel_tol;
  qopt.max_refine = opt.max_refine;
  detail::QuadReport rep;
  Work integral = detail::integrate_adaptive<Work>(
      integrand, detail::integration_lines(model, bank), {bank.duration()}, window, qopt, &rep);
  integral /= constants::two_pi;

  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
  v.topLeftCorner(2, 2) = steady_state_covariance(dd).matrix().topLeftCorner(2, 2);
  for (int k = 0; k < n_modes; ++k) {
    v.block<2, 2>(0, 2 + 2 * k) = integral.block<2, 2>(0, 2 + 2 * k);
    v.block<2, 2>(2 + 2 * k, 0) = integral.block<2, 2>(0, 2 + 2 * k).transpose();
    for (int j = 0; j <= k; ++j) {
      Eigen::Matrix2d b = integral.block<2, 2>(2 + 2 * j, 2 + 2 * k);
      if (j == k) {
        b = ((b + b.transpose()) / 2.0).eval();
        b += 0.5 * Eigen::Matrix2d::Identity();
      }
      v.block<2, 2>(2 + 2 * j, 2 + 2 * k) = b;
      v.block<2, 2>(2 + 2 * k, 2 + 2 * j) = b.transpose();
    }
  }

  CovarianceMatrix cov(v);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  cov.require_physical(std::max(1e-10, 20.0 * opt.rel_tol * scale));

  OutputIntegrationInfo info{rep.evaluations, rep.refinements, rep.window, rep.last_delta};
  return OutputCorrelation{std::move(cov), bank, info};
}

/// Reconstructed commutator [A_k, A_k+] of each filtered mode under the same
/// quadrature rule; equals 1 when the vacuum bookkeeping and the integration
/// grid are sound.
inline Eigen::VectorXd filtered_mode_commutators(const SystemParams& p, const FilterBank& bank,
                                                 const OutputModeOptions& opt = {}) {
  p.validate();
  const auto model = detail::SpectralModel::from_params(p);
  const int n_modes = static_cast<int>(bank.size());

  using Work = Eigen::MatrixXd;
  auto integrand = [&](double omega) -> Work {
    const Eigen::Matrix4cd kfull = model.commutator_spectrum(omega);
    // Subtract the exact vacuum feedthrough part E K E^dag = i Omega_2.
    Eigen::Matrix2cd ksys = kfull.block<2, 2>(2, 2);
    ksys(0, 1) -= std::complex<double>(0.0, 1.0);
    ksys(1, 0) += std::complex<double>(0.0, 1.0);
    Work out = Work::Zero(n_modes, 1);
    for (int k = 0; k < n_modes; ++k) {
      const Eigen::Matrix2cd kern = detail::filter_quadrature_kernel(bank.specs()[k], omega);
      out(k, 0) = 2.0 * (kern * ksys * kern.adjoint())(0, 1).imag();
    }
    return out;
  };

  const double sinc_width = constants::two_pi / bank.duration();
  double window = 4.0 * model.mech_freq;
  for (const auto& f : bank.specs()) {
    window = std::max(window, std::abs(f.center_freq) + 40.0 * sinc_width);
  }
  detail::QuadOptions qopt;
  qopt.rel_tol = opt.rel_tol;
  qopt.max_refine = opt.max_refine;
  Work integral = detail::integrate_adaptive<Work>(
      integrand, detail::integration_lines(model, bank), {bank.duration()}, window, qopt,
      nullptr);
  Eigen::VectorXd out(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    // Vacuum part contributes exactly 1; the system part is -i times the
    // (X,Y) entry of the folded integral.
    out(k) = 1.0 + integral(k, 0) / constants::two_pi;
  }
  return out;
}

/// Entanglement of the two filtered output modes as the second center
/// frequency walks the orthonormal lattice around the requested range; the
/// first filter stays on the Stokes sideband -Omega_M.
inline std::vector<std::pair<double, double>> sideband_entanglement_scan(
    const SystemParams& p, double omega2_lo, double omega2_hi, double epsilon,
    const OutputModeOptions& opt = {}) {
  const double tau = epsilon / p.mech_freq;
  std::vector<std::pair<double, double>> curve;
  for (double w2 : FilterBank::lattice(-p.mech_freq, tau, omega2_lo, omega2_hi)) {
    FilterBank bank({FilterSpec{-p.mech_freq, tau}, FilterSpec{w2, tau}});
    const auto out = output_covariance(p, bank, opt);
    curve.emplace_back(w2, log_negativity(out.cov.submatrix({1, 2})));
  }
  return curve;
}

/// Entanglement of the mirror with one filtered output mode of center Omega
/// and inverse bandwidth epsilon = Omega_M tau.
inline double mirror_sideband_entanglement(const SystemParams& p, double omega, double epsilon,
                                           const OutputModeOptions& opt = {}) {
  const double tau = epsilon / p.mech_freq;
  FilterBank bank({FilterSpec{omega, tau}});
  const auto out = output_covariance(p, bank, opt);
  return log_negativity(out.cov);
}

}  // namespace omq
