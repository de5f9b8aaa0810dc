#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "omq/params.hpp"

namespace omq {

/// First-moment drift A and symmetrized diffusion D of a set of linear
/// quantum Langevin equations, du = A u dt + noise, d<uu^T>_sym/dt = A V + V A^T + D.
struct DriftDiffusion {
  Eigen::MatrixXd drift;
  Eigen::MatrixXd diffusion;

  void validate() const {
    if (drift.rows() != drift.cols() || diffusion.rows() != diffusion.cols() ||
        drift.rows() != diffusion.rows()) {
      throw std::invalid_argument("DriftDiffusion: dimension mismatch");
    }
    const double scale = std::max(1.0, diffusion.cwiseAbs().maxCoeff());
    if ((diffusion - diffusion.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw std::invalid_argument("DriftDiffusion: diffusion not symmetric");
    }
  }
};

/// Drift/diffusion of the linearized optomechanical equations for
/// (x_m, p_m, X_c, Y_c):
///   dx_m/dt = Omega_M p_m
///   dp_m/dt = -Omega_M x_m - Gamma_M p_m - 2 g X_c - sqrt(2 Gamma_M) f
///   dX_c/dt = -kappa X_c + Delta Y_c - sqrt(2 kappa) X_in
///   dY_c/dt = -Delta X_c - kappa Y_c - 2 g x_m - sqrt(2 kappa) Y_in
/// with vacuum optical input and Markovian mechanical noise of occupancy n_th.
inline DriftDiffusion build_drift_diffusion(const SystemParams& p) {
  p.validate();
  const double om = p.mech_freq;
  const double gm = p.mech_damping;
  const double k = p.cavity_decay;
  const double d = p.detuning;
  const double g = p.g;

  Eigen::Matrix4d a;
  a << 0.0, om, 0.0, 0.0,
       -om, -gm, -2.0 * g, 0.0,
       0.0, 0.0, -k, d,
       -2.0 * g, 0.0, -d, -k;

  Eigen::Matrix4d dd = Eigen::Matrix4d::Zero();
  dd(1, 1) = 2.0 * gm * (p.n_th + 0.5);
  dd(2, 2) = k;
  dd(3, 3) = k;

  return DriftDiffusion{a, dd};
}

/// Stability margin used by the Lyapunov solver: eigenvalues must satisfy
/// Re(lambda) < -eps with eps = 1e-6 * max |A_ij|.
inline double stability_margin(const Eigen::MatrixXd& drift) {
  return 1e-6 * drift.cwiseAbs().maxCoeff();
}

inline double max_real_eigenvalue(const Eigen::MatrixXd& drift) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(drift, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

inline bool is_stable(const Eigen::MatrixXd& drift) {
  return max_real_eigenvalue(drift) < -stability_margin(drift);
}

/// Effective mechanical linewidth (energy decay rate) read off the drift
/// matrix: -2 Re(lambda) of the eigenvalue whose eigenvector has the most
/// weight on the mechanical quadratures. Reduces to Gamma_M at g = 0.
inline double effective_mech_linewidth(const Eigen::MatrixXd& drift) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(drift);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  int best = 0;
  double best_weight = -1.0;
  for (int i = 0; i < vals.size(); ++i) {
    const double w = vecs.col(i).head(2).squaredNorm() / vecs.col(i).squaredNorm();
    if (w > best_weight) {
      best_weight = w;
      best = i;
    }
  }
  return -2.0 * vals(best).real();
}

/// Feature list (center frequency, half width) of the stationary spectra
/// implied by a drift matrix; used to concentrate quadrature grids.
inline std::vector<std::pair<double, double>> spectral_features(const Eigen::MatrixXd& drift) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(drift, /*computeEigenvectors=*/false);
  std::vector<std::pair<double, double>> feats;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double nu = es.eigenvalues()(i).imag();
    const double hw = std::abs(es.eigenvalues()(i).real());
    feats.emplace_back(nu, hw);
  }
  return feats;
}

}  // namespace omq
