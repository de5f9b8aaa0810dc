#pragma once

#include <Eigen/Dense>
#include <string>

#include "omq/covariance.hpp"
#include "omq/errors.hpp"
#include "omq/langevin.hpp"

namespace omq {

/// Solve A V + V A^T = -D by dense vectorization. Dimensions here are tiny
/// (<= 10 or so), so a direct solve is both simplest and robust.
inline Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
  // K = I (x) A + A (x) I acting on vec(V), column-major.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int row = j * n + i;
      for (int l = 0; l < n; ++l) {
        k(row, j * n + l) += a(i, l);   // (A V)_{ij}
        k(row, l * n + i) += a(j, l);   // (V A^T)_{ij}
      }
    }
  }
  Eigen::VectorXd rhs(n * n);
  for (int j = 0; j < n; ++j) rhs.segment(j * n, n) = -d.col(j);
  Eigen::VectorXd x = k.partialPivLu().solve(rhs);
  Eigen::MatrixXd v(n, n);
  for (int j = 0; j < n; ++j) v.col(j) = x.segment(j * n, n);
  return ((v + v.transpose()) / 2.0).eval();
}

/// Steady-state covariance of a stable linear system. Throws UnstableSystem
/// when any drift eigenvalue has Re >= -eps_stab, and checks the residual
/// ||A V + V A^T + D|| < 1e-10 ||D||.
inline CovarianceMatrix steady_state_covariance(const DriftDiffusion& dd) {
  dd.validate();
  const double margin = stability_margin(dd.drift);
  const double max_re = max_real_eigenvalue(dd.drift);
  if (!(max_re < -margin)) {
    throw UnstableSystem("drift matrix not stable: max Re(eig) = " + std::to_string(max_re) +
                         ", margin " + std::to_string(-margin));
  }
  Eigen::MatrixXd v = solve_lyapunov(dd.drift, dd.diffusion);
  const double residual =
      (dd.drift * v + v * dd.drift.transpose() + dd.diffusion).norm();
  if (residual > 1e-10 * dd.diffusion.norm()) {
    throw std::runtime_error("Lyapunov solve residual too large: " + std::to_string(residual));
  }
  CovarianceMatrix cov(v);
  cov.require_physical();
  return cov;
}

/// Integrate dV/dt = A V + V A^T + D with classic RK4 from V0 for a time
/// span; used for relaxation traces and as a long-time cross-check of the
/// algebraic steady state.
inline Eigen::MatrixXd integrate_covariance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                            Eigen::MatrixXd v, double t_final, double dt) {
  auto rhs = [&](const Eigen::MatrixXd& m) -> Eigen::MatrixXd {
    return a * m + m * a.transpose() + d;
  };
  double t = 0.0;
  while (t < t_final) {
    const double h = std::min(dt, t_final - t);
    const Eigen::MatrixXd k1 = rhs(v);
    const Eigen::MatrixXd k2 = rhs(v + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rhs(v + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rhs(v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
  }
  return v;
}

/// Upper bound on the steady-state intracavity entanglement for blue-detuned
/// drive, E_N <= ln[(1 + g/sqrt(2 kappa Gamma_M)) / (1 + n_th)], clamped at 0.
inline double intracavity_entanglement_bound(double g, double kappa, double gamma_m,
                                             double n_th) {
  if (!(g >= 0.0) || !(kappa > 0.0) || !(gamma_m > 0.0) || !(n_th >= 0.0)) {
    throw std::invalid_argument("intracavity_entanglement_bound: bad arguments");
  }
  const double val = std::log((1.0 + g / std::sqrt(2.0 * kappa * gamma_m)) / (1.0 + n_th));
  return std::max(0.0, val);
}

}  // namespace omq
