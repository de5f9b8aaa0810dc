#pragma once

// Independent oracles used by the test suites. Everything here deliberately
// avoids the library's own computational paths: partial transposition is done
// on the explicit 4x4 matrix, symplectic eigenvalues come from i*Omega*V
// spectra, random states are built by construction-physical recipes.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "omq/covariance.hpp"
#include "omq/rng.hpp"

namespace oracles {

/// Random symplectic matrix exp(Omega H) with H symmetric; symplectic by
/// construction for any H.
inline Eigen::MatrixXd random_symplectic(int n_modes, omq::CounterRng& rng, double spread = 0.6) {
  const int d = 2 * n_modes;
  Eigen::MatrixXd h(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      h(i, j) = h(j, i) = spread * (2.0 * rng.uniform() - 1.0);
    }
  }
  const Eigen::MatrixXd gen = omq::symplectic_form(n_modes) * h;
  return gen.exp();
}

/// Block-diagonal local symplectic S1 (+) S2.
inline Eigen::MatrixXd random_local_symplectic(int n_modes, omq::CounterRng& rng,
                                               double spread = 0.6) {
  const int d = 2 * n_modes;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < n_modes; ++k) {
    s.block<2, 2>(2 * k, 2 * k) = random_symplectic(1, rng, spread);
  }
  return s;
}

/// Random physical n-mode covariance: S V_thermal S^T.
inline omq::CovarianceMatrix random_physical_state(int n_modes, omq::CounterRng& rng,
                                                   double max_occ = 2.0, double spread = 0.6) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double occ = max_occ * rng.uniform();
    v(2 * k, 2 * k) = v(2 * k + 1, 2 * k + 1) = occ + 0.5;
  }
  const Eigen::MatrixXd s = random_symplectic(n_modes, rng, spread);
  return omq::CovarianceMatrix(s * v * s.transpose());
}

/// Smallest symplectic eigenvalue of the partial transpose, computed the
/// direct way: flip p2, then take |eig(i Omega V)|.
inline double pt_min_symplectic_eig(const Eigen::MatrixXd& v4) {
  Eigen::Matrix4d flip = Eigen::Matrix4d::Identity();
  flip(3, 3) = -1.0;
  const Eigen::Matrix4d vt = flip * v4 * flip;
  const Eigen::Matrix4cd m =
      std::complex<double>(0.0, 1.0) * omq::symplectic_form(2).cast<std::complex<double>>() *
      vt.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
  double best = 1e300;
  for (int i = 0; i < 4; ++i) best = std::min(best, std::abs(es.eigenvalues()(i)));
  return best;
}

inline double pt_log_negativity(const Eigen::MatrixXd& v4) {
  return std::max(0.0, -std::log(2.0 * pt_min_symplectic_eig(v4)));
}

/// Gaussian state with means, for network oracles.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  static GaussianState product(const std::vector<GaussianState>& parts) {
    int d = 0;
    for (const auto& p : parts) d += static_cast<int>(p.mean.size());
    GaussianState out;
    out.mean = Eigen::VectorXd::Zero(d);
    out.cov = Eigen::MatrixXd::Zero(d, d);
    int at = 0;
    for (const auto& p : parts) {
      const int n = static_cast<int>(p.mean.size());
      out.mean.segment(at, n) = p.mean;
      out.cov.block(at, at, n, n) = p.cov;
      at += n;
    }
    return out;
  }

  void apply(const Eigen::MatrixXd& symplectic) {
    mean = symplectic * mean;
    cov = symplectic * cov * symplectic.transpose();
  }
};

/// Jointly measure the commuting linear combinations rows(H) u; returns the
/// conditional state of the remaining description (Schur complement) and the
/// outcome statistics. For Gaussian states conditioning is exact.
struct HomodyneResult {
  Eigen::MatrixXd cond_cov;        // conditional covariance (same dims, measured dirs collapsed)
  Eigen::MatrixXd mean_gain;       // conditional mean = prior mean + gain * (m - <m>)
  Eigen::MatrixXd outcome_cov;     // covariance of outcomes m
  Eigen::VectorXd outcome_mean;
};

inline HomodyneResult condition_on(const GaussianState& st, const Eigen::MatrixXd& h) {
  const Eigen::MatrixXd sigma_mm = h * st.cov * h.transpose();
  const Eigen::MatrixXd sigma_um = st.cov * h.transpose();
  const Eigen::MatrixXd gain = sigma_um * sigma_mm.inverse();
  HomodyneResult r;
  r.cond_cov = st.cov - gain * sigma_um.transpose();
  r.mean_gain = gain;
  r.outcome_cov = sigma_mm;
  r.outcome_mean = h * st.mean;
  return r;
}

}  // namespace oracles
