#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "omq/errors.hpp"

namespace omq {

/// Standard symplectic form for n modes in (x1,p1,...,xn,pn) ordering.
inline Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

/// Real symmetric matrix of quadrature second moments, vacuum variance 1/2,
/// ordering (x1,p1,...,xn,pn). Immutable after construction.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd v) : v_(std::move(v)) {
    if (v_.rows() != v_.cols() || v_.rows() % 2 != 0 || v_.rows() == 0) {
      throw std::invalid_argument("CovarianceMatrix: need square 2N x 2N matrix");
    }
    const double scale = std::max(1.0, v_.cwiseAbs().maxCoeff());
    if ((v_ - v_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw std::invalid_argument("CovarianceMatrix: matrix not symmetric");
    }
    v_ = ((v_ + v_.transpose()) / 2.0).eval();
  }

  static CovarianceMatrix vacuum(int n_modes) {
    return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
  }

  static CovarianceMatrix thermal(const std::vector<double>& occupancies) {
    const int n = static_cast<int>(occupancies.size());
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
      v(2 * k, 2 * k) = v(2 * k + 1, 2 * k + 1) = occupancies[k] + 0.5;
    }
    return CovarianceMatrix(v);
  }

  /// Two-mode squeezed vacuum with squeezing parameter s.
  static CovarianceMatrix two_mode_squeezed(double s) {
    const double ch = std::cosh(2.0 * s) / 2.0;
    const double sh = std::sinh(2.0 * s) / 2.0;
    Eigen::MatrixXd v(4, 4);
    v << ch, 0, sh, 0,
         0, ch, 0, -sh,
         sh, 0, ch, 0,
         0, -sh, 0, ch;
    return CovarianceMatrix(v);
  }

  int modes() const { return static_cast<int>(v_.rows()) / 2; }
  const Eigen::MatrixXd& matrix() const { return v_; }

  Eigen::Matrix2d block(int i, int j) const { return v_.block<2, 2>(2 * i, 2 * j); }

  /// Reduced state of a subset of modes.
  CovarianceMatrix submatrix(const std::vector<int>& keep) const {
    const int m = static_cast<int>(keep.size());
    Eigen::MatrixXd out(2 * m, 2 * m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        out.block<2, 2>(2 * a, 2 * b) = block(keep[a], keep[b]);
      }
    }
    return CovarianceMatrix(out);
  }

  /// Smallest eigenvalue of the hermitian matrix V + (i/2) Omega; the state
  /// is physical iff this is >= 0 (up to tolerance).
  double physicality_margin() const {
    const int d = static_cast<int>(v_.rows());
    Eigen::MatrixXcd h = v_.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 0.5) * symplectic_form(modes()).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    (void)d;
    return es.eigenvalues().minCoeff();
  }

  bool is_physical(double tol = 1e-10) const { return physicality_margin() >= -tol; }

  void require_physical(double tol = 1e-10) const {
    const double m = physicality_margin();
    if (m < -tol) {
      throw NonPhysicalCovariance("covariance matrix violates V + i/2 Omega >= 0 (margin " +
                                  std::to_string(m) + ")");
    }
  }

 private:
  Eigen::MatrixXd v_;
};

namespace detail {

/// Smallest partially-transposed symplectic eigenvalue of a two-mode state,
/// from the block form Sigma = det A + det B - 2 det C.
inline double ptranspose_min_symplectic_eig(const CovarianceMatrix& cov) {
  if (cov.modes() != 2) {
    throw std::invalid_argument("two-mode operation called on " + std::to_string(cov.modes()) +
                                "-mode state");
  }
  cov.require_physical();
  const Eigen::Matrix2d a = cov.block(0, 0);
  const Eigen::Matrix2d b = cov.block(1, 1);
  const Eigen::Matrix2d c = cov.block(0, 1);
  const double sigma = a.determinant() + b.determinant() - 2.0 * c.determinant();
  const double det_v = cov.matrix().determinant();
  const double disc = std::max(sigma * sigma - 4.0 * det_v, 0.0);
  const double eta2 = std::max((sigma - std::sqrt(disc)) / 2.0, 0.0);
  return std::sqrt(eta2);
}

}  // namespace detail

/// Logarithmic negativity E_N = max(0, -ln 2 eta-) of a two-mode state, in nats.
inline double log_negativity(const CovarianceMatrix& cov) {
  const double eta = detail::ptranspose_min_symplectic_eig(cov);
  return std::max(0.0, -std::log(2.0 * eta));
}

/// Simon PPT criterion: true iff the two-mode state is entangled,
/// 4 det V < Sigma - 1/4.
inline bool simon_ppt_entangled(const CovarianceMatrix& cov) {
  if (cov.modes() != 2) {
    throw std::invalid_argument("simon_ppt_entangled needs a two-mode state");
  }
  cov.require_physical();
  const Eigen::Matrix2d a = cov.block(0, 0);
  const Eigen::Matrix2d b = cov.block(1, 1);
  const Eigen::Matrix2d c = cov.block(0, 1);
  const double sigma = a.determinant() + b.determinant() - 2.0 * c.determinant();
  return 4.0 * cov.matrix().determinant() < sigma - 0.25;
}

}  // namespace omq
