#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "omq/constants.hpp"
#include "omq/errors.hpp"

namespace omq {

/// One causal step-window filter g(t) = e^{-i Omega t} / sqrt(tau) on [0, tau],
/// selecting an output mode of center frequency Omega (relative to the drive)
/// and bandwidth ~ 1/tau.
struct FilterSpec {
  double center_freq;  // rad/s
  double duration;     // s

  double inverse_bandwidth(double mech_freq) const { return mech_freq * duration; }
};

namespace detail {

/// J(u) = int_0^tau e^{i u s} ds.
inline std::complex<double> window_integral(double u, double tau) {
  if (std::abs(u) * tau < 1e-8) {
    return {tau, 0.5 * u * tau * tau};
  }
  return (std::exp(std::complex<double>(0.0, u * tau)) - 1.0) / std::complex<double>(0.0, u);
}

/// Fourier kernel of the filter acting on output quadratures:
/// Phi_hat(omega) = int_0^tau Phi(s) e^{i omega s} ds with
/// Phi(s) = [[cos, sin], [-sin, cos]](Omega s) / sqrt(tau).
inline Eigen::Matrix2cd filter_quadrature_kernel(const FilterSpec& f, double omega) {
  const std::complex<double> jp = window_integral(omega + f.center_freq, f.duration);
  const std::complex<double> jm = window_integral(omega - f.center_freq, f.duration);
  const std::complex<double> c = (jp + jm) / 2.0;
  const std::complex<double> s = (jp - jm) / std::complex<double>(0.0, 2.0);
  Eigen::Matrix2cd k;
  k << c, s, -s, c;
  return k / std::sqrt(f.duration);
}

}  // namespace detail

/// A set of step-window filters defining independent output modes. All
/// filters share one duration and their centers must differ by multiples of
/// 2 pi / tau, which makes the family orthonormal.
class FilterBank {
 public:
  explicit FilterBank(std::vector<FilterSpec> specs, double tol = 1e-10)
      : specs_(std::move(specs)) {
    if (specs_.empty()) throw std::invalid_argument("FilterBank: need at least one filter");
    for (const auto& f : specs_) {
      if (!(f.duration > 0.0)) throw std::invalid_argument("FilterBank: duration must be > 0");
    }
    const double tau = specs_[0].duration;
    for (const auto& f : specs_) {
      if (std::abs(f.duration - tau) > 1e-12 * tau) {
        throw NonOrthonormalFilters("filters in a bank must share one duration");
      }
    }
    const double res = orthonormality_residual();
    if (res > tol) {
      throw NonOrthonormalFilters("filter bank not orthonormal (residual " +
                                  std::to_string(res) + "); centers must differ by 2 pi p / tau");
    }
  }

  /// Largest deviation of int_0^inf g_j^* g_k ds from delta_jk.
  double orthonormality_residual() const {
    double worst = 0.0;
    const double tau = specs_[0].duration;
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      for (std::size_t k = 0; k < specs_.size(); ++k) {
        const double d = specs_[j].center_freq - specs_[k].center_freq;
        const std::complex<double> overlap = detail::window_integral(d, tau) / tau;
        const double target = (j == k) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(overlap - target));
      }
    }
    return worst;
  }

  std::size_t size() const { return specs_.size(); }
  const std::vector<FilterSpec>& specs() const { return specs_; }
  double duration() const { return specs_[0].duration; }

  /// Center frequencies on the orthonormal lattice Omega_ref + 2 pi p / tau
  /// covering [lo, hi]; used for scans that must keep the bank orthonormal.
  static std::vector<double> lattice(double omega_ref, double tau, double lo, double hi) {
    const double step = constants::two_pi / tau;
    std::vector<double> out;
    const long p_lo = static_cast<long>(std::ceil((lo - omega_ref) / step - 1e-9));
    const long p_hi = static_cast<long>(std::floor((hi - omega_ref) / step + 1e-9));
    for (long p = p_lo; p <= p_hi; ++p) out.push_back(omega_ref + step * static_cast<double>(p));
    return out;
  }

 private:
  std::vector<FilterSpec> specs_;
};

}  // namespace omq
