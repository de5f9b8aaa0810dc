#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <vector>

#include "omq/errors.hpp"
#include "omq/rng.hpp"

namespace omq {

/// Phonon-number monitoring via the dispersive quadratic coupling, with the
/// cavity adiabatically eliminated: the mechanics sees dissipators D[b],
/// D[b+] at the thermal rates, measurement dephasing D[n] at
/// Gamma_meas = 2 chi^2 / kappa, and the homodyne innovation
/// sqrt(eta Gamma_meas) H[n] rho dW.
struct SMEParams {
  double chi = 0.0;         // rad/s, dispersive coupling 2 G2 alpha0
  double kappa = 0.0;       // rad/s, cavity linewidth
  double gamma = 0.0;       // rad/s, mechanical damping
  double n_th = 0.0;        // bath occupancy
  double efficiency = 1.0;  // homodyne efficiency in (0, 1]
  int dim = 8;              // Fock cutoff + 1
  double dt = 0.0;          // s
  std::uint64_t seed = 1;

  double meas_rate() const { return 2.0 * chi * chi / kappa; }
  bool adiabatic() const { return kappa >= 10.0 * chi; }

  void validate() const {
    if (chi < 0.0 || kappa <= 0.0 || gamma < 0.0 || n_th < 0.0) {
      throw std::invalid_argument("SMEParams: bad rates");
    }
    if (efficiency <= 0.0 || efficiency > 1.0) {
      throw std::invalid_argument("SMEParams: efficiency in (0, 1]");
    }
    if (dim < 2) throw std::invalid_argument("SMEParams: dim >= 2");
    if (!(dt > 0.0)) throw std::invalid_argument("SMEParams: dt > 0");
    if (dt * (kappa + gamma * (n_th + 1.0) * dim) >= 0.1) {
      throw std::invalid_argument("SMEParams: dt too coarse for the fastest rate");
    }
  }
};

/// Density matrix on a phonon-number-truncated space.
class TruncatedState {
 public:
  TruncatedState(Eigen::MatrixXcd rho, double time = 0.0) : rho_(std::move(rho)), time_(time) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
      throw std::invalid_argument("TruncatedState: square matrix, dim >= 2");
    }
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10) throw std::invalid_argument("TruncatedState: not hermitian");
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > 1e-8) throw std::invalid_argument("TruncatedState: trace != 1");
  }

  static TruncatedState fock(int dim, int n) {
    if (n < 0 || n >= dim) throw std::invalid_argument("fock: need 0 <= n < dim");
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
    r(n, n) = 1.0;
    return TruncatedState(std::move(r));
  }

  static TruncatedState thermal(int dim, double n_occ) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
    double z = 0.0;
    const double x = n_occ / (n_occ + 1.0);
    for (int n = 0; n < dim; ++n) z += std::pow(x, n);
    for (int n = 0; n < dim; ++n) r(n, n) = std::pow(x, n) / z;
    return TruncatedState(std::move(r));
  }

  int dim() const { return static_cast<int>(rho_.rows()); }
  double time() const { return time_; }
  const Eigen::MatrixXcd& rho() const { return rho_; }

  double mean_phonon() const {
    double s = 0.0;
    for (int n = 0; n < dim(); ++n) s += n * rho_(n, n).real();
    return s;
  }
  double population(int n) const { return rho_(n, n).real(); }
  double top_population() const { return rho_(dim() - 1, dim() - 1).real(); }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  friend TruncatedState sme_step(const TruncatedState&, const SMEParams&, double);

 private:
  Eigen::MatrixXcd rho_;
  double time_;
};

/// In-place stepper; ladder-operator superoperators reduce to O(d^2)
/// stencils, which keeps long trajectory ensembles affordable.
class SmePropagator {
 public:
  explicit SmePropagator(const SMEParams& p) : p_(p) {
    p.validate();
    const int d = p.dim;
    decay_.resize(d * d);
    const double gm = p.gamma * (p.n_th + 1.0);
    const double gp = p.gamma * p.n_th;
    const double gd = p.meas_rate();
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        const double nn = i - j;
        decay_[j * d + i] = -0.5 * gm * (i + j) - 0.5 * gp * (i + j + 2) - 0.5 * gd * nn * nn;
      }
    }
    innov_gain_ = std::sqrt(p.efficiency * gd);
  }

  /// One Euler-Maruyama step of the conditional equation; returns the trace
  /// drift before renormalization. dw is the Wiener increment ~ N(0, dt).
  double step(Eigen::MatrixXcd& rho, double dw) const {
    const int d = p_.dim;
    if (rho.rows() != d) throw std::invalid_argument("SmePropagator: dim mismatch");
    double mean_n = 0.0;
    for (int n = 0; n < d; ++n) mean_n += n * rho(n, n).real();

    work_.resize(d, d);
    const double dt = p_.dt;
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        std::complex<double> v =
            rho(i, j) * (1.0 + dt * decay_[j * d + i] + dw * innov_gain_ * (i + j - 2.0 * mean_n));
        if (i + 1 < d && j + 1 < d) {
          v += dt * p_.gamma * (p_.n_th + 1.0) * std::sqrt(double(i + 1) * double(j + 1)) *
               rho(i + 1, j + 1);
        }
        if (i > 0 && j > 0) {
          v += dt * p_.gamma * p_.n_th * std::sqrt(double(i) * double(j)) * rho(i - 1, j - 1);
        }
        work_(i, j) = v;
      }
    }
    // keep hermitian against roundoff
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < j; ++i) {
        const std::complex<double> m = 0.5 * (work_(i, j) + std::conj(work_(j, i)));
        work_(i, j) = m;
        work_(j, i) = std::conj(m);
      }
      work_(j, j) = work_(j, j).real();
    }
    double tr = 0.0;
    for (int n = 0; n < d; ++n) tr += work_(n, n).real();
    rho = work_ / tr;
    if (rho(d - 1, d - 1).real() > 1e-4) {
      throw CutoffOverflow("population escaped the Fock cutoff");
    }
    return tr - 1.0;
  }

  double innovation_gain() const { return innov_gain_; }

 private:
  SMEParams p_;
  std::vector<double> decay_;
  double innov_gain_;
  mutable Eigen::MatrixXcd work_;
};

/// Single conditional update as a pure function of the inputs.
inline TruncatedState sme_step(const TruncatedState& state, const SMEParams& p, double dw) {
  if (state.dim() != p.dim) throw std::invalid_argument("sme_step: dim mismatch");
  SmePropagator prop(p);
  TruncatedState out = state;
  prop.step(out.rho_, dw);
  out.time_ += p.dt;
  return out;
}

/// Homodyne record of one trajectory: time, accumulated measurement current
/// over each recorded bin, conditional mean phonon number, and the
/// median-filtered integer level assigned by the jump detector.
struct MeasurementRecord {
  std::vector<double> t;
  std::vector<double> current;   // sum over the bin of (2 sqrt(eta G) <n> dt + dW)
  std::vector<double> n_cond;
  std::vector<double> level;     // median-filtered trace
  std::vector<int> jumps;        // indices where the quantized level changes
  double plateau_fraction = 0.0;
  double max_trace_drift = 0.0;  // largest per-step trace drift seen
  int stride = 1;
  double dt = 0.0;
};

/// Centered moving median; window is clamped to the trace length.
inline std::vector<double> moving_median(const std::vector<double>& x, int window) {
  const int n = static_cast<int>(x.size());
  window = std::max(1, std::min(window, n));
  std::vector<double> out(n);
  std::multiset<double> win;
  auto median = [&]() {
    auto it = win.begin();
    std::advance(it, (win.size() - 1) / 2);
    return *it;
  };
  int lo = 0, hi = 0;  // current window [lo, hi)
  for (int i = 0; i < n; ++i) {
    const int want_lo = std::max(0, i - window / 2);
    const int want_hi = std::min(n, i + (window + 1) / 2);
    while (hi < want_hi) win.insert(x[hi++]);
    while (lo < want_lo) win.erase(win.find(x[lo++]));
    out[i] = median();
  }
  return out;
}

/// Fraction of samples whose filtered level lies within 0.25 of an integer.
inline double plateau_fraction(const std::vector<double>& level) {
  if (level.empty()) return 0.0;
  int hits = 0;
  for (double v : level) {
    if (std::abs(v - std::round(v)) <= 0.25) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(level.size());
}

/// Run one conditional trajectory. The stream index selects an independent
/// noise stream of the seed, so ensembles are reproducible regardless of
/// scheduling.
inline MeasurementRecord run_trajectory(const SMEParams& p, double t_final,
                                        const TruncatedState& initial, int record_stride = 1,
                                        std::uint64_t stream = 0) {
  p.validate();
  if (initial.dim() != p.dim) throw std::invalid_argument("run_trajectory: dim mismatch");
  SmePropagator prop(p);
  CounterRng rng(p.seed, stream);
  Eigen::MatrixXcd rho = initial.rho();
  const int steps = static_cast<int>(std::ceil(t_final / p.dt));
  const double sqdt = std::sqrt(p.dt);

  MeasurementRecord rec;
  rec.stride = record_stride;
  rec.dt = p.dt;
  rec.t.reserve(steps / record_stride + 1);
  rec.current.reserve(steps / record_stride + 1);
  rec.n_cond.reserve(steps / record_stride + 1);

  double bin_current = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double dw = rng.gaussian() * sqdt;
    double mean_n = 0.0;
    for (int n = 0; n < p.dim; ++n) mean_n += n * rho(n, n).real();
    bin_current += 2.0 * prop.innovation_gain() * mean_n * p.dt + dw;
    const double drift = prop.step(rho, dw);
    rec.max_trace_drift = std::max(rec.max_trace_drift, std::abs(drift));
    if ((k + 1) % record_stride == 0) {
      double m = 0.0;
      for (int n = 0; n < p.dim; ++n) m += n * rho(n, n).real();
      rec.t.push_back((k + 1) * p.dt);
      rec.current.push_back(bin_current);
      rec.n_cond.push_back(m);
      bin_current = 0.0;
    }
  }

  // Jump detector: moving median over 10 / Gamma_meas, then integer levels.
  const double window_time = 10.0 / std::max(p.meas_rate(), 1e-300);
  const int window = static_cast<int>(window_time / (p.dt * record_stride));
  rec.level = moving_median(rec.n_cond, std::max(window, 1));
  rec.plateau_fraction = plateau_fraction(rec.level);
  int last = static_cast<int>(std::round(rec.level.empty() ? 0.0 : rec.level.front()));
  for (std::size_t i = 1; i < rec.level.size(); ++i) {
    const int q = static_cast<int>(std::round(rec.level[i]));
    if (q != last) {
      rec.jumps.push_back(static_cast<int>(i));
      last = q;
    }
  }
  return rec;
}

/// Unconditional (dW = 0, no renormalization) Lindblad propagation with the
/// same stencil; used for oracle comparisons and ensemble baselines.
inline TruncatedState lindblad_evolve(const SMEParams& p, const TruncatedState& initial,
                                      double t_final) {
  p.validate();
  SmePropagator prop(p);
  Eigen::MatrixXcd rho = initial.rho();
  const int d = p.dim;
  const int steps = static_cast<int>(std::ceil(t_final / p.dt));
  const double gm = p.gamma * (p.n_th + 1.0);
  const double gp = p.gamma * p.n_th;
  const double gd = p.meas_rate();
  Eigen::MatrixXcd next(d, d);
  for (int k = 0; k < steps; ++k) {
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        const double nn = i - j;
        std::complex<double> v =
            rho(i, j) *
            (1.0 + p.dt * (-0.5 * gm * (i + j) - 0.5 * gp * (i + j + 2) - 0.5 * gd * nn * nn));
        if (i + 1 < d && j + 1 < d) {
          v += p.dt * gm * std::sqrt(double(i + 1) * double(j + 1)) * rho(i + 1, j + 1);
        }
        if (i > 0 && j > 0) v += p.dt * gp * std::sqrt(double(i) * double(j)) * rho(i - 1, j - 1);
        next(i, j) = v;
      }
    }
    rho.swap(next);
  }
  const double tr = rho.trace().real();
  return TruncatedState(rho / tr, initial.time() + steps * p.dt);
}

/// Summary statistics of an ensemble of conditional trajectories at fixed
/// checkpoint times: mean and standard error of <n>, mean plateau fraction.
struct EnsembleSummary {
  std::vector<double> t;
  std::vector<double> mean_n;
  std::vector<double> stderr_n;
  double mean_plateau_fraction = 0.0;
};

inline EnsembleSummary run_ensemble(const SMEParams& p, double t_final,
                                    const TruncatedState& initial, int n_traj,
                                    int record_stride = 1) {
  EnsembleSummary s;
  std::vector<double> sum, sum2;
  double plateau_sum = 0.0;
  for (int j = 0; j < n_traj; ++j) {
    const auto rec = run_trajectory(p, t_final, initial, record_stride, j);
    if (s.t.empty()) {
      s.t = rec.t;
      sum.assign(rec.t.size(), 0.0);
      sum2.assign(rec.t.size(), 0.0);
    }
    for (std::size_t i = 0; i < rec.n_cond.size(); ++i) {
      sum[i] += rec.n_cond[i];
      sum2[i] += rec.n_cond[i] * rec.n_cond[i];
    }
    plateau_sum += rec.plateau_fraction;
  }
  s.mean_n.resize(sum.size());
  s.stderr_n.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const double m = sum[i] / n_traj;
    s.mean_n[i] = m;
    const double var = std::max(sum2[i] / n_traj - m * m, 0.0);
    s.stderr_n[i] = std::sqrt(var / n_traj);
  }
  s.mean_plateau_fraction = plateau_sum / n_traj;
  return s;
}

/// Adiabatic displacement-readout transfer of the linear coupling scheme:
/// a_out = i g sqrt(kappa) e^{-i phi} / sqrt(Delta^2 + kappa^2/4) q
///         + e^{-2 i phi} a_in, with tan(phi) = 2 Delta / kappa.
/// kappa here is the full cavity linewidth of that convention.
struct ReadoutGain {
  std::complex<double> gain;
  std::complex<double> input_phase;
  double phi;
  bool adiabatic_ok;  // kappa >> Omega_M
};

inline ReadoutGain displacement_readout_gain(double g, double kappa, double detuning,
                                             double mech_freq) {
  if (g < 0.0 || kappa <= 0.0 || mech_freq <= 0.0) {
    throw std::invalid_argument("displacement_readout_gain: bad arguments");
  }
  ReadoutGain r;
  r.phi = std::atan(2.0 * detuning / kappa);
  const std::complex<double> i(0.0, 1.0);
  r.gain = i * g * std::sqrt(kappa) * std::exp(-i * r.phi) /
           std::sqrt(detuning * detuning + kappa * kappa / 4.0);
  r.input_phase = std::exp(-2.0 * i * r.phi);
  r.adiabatic_ok = kappa >= 10.0 * mech_freq;
  return r;
}

}  // namespace omq
