// Exact time-domain oracle for the filtered-output covariance: augment the
// state with filter accumulators and propagate the joint covariance ODE.
#include <cstdio>

#include "omq/covariance.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/output_modes.hpp"
#include "omq/params.hpp"

using namespace omq;

static Eigen::MatrixXd time_domain_vout(const SystemParams& p, const FilterBank& bank,
                                        int steps_per_cycle = 400) {
  const auto dd = build_drift_diffusion(p);
  const auto model = detail::SpectralModel::from_params(p);
  const int n = static_cast<int>(bank.size());
  const int dim = 4 + 2 * n;
  const double tau = bank.duration();

  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
  v.topLeftCorner(4, 4) = steady_state_covariance(dd).matrix();

  const Eigen::Matrix<double, 4, 3> b = model.noise_in;
  const Eigen::Matrix<double, 4, 3> e4 = model.feedthrough;
  const Eigen::Matrix4d c4 = model.pickoff;
  const Eigen::Vector3d s = model.sym_spectra;

  auto weights = [&](double t_remaining, int k) -> Eigen::Matrix2d {
    const double om = bank.specs()[k].center_freq;
    const double ph = om * t_remaining;
    Eigen::Matrix2d w;
    w << std::cos(ph), std::sin(ph), -std::sin(ph), std::cos(ph);
    return w / std::sqrt(tau);
  };

  auto rhs = [&](double t, const Eigen::MatrixXd& vz) -> Eigen::MatrixXd {
    Eigen::MatrixXd az = Eigen::MatrixXd::Zero(dim, dim);
    az.topLeftCorner(4, 4) = dd.drift;
    Eigen::MatrixXd bz = Eigen::MatrixXd::Zero(dim, 3);
    bz.topRows(4) = b;
    for (int k = 0; k < n; ++k) {
      const Eigen::Matrix2d w = weights(tau - t, k);
      az.block(4 + 2 * k, 0, 2, 4) = w * c4.bottomRows(2);
      bz.block(4 + 2 * k, 0, 2, 3) = w * e4.bottomRows(2);
    }
    const Eigen::MatrixXd dz = bz * s.asDiagonal() * bz.transpose();
    return az * vz + vz * az.transpose() + dz;
  };

  const double cycle = constants::two_pi / std::max(p.mech_freq, p.cavity_decay);
  const double dt = cycle / steps_per_cycle;
  double t = 0.0;
  while (t < tau) {
    const double h = std::min(dt, tau - t);
    const Eigen::MatrixXd k1 = rhs(t, v);
    const Eigen::MatrixXd k2 = rhs(t + h / 2, v + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rhs(t + h / 2, v + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rhs(t + h, v + h * k3);
    v += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
    t += h;
  }
  // reorder to (mirror, modes): rows (x,p) then accumulators
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 + 2 * n, 2 + 2 * n);
  std::vector<int> idx;
  idx.push_back(0);
  idx.push_back(1);
  for (int k = 0; k < n; ++k) {
    idx.push_back(4 + 2 * k);
    idx.push_back(5 + 2 * k);
  }
  for (int i = 0; i < 2 + 2 * n; ++i)
    for (int j = 0; j < 2 + 2 * n; ++j) out(i, j) = v(idx[i], idx[j]);
  return out;
}

int main() {
  const double om = constants::two_pi * 10e6;
  SystemParams p;
  p.mass = 50e-12;
  p.mech_freq = om;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 2e4;
  p.input_power = 30e-3;
  p.derive();
  p.detuning = om;
  p.g = 0.2 * om;

  const double eps = 10.0;  // short-ish filter for a cheap oracle
  FilterBank bank({FilterSpec{-om, eps / om}});

  const Eigen::MatrixXd lib = output_covariance(p, bank).cov.matrix();
  const Eigen::MatrixXd ora = time_domain_vout(p, bank);
  std::printf("library:\n");
  for (int i = 0; i < 4; ++i)
    std::printf("  %10.5f %10.5f %10.5f %10.5f\n", lib(i, 0), lib(i, 1), lib(i, 2), lib(i, 3));
  std::printf("oracle:\n");
  for (int i = 0; i < 4; ++i)
    std::printf("  %10.5f %10.5f %10.5f %10.5f\n", ora(i, 0), ora(i, 1), ora(i, 2), ora(i, 3));
  std::printf("max abs diff = %.3e\n", (lib - ora).cwiseAbs().maxCoeff());
  std::printf("E_N lib=%.4f oracle=%.4f\n", log_negativity(CovarianceMatrix(lib)),
              log_negativity(CovarianceMatrix((ora + ora.transpose()) / 2)));
  return 0;
}
