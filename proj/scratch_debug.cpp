// Debug output-modes integration against exact limits.
#include <cstdio>

#include "omq/covariance.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/output_modes.hpp"
#include "omq/params.hpp"

using namespace omq;

static SystemParams fig2(double gfrac) {
  SystemParams p;
  p.mass = 50e-9;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 2e4;
  p.input_power = 30e-3;
  p.derive();
  p.detuning = p.mech_freq;
  p.g = gfrac * p.mech_freq;
  return p;
}

int main() {
  const double om = constants::two_pi * 10e6;
  const double eps = 10.0 * constants::pi;
  const double tau = eps / om;

  {
    auto p = fig2(0.0);
    FilterBank bank({FilterSpec{-om, tau}, FilterSpec{om, tau}});
    auto out = output_covariance(p, bank);
    std::printf("g=0: evals=%d refine=%d window/Om=%.1f delta=%.2e\n", out.info.evaluations,
                out.info.refinements, out.info.window / om, out.info.achieved_delta);
    Eigen::MatrixXd v = out.cov.matrix();
    std::printf("g=0 mode1 block: %.6f %.6f / %.6f %.6f\n", v(2, 2), v(2, 3), v(3, 2), v(3, 3));
    std::printf("g=0 cross(1,2) max: %.2e  mirror-mode max: %.2e\n",
                v.block<2, 2>(2, 4).cwiseAbs().maxCoeff(),
                v.block<2, 2>(0, 2).cwiseAbs().maxCoeff());
    auto comm = filtered_mode_commutators(p, bank);
    std::printf("g=0 commutators: %.8f %.8f\n", comm(0), comm(1));
  }
  for (double gf : {0.05, 0.2, 0.41}) {
    auto p = fig2(gf);
    FilterBank bank({FilterSpec{-om, tau}, FilterSpec{om, tau}});
    auto out = output_covariance(p, bank);
    Eigen::MatrixXd v = out.cov.matrix();
    const double en_ss = log_negativity(out.cov.submatrix({1, 2}));
    const double en_m1 = log_negativity(out.cov.submatrix({0, 1}));
    auto comm = filtered_mode_commutators(p, bank);
    const auto vi = steady_state_covariance(build_drift_diffusion(p));
    std::printf(
        "g=%.2f: E_N(ss)=%.4f E_N(m,stokes)=%.4f  E_N(intra)=%.4f comm=(%.6f, %.6f) evals=%d "
        "win=%.0f\n",
        gf, en_ss, en_m1, log_negativity(vi), comm(0), comm(1), out.info.evaluations,
        out.info.window / om);
    std::printf("   mode blocks diag: %.4f %.4f | %.4f %.4f  cross12 max %.4f  mirror var %.2f\n",
                v(2, 2), v(3, 3), v(4, 4), v(5, 5), v.block<2, 2>(2, 4).cwiseAbs().maxCoeff(),
                v(0, 0));
  }
  return 0;
}
