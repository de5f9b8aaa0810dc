// Scratch exploration (not part of the build): conventions and presets.
#include <cstdio>

#include "omq/covariance.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/output_modes.hpp"
#include "omq/params.hpp"
#include "omq/squeezing.hpp"

using namespace omq;

static SystemParams fig5(double power, double detuning_sign) {
  SystemParams p;
  p.mass = 10e-9;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 1.67e4;
  p.input_power = power;
  p.derive();
  p.g0 = 0.95e3;  // caption value
  p.detuning = detuning_sign * p.mech_freq;
  return p;
}

static SystemParams fig2() {
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
  p.g = 0.41 * p.mech_freq;
  return p;
}

int main() {
  {
    auto p = fig5(50e-3, 1.0);
    std::printf("fig5: kappa/Om = %.4f  n_th = %.2f  g0 = %.1f\n", p.cavity_decay / p.mech_freq,
                p.n_th, p.g0);
    const double alpha = steady_amplitude(p);
    std::printf("fig5: alpha_s(spec conv) = %.4g -> g/Om = %.4f\n", alpha,
                p.g0 * alpha / p.mech_freq);
    for (double gr : {0.30, 0.40, 0.45, 0.50, 0.52, 0.54, 0.548, 0.56, 0.60}) {
      p.g = gr * p.mech_freq;
      const auto dd = build_drift_diffusion(p);
      if (!is_stable(dd.drift)) {
        std::printf("  g/Om=%.3f UNSTABLE\n", gr);
        continue;
      }
      const auto v = steady_state_covariance(dd);
      std::printf("  g/Om=%.3f E_N=%.4f\n", gr, log_negativity(v));
    }
  }
  {
    std::printf("\nblue detuned bound check (fig2-like, various n_th):\n");
    auto p = fig2();
    p.detuning = -p.mech_freq;
    for (double nth : {0.0, 0.1, 1.0, 833.0}) {
      p.n_th = nth;
      p.temperature = nth > 0.0 ? constants::hbar * p.mech_freq /
                                      (constants::k_boltzmann * std::log(1.0 / nth + 1.0))
                                : 0.0;
      const double gmax_rwa = std::sqrt(2.0 * p.cavity_decay * p.mech_damping);
      std::printf("  n_th=%.1f  sqrt(2 k G)/Om = %.5f\n", nth, gmax_rwa / p.mech_freq);
      for (double frac : {0.2, 0.5, 0.8, 0.95, 0.99}) {
        p.g = frac * gmax_rwa;
        const auto dd = build_drift_diffusion(p);
        if (!is_stable(dd.drift)) {
          std::printf("    g=%.2f*gmax UNSTABLE\n", frac);
          continue;
        }
        const double en = log_negativity(steady_state_covariance(dd));
        const double bound = intracavity_entanglement_bound(p.g, p.cavity_decay, p.mech_damping, nth);
        std::printf("    g=%.2f*gmax E_N=%.5f bound=%.5f %s\n", frac, en, bound,
                    en <= bound + 1e-9 ? "ok" : "VIOLATED");
      }
    }
    // where is the actual stability edge?
    p.n_th = 833.0;
    p.temperature = 0.4;
    p.derive();
    p.detuning = -p.mech_freq;
    p.g = 0.41 * p.mech_freq;
    double lo = 0.0, hi = 0.05 * p.mech_freq;
    for (int i = 0; i < 60; ++i) {
      const double mid = (lo + hi) / 2;
      p.g = mid;
      if (is_stable(build_drift_diffusion(p).drift)) lo = mid; else hi = mid;
    }
    std::printf("  numerical stability edge at Delta=-Om: g/Om = %.6f (sqrt(2kG)/Om=%.6f, sqrt(kG/2)/Om=%.6f)\n",
                lo / p.mech_freq,
                std::sqrt(2.0 * p.cavity_decay * p.mech_damping) / p.mech_freq,
                std::sqrt(p.cavity_decay * p.mech_damping / 2.0) / p.mech_freq);
  }
  {
    std::printf("\nfig2 sideband scan (eps=10pi):\n");
    auto p = fig2();
    const double eps = 10.0 * constants::pi;
    const auto curve = sideband_entanglement_scan(p, 0.35 * p.mech_freq, 1.7 * p.mech_freq, eps);
    for (const auto& [w, en] : curve) {
      std::printf("  Om2/Om=%.2f E_N=%.4f\n", w / p.mech_freq, en);
    }
    const auto comm = filtered_mode_commutators(
        p, FilterBank({FilterSpec{-p.mech_freq, eps / p.mech_freq},
                       FilterSpec{p.mech_freq, eps / p.mech_freq}}));
    std::printf("  commutators: %.8f %.8f\n", comm(0), comm(1));
  }
  return 0;
}
