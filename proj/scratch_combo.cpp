// Probe (kappa, g) caption mappings against the figures' qualitative physics.
#include <cstdio>

#include "omq/covariance.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/output_modes.hpp"
#include "omq/params.hpp"

using namespace omq;

static SystemParams base_fig2(double kap_over_om, double g_over_om, double temperature) {
  SystemParams p;
  p.mass = 50e-12;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = temperature;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 2e4;
  p.input_power = 30e-3;
  p.derive();
  p.cavity_decay = kap_over_om * p.mech_freq;
  p.detuning = p.mech_freq;
  p.g = g_over_om * p.mech_freq;
  return p;
}

int main() {
  const double om = constants::two_pi * 10e6;
  const double eps = 10.0 * constants::pi;

  struct Combo { double k, g; const char* label; };
  const Combo combos[] = {
      {0.375, 0.41, "kappa=pi c/2LF, g=caption"},
      {0.375, 0.205, "kappa=pi c/2LF, g=caption/2"},
      {0.75, 0.41, "kappa=pi c/LF,  g=caption"},
      {0.75, 0.205, "kappa=pi c/LF,  g=caption/2"},
      {0.375, 0.18, "kappa=pi c/2LF, g from drive"},
  };
  for (const auto& c : combos) {
    auto p = base_fig2(c.k, c.g, 0.4);
    std::printf("--- %s (k=%.3f g=%.3f)\n", c.label, c.k, c.g);
    auto curve = sideband_entanglement_scan(p, 0.35 * om, 1.7 * om, eps);
    std::printf("    scan: ");
    for (auto& [w, en] : curve) std::printf("(%.1f:%.3f) ", w / om, en);
    std::printf("\n");
    // epsilon behavior at the antistokes point
    double e10 = 0, e100 = 0;
    {
      FilterBank b10({{-om, 10 * constants::pi / om}, {om, 10 * constants::pi / om}});
      FilterBank b100({{-om, 100 * constants::pi / om}, {om, 100 * constants::pi / om}});
      e10 = log_negativity(output_covariance(p, b10).cov.submatrix({1, 2}));
      e100 = log_negativity(output_covariance(p, b100).cov.submatrix({1, 2}));
    }
    std::printf("    eps=10pi: %.4f  eps=100pi: %.4f\n", e10, e100);
    for (double t : {0.4, 5.0, 10.0, 20.0}) {
      auto pt = base_fig2(c.k, c.g, t);
      FilterBank b10({{-om, 10 * constants::pi / om}, {om, 10 * constants::pi / om}});
      std::printf("    T=%.1fK E_N=%.4f", t, log_negativity(output_covariance(pt, b10).cov.submatrix({1, 2})));
    }
    std::printf("\n");
  }

  // Mirror-sideband (fig7-style) at fig5-like parameters.
  std::printf("\nmirror-sideband, fig5 params:\n");
  for (double kk : {0.449, 0.9}) {
    SystemParams p;
    p.mass = 10e-12;
    p.mech_freq = om;
    p.mech_q = 1e5;
    p.temperature = 0.4;
    p.wavelength = 810e-9;
    p.cavity_length = 1e-3;
    p.finesse = 1.67e4;
    p.input_power = 50e-3;
    p.derive();
    p.cavity_decay = kk * om;
    p.detuning = om;
    // keep a modest stable coupling
    p.g = 0.3 * om;
    const double en_intra = log_negativity(steady_state_covariance(build_drift_diffusion(p)));
    std::printf("  k=%.3f E_N(intra)=%.4f\n", kk, en_intra);
    for (double ep : {0.5, 2.0, 10.0, 20.0}) {
      double best = 0, bestw = 0;
      for (double w = -1.6; w <= 1.61; w += 0.2) {
        const double en = mirror_sideband_entanglement(p, w * om, ep);
        if (en > best) { best = en; bestw = w; }
      }
      std::printf("    eps=%.1f: max E_N=%.4f at Omega/Om=%.1f ; E_N(-Om)=%.4f\n", ep, best,
                  bestw, mirror_sideband_entanglement(p, -om, ep));
    }
  }
  return 0;
}
