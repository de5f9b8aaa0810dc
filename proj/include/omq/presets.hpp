#pragma once

#include <map>
#include <string>
#include <vector>

#include "omq/csv.hpp"
#include "omq/interference.hpp"
#include "omq/params.hpp"
#include "omq/pulsed.hpp"
#include "omq/run_config.hpp"
#include "omq/sme.hpp"
#include "omq/state_transfer.hpp"

namespace omq {

/// Bundled example parameter sets. The fig* names are the identifiers used
/// throughout the docs and tests; each one is a complete operating point for
/// one protocol.
struct Preset {
  std::string name;
  Protocol protocol;
  std::string description;
  std::vector<std::pair<std::string, std::string>> display;  // (field, value-with-unit)
};

namespace presets {

/// Ponderomotive-squeezing example: MHz mechanics, resonant drive.
inline SystemParams squeeze_fig1() {
  SystemParams p;
  p.mass = 100e-12;
  p.mech_freq = constants::two_pi * 1e6;
  p.mech_q = 1e4;
  p.temperature = 4.0;
  p.wavelength = 1064e-9;
  p.cavity_length = 1e-2;
  p.cavity_decay = constants::two_pi * 1e6;  // quoted 1 MHz bandwidth
  p.input_power = 10e-3;
  p.detuning = 0.0;
  p.derive();
  return p;
}

/// Sideband-entanglement example: 10 MHz membrane, red-detuned drive.
/// The quoted bandwidth (0.75 Omega_M) and half the quoted coupling are used
/// directly as the model decay and coupling; see README on conventions.
inline SystemParams sidebands_fig2() {
  SystemParams p;
  p.mass = 50e-12;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 2e4;
  p.input_power = 30e-3;
  p.derive();
  p.cavity_decay = 0.75 * p.mech_freq;
  p.detuning = p.mech_freq;
  p.g = 0.205 * p.mech_freq;
  return p;
}

/// Steady-state entanglement example; the drop to zero just above the
/// reference power marks the instability edge. g scales like sqrt(P).
inline SystemParams steady_fig5(double input_power = 50e-3) {
  SystemParams p;
  p.mass = 10e-12;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 1.67e4;
  p.input_power = input_power;
  p.derive();
  p.g0 = 0.95e3;
  p.cavity_decay = 0.9 * p.mech_freq;
  p.detuning = p.mech_freq;
  p.g = 0.60 * p.mech_freq * std::sqrt(input_power / 50e-3);
  return p;
}

/// Mirror-sideband operating point (weaker coupling than the steady-state
/// example; the filtered-output optimum sits near epsilon = 10 here).
inline SystemParams mirror_sideband_fig7() {
  SystemParams p = steady_fig5();
  p.g = 0.30 * p.mech_freq;
  return p;
}

/// Phonon-jump monitoring presets in reduced units gamma*n_th = 1.
/// variant is 'a', 'b' or 'c' (increasing measurement strength).
inline SMEParams jumps_fig4(char variant) {
  SMEParams p;
  p.n_th = 0.5;
  p.gamma = 2.0;
  p.kappa = 1e4;
  const double ratio = (variant == 'a') ? 1.0 : (variant == 'b') ? 10.0 : 100.0;
  p.chi = std::sqrt(p.kappa * ratio);  // chi^2/kappa = ratio * gamma * n_th
  p.efficiency = 1.0;
  p.dim = 8;
  p.dt = 5e-6;
  p.seed = 1;
  return p;
}

inline double jumps_fig4_time(char variant) {
  return (variant == 'a') ? 12.0 : (variant == 'b') ? 6.0 : 4.0;
}

/// Interference visibility example: eta = 1, 500 Hz mirror.
inline InterferometerParams interference_fig8(double temperature) {
  InterferometerParams p;
  p.eta = 1.0;
  p.mech_freq = constants::two_pi * 500.0;
  p.n_bar = bose_occupancy(p.mech_freq, temperature);
  return p;
}

inline FeasibilityInputs interference_workpoint() {
  FeasibilityInputs in;
  in.cavity_length = 5e-2;
  in.wavelength = 630e-9;
  in.mass = 5e-12;
  in.roundtrips = 5.6e6;
  in.temperature = 1e-3;
  in.quality = 1e6;
  return in;
}

/// Pulsed-entanglement example with comfortable margins in the
/// n_th Gamma_M << 1/tau << g << kappa << Omega_M chain; r = 1.
inline PulseParams pulsed_example() {
  PulseParams p;
  p.mech_freq = constants::two_pi * 10e6;
  p.kappa = 1e7;
  p.g = 1e6;
  p.duration = 1e-5;
  p.mech_damping = p.mech_freq / 1e7;
  p.n_th = bose_occupancy(p.mech_freq, 0.1);
  p.n0 = 0.0;
  p.photons = 4.45e9;
  return p;
}

inline double pulsed_example_temperature() { return 0.1; }

/// Laser-cooled membrane receiving squeezed vacuum; resolved sideband.
inline SystemParams transfer_demo() {
  SystemParams p;
  p.mass = 10e-12;
  p.mech_freq = constants::two_pi * 1e6;
  p.mech_q = 1e7;
  p.temperature = 0.1;
  p.wavelength = 1064e-9;
  p.cavity_length = 1e-2;
  p.derive();
  p.cavity_decay = 0.05 * p.mech_freq;
  p.finesse = constants::pi * constants::speed_of_light /
              (2.0 * p.cavity_length * p.cavity_decay);
  p.detuning = p.mech_freq;
  p.g = 0.01 * p.mech_freq;
  return p;
}

inline SqueezedInputParams transfer_demo_input() {
  auto s = SqueezedInputParams::pure(1.0, /*bw_x=*/constants::two_pi * 2e7, /*phase=*/0.0,
                                     /*center_detuning=*/-constants::two_pi * 1e6);
  return s;
}

}  // namespace presets

inline std::vector<Preset> all_presets() {
  using P = Protocol;
  auto fmt_freq = [](double w) { return format_double(w / constants::two_pi) + " Hz"; };
  std::vector<Preset> out;

  {
    auto p = presets::squeeze_fig1();
    out.push_back({"fig1", P::squeeze,
                   "ponderomotive squeezing spectra, resonant drive",
                   {{"Omega_M", fmt_freq(p.mech_freq)}, {"Q", format_double(p.mech_q)},
                    {"mass", "100 ng"}, {"T", "4 K"}, {"lambda", "1064 nm"}, {"L", "1 cm"},
                    {"kappa", fmt_freq(p.cavity_decay)}, {"P_in", "10 mW"}, {"Delta", "0 rad/s"}}});
  }
  {
    auto p = presets::sidebands_fig2();
    out.push_back({"fig2", P::sidebands,
                   "Stokes/anti-Stokes output-sideband entanglement",
                   {{"Omega_M", fmt_freq(p.mech_freq)}, {"Q", format_double(p.mech_q)},
                    {"mass", "50 ng"}, {"T", "0.4 K"}, {"lambda", "810 nm"}, {"L", "1 mm"},
                    {"finesse", "2e4"}, {"P_in", "30 mW"}, {"Delta", "+Omega_M"},
                    {"kappa", "0.75 Omega_M"}, {"g", "0.205 Omega_M"},
                    {"n_th", format_double(p.n_th)}, {"epsilon", "10 pi"}}});
  }
  {
    auto p = presets::steady_fig5();
    out.push_back({"fig5", P::steady,
                   "steady-state mirror-cavity entanglement vs power/detuning",
                   {{"Omega_M", fmt_freq(p.mech_freq)}, {"Q", format_double(p.mech_q)},
                    {"mass", "10 ng"}, {"T", "0.4 K"}, {"lambda", "810 nm"}, {"L", "1 mm"},
                    {"finesse", "1.67e4"}, {"P_0", "50 mW"}, {"Delta", "+Omega_M"},
                    {"kappa", "0.9 Omega_M"}, {"g(P_0)", "0.60 Omega_M"},
                    {"n_th", format_double(p.n_th)}}});
  }
  {
    out.push_back({"fig7", P::sidebands,
                   "mirror vs filtered Stokes mode, scan of center frequency",
                   {{"base", "fig5"}, {"g", "0.30 Omega_M"}, {"epsilon", "2 and 10"},
                    {"Omega", "around -Omega_M"}}});
  }
  for (char v : {'a', 'b', 'c'}) {
    auto p = presets::jumps_fig4(v);
    out.push_back({std::string("fig4") + v, P::jumps,
                   "conditional phonon-number monitoring (units gamma n_th = 1)",
                   {{"n_th", "0.5"}, {"gamma", "2"}, {"kappa", "1e4"},
                    {"chi^2/kappa", format_double(p.chi * p.chi / p.kappa)},
                    {"Gamma_meas", format_double(p.meas_rate())}, {"dim", "8"},
                    {"dt", format_double(p.dt)},
                    {"t_final", format_double(presets::jumps_fig4_time(v))}}});
  }
  {
    out.push_back({"fig8", P::interference,
                   "single-photon visibility revival, eta = 1",
                   {{"Omega_M", "500 Hz"}, {"eta", "1"}, {"T", "1 mK, 100 uK, 10 uK"},
                    {"workpoint", "L = 5 cm, lambda = 630 nm, m = 5e-12 kg, N = 5.6e6"}}});
  }
  {
    auto p = presets::pulsed_example();
    out.push_back({"pulsed", P::pulsed,
                   "pulsed EPR entanglement and teleportation noise",
                   {{"Omega_M", fmt_freq(p.mech_freq)}, {"kappa", "1e7 rad/s"},
                    {"g", "1e6 rad/s"}, {"tau", "10 us"}, {"r", format_double(p.squeezing_r())},
                    {"Q", "1e7"}, {"T_bath", "100 mK"},
                    {"N_ph", format_double(p.photons)}}});
  }
  {
    auto p = presets::transfer_demo();
    out.push_back({"transfer", P::transfer,
                   "squeezing transfer onto a laser-cooled membrane",
                   {{"Omega_M", fmt_freq(p.mech_freq)}, {"kappa", "0.05 Omega_M"},
                    {"g", "0.01 Omega_M"}, {"Delta", "+Omega_M"}, {"Delta_s", "-Omega_M"},
                    {"T", "0.1 K"}, {"input", "pure squeezing N = 1"}}});
  }
  return out;
}

}  // namespace omq
