#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>

#include "omq/covariance.hpp"
#include "omq/langevin.hpp"
#include "omq/lyapunov.hpp"
#include "omq/params.hpp"
#include "omq/rng.hpp"
#include "support/oracles.hpp"

using namespace omq;

namespace {

SystemParams fig5_like(double g_over_om, double detuning_sign) {
  SystemParams p;
  p.mass = 10e-9;
  p.mech_freq = constants::two_pi * 10e6;
  p.mech_q = 1e5;
  p.temperature = 0.4;
  p.wavelength = 810e-9;
  p.cavity_length = 1e-3;
  p.finesse = 1.67e4;
  p.input_power = 50e-3;
  p.derive();
  p.detuning = detuning_sign * p.mech_freq;
  p.g = g_over_om * p.mech_freq;
  return p;
}

}  // namespace

TEST_CASE("log negativity of reference states", "[gaussian]") {
  SECTION("two-mode vacuum is separable") {
    CHECK(log_negativity(CovarianceMatrix::vacuum(2)) == 0.0);
    CHECK_FALSE(simon_ppt_entangled(CovarianceMatrix::vacuum(2)));
  }
  SECTION("two-mode squeezed vacuum, s = 0.5") {
    // Oracle: explicit partial transpose gives eta- = e^{-2s}/2, E_N = 2s = 1.
    const auto v = CovarianceMatrix::two_mode_squeezed(0.5);
    CHECK(oracles::pt_min_symplectic_eig(v.matrix()) == Catch::Approx(std::exp(-1.0) / 2.0).epsilon(1e-12));
    CHECK(log_negativity(v) == Catch::Approx(1.0).margin(1e-12));
    CHECK(simon_ppt_entangled(v));
  }
  SECTION("product of thermal states, n = 3") {
    const auto v = CovarianceMatrix::thermal({3.0, 3.0});
    CHECK(log_negativity(v) == 0.0);
    CHECK_FALSE(simon_ppt_entangled(v));
  }
  SECTION("vacuum-limit TMSV is on the separability boundary") {
    CHECK_FALSE(simon_ppt_entangled(CovarianceMatrix::two_mode_squeezed(0.0)));
  }
}

TEST_CASE("log negativity matches the partial-transpose oracle", "[gaussian]") {
  CounterRng rng(20240901);
  for (int i = 0; i < 300; ++i) {
    const auto v = oracles::random_physical_state(2, rng);
    const double lib = log_negativity(v);
    const double ora = oracles::pt_log_negativity(v.matrix());
    CHECK(lib == Catch::Approx(ora).margin(1e-9));
  }
}

TEST_CASE("Simon criterion agrees with E_N > 0", "[gaussian]") {
  CounterRng rng(77);
  int entangled = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto v = oracles::random_physical_state(2, rng);
    const bool by_en = log_negativity(v) > 0.0;
    const bool by_simon = simon_ppt_entangled(v);
    REQUIRE(by_en == by_simon);
    entangled += by_simon;
  }
  // The sampler must actually produce both classes.
  CHECK(entangled > 100);
  CHECK(entangled < 1900);
}

TEST_CASE("log negativity invariant under local symplectics", "[gaussian]") {
  CounterRng rng(4242);
  for (int i = 0; i < 100; ++i) {
    const auto v = oracles::random_physical_state(2, rng);
    const Eigen::MatrixXd s = oracles::random_local_symplectic(2, rng);
    const CovarianceMatrix moved(s * v.matrix() * s.transpose());
    CHECK(log_negativity(moved) == Catch::Approx(log_negativity(v)).margin(1e-9));
  }
}

TEST_CASE("non-physical covariance is rejected", "[gaussian]") {
  Eigen::Matrix4d v = 0.1 * Eigen::Matrix4d::Identity();  // below vacuum
  CHECK_THROWS_AS(log_negativity(CovarianceMatrix(v)), NonPhysicalCovariance);
  CHECK_THROWS_AS(simon_ppt_entangled(CovarianceMatrix(v)), NonPhysicalCovariance);
}

TEST_CASE("drift/diffusion construction", "[langevin]") {
  SECTION("g = 0 decouples mechanics and cavity") {
    auto p = fig5_like(0.0, 1.0);
    const auto dd = build_drift_diffusion(p);
    CHECK(dd.drift.block<2, 2>(0, 2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(dd.drift.block<2, 2>(2, 0).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("Delta = 0 removes mechanical feedback from the X row") {
    auto p = fig5_like(0.3, 1.0);
    p.detuning = 0.0;
    const auto dd = build_drift_diffusion(p);
    CHECK(dd.drift(2, 0) == 0.0);
    CHECK(dd.drift(2, 1) == 0.0);
    CHECK(dd.drift(2, 3) == 0.0);
  }
  SECTION("stable point has all eigenvalues in the left half plane") {
    auto p = fig5_like(0.3, 1.0);
    const auto dd = build_drift_diffusion(p);
    CHECK(max_real_eigenvalue(dd.drift) < 0.0);
    CHECK(is_stable(dd.drift));
  }
}

TEST_CASE("steady-state covariance limits", "[lyapunov]") {
  SECTION("uncoupled ground state is vacuum") {
    auto p = fig5_like(0.0, 1.0);
    p.temperature = 0.0;
    p.n_th = 0.0;
    const auto v = steady_state_covariance(build_drift_diffusion(p));
    CHECK((v.matrix() - 0.5 * Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
  SECTION("uncoupled thermal mechanics at n_th = 833") {
    auto p = fig5_like(0.0, 1.0);
    p.n_th = 833.0;
    p.temperature = constants::hbar * p.mech_freq /
                    (constants::k_boltzmann * std::log(1.0 / 833.0 + 1.0));
    const auto v = steady_state_covariance(build_drift_diffusion(p));
    CHECK(v.matrix()(0, 0) == Catch::Approx(833.5).epsilon(1e-9));
    CHECK(v.matrix()(1, 1) == Catch::Approx(833.5).epsilon(1e-9));
    CHECK(v.matrix()(2, 2) == Catch::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(v.matrix()(0, 1)) < 1e-9);
  }
  SECTION("red-detuned operating point is entangled near 50 mW") {
    const auto p = fig5_like(0.52, 1.0);
    const auto v = steady_state_covariance(build_drift_diffusion(p));
    CHECK(log_negativity(v) > 0.0);
  }
}

TEST_CASE("Lyapunov solution properties", "[lyapunov]") {
  CounterRng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    // Random stable system of moderate stiffness.
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = 2.0 * rng.uniform() - 1.0;
    a -= (1.0 + max_real_eigenvalue(a)) * Eigen::Matrix4d::Identity();
    Eigen::Matrix4d half;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) half(i, j) = rng.uniform();
    const Eigen::Matrix4d d = half * half.transpose() + 0.1 * Eigen::Matrix4d::Identity();

    const Eigen::MatrixXd v = solve_lyapunov(a, d);
    const double res = (a * v + v * a.transpose() + d).norm();
    REQUIRE(res < 1e-10 * d.norm());

    // Long-time integration of the moment equation reaches the same matrix.
    const double slowest = -max_real_eigenvalue(a);
    const Eigen::MatrixXd v_t = integrate_covariance(
        a, d, Eigen::Matrix4d::Zero(), 20.0 / slowest, 0.002 / a.cwiseAbs().maxCoeff());
    REQUIRE((v - v_t).cwiseAbs().maxCoeff() < 1e-6 * std::max(1.0, v.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("unstable drift is refused", "[lyapunov]") {
  auto p = fig5_like(0.75, 1.0);  // beyond the static bistability threshold
  const auto dd = build_drift_diffusion(p);
  CHECK(max_real_eigenvalue(dd.drift) >= 0.0);
  CHECK_THROWS_AS(steady_state_covariance(dd), UnstableSystem);
}

TEST_CASE("intracavity entanglement bound", "[gaussian]") {
  const double kappa = 1e6;
  const double gamma = 10.0;
  SECTION("g = 0 clamps to zero") {
    CHECK(intracavity_entanglement_bound(0.0, kappa, gamma, 0.5) == 0.0);
  }
  SECTION("ln 2 at the stability-bound coupling, ground-state bath") {
    const double g = std::sqrt(2.0 * kappa * gamma);
    CHECK(intracavity_entanglement_bound(g, kappa, gamma, 0.0) ==
          Catch::Approx(std::log(2.0)).epsilon(1e-12));
  }
  SECTION("one thermal quantum kills the bound at the stability coupling") {
    const double g = std::sqrt(2.0 * kappa * gamma);
    CHECK(intracavity_entanglement_bound(g, kappa, gamma, 1.0) == 0.0);
  }
}

TEST_CASE("effective mechanical linewidth from drift", "[langevin]") {
  auto p = fig5_like(0.0, 1.0);
  const auto dd = build_drift_diffusion(p);
  CHECK(effective_mech_linewidth(dd.drift) == Catch::Approx(p.mech_damping).epsilon(1e-6));

  // Coupling broadens the mechanical line.
  auto pc = fig5_like(0.1, 1.0);
  CHECK(effective_mech_linewidth(build_drift_diffusion(pc).drift) > 2.0 * p.mech_damping);
}
