#include "kgbound/wavefunction.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "kgbound/specfun.hpp"
#include "kgbound/spectrum.hpp"
#include "kgbound/susy.hpp"

using namespace kgbound;

namespace {

struct Built {
  RadialWavefunction wf;
  EnergyLevel lvl;
};

Built build_state(double delta, int n_r, int l, Convention conv) {
  ModelParams p = reference_params(delta);
  StateIndex st{n_r, l, conv};
  EnergyLevel lvl = solve_table_level(p, st);
  REQUIRE(lvl.exists);
  return {build_wavefunction(p, lvl, st), lvl};
}

}  // namespace

TEST_CASE("ground-state wavefunction is the bare power form") {
  // n_r = 0: the polynomial factor is identically 1, so chi(s) reduces to
  // C s^epsilon (1-s)^kappa.
  Built b = build_state(0.15, 0, 0, Convention::paper_table);
  CHECK(b.wf.n_r == 0);
  for (double s : {0.05, 0.3, 0.8, 0.99}) {
    double want = b.wf.C * std::pow(s, b.wf.epsilon) *
                  std::pow(1.0 - s, b.wf.kappa);
    CHECK(eval_chi_s(b.wf, s) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("closed-form normalization constant matches quadrature") {
  for (double delta : {0.05, 0.15}) {
    for (int si = 0; si < 3; ++si) {
      static const int nr[3] = {0, 1, 0};
      static const int ll[3] = {0, 0, 1};
      Built b = build_state(delta, nr[si], ll[si], Convention::paper_table);
      IntegrationResult norm = normalization_check(b.wf);
      CHECK(norm.converged);
      CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-8));

      // Doubling C must quadruple the integral: the check scales as C^2.
      RadialWavefunction scaled = b.wf;
      scaled.C *= 2.0;
      IntegrationResult four = normalization_check(scaled);
      CHECK(four.value == doctest::Approx(4.0 * norm.value).epsilon(1e-10));
    }
  }
}

TEST_CASE("wavefunction vanishes at the origin and at infinity") {
  Built b = build_state(0.05, 0, 0, Convention::paper_table);
  CHECK(eval_chi(b.wf, 0.0) == 0.0);
  CHECK(eval_chi_s(b.wf, 1.0) == 0.0);
  // decay scale 2 delta epsilon ~ 0.095: chi(2000) ~ e^{-190}
  CHECK(std::fabs(eval_chi(b.wf, 2e3)) < 1e-80);
  CHECK_THROWS_AS(eval_chi(b.wf, -0.5), std::domain_error);
}

TEST_CASE("boundary decay at the working radius") {
  // |chi(50/delta)| < 1e-6 for every table state: s = e^{-100} there.
  const int nr[8] = {0, 1, 0, 1, 0, 2, 1, 0};
  const int ll[8] = {0, 0, 1, 1, 2, 1, 2, 3};
  for (double delta : {0.05, 0.10, 0.15, 0.20}) {
    ModelParams p = reference_params(delta);
    for (int si = 0; si < 8; ++si) {
      StateIndex st{nr[si], ll[si], Convention::paper_table};
      EnergyLevel lvl = solve_table_level(p, st);
      if (!lvl.exists) continue;
      RadialWavefunction wf = build_wavefunction(p, lvl, st);
      CHECK(std::fabs(eval_chi(wf, 50.0 / delta)) < 1e-6);
    }
  }
}

TEST_CASE("node count equals the radial quantum number") {
  const int nr[8] = {0, 1, 0, 1, 0, 2, 1, 0};
  const int ll[8] = {0, 0, 1, 1, 2, 1, 2, 3};
  for (double delta : {0.05, 0.10, 0.15, 0.20}) {
    ModelParams p = reference_params(delta);
    for (int si = 0; si < 8; ++si) {
      StateIndex st{nr[si], ll[si], Convention::paper_table};
      EnergyLevel lvl = solve_table_level(p, st);
      if (!lvl.exists) continue;
      RadialWavefunction wf = build_wavefunction(p, lvl, st);
      CHECK(count_nodes(wf, 1e-3, 80.0, 6000) == nr[si]);
    }
  }
}

TEST_CASE("deeper radial excitations keep the pattern") {
  ModelParams p = reference_params(0.15);
  for (int n_r = 0; n_r <= 4; ++n_r) {
    StateIndex st{n_r, 0, Convention::paper_table};
    EnergyLevel lvl = solve_table_level(p, st);
    REQUIRE(lvl.exists);
    RadialWavefunction wf = build_wavefunction(p, lvl, st);
    CHECK(count_nodes(wf, 1e-3, 80.0, 8000) == n_r);
    IntegrationResult norm = normalization_check(wf);
    CHECK(norm.converged);
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("build_wavefunction validates its inputs") {
  ModelParams p = reference_params(0.20);
  StateIndex st{0, 3, Convention::paper_table};  // 4f at 0.20: no root
  EnergyLevel missing = solve_table_level(p, st);
  REQUIRE_FALSE(missing.exists);
  CHECK_THROWS_AS(build_wavefunction(p, missing, st), std::invalid_argument);

  // A fabricated level with |E| >= M has no normalizable exponent.
  EnergyLevel fake;
  fake.E = 1.5;
  fake.exists = true;
  StateIndex ok{0, 0, Convention::nu};
  CHECK_THROWS_AS(build_wavefunction(reference_params(0.05), fake, ok),
                  std::domain_error);
}

TEST_CASE("ground state is proportional to the superpotential's") {
  // chi_{n_r=0} and e^{F r}(1-s)^{G/2 delta} must agree up to one overall
  // constant: F = -2 delta epsilon and G/(2 delta) = kappa at the solved
  // ground energy.
  for (double delta : {0.05, 0.15}) {
    ModelParams p = reference_params(delta);
    for (int l : {0, 1}) {
      StateIndex st{0, l, Convention::nu};
      EnergyLevel lvl = solve_table_level(p, st);
      REQUIRE(lvl.exists);
      RadialWavefunction wf = build_wavefunction(p, lvl, st);
      Superpotential sp = build_superpotential(p, l, lvl.E);
      double ref = eval_chi(wf, 1.0) / susy_ground_state(sp, 1.0);
      for (double r : {0.5, 2.0, 4.0, 8.0, 12.0, 20.0}) {
        double ratio = eval_chi(wf, r) / susy_ground_state(sp, r);
        CHECK(ratio == doctest::Approx(ref).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("count_nodes is stable against resolution") {
  Built b = build_state(0.10, 2, 1, Convention::paper_table);  // 4p: 2 nodes
  CHECK(count_nodes(b.wf, 1e-3, 80.0, 3000) == 2);
  CHECK(count_nodes(b.wf, 1e-3, 80.0, 6000) == 2);
  CHECK(count_nodes(b.wf, 1e-3, 80.0, 12000) == 2);
}
