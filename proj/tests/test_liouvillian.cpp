#include <doctest.h>

#include <cmath>

#include "liouvillian.hpp"
#include "test_support.hpp"

using namespace chiralswitch;

namespace {

DriveConfig baseline_drives() {
  DriveConfig d;
  d.set_omega21_polar(0.1, 180.0);
  d.omega31 = Complex(1.0, 0.0);
  d.omega32 = Complex(1.0, 0.0);
  d.delta = 10.0;
  return d;
}

}  // namespace

TEST_CASE("hamiltonian construction") {
  DriveConfig d;
  d.delta = 10.0;
  Matrix3c h = build_hamiltonian(d, Chirality::Left);
  CHECK(h(0, 0) == Complex(0.0, 0.0));
  CHECK(h(1, 1) == Complex(0.0, 0.0));
  CHECK(h(2, 2) == Complex(10.0, 0.0));
  CHECK(h.cwiseAbs().sum() == doctest::Approx(10.0));

  DriveConfig d2;
  d2.set_omega21_polar(0.1, 180.0);  // 0.1 * exp(i*pi)
  Matrix3c h2 = build_hamiltonian(d2, Chirality::Left);
  CHECK(h2(1, 0).real() == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(std::abs(h2(1, 0).imag()) < 1e-16);
  CHECK(h2(0, 1) == std::conj(h2(1, 0)));
  CHECK(std::abs(h2(2, 0)) == 0.0);
  CHECK(std::abs(h2(2, 1)) == 0.0);
}

TEST_CASE("hamiltonian chirality flip keeps the detuning") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    DriveConfig d = testing::random_drives(rng);
    Matrix3c hl = build_hamiltonian(d, Chirality::Left);
    Matrix3c hr = build_hamiltonian(d, Chirality::Right);
    Matrix3c expected = -hl;
    expected(2, 2) += 2.0 * d.delta;
    CHECK(testing::max_abs_diff(hr, expected) == 0.0);
    // Hermitian either way
    CHECK(testing::max_abs_diff(hl, hl.adjoint()) == 0.0);
  }
}

TEST_CASE("generator action matches the dissipator definition") {
  DriveConfig no_drive;
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  Generator gen = build_generator(no_drive, dec, Chirality::Left);

  Vector9c rho = vectorize(DensityMatrix::pure(2).m);  // |3><3|
  Vector9c dt = gen.apply(rho);
  CHECK(dt(vec_index(2, 2)).real() == doctest::Approx(-0.2).epsilon(1e-14));
  CHECK(dt(vec_index(1, 1)).real() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(dt(vec_index(0, 0)).real() == doctest::Approx(0.1).epsilon(1e-14));
  for (int k = 0; k < 9; ++k) CHECK(std::abs(dt(k).imag()) == 0.0);
}

TEST_CASE("generator annihilates the trace functional") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    DriveConfig d = testing::random_drives(rng);
    DecoherenceConfig dec = testing::random_decoherence(rng, 0.0, 10.0);
    Chirality q = trial % 2 ? Chirality::Left : Chirality::Right;
    Generator gen = build_generator(d, dec, q);
    // sum of the population rows must vanish identically
    for (int col = 0; col < 9; ++col) {
      Complex s = gen.matrix(vec_index(0, 0), col) +
                  gen.matrix(vec_index(1, 1), col) +
                  gen.matrix(vec_index(2, 2), col);
      CHECK(std::abs(s) <= 1e-12 * (1.0 + gen.inf_norm()));
    }
  }
}

TEST_CASE("generator preserves Hermiticity") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    DriveConfig d = testing::random_drives(rng);
    DecoherenceConfig dec = testing::random_decoherence(rng, 0.0, 10.0);
    Generator gen = build_generator(d, dec, Chirality::Left);
    DensityMatrix rho = testing::random_hermitian_unit_trace(rng);
    Matrix3c image = unvectorize(gen.apply(vectorize(rho.m)));
    CHECK(testing::max_abs_diff(image, image.adjoint()) <=
          1e-12 * (1.0 + gen.inf_norm()));
  }
}

TEST_CASE("undriven decoherence-free generator carries only the detuning") {
  DriveConfig d;
  d.delta = 3.0;
  Generator gen = build_generator(d, DecoherenceConfig{}, Chirality::Left);
  // the |3>-coherence rows rotate, everything else is static
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      Complex v = gen.matrix(r, c);
      if (r == c && (r == vec_index(0, 2) || r == vec_index(1, 2))) {
        CHECK(v == Complex(0.0, 3.0));
      } else if (r == c && (r == vec_index(2, 0) || r == vec_index(2, 1))) {
        CHECK(v == Complex(0.0, -3.0));
      } else {
        CHECK(std::abs(v) == 0.0);
      }
    }
  }
}

TEST_CASE("undriven steady state is the ground state") {
  testing::Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    DriveConfig d;
    d.delta = rng.uniform(-20.0, 20.0);
    DecoherenceConfig dec = testing::random_decoherence(rng);
    DensityMatrix rho = steady_state(d, dec, Chirality::Left);
    CHECK(testing::max_abs_diff(rho.m, DensityMatrix::ground().m) <= 1e-12);
  }
}

TEST_CASE("steady state refuses a decoherence-free model") {
  DecoherenceConfig dec;       // all zero
  dec.deph21 = 0.1;            // dephasing alone does not select a state
  CHECK_THROWS_AS(steady_state(baseline_drives(), dec, Chirality::Left),
                  Error);
  try {
    steady_state(baseline_drives(), DecoherenceConfig{}, Chirality::Left);
  } catch (const Error& e) {
    CHECK(e.status() == Status::DegenerateSteadyState);
  }
}

TEST_CASE("steady state satisfies the generator equation and physicality") {
  testing::Rng rng(15);
  for (int trial = 0; trial < 25; ++trial) {
    DriveConfig d = testing::random_drives(rng);
    DecoherenceConfig dec = testing::random_decoherence(rng);
    Chirality q = trial % 2 ? Chirality::Left : Chirality::Right;
    Generator gen = build_generator(d, dec, q);
    DensityMatrix rho = steady_state(d, dec, q);
    double resid = gen.apply(vectorize(rho.m)).cwiseAbs().maxCoeff();
    CHECK(resid <= 1e-10 * gen.inf_norm());
    CHECK(rho.hermiticity_defect() <= 1e-12);
    CHECK(rho.trace_defect() <= 1e-10);
    CHECK(rho.min_eigenvalue() >= -1e-10);
  }
}

TEST_CASE("evolution input validation") {
  DriveConfig d = baseline_drives();
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  DensityMatrix rho0 = DensityMatrix::ground();
  CHECK_THROWS_AS(
      evolve_to_steady(d, dec, Chirality::Left, rho0, -1.0, 1e-10), Error);
  CHECK_THROWS_AS(
      evolve_to_steady(d, dec, Chirality::Left, rho0, 1.0, 0.0), Error);
}

TEST_CASE("undriven ground state is a fixed point of the evolution") {
  DriveConfig d;
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  DensityMatrix rho =
      evolve_to_steady(d, dec, Chirality::Left, DensityMatrix::ground(), 30.0,
                       1e-11);
  CHECK(testing::max_abs_diff(rho.m, DensityMatrix::ground().m) <= 1e-10);
}

TEST_CASE("undriven upper-state decay follows the analytic exponential") {
  DriveConfig d;  // no drives, delta = 0
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);  // gamma3 = 0.2
  // closed rate equation: rho33(t) = exp(-0.2 t)
  for (double t : {1.0, 5.0, 20.0}) {
    DensityMatrix rho = evolve_to_steady(d, dec, Chirality::Left,
                                         DensityMatrix::pure(2), t, 1e-12);
    CHECK(rho.m(2, 2).real() ==
          doctest::Approx(std::exp(-0.2 * t)).epsilon(1e-8));
  }
}

TEST_CASE("evolution agrees with the algebraic steady state at the baseline") {
  DriveConfig d = baseline_drives();
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  DensityMatrix direct = steady_state(d, dec, Chirality::Left);
  DensityMatrix evolved = evolve_to_steady(
      d, dec, Chirality::Left, DensityMatrix::ground(), 50.0 / 0.1, 1e-11);
  CHECK(testing::max_abs_diff(direct.m, evolved.m) <= 1e-8);
}

TEST_CASE("oracle equivalence over random configurations") {
  testing::Rng rng(16);
  for (int trial = 0; trial < 8; ++trial) {
    DriveConfig d = testing::random_drives(rng);
    DecoherenceConfig dec = testing::random_decoherence(rng, 0.05, 10.0);
    Chirality q = trial % 2 ? Chirality::Left : Chirality::Right;
    double t_end = 200.0 / dec.min_positive_rate();
    DensityMatrix evolved = evolve_to_steady(d, dec, q,
                                             DensityMatrix::ground(), t_end,
                                             1e-11);
    DensityMatrix direct = steady_state(d, dec, q);
    CHECK(testing::max_abs_diff(direct.m, evolved.m) <= 1e-7);
  }
}

TEST_CASE("trace, Hermiticity and positivity hold along trajectories") {
  testing::Rng rng(17);
  DriveConfig d = baseline_drives();
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  for (int trial = 0; trial < 5; ++trial) {
    DensityMatrix rho0 = testing::random_physical_state(rng);
    for (double t : {1.0, 10.0, 100.0 / 0.1}) {
      DensityMatrix rho =
          evolve_to_steady(d, dec, Chirality::Right, rho0, t, 1e-11);
      CHECK(rho.trace_defect() <= 1e-9);
      CHECK(rho.hermiticity_defect() <= 1e-9);
      CHECK(rho.min_eigenvalue() >= -1e-9);
    }
  }
}

TEST_CASE("steady state is independent of the evolution start") {
  testing::Rng rng(18);
  DriveConfig d = baseline_drives();
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  DensityMatrix direct = steady_state(d, dec, Chirality::Left);
  for (int trial = 0; trial < 4; ++trial) {
    DensityMatrix rho0 = testing::random_hermitian_unit_trace(rng);
    DensityMatrix evolved =
        evolve_to_steady(d, dec, Chirality::Left, rho0, 500.0, 1e-11);
    CHECK(testing::max_abs_diff(direct.m, evolved.m) <= 1e-7);
  }
}

TEST_CASE("a 180 degree phase shift exchanges the enantiomers") {
  testing::Rng rng(19);
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  DriveConfig base = baseline_drives();
  for (int trial = 0; trial < 30; ++trial) {
    DriveConfig d = base;
    double omega = rng.uniform(0.0, 0.5);
    double phi = rng.uniform(0.0, 360.0);
    d.set_omega21_polar(omega, phi);
    DriveConfig d_flipped = base.with_omega21_polar(omega, phi + 180.0);

    double right = std::abs(steady_state(d, dec, Chirality::Right).rho21());
    double left_flipped =
        std::abs(steady_state(d_flipped, dec, Chirality::Left).rho21());
    CHECK(std::abs(right - left_flipped) <= 1e-12);
  }
}
