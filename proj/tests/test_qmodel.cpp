#include <doctest.h>

#include "qmodel.hpp"
#include "test_support.hpp"

using namespace chiralswitch;

TEST_CASE("chirality signs") {
  CHECK(chirality_sign(Chirality::Left) == 1.0);
  CHECK(chirality_sign(Chirality::Right) == -1.0);
  CHECK(chirality_sign(Chirality::Left) * chirality_sign(Chirality::Right) ==
        -1.0);
  CHECK(mirror(Chirality::Left) == Chirality::Right);
  CHECK(mirror(Chirality::Right) == Chirality::Left);
}

TEST_CASE("signed couplings flip with chirality") {
  DriveConfig d;
  d.set_omega21_polar(0.1, 0.0);
  d.omega31 = Complex(1.0, 0.0);
  d.omega32 = Complex(1.0, 0.0);

  auto left = signed_couplings(d, Chirality::Left);
  CHECK(left[0] == Complex(0.1, 0.0));
  CHECK(left[1] == Complex(1.0, 0.0));
  CHECK(left[2] == Complex(1.0, 0.0));

  auto right = signed_couplings(d, Chirality::Right);
  CHECK(right[0] == Complex(-0.1, 0.0));
  CHECK(right[1] == Complex(-1.0, 0.0));
  CHECK(right[2] == Complex(-1.0, 0.0));

  // property: left couplings are exactly the negated right couplings
  testing::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    DriveConfig r = testing::random_drives(rng);
    auto l_c = signed_couplings(r, Chirality::Left);
    auto r_c = signed_couplings(r, Chirality::Right);
    for (int k = 0; k < 3; ++k) CHECK(l_c[k] == -r_c[k]);
  }
}

TEST_CASE("transverse rates from the paper baseline") {
  DecoherenceConfig dec = DecoherenceConfig::uniform(0.1);
  TransverseRates g = transverse_rates(dec);
  CHECK(g.g21 == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(g.g31 == doctest::Approx(0.20).epsilon(1e-14));
  CHECK(g.g32 == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("transverse rates edge cases") {
  TransverseRates zero = transverse_rates(DecoherenceConfig{});
  CHECK(zero.g21 == 0.0);
  CHECK(zero.g31 == 0.0);
  CHECK(zero.g32 == 0.0);

  DecoherenceConfig only12;
  only12.gamma12 = 2.0;
  TransverseRates g = transverse_rates(only12);
  CHECK(g.g21 == 1.0);
  CHECK(g.g31 == 0.0);
  CHECK(g.g32 == 1.0);
}

TEST_CASE("negative rates are rejected") {
  DecoherenceConfig dec;
  dec.gamma12 = -0.1;
  CHECK_THROWS_AS(transverse_rates(dec), Error);
  try {
    transverse_rates(dec);
  } catch (const Error& e) {
    CHECK(e.status() == Status::InvalidConfig);
  }
}

TEST_CASE("transverse rates are nonnegative for nonnegative inputs") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    DecoherenceConfig dec = testing::random_decoherence(rng, 0.0, 5.0);
    TransverseRates g = transverse_rates(dec);
    CHECK(g.g21 >= 0.0);
    CHECK(g.g31 >= 0.0);
    CHECK(g.g32 >= 0.0);
    // exact algebraic definitions
    CHECK(g.g21 == 0.5 * dec.gamma12 + dec.deph21);
    CHECK(g.g31 == 0.5 * (dec.gamma13 + dec.gamma23) + dec.deph31);
    CHECK(g.g32 ==
          0.5 * (dec.gamma13 + dec.gamma23 + dec.gamma12) + dec.deph32);
  }
}

TEST_CASE("drive phase normalization and folding") {
  DriveConfig d;
  d.set_omega21_polar(0.5, 370.0);
  CHECK(d.omega21_amp == 0.5);
  CHECK(d.omega21_phase_deg == doctest::Approx(10.0).epsilon(1e-14));

  d.set_omega21_polar(-0.5, 10.0);  // negative amplitude folds
  CHECK(d.omega21_amp == 0.5);
  CHECK(d.omega21_phase_deg == doctest::Approx(190.0).epsilon(1e-14));

  d.set_omega21(Complex(0.0, -1.0));
  CHECK(d.omega21_amp == 1.0);
  CHECK(d.omega21_phase_deg == doctest::Approx(270.0).epsilon(1e-14));

  // round trip
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Complex z(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
    d.set_omega21(z);
    CHECK(std::abs(d.omega21() - z) <= 1e-14 * (1.0 + std::abs(z)));
    CHECK(d.omega21_amp >= 0.0);
    CHECK(d.omega21_phase_deg >= 0.0);
    CHECK(d.omega21_phase_deg < 360.0);
  }
}

TEST_CASE("density matrix invariants") {
  DensityMatrix ground = DensityMatrix::ground();
  CHECK(ground.m(0, 0) == Complex(1.0, 0.0));
  CHECK(ground.trace_defect() == 0.0);
  CHECK_NOTHROW(ground.validate());

  DensityMatrix bad = DensityMatrix::ground();
  bad.m(1, 0) = Complex(0.1, 0.0);  // not Hermitian: rho01 stays 0
  CHECK_THROWS_AS(bad.validate(), Error);

  DensityMatrix neg = DensityMatrix::ground();
  neg.m(0, 0) = 1.5;
  neg.m(1, 1) = -0.5;  // trace fine, negative eigenvalue
  CHECK_THROWS_AS(neg.validate(), Error);

  EquilibriumState es{0.25, 0.25, 0.5};
  DensityMatrix mixed = DensityMatrix::from_populations(es);
  CHECK_NOTHROW(mixed.validate());
  CHECK(mixed.m(2, 2).real() == 0.5);
}

TEST_CASE("equilibrium state validation") {
  CHECK_NOTHROW(EquilibriumState{}.validate());
  CHECK_THROWS_AS((EquilibriumState{0.5, 0.2, 0.2}.validate()), Error);
  CHECK_THROWS_AS((EquilibriumState{1.2, -0.2, 0.0}.validate()), Error);
}

TEST_CASE("molecule metadata satisfies three-photon resonance") {
  MoleculeMetadata md = MoleculeMetadata::propanediol();
  CHECK_NOTHROW(md.validate());
  CHECK(std::abs(md.nu31 - (md.nu21 + md.nu32)) <= 1e-4 * md.nu31);

  md.nu32 = 2.0 * md.nu32;  // break the loop closure
  CHECK_THROWS_AS(md.validate(), Error);
}
