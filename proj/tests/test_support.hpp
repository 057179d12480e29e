#pragma once

#include <cstdint>
#include <random>

#include "qmodel.hpp"

// Shared helpers for the test suites. Random draws go through an explicit
// 53-bit extraction from mt19937_64 so expected values stay reproducible
// across standard-library implementations.

namespace chiralswitch::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    double u = double(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  double log_uniform(double lo, double hi) {
    return lo * std::pow(hi / lo, uniform(0.0, 1.0));
  }

 private:
  std::mt19937_64 engine_;
};

inline DecoherenceConfig random_decoherence(Rng& rng, double lo = 0.01,
                                            double hi = 10.0) {
  DecoherenceConfig dec;
  dec.gamma12 = rng.uniform(lo, hi);
  dec.gamma13 = rng.uniform(lo, hi);
  dec.gamma23 = rng.uniform(lo, hi);
  dec.deph21 = rng.uniform(lo, hi);
  dec.deph31 = rng.uniform(lo, hi);
  dec.deph32 = rng.uniform(lo, hi);
  return dec;
}

inline DriveConfig random_drives(Rng& rng, double coupling_hi = 10.0,
                                 double delta_span = 20.0) {
  DriveConfig d;
  d.set_omega21_polar(rng.uniform(0.0, coupling_hi),
                      rng.uniform(0.0, 360.0));
  d.omega31 = Complex(rng.uniform(-coupling_hi, coupling_hi),
                      rng.uniform(-coupling_hi, coupling_hi));
  d.omega32 = Complex(rng.uniform(-coupling_hi, coupling_hi),
                      rng.uniform(-coupling_hi, coupling_hi));
  d.delta = rng.uniform(-delta_span, delta_span);
  return d;
}

/// Random Hermitian unit-trace (not necessarily positive) density matrix.
inline DensityMatrix random_hermitian_unit_trace(Rng& rng) {
  DensityMatrix rho;
  double p1 = rng.uniform(-0.2, 0.8);
  double p2 = rng.uniform(-0.2, 0.8);
  rho.m = Matrix3c::Zero();
  rho.m(0, 0) = p1;
  rho.m(1, 1) = p2;
  rho.m(2, 2) = 1.0 - p1 - p2;
  auto coh = [&](int r, int c) {
    Complex z(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
    rho.m(r, c) = z;
    rho.m(c, r) = std::conj(z);
  };
  coh(1, 0);
  coh(2, 0);
  coh(2, 1);
  return rho;
}

/// Random physical (positive semidefinite) state: rho = A A^dag / tr.
inline DensityMatrix random_physical_state(Rng& rng) {
  Matrix3c a;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      a(r, c) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  Matrix3c p = a * a.adjoint();
  DensityMatrix rho;
  rho.m = p / p.trace().real();
  return rho;
}

inline double max_abs_diff(const Matrix3c& a, const Matrix3c& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace chiralswitch::testing
