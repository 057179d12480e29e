#include "perturbation.hpp"

#include <cmath>

namespace chiralswitch {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex detuning_kernel(const EquilibriumState& es, double delta,
                        const TransverseRates& g) {
  return es.p1 / Complex(delta, -g.g31) - es.p2 / Complex(delta, g.g32);
}

TransverseRates rates_with_positive_g21(const DecoherenceConfig& dec) {
  TransverseRates g = transverse_rates(dec);
  if (!(g.g21 > 0.0)) {
    fail(Status::InvalidConfig,
         "transverse rate G21 must be positive for the perturbative response; " +
             dec.describe());
  }
  return g;
}

}  // namespace

Susceptibilities susceptibilities(const DecoherenceConfig& dec, double delta,
                                  const EquilibriumState& es) {
  es.validate();
  TransverseRates g = rates_with_positive_g21(dec);
  Susceptibilities chi;
  chi.chi1 = kI * (es.p1 - es.p2) / g.g21;
  chi.chi2 = kI / (2.0 * g.g21) * detuning_kernel(es, delta, g);
  return chi;
}

Complex perturbative_coherence(const DriveConfig& drives,
                               const DecoherenceConfig& dec,
                               const EquilibriumState& es, Chirality q) {
  drives.validate();
  es.validate();
  TransverseRates g = rates_with_positive_g21(dec);
  double s = chirality_sign(q);
  Complex even = drives.omega31 * std::conj(drives.omega32) *
                 detuning_kernel(es, drives.delta, g);
  Complex odd = s * (es.p1 - es.p2) * drives.omega21();
  return kI * (even - odd) / g.g21;
}

Complex switch_seed(Complex omega31, Complex omega32, double delta,
                    const DecoherenceConfig& dec, const EquilibriumState& es,
                    int branch) {
  if (branch != 1 && branch != -1) {
    fail(Status::InvalidArgument, "branch must be +1 or -1");
  }
  es.validate();
  TransverseRates g = transverse_rates(dec);
  double pop = es.p1 - es.p2;
  if (std::abs(pop) < 1e-15) {
    fail(Status::NoSeed,
         "equilibrium populations of states 1 and 2 coincide; the "
         "perturbative switch condition is singular");
  }
  return double(branch) * omega31 * std::conj(omega32) *
         detuning_kernel(es, delta, g) / pop;
}

}  // namespace chiralswitch
