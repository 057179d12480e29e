#pragma once

#include "qmodel.hpp"

// Perturbative response of the driven loop: first/second-order
// susceptibilities in coupling-strength units (the dipole and vacuum
// permittivity prefactors are divided out) and the analytic seed for the
// radiation-silencing drive.

namespace chiralswitch {

struct Susceptibilities {
  Complex chi1;  // chirality-even, 1/(angular frequency)
  Complex chi2;  // chirality-odd,  1/(angular frequency)^2
};

/// chi1 = i (p1 - p2) / G21,
/// chi2 = i/(2 G21) * (p1/(delta - i G31) - p2/(delta + i G32)).
Susceptibilities susceptibilities(const DecoherenceConfig& dec, double delta,
                                  const EquilibriumState& es);

/// Steady-state rho21 to lowest order in the couplings,
///   rho21 = i [ Omega31 conj(Omega32) K - s Omega21 (p1 - p2) ] / G21,
/// with K = p1/(delta - i G31) - p2/(delta + i G32) and s the chirality sign.
/// The two-field term is chirality-even, the one-field term chirality-odd;
/// their interference is what the switch exploits.
Complex perturbative_coherence(const DriveConfig& drives,
                               const DecoherenceConfig& dec,
                               const EquilibriumState& es, Chirality q);

/// Drive amplitude at which the perturbative coherence of one enantiomer
/// vanishes:
///   Omega21 = branch * Omega31 conj(Omega32) K / (p1 - p2),
/// branch in {+1, -1}; the two branches differ by a 180 degree phase and
/// silence opposite enantiomers.
Complex switch_seed(Complex omega31, Complex omega32, double delta,
                    const DecoherenceConfig& dec, const EquilibriumState& es,
                    int branch);

}  // namespace chiralswitch
