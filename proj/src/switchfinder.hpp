#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmodel.hpp"

// Locates the exact (non-perturbative) drive amplitude and phase at which the
// selected enantiomer's steady-state rho21 vanishes while the mirror image
// keeps radiating.

namespace chiralswitch {

struct SwitchPoint {
  double omega0 = 0.0;        // |Omega21| at the null
  double phi0_deg = 0.0;      // phase in [0, 360)
  Chirality silenced = Chirality::Left;
  double residual = 0.0;      // |rho21| of the silenced enantiomer
  double surviving_amp = 0.0; // |rho21| of the mirror image
  int seed_branch = 0;        // +1/-1: analytic seed branch; 0 if continued

  Complex omega21() const;
};

/// Damped Newton iteration on (Re Omega21, Im Omega21) -> (Re rho21,
/// Im rho21) of the silenced enantiomer, seeded from the analytic switch
/// condition (the branch that gives the smaller residual wins). Falls back to
/// a coarse polar grid scan plus re-Newton on non-convergence.
SwitchPoint find_switch(Complex omega31, Complex omega32, double delta,
                        const DecoherenceConfig& dec,
                        const EquilibriumState& es, Chirality silenced);

/// Per-point outcome of a continuation run; failed points carry the error
/// instead of aborting the curve.
struct CurvePoint {
  double delta = 0.0;
  Status status = Status::Ok;
  std::string message;
  std::optional<SwitchPoint> point;

  bool converged() const { return status == Status::Ok && point.has_value(); }
};

/// Continuation along the detuning grid: each solve is seeded by the previous
/// converged solution, the first by the analytic seed. Output order matches
/// input order.
std::vector<CurvePoint> switch_curve(std::span<const double> delta_grid,
                                     Complex omega31, Complex omega32,
                                     const DecoherenceConfig& dec,
                                     const EquilibriumState& es,
                                     Chirality silenced);

}  // namespace chiralswitch
