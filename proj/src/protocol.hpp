#pragma once

#include "qmodel.hpp"
#include "switchfinder.hpp"

// Two-detection enantiomeric-excess estimation at a switch point and the
// robustness analysis against drive deviations.

namespace chiralswitch {

/// Particle numbers of the two enantiomers in the probed sample.
struct Mixture {
  double n_left = 0.0;
  double n_right = 0.0;

  double ee() const { return (n_left - n_right) / (n_left + n_right); }
  void validate() const;
};

struct DetectionResult {
  double e_d1 = 0.0;
  double e_d2 = 0.0;
  double ee_estimate = 0.0;
};

/// The enantiomeric-excess estimator from the two detected amplitudes.
inline double ee_from_signals(double e_d1, double e_d2) {
  return (e_d1 - e_d2) / (e_d1 + e_d2);
}

/// Radiated amplitude of the mixture: the per-molecule coherences add
/// coherently, signal = |N_L rho21_L + N_R rho21_R|.
double mixture_signal(const Mixture& mix, const DriveConfig& drives,
                      const DecoherenceConfig& dec,
                      const EquilibriumState& es);

/// Detection 1 at (omega0, phi0), detection 2 with the phase advanced by
/// 180 degrees; at an exact switch point the estimate recovers the mixture's
/// true enantiomeric excess. `drives` supplies omega31/omega32/delta; its
/// omega21 is overridden by the switch point.
DetectionResult run_two_detections(const Mixture& mix, const SwitchPoint& sw,
                                   const DriveConfig& drives,
                                   const DecoherenceConfig& dec,
                                   const EquilibriumState& es);

/// Relative estimation error per unit excess for a drive deviated from the
/// switch point: eta = 2 |rho21_silenced| / |rho21_surviving| evaluated at
/// omega0*(1 + domega_rel), phi0 + dphi.
double relative_error(double domega_rel, double dphi_deg,
                      const SwitchPoint& sw, const DriveConfig& drives,
                      const DecoherenceConfig& dec,
                      const EquilibriumState& es);

enum class DeviationAxis { Amplitude, Phase };

/// Smallest positive deviation along the axis at which relative_error reaches
/// target_eta (bracket doubling plus bisection, relative precision 1e-6).
/// Amplitude deviations are relative, phase deviations in degrees.
double critical_deviation(DeviationAxis axis, double target_eta,
                          const SwitchPoint& sw, const DriveConfig& drives,
                          const DecoherenceConfig& dec,
                          const EquilibriumState& es);

}  // namespace chiralswitch
