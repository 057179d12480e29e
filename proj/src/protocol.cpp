#include "protocol.hpp"

#include <cmath>

#include "liouvillian.hpp"

namespace chiralswitch {

namespace {

constexpr double kBracketStartAmplitude = 1e-5;
constexpr double kBracketStartPhaseDeg = 0.01;
constexpr double kBoundAmplitude = 1.0;
constexpr double kBoundPhaseDeg = 180.0;

}  // namespace

void Mixture::validate() const {
  if (!std::isfinite(n_left) || !std::isfinite(n_right)) {
    fail(Status::InvalidConfig, "mixture particle numbers must be finite");
  }
  if (n_left < 0.0 || n_right < 0.0) {
    fail(Status::InvalidConfig, "mixture particle numbers must be nonnegative");
  }
  if (!(n_left + n_right > 0.0)) {
    fail(Status::InvalidConfig, "mixture must contain at least one molecule");
  }
}

double mixture_signal(const Mixture& mix, const DriveConfig& drives,
                      const DecoherenceConfig& dec,
                      const EquilibriumState& es) {
  mix.validate();
  es.validate();
  Complex left = steady_state(drives, dec, Chirality::Left).rho21();
  Complex right = steady_state(drives, dec, Chirality::Right).rho21();
  return std::abs(mix.n_left * left + mix.n_right * right);
}

DetectionResult run_two_detections(const Mixture& mix, const SwitchPoint& sw,
                                   const DriveConfig& drives,
                                   const DecoherenceConfig& dec,
                                   const EquilibriumState& es) {
  mix.validate();
  if (!(sw.residual <= 1e-10)) {
    fail(Status::InvalidArgument,
         "switch point is not converged (residual above 1e-10); refusing to "
         "run the detection protocol");
  }

  DriveConfig d1 = drives.with_omega21_polar(sw.omega0, sw.phi0_deg);
  DriveConfig d2 = drives.with_omega21_polar(sw.omega0, sw.phi0_deg + 180.0);

  DetectionResult result;
  result.e_d1 = mixture_signal(mix, d1, dec, es);
  result.e_d2 = mixture_signal(mix, d2, dec, es);
  if (result.e_d1 + result.e_d2 == 0.0) {
    fail(Status::UndefinedEstimate,
         "both detections read zero signal; the estimate is undefined");
  }
  result.ee_estimate = ee_from_signals(result.e_d1, result.e_d2);
  return result;
}

double relative_error(double domega_rel, double dphi_deg,
                      const SwitchPoint& sw, const DriveConfig& drives,
                      const DecoherenceConfig& dec,
                      const EquilibriumState& es) {
  es.validate();
  DriveConfig d = drives.with_omega21_polar(sw.omega0 * (1.0 + domega_rel),
                                            sw.phi0_deg + dphi_deg);
  double silenced = std::abs(steady_state(d, dec, sw.silenced).rho21());
  double surviving =
      std::abs(steady_state(d, dec, mirror(sw.silenced)).rho21());
  if (surviving < 1e-14) {
    fail(Status::DegeneratePerturbation,
         "surviving enantiomer's coherence vanished at the perturbed drive "
         "point; the error ratio is undefined");
  }
  return 2.0 * silenced / surviving;
}

double critical_deviation(DeviationAxis axis, double target_eta,
                          const SwitchPoint& sw, const DriveConfig& drives,
                          const DecoherenceConfig& dec,
                          const EquilibriumState& es) {
  if (!(target_eta > 0.0)) {
    fail(Status::InvalidArgument, "target relative error must be positive");
  }

  auto eta_at = [&](double w) {
    return axis == DeviationAxis::Amplitude
               ? relative_error(w, 0.0, sw, drives, dec, es)
               : relative_error(0.0, w, sw, drives, dec, es);
  };
  double bound =
      axis == DeviationAxis::Amplitude ? kBoundAmplitude : kBoundPhaseDeg;

  double lo = 0.0;
  double hi = axis == DeviationAxis::Amplitude ? kBracketStartAmplitude
                                               : kBracketStartPhaseDeg;
  while (eta_at(hi) < target_eta) {
    lo = hi;
    hi *= 2.0;
    if (hi > bound) {
      fail(Status::NoCrossing,
           "relative error stays below the target up to the physical bound "
           "of the deviation axis");
    }
  }
  while (hi - lo > 1e-6 * hi) {
    double mid = 0.5 * (lo + hi);
    (eta_at(mid) < target_eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace chiralswitch
