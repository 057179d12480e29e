#include "switchfinder.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "liouvillian.hpp"
#include "perturbation.hpp"

namespace chiralswitch {

namespace {

constexpr double kResidualTarget = 1e-12;   // Newton stop
constexpr double kResidualAccept = 1e-10;   // hard gate on returned points
constexpr double kStepTol = 1e-14;
constexpr int kMaxNewtonIterations = 100;

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Problem {
  DriveConfig drives;  // omega21 is the unknown; the rest is fixed
  DecoherenceConfig dec;
  Chirality silenced;

  Complex coherence(Complex omega21) const {
    return steady_state(drives.with_omega21(omega21), dec, silenced).rho21();
  }
};

struct NewtonOutcome {
  Complex root{0.0, 0.0};
  double residual = 0.0;
  bool converged = false;
};

// rho21 depends on both Omega21 and its conjugate, so the root find is posed
// as a real 2-D system, never as complex Newton.
NewtonOutcome newton_null(const Problem& pr, Complex start) {
  Complex z = start;
  Complex f = pr.coherence(z);
  double res = std::abs(f);

  for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
    if (res <= kResidualTarget) return {z, res, true};

    double h = std::max(1e-7, 1e-7 * std::abs(z));
    Complex d_re = (pr.coherence(z + h) - pr.coherence(z - h)) / (2.0 * h);
    Complex d_im = (pr.coherence(z + Complex(0.0, h)) -
                    pr.coherence(z - Complex(0.0, h))) /
                   (2.0 * h);

    // 2x2 real system J * step = -f.
    double j11 = d_re.real(), j12 = d_im.real();
    double j21 = d_re.imag(), j22 = d_im.imag();
    double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
    Complex step((-f.real() * j22 + f.imag() * j12) / det,
                 (-j11 * f.imag() + j21 * f.real()) / det);

    bool improved = false;
    for (double damping = 1.0; damping >= 1.0 / 1024; damping *= 0.5) {
      Complex zn = z + damping * step;
      Complex fn = pr.coherence(zn);
      if (std::abs(fn) < res) {
        if (std::abs(damping * step) < kStepTol) {
          return {zn, std::abs(fn), true};
        }
        z = zn;
        f = fn;
        res = std::abs(fn);
        improved = true;
        break;
      }
    }
    if (!improved) {
      if (std::abs(step) / 1024 < kStepTol) return {z, res, true};
      break;
    }
  }
  return {z, res, res <= kResidualTarget};
}

// Coarse 64x64 polar scan used only when Newton from the seed stalls.
Complex grid_minimum(const Problem& pr, double omega_hi) {
  constexpr int n = 64;
  Complex best{0.0, 0.0};
  double best_res = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) {
    double omega = omega_hi * i / n;
    for (int j = 0; j < n; ++j) {
      double phase = deg_to_rad(360.0 * j / n);
      Complex z = std::polar(omega, phase);
      double r = std::abs(pr.coherence(z));
      if (r < best_res) {
        best_res = r;
        best = z;
      }
    }
  }
  return best;
}

SwitchPoint make_switch_point(const Problem& pr, const NewtonOutcome& outcome,
                              int seed_branch) {
  if (!outcome.converged || !(outcome.residual <= kResidualAccept)) {
    fail(Status::NoConvergence,
         "switch search did not converge for " + pr.drives.describe() + ", " +
             pr.dec.describe() + "; best residual " +
             short_double(outcome.residual));
  }

  SwitchPoint sw;
  sw.silenced = pr.silenced;
  sw.omega0 = std::abs(outcome.root);
  sw.phi0_deg = sw.omega0 == 0.0
                    ? 0.0
                    : normalize_phase_deg(rad_to_deg(std::arg(outcome.root)));
  sw.residual = outcome.residual;
  sw.seed_branch = seed_branch;
  sw.surviving_amp =
      std::abs(steady_state(pr.drives.with_omega21(outcome.root), pr.dec,
                            mirror(pr.silenced))
                   .rho21());
  if (!(sw.surviving_amp > sw.residual * 1e4)) {
    fail(Status::NoConvergence,
         "found a mutual zero, not a switch: surviving |rho21| " +
             short_double(sw.surviving_amp) + " vs residual " +
             short_double(sw.residual));
  }
  return sw;
}

Problem make_problem(Complex omega31, Complex omega32, double delta,
                     const DecoherenceConfig& dec, Chirality silenced) {
  dec.validate();
  if (std::abs(omega31) == 0.0 || std::abs(omega32) == 0.0) {
    fail(Status::InvalidArgument,
         "the switch needs both loop couplings omega31 and omega32 to be "
         "nonzero (no interference partner otherwise)");
  }
  if (!dec.has_relaxation()) {
    fail(Status::DegenerateSteadyState,
         "switch search requires a unique steady state (some Gamma > 0); " +
             dec.describe());
  }
  Problem pr;
  pr.drives.omega31 = omega31;
  pr.drives.omega32 = omega32;
  pr.drives.delta = delta;
  pr.dec = dec;
  pr.silenced = silenced;
  return pr;
}

SwitchPoint solve_from(const Problem& pr, Complex start, int seed_branch,
                       Complex fallback_seed) {
  NewtonOutcome outcome = newton_null(pr, start);
  if (!outcome.converged || !(outcome.residual <= kResidualAccept)) {
    double omega_hi =
        4.0 * std::max({std::abs(start), std::abs(fallback_seed),
                        0.05 * std::sqrt(std::abs(pr.drives.omega31 *
                                                  pr.drives.omega32))});
    NewtonOutcome retry = newton_null(pr, grid_minimum(pr, omega_hi));
    if (retry.residual < outcome.residual) outcome = retry;
  }
  return make_switch_point(pr, outcome, seed_branch);
}

}  // namespace

Complex SwitchPoint::omega21() const {
  return std::polar(omega0, deg_to_rad(phi0_deg));
}

SwitchPoint find_switch(Complex omega31, Complex omega32, double delta,
                        const DecoherenceConfig& dec,
                        const EquilibriumState& es, Chirality silenced) {
  Problem pr = make_problem(omega31, omega32, delta, dec, silenced);

  Complex seed = switch_seed(omega31, omega32, delta, dec, es, +1);
  double res_plus = std::abs(pr.coherence(seed));
  double res_minus = std::abs(pr.coherence(-seed));
  int branch = res_plus <= res_minus ? +1 : -1;

  return solve_from(pr, double(branch) * seed, branch, seed);
}

std::vector<CurvePoint> switch_curve(std::span<const double> delta_grid,
                                     Complex omega31, Complex omega32,
                                     const DecoherenceConfig& dec,
                                     const EquilibriumState& es,
                                     Chirality silenced) {
  if (delta_grid.empty()) {
    fail(Status::InvalidArgument, "switch_curve needs a nonempty grid");
  }

  std::vector<CurvePoint> curve;
  curve.reserve(delta_grid.size());
  std::optional<Complex> previous;

  for (double delta : delta_grid) {
    CurvePoint cp;
    cp.delta = delta;
    try {
      if (!previous) {
        cp.point = find_switch(omega31, omega32, delta, dec, es, silenced);
      } else {
        Problem pr = make_problem(omega31, omega32, delta, dec, silenced);
        // Label the branch by whichever analytic seed the continuation
        // solution tracks.
        Complex seed = switch_seed(omega31, omega32, delta, dec, es, +1);
        int branch = std::abs(*previous - seed) <= std::abs(*previous + seed)
                         ? +1
                         : -1;
        cp.point = solve_from(pr, *previous, branch, seed);
      }
      previous = cp.point->omega21();
    } catch (const Error& e) {
      cp.status = e.status();
      cp.message = e.what();
      cp.point.reset();
    }
    curve.push_back(std::move(cp));
  }
  return curve;
}

}  // namespace chiralswitch
