#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "error.hpp"

// Domain types for the driven dissipative cyclic three-level model.
//
// Unit convention: every rate, coupling and detuning is stored as a multiple
// of 2*pi*MHz, so literature values like "2*pi x 0.1 MHz" read as plain 0.1.
// Time is measured in the reciprocal unit, 1/(2*pi*MHz). Phases cross the API
// boundary in degrees.

namespace chiralswitch {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Wraps a phase into [0, 360) degrees.
double normalize_phase_deg(double deg);

enum class Chirality { Left, Right };

constexpr double chirality_sign(Chirality q) {
  return q == Chirality::Left ? 1.0 : -1.0;
}

constexpr Chirality mirror(Chirality q) {
  return q == Chirality::Left ? Chirality::Right : Chirality::Left;
}

const char* to_string(Chirality q);

/// Drive fields of the closed 1-2-3 loop. The 2<->1 coupling is kept in polar
/// form (nonnegative amplitude, phase in [0, 360) degrees) because the switch
/// lives in the amplitude-phase plane; the other two couplings are plain
/// complex numbers. `delta` is the rotating-frame detuning of state |3>.
struct DriveConfig {
  double omega21_amp = 0.0;
  double omega21_phase_deg = 0.0;
  Complex omega31{0.0, 0.0};
  Complex omega32{0.0, 0.0};
  double delta = 0.0;

  Complex omega21() const;
  void set_omega21(Complex value);
  void set_omega21_polar(double amp, double phase_deg);

  DriveConfig with_omega21(Complex value) const;
  DriveConfig with_omega21_polar(double amp, double phase_deg) const;

  void validate() const;
  std::string describe() const;
};

/// Relaxation rates Gamma_{j'j} (population decay j -> j', j' < j) and pure
/// dephasing rates for the three coherences. Derived quantities follow the
/// standard definitions: gamma_j is the total decay rate out of state j and
/// G_lj = (gamma_l + gamma_j)/2 + deph_lj is the transverse rate of rho_lj.
struct DecoherenceConfig {
  double gamma12 = 0.0;  // 2 -> 1
  double gamma13 = 0.0;  // 3 -> 1
  double gamma23 = 0.0;  // 3 -> 2
  double deph21 = 0.0;
  double deph31 = 0.0;
  double deph32 = 0.0;

  double gamma1() const { return 0.0; }
  double gamma2() const { return gamma12; }
  double gamma3() const { return gamma13 + gamma23; }

  bool has_relaxation() const {
    return gamma12 > 0.0 || gamma13 > 0.0 || gamma23 > 0.0;
  }

  /// Smallest strictly positive input rate; 0 if all rates vanish.
  double min_positive_rate() const;

  void validate() const;
  std::string describe() const;

  /// All six rates set to the same value.
  static DecoherenceConfig uniform(double rate);
};

struct TransverseRates {
  double g21 = 0.0;
  double g31 = 0.0;
  double g32 = 0.0;
};

/// G_lj = (gamma_l + gamma_j)/2 + deph_lj. Throws InvalidConfig on negative
/// input rates.
TransverseRates transverse_rates(const DecoherenceConfig& dec);

/// Field-free equilibrium populations; the default is the ground state.
struct EquilibriumState {
  double p1 = 1.0;
  double p2 = 0.0;
  double p3 = 0.0;

  void validate() const;
};

/// 3x3 density matrix. Entries are addressed with 0-based state indices; the
/// radiation observable is rho21() = <2|rho|1> in 1-based state labels.
struct DensityMatrix {
  Matrix3c m;

  DensityMatrix();  // defaults to the ground state

  Complex rho21() const { return m(1, 0); }

  double trace_defect() const;        // |tr(rho) - 1|
  double hermiticity_defect() const;  // max |rho_lj - conj(rho_jl)|
  double min_eigenvalue() const;      // of the Hermitized matrix

  void validate(double herm_tol = 1e-12, double trace_tol = 1e-10,
                double eig_tol = 1e-10) const;

  static DensityMatrix ground();
  static DensityMatrix pure(int state);  // 0-based
  static DensityMatrix from_populations(const EquilibriumState& es);
};

/// Bare transition frequencies; documentation only (the rotating-frame
/// dynamics depend solely on DriveConfig / DecoherenceConfig). Values in
/// 2*pi*MHz like everything else.
struct MoleculeMetadata {
  double nu21 = 0.0;
  double nu31 = 0.0;
  double nu32 = 0.0;
  std::string name;

  void validate() const;  // three-photon resonance nu31 = nu21 + nu32

  static MoleculeMetadata propanediol();
};

/// The enantioselective sign rule: left-handed molecules see (+) couplings,
/// right-handed ones (-). Returns (s*omega21, s*omega31, s*omega32).
std::array<Complex, 3> signed_couplings(const DriveConfig& drives, Chirality q);

}  // namespace chiralswitch
