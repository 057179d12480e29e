#include "qmodel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace chiralswitch {

namespace {

bool all_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::InvalidArgument: return "invalid argument";
    case Status::InvalidConfig: return "invalid configuration";
    case Status::DegenerateSteadyState: return "degenerate steady state";
    case Status::StiffSystem: return "stiff system";
    case Status::NoSeed: return "no perturbative seed";
    case Status::NoConvergence: return "no convergence";
    case Status::UndefinedEstimate: return "undefined estimate";
    case Status::DegeneratePerturbation: return "degenerate perturbation";
    case Status::NoCrossing: return "no crossing";
    case Status::Io: return "i/o error";
    case Status::Internal: return "internal error";
  }
  return "unknown";
}

double normalize_phase_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  if (w == 360.0) w = 0.0;  // fmod can round up
  return w;
}

const char* to_string(Chirality q) {
  return q == Chirality::Left ? "left" : "right";
}

Complex DriveConfig::omega21() const {
  double ph = deg_to_rad(omega21_phase_deg);
  return Complex(omega21_amp * std::cos(ph), omega21_amp * std::sin(ph));
}

void DriveConfig::set_omega21(Complex value) {
  omega21_amp = std::abs(value);
  omega21_phase_deg =
      omega21_amp == 0.0
          ? 0.0
          : normalize_phase_deg(rad_to_deg(std::arg(value)));
}

void DriveConfig::set_omega21_polar(double amp, double phase_deg) {
  if (!std::isfinite(amp) || !std::isfinite(phase_deg)) {
    fail(Status::InvalidConfig, "omega21 amplitude/phase must be finite");
  }
  if (amp < 0.0) {  // fold onto a nonnegative amplitude
    amp = -amp;
    phase_deg += 180.0;
  }
  omega21_amp = amp;
  omega21_phase_deg = normalize_phase_deg(phase_deg);
}

DriveConfig DriveConfig::with_omega21(Complex value) const {
  DriveConfig d = *this;
  d.set_omega21(value);
  return d;
}

DriveConfig DriveConfig::with_omega21_polar(double amp, double phase_deg) const {
  DriveConfig d = *this;
  d.set_omega21_polar(amp, phase_deg);
  return d;
}

void DriveConfig::validate() const {
  if (!all_finite({omega21_amp, omega21_phase_deg, omega31.real(),
                   omega31.imag(), omega32.real(), omega32.imag(), delta})) {
    fail(Status::InvalidConfig, "drive configuration contains non-finite values");
  }
  if (omega21_amp < 0.0) {
    fail(Status::InvalidConfig, "omega21 amplitude must be nonnegative");
  }
}

std::string DriveConfig::describe() const {
  return "drives{omega21=" + format_double(omega21_amp) + "@" +
         format_double(omega21_phase_deg) + "deg, omega31=(" +
         format_double(omega31.real()) + "," + format_double(omega31.imag()) +
         "), omega32=(" + format_double(omega32.real()) + "," +
         format_double(omega32.imag()) + "), delta=" + format_double(delta) +
         "}";
}

double DecoherenceConfig::min_positive_rate() const {
  double m = 0.0;
  for (double r : {gamma12, gamma13, gamma23, deph21, deph31, deph32}) {
    if (r > 0.0 && (m == 0.0 || r < m)) m = r;
  }
  return m;
}

void DecoherenceConfig::validate() const {
  if (!all_finite({gamma12, gamma13, gamma23, deph21, deph31, deph32})) {
    fail(Status::InvalidConfig, "decoherence configuration contains non-finite values");
  }
  for (double r : {gamma12, gamma13, gamma23, deph21, deph31, deph32}) {
    if (r < 0.0) {
      fail(Status::InvalidConfig,
           "decoherence rates must be nonnegative, got " + describe());
    }
  }
}

std::string DecoherenceConfig::describe() const {
  return "decoherence{Gamma12=" + format_double(gamma12) +
         ", Gamma13=" + format_double(gamma13) +
         ", Gamma23=" + format_double(gamma23) +
         ", deph21=" + format_double(deph21) +
         ", deph31=" + format_double(deph31) +
         ", deph32=" + format_double(deph32) + "}";
}

DecoherenceConfig DecoherenceConfig::uniform(double rate) {
  DecoherenceConfig d;
  d.gamma12 = d.gamma13 = d.gamma23 = rate;
  d.deph21 = d.deph31 = d.deph32 = rate;
  return d;
}

TransverseRates transverse_rates(const DecoherenceConfig& dec) {
  dec.validate();
  TransverseRates g;
  g.g21 = 0.5 * (dec.gamma2() + dec.gamma1()) + dec.deph21;
  g.g31 = 0.5 * (dec.gamma3() + dec.gamma1()) + dec.deph31;
  g.g32 = 0.5 * (dec.gamma3() + dec.gamma2()) + dec.deph32;
  return g;
}

void EquilibriumState::validate() const {
  if (!all_finite({p1, p2, p3})) {
    fail(Status::InvalidConfig, "equilibrium populations must be finite");
  }
  if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0) {
    fail(Status::InvalidConfig, "equilibrium populations must be nonnegative");
  }
  if (std::abs(p1 + p2 + p3 - 1.0) > 1e-9) {
    fail(Status::InvalidConfig, "equilibrium populations must sum to 1");
  }
}

double DensityMatrix::trace_defect() const {
  return std::abs(m.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  Matrix3c herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(herm);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double herm_tol, double trace_tol,
                             double eig_tol) const {
  if (!m.allFinite()) {
    fail(Status::Internal, "density matrix contains non-finite entries");
  }
  if (hermiticity_defect() > herm_tol) {
    fail(Status::Internal, "density matrix is not Hermitian (defect " +
                               format_double(hermiticity_defect()) + ")");
  }
  if (trace_defect() > trace_tol) {
    fail(Status::Internal, "density matrix trace deviates from 1 by " +
                               format_double(trace_defect()));
  }
  if (min_eigenvalue() < -eig_tol) {
    fail(Status::Internal, "density matrix is not positive semidefinite (min "
                           "eigenvalue " +
                               format_double(min_eigenvalue()) + ")");
  }
}

DensityMatrix DensityMatrix::ground() { return pure(0); }

DensityMatrix DensityMatrix::pure(int state) {
  if (state < 0 || state > 2) {
    fail(Status::InvalidArgument, "state index must be 0, 1 or 2");
  }
  DensityMatrix d;
  d.m = Matrix3c::Zero();
  d.m(state, state) = Complex(1.0, 0.0);
  return d;
}

DensityMatrix DensityMatrix::from_populations(const EquilibriumState& es) {
  es.validate();
  DensityMatrix d;
  d.m = Matrix3c::Zero();
  d.m(0, 0) = es.p1;
  d.m(1, 1) = es.p2;
  d.m(2, 2) = es.p3;
  return d;
}

void MoleculeMetadata::validate() const {
  if (!all_finite({nu21, nu31, nu32})) {
    fail(Status::InvalidConfig, "molecule frequencies must be finite");
  }
  if (nu31 != 0.0 &&
      std::abs(nu31 - (nu21 + nu32)) > 1e-4 * std::abs(nu31)) {
    fail(Status::InvalidConfig,
         "molecule frequencies violate the three-photon resonance "
         "nu31 = nu21 + nu32");
  }
}

MoleculeMetadata MoleculeMetadata::propanediol() {
  MoleculeMetadata md;
  md.name = "1,2-propanediol";
  md.nu21 = 100.9613e6;  // 2*pi x 100.9613 THz
  md.nu31 = 100.9621e6;  // 2*pi x 100.9621 THz
  md.nu32 = 846.8;       // 2*pi x 0.8468 GHz
  return md;
}

std::array<Complex, 3> signed_couplings(const DriveConfig& drives,
                                        Chirality q) {
  double s = chirality_sign(q);
  return {s * drives.omega21(), s * drives.omega31, s * drives.omega32};
}

}  // namespace chiralswitch
