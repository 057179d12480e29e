#pragma once

#include "qmodel.hpp"

// Rotating-frame Hamiltonian, the full Liouvillian generator acting on the
// column-vectorized density matrix, the algebraic steady-state solver and an
// independent time-evolution oracle.
//
// Vectorization ordering is fixed project-wide: the 9-vector is
// (rho11, rho12, rho13, rho21, rho22, rho23, rho31, rho32, rho33),
// i.e. row-major over 0-based state indices, vec_index(row, col) = 3*row+col.

namespace chiralswitch {

using Matrix9c = Eigen::Matrix<Complex, 9, 9>;
using Vector9c = Eigen::Matrix<Complex, 9, 1>;

constexpr int vec_index(int row, int col) { return 3 * row + col; }

Vector9c vectorize(const Matrix3c& rho);
Matrix3c unvectorize(const Vector9c& v);

/// d(rho)/dt = -i[H, rho] + L(rho) as a 9x9 matrix on the vectorized rho.
struct Generator {
  Matrix9c matrix = Matrix9c::Zero();

  Vector9c apply(const Vector9c& rho_vec) const { return matrix * rho_vec; }

  /// Max absolute row sum (the induced infinity norm).
  double inf_norm() const;
};

/// H = delta |3><3| + sum_{l>j} s*Omega_lj |l><j| + h.c. with s the chirality
/// sign; hbar = 1 in the stored angular-frequency units.
Matrix3c build_hamiltonian(const DriveConfig& drives, Chirality q);

Generator build_generator(const DriveConfig& drives,
                          const DecoherenceConfig& dec, Chirality q);

/// Unique steady state of the generator: G rho = 0, tr rho = 1, solved by
/// replacing the rho11 row of the 9x9 system with the trace constraint.
/// Requires at least one relaxation channel; throws DegenerateSteadyState
/// otherwise or when the system is numerically singular.
DensityMatrix steady_state(const DriveConfig& drives,
                           const DecoherenceConfig& dec, Chirality q);

/// Integrates d(rho)/dt = G rho from rho0 to t_end with an adaptive embedded
/// Dormand-Prince 5(4) pair (absolute and relative tolerance both `tol`).
/// Serves as the independent oracle for steady_state.
DensityMatrix evolve_to_steady(const DriveConfig& drives,
                               const DecoherenceConfig& dec, Chirality q,
                               const DensityMatrix& rho0, double t_end,
                               double tol);

}  // namespace chiralswitch
