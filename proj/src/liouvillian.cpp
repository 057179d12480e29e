#include "liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/LU>

namespace chiralswitch {

namespace {

using Matrix9d = Eigen::Matrix<double, 9, 9>;
using Vector9d = Eigen::Matrix<double, 9, 1>;

constexpr Complex kI{0.0, 1.0};

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Real coordinates of a Hermitian 3x3 matrix:
// u = (rho11, rho22, rho33, Re rho21, Im rho21, Re rho31, Im rho31,
//      Re rho32, Im rho32), 1-based state labels.
Matrix3c hermitian_basis(int k) {
  Matrix3c b = Matrix3c::Zero();
  switch (k) {
    case 0: b(0, 0) = 1.0; break;
    case 1: b(1, 1) = 1.0; break;
    case 2: b(2, 2) = 1.0; break;
    case 3: b(1, 0) = 1.0; b(0, 1) = 1.0; break;
    case 4: b(1, 0) = kI;  b(0, 1) = -kI; break;
    case 5: b(2, 0) = 1.0; b(0, 2) = 1.0; break;
    case 6: b(2, 0) = kI;  b(0, 2) = -kI; break;
    case 7: b(2, 1) = 1.0; b(1, 2) = 1.0; break;
    case 8: b(2, 1) = kI;  b(1, 2) = -kI; break;
  }
  return b;
}

Vector9d hermitian_coords(const Vector9c& w) {
  Vector9d u;
  u(0) = w(vec_index(0, 0)).real();
  u(1) = w(vec_index(1, 1)).real();
  u(2) = w(vec_index(2, 2)).real();
  u(3) = w(vec_index(1, 0)).real();
  u(4) = w(vec_index(1, 0)).imag();
  u(5) = w(vec_index(2, 0)).real();
  u(6) = w(vec_index(2, 0)).imag();
  u(7) = w(vec_index(2, 1)).real();
  u(8) = w(vec_index(2, 1)).imag();
  return u;
}

Matrix3c hermitian_from_coords(const Vector9d& u) {
  Matrix3c rho;
  rho(0, 0) = u(0);
  rho(1, 1) = u(1);
  rho(2, 2) = u(2);
  rho(1, 0) = Complex(u(3), u(4));
  rho(0, 1) = std::conj(rho(1, 0));
  rho(2, 0) = Complex(u(5), u(6));
  rho(0, 2) = std::conj(rho(2, 0));
  rho(2, 1) = Complex(u(7), u(8));
  rho(1, 2) = std::conj(rho(2, 1));
  return rho;
}

// The generator maps Hermitian matrices to Hermitian matrices, so it closes
// on the real coordinates above. Columns are obtained by applying the complex
// generator to the Hermitian basis.
Matrix9d real_form(const Generator& gen) {
  Matrix9d r;
  for (int k = 0; k < 9; ++k) {
    Vector9c w = gen.apply(vectorize(hermitian_basis(k)));
    r.col(k) = hermitian_coords(w);
  }
  return r;
}

}  // namespace

Vector9c vectorize(const Matrix3c& rho) {
  Vector9c v;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) v(vec_index(r, c)) = rho(r, c);
  }
  return v;
}

Matrix3c unvectorize(const Vector9c& v) {
  Matrix3c rho;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) rho(r, c) = v(vec_index(r, c));
  }
  return rho;
}

double Generator::inf_norm() const {
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

Matrix3c build_hamiltonian(const DriveConfig& drives, Chirality q) {
  drives.validate();
  auto [w21, w31, w32] = signed_couplings(drives, q);
  Matrix3c h = Matrix3c::Zero();
  h(2, 2) = drives.delta;
  h(1, 0) = w21;
  h(2, 0) = w31;
  h(2, 1) = w32;
  h(0, 1) = std::conj(w21);
  h(0, 2) = std::conj(w31);
  h(1, 2) = std::conj(w32);
  return h;
}

Generator build_generator(const DriveConfig& drives,
                          const DecoherenceConfig& dec, Chirality q) {
  dec.validate();
  Matrix3c h = build_hamiltonian(drives, q);
  TransverseRates g = transverse_rates(dec);

  Generator gen;
  Matrix9c& m = gen.matrix;

  // Unitary part: d(rho_rc)/dt += -i sum_k (H_rk rho_kc - rho_rk H_kc).
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int row = vec_index(r, c);
      for (int k = 0; k < 3; ++k) {
        m(row, vec_index(k, c)) += -kI * h(r, k);
        m(row, vec_index(r, k)) += kI * h(k, c);
      }
    }
  }

  // Transverse decay of the coherences.
  auto pair_rate = [&](int r, int c) {
    int lo = std::min(r, c), hi = std::max(r, c);
    if (lo == 0 && hi == 1) return g.g21;
    if (lo == 0 && hi == 2) return g.g31;
    return g.g32;
  };
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r == c) continue;
      int row = vec_index(r, c);
      m(row, row) += -pair_rate(r, c);
    }
  }

  // Populations: gain from every higher state, loss at the total decay rate.
  m(vec_index(0, 0), vec_index(1, 1)) += dec.gamma12;
  m(vec_index(0, 0), vec_index(2, 2)) += dec.gamma13;
  m(vec_index(1, 1), vec_index(2, 2)) += dec.gamma23;
  m(vec_index(1, 1), vec_index(1, 1)) += -dec.gamma2();
  m(vec_index(2, 2), vec_index(2, 2)) += -dec.gamma3();

  return gen;
}

DensityMatrix steady_state(const DriveConfig& drives,
                           const DecoherenceConfig& dec, Chirality q) {
  dec.validate();
  if (!dec.has_relaxation()) {
    fail(Status::DegenerateSteadyState,
         "steady state is not unique without relaxation (all Gamma = 0); " +
             dec.describe());
  }

  Generator gen = build_generator(drives, dec, q);

  Matrix9d a = real_form(gen);
  // Replace the rho11 row (always linearly dependent by trace preservation)
  // with the trace constraint.
  a.row(0).setZero();
  a(0, 0) = a(0, 1) = a(0, 2) = 1.0;
  Vector9d b = Vector9d::Zero();
  b(0) = 1.0;

  Eigen::PartialPivLU<Matrix9d> lu(a);
  double rc = lu.rcond();
  if (!(rc > 1e-14)) {
    fail(Status::DegenerateSteadyState,
         "steady-state system is singular or near-singular (rcond " +
             short_double(rc) + ") for " + drives.describe() + ", " +
             dec.describe());
  }
  Vector9d u = lu.solve(b);

  DensityMatrix rho;
  rho.m = hermitian_from_coords(u);

  double resid = gen.apply(vectorize(rho.m)).cwiseAbs().maxCoeff();
  if (!(resid <= 1e-10 * gen.inf_norm())) {
    fail(Status::DegenerateSteadyState,
         "steady-state residual " + short_double(resid) +
             " exceeds tolerance for " + drives.describe() + ", " +
             dec.describe());
  }
  rho.validate();
  return rho;
}

DensityMatrix evolve_to_steady(const DriveConfig& drives,
                               const DecoherenceConfig& dec, Chirality q,
                               const DensityMatrix& rho0, double t_end,
                               double tol) {
  if (!(t_end > 0.0)) fail(Status::InvalidArgument, "t_end must be positive");
  if (!(tol > 0.0)) fail(Status::InvalidArgument, "tol must be positive");
  if (rho0.hermiticity_defect() > 1e-10 || rho0.trace_defect() > 1e-8) {
    fail(Status::InvalidArgument,
         "initial state must be Hermitian with unit trace");
  }

  Generator gen = build_generator(drives, dec, q);
  const Matrix9c& a = gen.matrix;

  // Dormand-Prince 5(4) with FSAL.
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  Vector9c y = vectorize(rho0.m);
  Vector9c k1 = a * y;
  double t = 0.0;
  double h = std::min(t_end, 0.1 / (1.0 + gen.inf_norm()));
  constexpr long max_steps = 200'000'000L;

  for (long step = 0; t < t_end; ++step) {
    if (step >= max_steps) {
      fail(Status::StiffSystem,
           "step budget exhausted at t = " + short_double(t) +
               "; the system is too stiff for the explicit integrator, use "
               "smaller rates or the algebraic steady-state solver");
    }
    h = std::min(h, t_end - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      fail(Status::StiffSystem,
           "step size underflow at t = " + short_double(t) +
               "; the system is too stiff for the explicit integrator, use "
               "smaller rates or the algebraic steady-state solver");
    }

    Vector9c k2 = a * (y + h * (a21 * k1));
    Vector9c k3 = a * (y + h * (a31 * k1 + a32 * k2));
    Vector9c k4 = a * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Vector9c k5 = a * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Vector9c k6 =
        a * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Vector9c ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Vector9c k7 = a * ynew;
    Vector9c err =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err_norm = 0.0;
    for (int i = 0; i < 9; ++i) {
      double scale =
          tol + tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      err_norm = std::max(err_norm, std::abs(err(i)) / scale);
    }

    if (err_norm <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
    }
    double factor = err_norm > 0.0
                        ? 0.9 * std::pow(err_norm, -0.2)
                        : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }

  DensityMatrix out;
  out.m = unvectorize(y);
  return out;
}

}  // namespace chiralswitch
