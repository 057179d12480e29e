#include "chiralswitch/chiralswitch.h"

#include <cstring>
#include <string>

#include "liouvillian.hpp"
#include "perturbation.hpp"
#include "protocol.hpp"
#include "scenario.hpp"
#include "sweeps.hpp"
#include "switchfinder.hpp"
#include "version.hpp"

using namespace chiralswitch;

struct cs_model {
  Scenario scenario;
};

struct cs_table {
  SweepTable table;
};

namespace {

thread_local std::string g_last_error;

cs_status map_status(Status s) {
  switch (s) {
    case Status::Ok: return CS_OK;
    case Status::InvalidArgument: return CS_ERR_INVALID_ARGUMENT;
    case Status::InvalidConfig: return CS_ERR_INVALID_CONFIG;
    case Status::DegenerateSteadyState: return CS_ERR_DEGENERATE_STEADY_STATE;
    case Status::StiffSystem: return CS_ERR_STIFF_SYSTEM;
    case Status::NoSeed: return CS_ERR_NO_SEED;
    case Status::NoConvergence: return CS_ERR_NO_CONVERGENCE;
    case Status::UndefinedEstimate: return CS_ERR_UNDEFINED_ESTIMATE;
    case Status::DegeneratePerturbation: return CS_ERR_DEGENERATE_PERTURBATION;
    case Status::NoCrossing: return CS_ERR_NO_CROSSING;
    case Status::Io: return CS_ERR_IO;
    case Status::Internal: return CS_ERR_INTERNAL;
  }
  return CS_ERR_INTERNAL;
}

template <typename Fn>
cs_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_status(e.status());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CS_ERR_INTERNAL;
  }
}

cs_status require(bool ok, const char* message) {
  if (ok) return CS_OK;
  g_last_error = message;
  return CS_ERR_INVALID_ARGUMENT;
}

Chirality to_chirality(cs_chirality q) {
  return q == CS_LEFT ? Chirality::Left : Chirality::Right;
}

void pack_matrix(const Matrix3c& m, double out[18]) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[2 * (3 * r + c)] = m(r, c).real();
      out[2 * (3 * r + c) + 1] = m(r, c).imag();
    }
  }
}

Matrix3c unpack_matrix(const double in[18]) {
  Matrix3c m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(r, c) = Complex(in[2 * (3 * r + c)], in[2 * (3 * r + c) + 1]);
    }
  }
  return m;
}

SwitchPoint unpack_switch(const cs_switch_point& sw) {
  SwitchPoint out;
  out.omega0 = sw.omega0;
  out.phi0_deg = sw.phi0_deg;
  out.silenced = sw.silenced == CS_LEFT ? Chirality::Left : Chirality::Right;
  out.residual = sw.residual;
  out.surviving_amp = sw.surviving_amp;
  out.seed_branch = sw.seed_branch;
  return out;
}

cs_switch_point pack_switch(const SwitchPoint& sw) {
  cs_switch_point out;
  out.omega0 = sw.omega0;
  out.phi0_deg = sw.phi0_deg;
  out.silenced = sw.silenced == Chirality::Left ? CS_LEFT : CS_RIGHT;
  out.residual = sw.residual;
  out.surviving_amp = sw.surviving_amp;
  out.seed_branch = sw.seed_branch;
  return out;
}

}  // namespace

extern "C" {

const char* cs_version(void) { return kVersion; }

const char* cs_status_name(cs_status status) {
  switch (status) {
    case CS_OK: return "ok";
    case CS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CS_ERR_INVALID_CONFIG: return "invalid configuration";
    case CS_ERR_DEGENERATE_STEADY_STATE: return "degenerate steady state";
    case CS_ERR_STIFF_SYSTEM: return "stiff system";
    case CS_ERR_NO_SEED: return "no perturbative seed";
    case CS_ERR_NO_CONVERGENCE: return "no convergence";
    case CS_ERR_UNDEFINED_ESTIMATE: return "undefined estimate";
    case CS_ERR_DEGENERATE_PERTURBATION: return "degenerate perturbation";
    case CS_ERR_NO_CROSSING: return "no crossing";
    case CS_ERR_IO: return "i/o error";
    case CS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* cs_last_error(void) { return g_last_error.c_str(); }

cs_status cs_model_create(cs_model** out) {
  if (cs_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] { *out = new cs_model{Scenario::baseline()}; });
}

cs_status cs_model_load(const char* path, cs_model** out) {
  if (cs_status s = require(path && out, "path and out must not be null")) {
    return s;
  }
  return guarded([&] { *out = new cs_model{Scenario::load(path)}; });
}

void cs_model_free(cs_model* model) { delete model; }

cs_status cs_model_set(cs_model* model, const char* key, double value) {
  if (cs_status s = require(model && key, "model and key must not be null")) {
    return s;
  }
  return guarded([&] { model->scenario.set_value(key, value); });
}

cs_status cs_model_get(const cs_model* model, const char* key, double* out) {
  if (cs_status s =
          require(model && key && out, "model, key, out must not be null")) {
    return s;
  }
  return guarded([&] { *out = model->scenario.get_value(key); });
}

cs_status cs_steady_state(const cs_model* model, cs_chirality chirality,
                          double rho_out[18]) {
  if (cs_status s =
          require(model && rho_out, "model and rho_out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    DensityMatrix rho =
        steady_state(sc.drives, sc.decoherence, to_chirality(chirality));
    pack_matrix(rho.m, rho_out);
  });
}

cs_status cs_evolve_to_steady(const cs_model* model, cs_chirality chirality,
                              const double rho0[18], double t_end, double tol,
                              double rho_out[18]) {
  if (cs_status s = require(model && rho0 && rho_out,
                            "model, rho0, rho_out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    DensityMatrix start;
    start.m = unpack_matrix(rho0);
    DensityMatrix rho = evolve_to_steady(sc.drives, sc.decoherence,
                                         to_chirality(chirality), start,
                                         t_end, tol);
    pack_matrix(rho.m, rho_out);
  });
}

cs_status cs_susceptibilities(const cs_model* model, double chi1[2],
                              double chi2[2]) {
  if (cs_status s = require(model && chi1 && chi2,
                            "model, chi1, chi2 must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    Susceptibilities chi =
        susceptibilities(sc.decoherence, sc.drives.delta, sc.equilibrium);
    chi1[0] = chi.chi1.real();
    chi1[1] = chi.chi1.imag();
    chi2[0] = chi.chi2.real();
    chi2[1] = chi.chi2.imag();
  });
}

cs_status cs_perturbative_coherence(const cs_model* model,
                                    cs_chirality chirality,
                                    double coherence[2]) {
  if (cs_status s =
          require(model && coherence, "model and coherence must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    Complex rho21 = perturbative_coherence(sc.drives, sc.decoherence,
                                           sc.equilibrium,
                                           to_chirality(chirality));
    coherence[0] = rho21.real();
    coherence[1] = rho21.imag();
  });
}

cs_status cs_switch_seed(const cs_model* model, int branch,
                         double omega21[2]) {
  if (cs_status s =
          require(model && omega21, "model and omega21 must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    Complex seed = switch_seed(sc.drives.omega31, sc.drives.omega32,
                               sc.drives.delta, sc.decoherence, sc.equilibrium,
                               branch);
    omega21[0] = seed.real();
    omega21[1] = seed.imag();
  });
}

cs_status cs_find_switch(const cs_model* model, cs_switch_point* out) {
  if (cs_status s = require(model && out, "model and out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    SwitchPoint sw =
        find_switch(sc.drives.omega31, sc.drives.omega32, sc.drives.delta,
                    sc.decoherence, sc.equilibrium, sc.silenced);
    *out = pack_switch(sw);
  });
}

cs_status cs_switch_curve(const cs_model* model, const double* deltas,
                          size_t count, cs_switch_point* points,
                          cs_status* point_status) {
  if (cs_status s = require(model && deltas && points && point_status,
                            "model, deltas, points, point_status must not be "
                            "null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    auto curve = switch_curve(std::span<const double>(deltas, count),
                              sc.drives.omega31, sc.drives.omega32,
                              sc.decoherence, sc.equilibrium, sc.silenced);
    for (size_t i = 0; i < curve.size(); ++i) {
      if (curve[i].converged()) {
        points[i] = pack_switch(*curve[i].point);
        point_status[i] = CS_OK;
      } else {
        std::memset(&points[i], 0, sizeof(points[i]));
        point_status[i] = map_status(curve[i].status);
      }
    }
  });
}

cs_status cs_mixture_signal(const cs_model* model, double n_left,
                            double n_right, double* signal_out) {
  if (cs_status s =
          require(model && signal_out, "model and signal_out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    *signal_out = mixture_signal(Mixture{n_left, n_right}, sc.drives,
                                 sc.decoherence, sc.equilibrium);
  });
}

cs_status cs_run_two_detections(const cs_model* model,
                                const cs_switch_point* sw, double n_left,
                                double n_right, cs_detection_result* out) {
  if (cs_status s = require(model && sw && out,
                            "model, sw, out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    DetectionResult r =
        run_two_detections(Mixture{n_left, n_right}, unpack_switch(*sw),
                           sc.drives, sc.decoherence, sc.equilibrium);
    out->e_d1 = r.e_d1;
    out->e_d2 = r.e_d2;
    out->ee_estimate = r.ee_estimate;
  });
}

cs_status cs_relative_error(const cs_model* model, const cs_switch_point* sw,
                            double domega_rel, double dphi_deg,
                            double* eta_out) {
  if (cs_status s = require(model && sw && eta_out,
                            "model, sw, eta_out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    *eta_out = relative_error(domega_rel, dphi_deg, unpack_switch(*sw),
                              sc.drives, sc.decoherence, sc.equilibrium);
  });
}

cs_status cs_critical_deviation(const cs_model* model,
                                const cs_switch_point* sw, cs_axis axis,
                                double target_eta, double* deviation_out) {
  if (cs_status s = require(model && sw && deviation_out,
                            "model, sw, deviation_out must not be null")) {
    return s;
  }
  return guarded([&] {
    const Scenario& sc = model->scenario;
    *deviation_out = critical_deviation(
        axis == CS_AXIS_AMPLITUDE ? DeviationAxis::Amplitude
                                  : DeviationAxis::Phase,
        target_eta, unpack_switch(*sw), sc.drives, sc.decoherence,
        sc.equilibrium);
  });
}

cs_status cs_sweep_run(const cs_model* model, cs_sweep_kind kind,
                       int grid_override, cs_table** out) {
  if (cs_status s = require(model && out, "model and out must not be null")) {
    return s;
  }
  return guarded([&] {
    Scenario sc = model->scenario;
    if (grid_override > 0) {
      int n = grid_override;
      switch (kind) {
        case CS_SWEEP_FIG1AB:
          sc.sweep.n_omega = n;
          sc.sweep.n_phi = n;
          break;
        case CS_SWEEP_FIG1CD:
          sc.sweep.n_phi_line = n;
          break;
        case CS_SWEEP_FIG1EF:
        case CS_SWEEP_FIG2EF:
        case CS_SWEEP_CURVE:
          sc.sweep.n_delta = n;
          break;
        case CS_SWEEP_FIG2B:
        case CS_SWEEP_FIG2CD:
          sc.sweep.n_deviation = n;
          break;
      }
    }
    SweepTable table;
    switch (kind) {
      case CS_SWEEP_FIG1AB: table = sweep_fig1ab(sc); break;
      case CS_SWEEP_FIG1CD: table = sweep_fig1cd(sc); break;
      case CS_SWEEP_FIG1EF: table = sweep_fig1ef(sc); break;
      case CS_SWEEP_FIG2B: table = sweep_fig2b(sc); break;
      case CS_SWEEP_FIG2CD: table = sweep_fig2cd(sc); break;
      case CS_SWEEP_FIG2EF: table = sweep_fig2ef(sc); break;
      case CS_SWEEP_CURVE: table = sweep_curve(sc); break;
      default:
        fail(Status::InvalidArgument, "unknown sweep kind");
    }
    *out = new cs_table{std::move(table)};
  });
}

void cs_table_free(cs_table* table) { delete table; }

size_t cs_table_num_rows(const cs_table* table) {
  return table ? table->table.rows.size() : 0;
}

size_t cs_table_num_cols(const cs_table* table) {
  return table ? table->table.columns.size() : 0;
}

const char* cs_table_column_name(const cs_table* table, size_t col) {
  if (!table || col >= table->table.columns.size()) return "";
  return table->table.columns[col].c_str();
}

double cs_table_value(const cs_table* table, size_t row, size_t col) {
  if (!table || row >= table->table.rows.size() ||
      col >= table->table.rows[row].size()) {
    return 0.0;
  }
  return table->table.rows[row][col];
}

cs_status cs_table_write(const cs_table* table, const char* path,
                         cs_format format) {
  if (cs_status s =
          require(table && path, "table and path must not be null")) {
    return s;
  }
  return guarded([&] {
    write_table(table->table, path,
                format == CS_FORMAT_CSV ? TableFormat::Csv : TableFormat::Json);
  });
}

}  // extern "C"
