/* chiralswitch — steady states, radiation switch points and enantiomeric-
 * excess estimation for driven dissipative cyclic three-level models of
 * chiral molecules.
 *
 * C API of the shared library. All objects are opaque handles; every call
 * returns a cs_status and reports detail through cs_last_error() (thread
 * local). Frequencies, rates and detunings are multiples of 2*pi*MHz; phases
 * are degrees.
 */

#ifndef CHIRALSWITCH_H
#define CHIRALSWITCH_H

#include <stddef.h>

#if defined(_WIN32)
#  define CHIRALSWITCH_API __declspec(dllexport)
#else
#  define CHIRALSWITCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_INVALID_ARGUMENT = 1,
  CS_ERR_INVALID_CONFIG = 2,
  CS_ERR_DEGENERATE_STEADY_STATE = 3,
  CS_ERR_STIFF_SYSTEM = 4,
  CS_ERR_NO_SEED = 5,
  CS_ERR_NO_CONVERGENCE = 6,
  CS_ERR_UNDEFINED_ESTIMATE = 7,
  CS_ERR_DEGENERATE_PERTURBATION = 8,
  CS_ERR_NO_CROSSING = 9,
  CS_ERR_IO = 10,
  CS_ERR_INTERNAL = 11
} cs_status;

typedef enum cs_chirality {
  CS_LEFT = 0,
  CS_RIGHT = 1
} cs_chirality;

typedef enum cs_axis {
  CS_AXIS_AMPLITUDE = 0,
  CS_AXIS_PHASE = 1
} cs_axis;

typedef enum cs_sweep_kind {
  CS_SWEEP_FIG1AB = 0,
  CS_SWEEP_FIG1CD = 1,
  CS_SWEEP_FIG1EF = 2,
  CS_SWEEP_FIG2B = 3,
  CS_SWEEP_FIG2CD = 4,
  CS_SWEEP_FIG2EF = 5,
  CS_SWEEP_CURVE = 6
} cs_sweep_kind;

typedef enum cs_format {
  CS_FORMAT_CSV = 0,
  CS_FORMAT_JSON = 1
} cs_format;

/* Resolved scenario: drive fields, decoherence, equilibrium, molecule
 * metadata, mixture and sweep settings. */
typedef struct cs_model cs_model;

/* Result grid of a sweep run. */
typedef struct cs_table cs_table;

typedef struct cs_switch_point {
  double omega0;        /* |Omega21| at the null */
  double phi0_deg;      /* phase in [0, 360) */
  int silenced;         /* cs_chirality whose radiation is off */
  double residual;      /* |rho21| of the silenced enantiomer */
  double surviving_amp; /* |rho21| of the mirror image */
  int seed_branch;      /* +1/-1 analytic seed branch, 0 if continued */
} cs_switch_point;

typedef struct cs_detection_result {
  double e_d1;
  double e_d2;
  double ee_estimate;
} cs_detection_result;

CHIRALSWITCH_API const char* cs_version(void);
CHIRALSWITCH_API const char* cs_status_name(cs_status status);

/* Detail message of the most recent failing call on this thread; empty
 * string when the last call succeeded. The pointer stays valid until the
 * next API call on the same thread. */
CHIRALSWITCH_API const char* cs_last_error(void);

/* --- model lifecycle ---------------------------------------------------- */

/* Baseline parameter set: Gamma = deph = 0.1, omega31 = omega32 = 1,
 * delta = 10, |omega21| = 0.1. */
CHIRALSWITCH_API cs_status cs_model_create(cs_model** out);

/* Load an INI-style config file (sections [drives], [decoherence],
 * [equilibrium], [molecule], [switch], [mixture], [sweep]); unspecified keys
 * keep their baseline values. */
CHIRALSWITCH_API cs_status cs_model_load(const char* path, cs_model** out);

CHIRALSWITCH_API void cs_model_free(cs_model* model);

/* Numeric access by dotted key, e.g. "drives.omega", "drives.delta",
 * "decoherence.gamma12", "switch.silenced" (0 = left, 1 = right),
 * "sweep.n_omega". */
CHIRALSWITCH_API cs_status cs_model_set(cs_model* model, const char* key,
                                        double value);
CHIRALSWITCH_API cs_status cs_model_get(const cs_model* model, const char* key,
                                        double* out);

/* --- solvers ------------------------------------------------------------ */

/* Steady state of the model's drives for one enantiomer. rho_out receives
 * the 3x3 matrix row-major as interleaved (re, im) pairs, 18 doubles in the
 * fixed ordering rho11, rho12, ..., rho33. */
CHIRALSWITCH_API cs_status cs_steady_state(const cs_model* model,
                                           cs_chirality chirality,
                                           double rho_out[18]);

/* Time-evolution oracle: integrates the master equation from rho0 (same
 * layout as above) to t_end with per-step tolerance tol. */
CHIRALSWITCH_API cs_status cs_evolve_to_steady(const cs_model* model,
                                               cs_chirality chirality,
                                               const double rho0[18],
                                               double t_end, double tol,
                                               double rho_out[18]);

/* Perturbative response (coupling-strength units). chi1/chi2/coherence are
 * (re, im) pairs. */
CHIRALSWITCH_API cs_status cs_susceptibilities(const cs_model* model,
                                               double chi1[2], double chi2[2]);
CHIRALSWITCH_API cs_status cs_perturbative_coherence(const cs_model* model,
                                                     cs_chirality chirality,
                                                     double coherence[2]);
CHIRALSWITCH_API cs_status cs_switch_seed(const cs_model* model, int branch,
                                          double omega21[2]);

/* --- switch location ---------------------------------------------------- */

/* Locate the drive nulling the radiation of the enantiomer selected by the
 * model ("switch.silenced"). */
CHIRALSWITCH_API cs_status cs_find_switch(const cs_model* model,
                                          cs_switch_point* out);

/* Continuation over caller-supplied detunings. points[i] is filled for every
 * converged index; point_status[i] carries the per-point status. Returns
 * CS_OK when the sweep ran (individual points may still have failed). */
CHIRALSWITCH_API cs_status cs_switch_curve(const cs_model* model,
                                           const double* deltas, size_t count,
                                           cs_switch_point* points,
                                           cs_status* point_status);

/* --- enantiomeric-excess protocol --------------------------------------- */

CHIRALSWITCH_API cs_status cs_mixture_signal(const cs_model* model,
                                             double n_left, double n_right,
                                             double* signal_out);

/* Two detections at the switch point (second with the phase advanced by
 * 180 degrees); the model's mixture is overridden by n_left/n_right. */
CHIRALSWITCH_API cs_status cs_run_two_detections(const cs_model* model,
                                                 const cs_switch_point* sw,
                                                 double n_left, double n_right,
                                                 cs_detection_result* out);

/* eta = 2 |rho21_silenced| / |rho21_surviving| at the deviated drive. */
CHIRALSWITCH_API cs_status cs_relative_error(const cs_model* model,
                                             const cs_switch_point* sw,
                                             double domega_rel,
                                             double dphi_deg, double* eta_out);

/* Smallest positive deviation with relative error target_eta. */
CHIRALSWITCH_API cs_status cs_critical_deviation(const cs_model* model,
                                                 const cs_switch_point* sw,
                                                 cs_axis axis,
                                                 double target_eta,
                                                 double* deviation_out);

/* --- sweep tables -------------------------------------------------------- */

/* Runs a sweep at the model's settings. grid_override > 0 replaces the
 * sweep's resolution (both axes for plane sweeps). */
CHIRALSWITCH_API cs_status cs_sweep_run(const cs_model* model,
                                        cs_sweep_kind kind, int grid_override,
                                        cs_table** out);

CHIRALSWITCH_API void cs_table_free(cs_table* table);
CHIRALSWITCH_API size_t cs_table_num_rows(const cs_table* table);
CHIRALSWITCH_API size_t cs_table_num_cols(const cs_table* table);
CHIRALSWITCH_API const char* cs_table_column_name(const cs_table* table,
                                                  size_t col);
CHIRALSWITCH_API double cs_table_value(const cs_table* table, size_t row,
                                       size_t col);
CHIRALSWITCH_API cs_status cs_table_write(const cs_table* table,
                                          const char* path, cs_format format);

#ifdef __cplusplus
}
#endif

#endif /* CHIRALSWITCH_H */
