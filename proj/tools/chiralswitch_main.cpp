// Command-line front end; talks to the library exclusively through the
// extern-C API in chiralswitch/chiralswitch.h.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "chiralswitch/chiralswitch.h"

namespace {

struct ModelDeleter {
  void operator()(cs_model* m) const { cs_model_free(m); }
};
struct TableDeleter {
  void operator()(cs_table* t) const { cs_table_free(t); }
};
using ModelPtr = std::unique_ptr<cs_model, ModelDeleter>;
using TablePtr = std::unique_ptr<cs_table, TableDeleter>;

int exit_code_for(cs_status s) {
  switch (s) {
    case CS_OK:
      return 0;
    case CS_ERR_INVALID_ARGUMENT:
    case CS_ERR_INVALID_CONFIG:
    case CS_ERR_IO:
      return 1;
    default:
      return 2;
  }
}

int report(cs_status s) {
  std::cerr << "error: " << cs_status_name(s) << ": " << cs_last_error()
            << "\n";
  return exit_code_for(s);
}

struct CommonOptions {
  std::string config;
  bool quiet = false;
};

struct OutputOptions {
  std::string out;
  std::string format = "csv";
  int grid = 0;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--config", common.config,
                  "config file path ('baseline' or omitted = built-in "
                  "baseline parameters)");
  cmd->add_flag("--quiet", common.quiet, "suppress informational output");
}

void add_output(CLI::App* cmd, OutputOptions& output) {
  cmd->add_option("--out", output.out, "output file path");
  cmd->add_option("--format", output.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--grid", output.grid, "grid resolution override")
      ->check(CLI::PositiveNumber);
}

cs_status open_model(const CommonOptions& common, ModelPtr& model) {
  cs_model* raw = nullptr;
  cs_status s = (common.config.empty() || common.config == "baseline")
                    ? cs_model_create(&raw)
                    : cs_model_load(common.config.c_str(), &raw);
  model.reset(raw);
  return s;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void print_density_matrix(const double rho[18]) {
  for (int r = 0; r < 3; ++r) {
    std::cout << "   ";
    for (int c = 0; c < 3; ++c) {
      std::cout << " (" << fmt(rho[2 * (3 * r + c)]) << ", "
                << fmt(rho[2 * (3 * r + c) + 1]) << ")";
    }
    std::cout << "\n";
  }
}

void print_switch_point(const cs_switch_point& sw) {
  std::cout << "switch point (silenced = "
            << (sw.silenced == CS_LEFT ? "left" : "right") << "):\n"
            << "  omega0            = " << fmt(sw.omega0) << "  (2pi*MHz)\n"
            << "  phi0              = " << fmt(sw.phi0_deg) << "  deg\n"
            << "  residual |rho21|  = " << fmt(sw.residual) << "\n"
            << "  surviving |rho21| = " << fmt(sw.surviving_amp) << "\n"
            << "  seed branch       = " << sw.seed_branch << "\n";
}

int run_steady(const CommonOptions& common) {
  ModelPtr model;
  if (cs_status s = open_model(common, model)) return report(s);
  for (cs_chirality q : {CS_LEFT, CS_RIGHT}) {
    double rho[18];
    if (cs_status s = cs_steady_state(model.get(), q, rho)) return report(s);
    double re = rho[2 * 3], im = rho[2 * 3 + 1];  // rho21 entry
    std::cout << "steady state (" << (q == CS_LEFT ? "left" : "right")
              << "):\n";
    print_density_matrix(rho);
    std::cout << "  |rho21| = " << fmt(std::sqrt(re * re + im * im)) << "\n";
  }
  return 0;
}

int run_switch(const CommonOptions& common) {
  ModelPtr model;
  if (cs_status s = open_model(common, model)) return report(s);
  cs_switch_point sw;
  if (cs_status s = cs_find_switch(model.get(), &sw)) return report(s);
  print_switch_point(sw);
  return 0;
}

int run_ee(const CommonOptions& common, double n_left, double n_right) {
  ModelPtr model;
  if (cs_status s = open_model(common, model)) return report(s);
  if (n_left < 0.0) cs_model_get(model.get(), "mixture.n_left", &n_left);
  if (n_right < 0.0) cs_model_get(model.get(), "mixture.n_right", &n_right);

  cs_switch_point sw;
  if (cs_status s = cs_find_switch(model.get(), &sw)) return report(s);
  cs_detection_result result;
  if (cs_status s = cs_run_two_detections(model.get(), &sw, n_left, n_right,
                                          &result)) {
    return report(s);
  }
  if (!common.quiet) print_switch_point(sw);
  double truth = (n_left - n_right) / (n_left + n_right);
  std::cout << "two-detection protocol (N_L = " << fmt(n_left)
            << ", N_R = " << fmt(n_right) << "):\n"
            << "  E_d1        = " << fmt(result.e_d1) << "\n"
            << "  E_d2        = " << fmt(result.e_d2) << "\n"
            << "  ee estimate = " << fmt(result.ee_estimate) << "\n"
            << "  ee true     = " << fmt(truth) << "\n";
  return 0;
}

int run_robust(const CommonOptions& common, double eta) {
  ModelPtr model;
  if (cs_status s = open_model(common, model)) return report(s);
  if (eta <= 0.0) cs_model_get(model.get(), "sweep.target_eta", &eta);

  cs_switch_point sw;
  if (cs_status s = cs_find_switch(model.get(), &sw)) return report(s);
  double domega_rel_c = 0.0, dphi_c = 0.0;
  if (cs_status s = cs_critical_deviation(model.get(), &sw, CS_AXIS_AMPLITUDE,
                                          eta, &domega_rel_c)) {
    return report(s);
  }
  if (cs_status s = cs_critical_deviation(model.get(), &sw, CS_AXIS_PHASE, eta,
                                          &dphi_c)) {
    return report(s);
  }
  if (!common.quiet) print_switch_point(sw);
  std::cout << "critical deviations at eta = " << fmt(eta) << ":\n"
            << "  delta_omega_rel_c = " << fmt(domega_rel_c) << "\n"
            << "  delta_phi_c       = " << fmt(dphi_c) << "  deg\n";
  return 0;
}

int write_sweep(const CommonOptions& common, const OutputOptions& output,
                cs_sweep_kind kind, const std::string& name) {
  ModelPtr model;
  if (cs_status s = open_model(common, model)) return report(s);

  cs_table* raw = nullptr;
  if (cs_status s = cs_sweep_run(model.get(), kind, output.grid, &raw)) {
    return report(s);
  }
  TablePtr table(raw);

  cs_format format = output.format == "json" ? CS_FORMAT_JSON : CS_FORMAT_CSV;
  std::string path =
      output.out.empty() ? name + (format == CS_FORMAT_JSON ? ".json" : ".csv")
                         : output.out;
  if (cs_status s = cs_table_write(table.get(), path.c_str(), format)) {
    return report(s);
  }
  if (!common.quiet) {
    std::cout << "wrote " << cs_table_num_rows(table.get()) << " rows ("
              << cs_table_num_cols(table.get()) << " columns) to " << path
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chiralswitch — steady states, enantioselective radiation switch "
      "points and two-detection enantiomeric-excess estimation for driven "
      "dissipative cyclic three-level models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cs_version());

  CommonOptions common;
  OutputOptions output;
  double n_left = -1.0, n_right = -1.0, eta = 0.0;
  std::string sweep_name;

  CLI::App* steady = app.add_subcommand(
      "steady", "solve the steady state for both enantiomers");
  add_common(steady, common);

  CLI::App* sw = app.add_subcommand(
      "switch", "locate the radiation-silencing drive point");
  add_common(sw, common);

  CLI::App* curve = app.add_subcommand(
      "curve", "switch continuation over the configured detuning grid");
  add_common(curve, common);
  add_output(curve, output);

  CLI::App* sweep = app.add_subcommand("sweep", "generate a figure data set");
  sweep
      ->add_option("name", sweep_name,
                   "one of fig1ab, fig1cd, fig1ef, fig2b, fig2cd, fig2ef")
      ->required()
      ->check(CLI::IsMember(
          {"fig1ab", "fig1cd", "fig1ef", "fig2b", "fig2cd", "fig2ef"}));
  add_common(sweep, common);
  add_output(sweep, output);

  CLI::App* ee = app.add_subcommand(
      "ee", "two-detection enantiomeric-excess estimate for a mixture");
  add_common(ee, common);
  ee->add_option("--n-left", n_left, "number of left-handed molecules");
  ee->add_option("--n-right", n_right, "number of right-handed molecules");

  CLI::App* robust = app.add_subcommand(
      "robust", "critical drive deviations for the target relative error");
  add_common(robust, common);
  robust->add_option("--eta", eta, "target relative error (default: config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  }

  if (steady->parsed()) return run_steady(common);
  if (sw->parsed()) return run_switch(common);
  if (curve->parsed()) return write_sweep(common, output, CS_SWEEP_CURVE, "curve");
  if (ee->parsed()) return run_ee(common, n_left, n_right);
  if (robust->parsed()) return run_robust(common, eta);
  if (sweep->parsed()) {
    cs_sweep_kind kind = CS_SWEEP_FIG1AB;
    if (sweep_name == "fig1ab") kind = CS_SWEEP_FIG1AB;
    else if (sweep_name == "fig1cd") kind = CS_SWEEP_FIG1CD;
    else if (sweep_name == "fig1ef") kind = CS_SWEEP_FIG1EF;
    else if (sweep_name == "fig2b") kind = CS_SWEEP_FIG2B;
    else if (sweep_name == "fig2cd") kind = CS_SWEEP_FIG2CD;
    else if (sweep_name == "fig2ef") kind = CS_SWEEP_FIG2EF;
    return write_sweep(common, output, kind, sweep_name);
  }
  std::cerr << app.help() << std::flush;
  return 1;
}
