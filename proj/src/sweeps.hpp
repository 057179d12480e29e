#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "scenario.hpp"

// Deterministic parameter-grid engine behind the figure-data subcommands.
// Rows are ordered lexicographically over the grid indices no matter how the
// work pool schedules them, and every table embeds the resolved configuration
// so output files are self-describing. Identical configs produce
// byte-identical files.

namespace chiralswitch {

struct SweepTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// log10(|rho21|) for both enantiomers over the amplitude-phase plane of the
/// 2<->1 drive. Columns: omega, phi_deg, log10_rho21_L, log10_rho21_R
/// (log10 of an exact zero is emitted as the sentinel -99).
SweepTable sweep_fig1ab(const Scenario& sc);

/// |rho21| versus drive phase at the switch amplitude omega0.
/// Columns: phi_deg, abs_rho21_L, abs_rho21_R.
SweepTable sweep_fig1cd(const Scenario& sc);

/// Switch amplitude and phase versus detuning for each decoherence regime.
/// Columns: gamma, delta, omega0, phi0_deg, residual, converged.
SweepTable sweep_fig1ef(const Scenario& sc);

/// Relative estimation error over the (phase, amplitude)-deviation plane.
/// Columns: dphi_deg, domega_rel, eta.
SweepTable sweep_fig2b(const Scenario& sc);

/// One-dimensional slices of the deviation plane through the origin
/// (amplitude axis first, then phase axis). Columns as sweep_fig2b.
SweepTable sweep_fig2cd(const Scenario& sc);

/// Critical deviations versus detuning for each decoherence regime.
/// Columns: gamma, delta, domega_rel_c, dphi_c_deg, converged.
SweepTable sweep_fig2ef(const Scenario& sc);

/// Switch continuation over the configured detuning grid at the configured
/// decoherence. Columns: delta, omega0, phi0_deg, residual, converged.
SweepTable sweep_curve(const Scenario& sc);

enum class TableFormat { Csv, Json };

void write_csv(const SweepTable& table, std::ostream& os);
void write_json(const SweepTable& table, std::ostream& os);

/// Writes the table to `path`; throws Io on filesystem errors.
void write_table(const SweepTable& table, const std::string& path,
                 TableFormat format);

}  // namespace chiralswitch
