#include "sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "liouvillian.hpp"
#include "parallel.hpp"
#include "version.hpp"

namespace chiralswitch {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kLogZeroSentinel = -99.0;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double log10_or_sentinel(double magnitude) {
  return magnitude == 0.0 ? kLogZeroSentinel : std::log10(magnitude);
}

std::vector<std::pair<std::string, std::string>> base_metadata(
    const Scenario& sc, const std::string& sweep_name) {
  std::vector<std::pair<std::string, std::string>> md;
  md.emplace_back("artifact", "chiralswitch");
  md.emplace_back("version", kVersion);
  md.emplace_back("sweep", sweep_name);
  for (auto& kv : sc.echo()) md.push_back(kv);
  return md;
}

void append_switch_metadata(SweepTable& t, const SwitchPoint& sw) {
  t.metadata.emplace_back("switch.omega0", fmt(sw.omega0));
  t.metadata.emplace_back("switch.phi0_deg", fmt(sw.phi0_deg));
  t.metadata.emplace_back("switch.residual", fmt(sw.residual));
  t.metadata.emplace_back("switch.surviving_amp", fmt(sw.surviving_amp));
  t.metadata.emplace_back("switch.seed_branch",
                          std::to_string(sw.seed_branch));
}

double linspace_at(double lo, double hi, int n, int i) {
  return lo + (hi - lo) * double(i) / double(n - 1);
}

SwitchPoint find_scenario_switch(const Scenario& sc) {
  return find_switch(sc.drives.omega31, sc.drives.omega32, sc.drives.delta,
                     sc.decoherence, sc.equilibrium, sc.silenced);
}

std::vector<double> delta_grid(const SweepSettings& s) {
  std::vector<double> deltas(s.n_delta);
  for (int i = 0; i < s.n_delta; ++i) {
    deltas[i] = linspace_at(s.delta_min, s.delta_max, s.n_delta, i);
  }
  return deltas;
}

}  // namespace

SweepTable sweep_fig1ab(const Scenario& sc) {
  sc.validate();
  const int n_omega = sc.sweep.n_omega;
  const int n_phi = sc.sweep.n_phi;

  SweepTable t;
  t.name = "fig1ab";
  t.columns = {"omega", "phi_deg", "log10_rho21_L", "log10_rho21_R"};
  t.metadata = base_metadata(sc, t.name);
  t.rows.resize(std::size_t(n_omega) * n_phi);

  parallel_for(t.rows.size(), [&](std::size_t idx) {
    int i = int(idx) / n_phi;
    int j = int(idx) % n_phi;
    double omega = sc.sweep.omega_max * double(i) / double(n_omega - 1);
    double phi = 360.0 * double(j) / double(n_phi);  // half-open [0, 360)
    DriveConfig d = sc.drives.with_omega21_polar(omega, phi);
    double l = std::abs(steady_state(d, sc.decoherence, Chirality::Left).rho21());
    double r = std::abs(steady_state(d, sc.decoherence, Chirality::Right).rho21());
    t.rows[idx] = {omega, phi, log10_or_sentinel(l), log10_or_sentinel(r)};
  });
  return t;
}

SweepTable sweep_fig1cd(const Scenario& sc) {
  sc.validate();
  SwitchPoint sw = find_scenario_switch(sc);
  const int n = sc.sweep.n_phi_line;

  SweepTable t;
  t.name = "fig1cd";
  t.columns = {"phi_deg", "abs_rho21_L", "abs_rho21_R"};
  t.metadata = base_metadata(sc, t.name);
  append_switch_metadata(t, sw);
  t.rows.resize(n);

  parallel_for(t.rows.size(), [&](std::size_t idx) {
    double phi = linspace_at(0.0, 360.0, n, int(idx));
    DriveConfig d = sc.drives.with_omega21_polar(sw.omega0, phi);
    double l = std::abs(steady_state(d, sc.decoherence, Chirality::Left).rho21());
    double r = std::abs(steady_state(d, sc.decoherence, Chirality::Right).rho21());
    t.rows[idx] = {phi, l, r};
  });
  return t;
}

SweepTable sweep_fig1ef(const Scenario& sc) {
  sc.validate();
  const std::vector<double> deltas = delta_grid(sc.sweep);
  const double omega_bar = std::abs(sc.drives.omega31);
  const auto& regimes = sc.sweep.regimes;

  SweepTable t;
  t.name = "fig1ef";
  t.columns = {"gamma", "delta", "omega0", "phi0_deg", "residual", "converged"};
  t.metadata = base_metadata(sc, t.name);
  t.rows.resize(regimes.size() * deltas.size());

  parallel_for(regimes.size(), [&](std::size_t r) {
    double gamma = regimes[r] * omega_bar;
    DecoherenceConfig dec = DecoherenceConfig::uniform(gamma);
    auto curve = switch_curve(deltas, sc.drives.omega31, sc.drives.omega32,
                              dec, sc.equilibrium, sc.silenced);
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const CurvePoint& cp = curve[i];
      std::vector<double>& row = t.rows[r * deltas.size() + i];
      if (cp.converged()) {
        row = {gamma, cp.delta, cp.point->omega0, cp.point->phi0_deg,
               cp.point->residual, 1.0};
      } else {
        row = {gamma, cp.delta, kNan, kNan, kNan, 0.0};
      }
    }
  });
  return t;
}

SweepTable sweep_fig2b(const Scenario& sc) {
  sc.validate();
  SwitchPoint sw = find_scenario_switch(sc);
  const int n = sc.sweep.n_deviation;

  SweepTable t;
  t.name = "fig2b";
  t.columns = {"dphi_deg", "domega_rel", "eta"};
  t.metadata = base_metadata(sc, t.name);
  append_switch_metadata(t, sw);
  t.rows.resize(std::size_t(n) * n);

  parallel_for(t.rows.size(), [&](std::size_t idx) {
    int i = int(idx) / n;
    int j = int(idx) % n;
    double dphi =
        linspace_at(-sc.sweep.dphi_max_deg, sc.sweep.dphi_max_deg, n, i);
    double domega =
        linspace_at(-sc.sweep.domega_rel_max, sc.sweep.domega_rel_max, n, j);
    double eta = relative_error(domega, dphi, sw, sc.drives, sc.decoherence,
                                sc.equilibrium);
    t.rows[idx] = {dphi, domega, eta};
  });
  return t;
}

SweepTable sweep_fig2cd(const Scenario& sc) {
  sc.validate();
  SwitchPoint sw = find_scenario_switch(sc);
  const int n = sc.sweep.n_deviation;

  SweepTable t;
  t.name = "fig2cd";
  t.columns = {"dphi_deg", "domega_rel", "eta"};
  t.metadata = base_metadata(sc, t.name);
  append_switch_metadata(t, sw);
  t.rows.resize(2 * std::size_t(n));

  parallel_for(t.rows.size(), [&](std::size_t idx) {
    bool amplitude_slice = idx < std::size_t(n);
    int i = int(amplitude_slice ? idx : idx - n);
    double dphi =
        amplitude_slice
            ? 0.0
            : linspace_at(-sc.sweep.dphi_max_deg, sc.sweep.dphi_max_deg, n, i);
    double domega = amplitude_slice
                        ? linspace_at(-sc.sweep.domega_rel_max,
                                      sc.sweep.domega_rel_max, n, i)
                        : 0.0;
    double eta = relative_error(domega, dphi, sw, sc.drives, sc.decoherence,
                                sc.equilibrium);
    t.rows[idx] = {dphi, domega, eta};
  });
  return t;
}

SweepTable sweep_fig2ef(const Scenario& sc) {
  sc.validate();
  const std::vector<double> deltas = delta_grid(sc.sweep);
  const double omega_bar = std::abs(sc.drives.omega31);
  const auto& regimes = sc.sweep.regimes;

  SweepTable t;
  t.name = "fig2ef";
  t.columns = {"gamma", "delta", "domega_rel_c", "dphi_c_deg", "converged"};
  t.metadata = base_metadata(sc, t.name);
  t.rows.resize(regimes.size() * deltas.size());

  for (std::size_t r = 0; r < regimes.size(); ++r) {
    double gamma = regimes[r] * omega_bar;
    DecoherenceConfig dec = DecoherenceConfig::uniform(gamma);
    auto curve = switch_curve(deltas, sc.drives.omega31, sc.drives.omega32,
                              dec, sc.equilibrium, sc.silenced);
    parallel_for(curve.size(), [&](std::size_t i) {
      const CurvePoint& cp = curve[i];
      std::vector<double>& row = t.rows[r * deltas.size() + i];
      if (!cp.converged()) {
        row = {gamma, cp.delta, kNan, kNan, 0.0};
        return;
      }
      DriveConfig drives = sc.drives;
      drives.delta = cp.delta;
      try {
        double dom = critical_deviation(DeviationAxis::Amplitude,
                                        sc.sweep.target_eta, *cp.point, drives,
                                        dec, sc.equilibrium);
        double dph = critical_deviation(DeviationAxis::Phase,
                                        sc.sweep.target_eta, *cp.point, drives,
                                        dec, sc.equilibrium);
        row = {gamma, cp.delta, dom, dph, 1.0};
      } catch (const Error&) {
        row = {gamma, cp.delta, kNan, kNan, 0.0};
      }
    });
  }
  return t;
}

SweepTable sweep_curve(const Scenario& sc) {
  sc.validate();
  const std::vector<double> deltas = delta_grid(sc.sweep);

  SweepTable t;
  t.name = "curve";
  t.columns = {"delta", "omega0", "phi0_deg", "residual", "converged"};
  t.metadata = base_metadata(sc, t.name);

  auto curve = switch_curve(deltas, sc.drives.omega31, sc.drives.omega32,
                            sc.decoherence, sc.equilibrium, sc.silenced);
  t.rows.reserve(curve.size());
  for (const CurvePoint& cp : curve) {
    if (cp.converged()) {
      t.rows.push_back({cp.delta, cp.point->omega0, cp.point->phi0_deg,
                        cp.point->residual, 1.0});
    } else {
      t.rows.push_back({cp.delta, kNan, kNan, kNan, 0.0});
    }
  }
  return t;
}

void write_csv(const SweepTable& table, std::ostream& os) {
  for (const auto& [key, value] : table.metadata) {
    os << "# " << key << " = " << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << fmt(row[c]);
    }
    os << "\n";
  }
}

void write_json(const SweepTable& table, std::ostream& os) {
  nlohmann::ordered_json j;
  j["sweep"] = table.name;
  nlohmann::ordered_json md = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) md[key] = value;
  j["metadata"] = std::move(md);
  j["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) rows.push_back(row);
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

void write_table(const SweepTable& table, const std::string& path,
                 TableFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(Status::Io, "cannot open output file '" + path + "'");
  }
  if (format == TableFormat::Csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
  out.flush();
  if (!out) {
    fail(Status::Io, "failed writing output file '" + path + "'");
  }
}

}  // namespace chiralswitch
