#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "protocol.hpp"
#include "qmodel.hpp"

// Resolved run configuration: physics inputs plus sweep/protocol settings,
// loadable from an INI-style file and echoed verbatim into every output
// table so results are self-describing.

namespace chiralswitch {

struct SweepSettings {
  // amplitude-phase map
  double omega_max = 0.2;
  int n_omega = 201;
  int n_phi = 181;
  // phase line scan
  int n_phi_line = 721;
  // detuning scans
  double delta_min = 0.5;
  double delta_max = 20.0;
  int n_delta = 41;
  // deviation plane
  double dphi_max_deg = 1.0;
  double domega_rel_max = 0.004;
  int n_deviation = 41;
  double target_eta = 0.01;
  // decoherence-to-coupling ratios for the regime scans
  std::vector<double> regimes{0.1, 1.0, 10.0};

  void validate() const;
};

struct Scenario {
  DriveConfig drives;
  DecoherenceConfig decoherence;
  EquilibriumState equilibrium;
  MoleculeMetadata molecule = MoleculeMetadata::propanediol();
  Chirality silenced = Chirality::Left;
  Mixture mixture{1.0, 1.0};
  SweepSettings sweep;

  void validate() const;

  /// Canonical ordered key/value dump of every setting ("section.key").
  std::vector<std::pair<std::string, std::string>> echo() const;

  /// Numeric access by dotted key ("drives.omega", "decoherence.gamma12",
  /// "switch.silenced" as 0/1, ...). Throws InvalidArgument on unknown keys.
  void set_value(const std::string& key, double value);
  double get_value(const std::string& key) const;

  /// The reference parameter set: Gamma = deph = 0.1, omega31 = omega32 = 1,
  /// delta = 10, omega21 at amplitude 0.1.
  static Scenario baseline();

  static Scenario load(const std::string& path);
  static Scenario parse(std::istream& in, const std::string& origin);
};

}  // namespace chiralswitch
