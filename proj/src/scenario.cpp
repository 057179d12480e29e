#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chiralswitch {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_number(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    fail(Status::InvalidConfig, where + ": expected a number, got '" + t + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& where) {
  double v = parse_number(text, where);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    fail(Status::InvalidConfig, where + ": expected an integer");
  }
  return static_cast<int>(v);
}

std::vector<double> parse_list(const std::string& text,
                               const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, where));
  if (out.empty()) fail(Status::InvalidConfig, where + ": empty list");
  return out;
}

Chirality parse_chirality(const std::string& text, const std::string& where) {
  std::string t = lower(trim(text));
  if (t == "left" || t == "l") return Chirality::Left;
  if (t == "right" || t == "r") return Chirality::Right;
  fail(Status::InvalidConfig, where + ": expected 'left' or 'right'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += fmt(vs[i]);
  }
  return out;
}

}  // namespace

void SweepSettings::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(Status::InvalidConfig,
           std::string("sweep.") + name + " must be positive and finite");
    }
  };
  auto at_least_two = [](int n, const char* name) {
    if (n < 2) {
      fail(Status::InvalidConfig,
           std::string("sweep.") + name + " must be at least 2");
    }
  };
  positive(omega_max, "omega_max");
  at_least_two(n_omega, "n_omega");
  at_least_two(n_phi, "n_phi");
  at_least_two(n_phi_line, "n_phi_line");
  positive(delta_max - delta_min, "delta_max - delta_min");
  at_least_two(n_delta, "n_delta");
  positive(dphi_max_deg, "dphi_max_deg");
  positive(domega_rel_max, "domega_rel_max");
  at_least_two(n_deviation, "n_deviation");
  positive(target_eta, "target_eta");
  if (regimes.empty()) {
    fail(Status::InvalidConfig, "sweep.regimes must not be empty");
  }
  for (double r : regimes) positive(r, "regimes entry");
}

void Scenario::validate() const {
  drives.validate();
  decoherence.validate();
  equilibrium.validate();
  molecule.validate();
  mixture.validate();
  sweep.validate();
}

std::vector<std::pair<std::string, std::string>> Scenario::echo() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("drives.omega", fmt(drives.omega21_amp));
  kv.emplace_back("drives.phi_deg", fmt(drives.omega21_phase_deg));
  kv.emplace_back("drives.omega31_re", fmt(drives.omega31.real()));
  kv.emplace_back("drives.omega31_im", fmt(drives.omega31.imag()));
  kv.emplace_back("drives.omega32_re", fmt(drives.omega32.real()));
  kv.emplace_back("drives.omega32_im", fmt(drives.omega32.imag()));
  kv.emplace_back("drives.delta", fmt(drives.delta));
  kv.emplace_back("decoherence.gamma12", fmt(decoherence.gamma12));
  kv.emplace_back("decoherence.gamma13", fmt(decoherence.gamma13));
  kv.emplace_back("decoherence.gamma23", fmt(decoherence.gamma23));
  kv.emplace_back("decoherence.deph21", fmt(decoherence.deph21));
  kv.emplace_back("decoherence.deph31", fmt(decoherence.deph31));
  kv.emplace_back("decoherence.deph32", fmt(decoherence.deph32));
  kv.emplace_back("equilibrium.p1", fmt(equilibrium.p1));
  kv.emplace_back("equilibrium.p2", fmt(equilibrium.p2));
  kv.emplace_back("equilibrium.p3", fmt(equilibrium.p3));
  kv.emplace_back("molecule.name", molecule.name);
  kv.emplace_back("molecule.nu21", fmt(molecule.nu21));
  kv.emplace_back("molecule.nu31", fmt(molecule.nu31));
  kv.emplace_back("molecule.nu32", fmt(molecule.nu32));
  kv.emplace_back("switch.silenced", to_string(silenced));
  kv.emplace_back("mixture.n_left", fmt(mixture.n_left));
  kv.emplace_back("mixture.n_right", fmt(mixture.n_right));
  kv.emplace_back("sweep.omega_max", fmt(sweep.omega_max));
  kv.emplace_back("sweep.n_omega", fmt(sweep.n_omega));
  kv.emplace_back("sweep.n_phi", fmt(sweep.n_phi));
  kv.emplace_back("sweep.n_phi_line", fmt(sweep.n_phi_line));
  kv.emplace_back("sweep.delta_min", fmt(sweep.delta_min));
  kv.emplace_back("sweep.delta_max", fmt(sweep.delta_max));
  kv.emplace_back("sweep.n_delta", fmt(sweep.n_delta));
  kv.emplace_back("sweep.dphi_max_deg", fmt(sweep.dphi_max_deg));
  kv.emplace_back("sweep.domega_rel_max", fmt(sweep.domega_rel_max));
  kv.emplace_back("sweep.n_deviation", fmt(sweep.n_deviation));
  kv.emplace_back("sweep.target_eta", fmt(sweep.target_eta));
  kv.emplace_back("sweep.regimes", fmt_list(sweep.regimes));
  return kv;
}

void Scenario::set_value(const std::string& key, double value) {
  if (key == "drives.omega") {
    drives.set_omega21_polar(value, drives.omega21_phase_deg);
  } else if (key == "drives.phi_deg") {
    drives.set_omega21_polar(drives.omega21_amp, value);
  } else if (key == "drives.omega31_re") {
    drives.omega31.real(value);
  } else if (key == "drives.omega31_im") {
    drives.omega31.imag(value);
  } else if (key == "drives.omega32_re") {
    drives.omega32.real(value);
  } else if (key == "drives.omega32_im") {
    drives.omega32.imag(value);
  } else if (key == "drives.delta") {
    drives.delta = value;
  } else if (key == "decoherence.gamma12") {
    decoherence.gamma12 = value;
  } else if (key == "decoherence.gamma13") {
    decoherence.gamma13 = value;
  } else if (key == "decoherence.gamma23") {
    decoherence.gamma23 = value;
  } else if (key == "decoherence.deph21") {
    decoherence.deph21 = value;
  } else if (key == "decoherence.deph31") {
    decoherence.deph31 = value;
  } else if (key == "decoherence.deph32") {
    decoherence.deph32 = value;
  } else if (key == "equilibrium.p1") {
    equilibrium.p1 = value;
  } else if (key == "equilibrium.p2") {
    equilibrium.p2 = value;
  } else if (key == "equilibrium.p3") {
    equilibrium.p3 = value;
  } else if (key == "molecule.nu21") {
    molecule.nu21 = value;
  } else if (key == "molecule.nu31") {
    molecule.nu31 = value;
  } else if (key == "molecule.nu32") {
    molecule.nu32 = value;
  } else if (key == "switch.silenced") {
    silenced = value == 0.0 ? Chirality::Left : Chirality::Right;
  } else if (key == "mixture.n_left") {
    mixture.n_left = value;
  } else if (key == "mixture.n_right") {
    mixture.n_right = value;
  } else if (key == "sweep.omega_max") {
    sweep.omega_max = value;
  } else if (key == "sweep.n_omega") {
    sweep.n_omega = static_cast<int>(value);
  } else if (key == "sweep.n_phi") {
    sweep.n_phi = static_cast<int>(value);
  } else if (key == "sweep.n_phi_line") {
    sweep.n_phi_line = static_cast<int>(value);
  } else if (key == "sweep.delta_min") {
    sweep.delta_min = value;
  } else if (key == "sweep.delta_max") {
    sweep.delta_max = value;
  } else if (key == "sweep.n_delta") {
    sweep.n_delta = static_cast<int>(value);
  } else if (key == "sweep.dphi_max_deg") {
    sweep.dphi_max_deg = value;
  } else if (key == "sweep.domega_rel_max") {
    sweep.domega_rel_max = value;
  } else if (key == "sweep.n_deviation") {
    sweep.n_deviation = static_cast<int>(value);
  } else if (key == "sweep.target_eta") {
    sweep.target_eta = value;
  } else {
    fail(Status::InvalidArgument, "unknown setting '" + key + "'");
  }
}

double Scenario::get_value(const std::string& key) const {
  if (key == "drives.omega") return drives.omega21_amp;
  if (key == "drives.phi_deg") return drives.omega21_phase_deg;
  if (key == "drives.omega31_re") return drives.omega31.real();
  if (key == "drives.omega31_im") return drives.omega31.imag();
  if (key == "drives.omega32_re") return drives.omega32.real();
  if (key == "drives.omega32_im") return drives.omega32.imag();
  if (key == "drives.delta") return drives.delta;
  if (key == "decoherence.gamma12") return decoherence.gamma12;
  if (key == "decoherence.gamma13") return decoherence.gamma13;
  if (key == "decoherence.gamma23") return decoherence.gamma23;
  if (key == "decoherence.deph21") return decoherence.deph21;
  if (key == "decoherence.deph31") return decoherence.deph31;
  if (key == "decoherence.deph32") return decoherence.deph32;
  if (key == "equilibrium.p1") return equilibrium.p1;
  if (key == "equilibrium.p2") return equilibrium.p2;
  if (key == "equilibrium.p3") return equilibrium.p3;
  if (key == "molecule.nu21") return molecule.nu21;
  if (key == "molecule.nu31") return molecule.nu31;
  if (key == "molecule.nu32") return molecule.nu32;
  if (key == "switch.silenced") {
    return silenced == Chirality::Left ? 0.0 : 1.0;
  }
  if (key == "mixture.n_left") return mixture.n_left;
  if (key == "mixture.n_right") return mixture.n_right;
  if (key == "sweep.omega_max") return sweep.omega_max;
  if (key == "sweep.n_omega") return sweep.n_omega;
  if (key == "sweep.n_phi") return sweep.n_phi;
  if (key == "sweep.n_phi_line") return sweep.n_phi_line;
  if (key == "sweep.delta_min") return sweep.delta_min;
  if (key == "sweep.delta_max") return sweep.delta_max;
  if (key == "sweep.n_delta") return sweep.n_delta;
  if (key == "sweep.dphi_max_deg") return sweep.dphi_max_deg;
  if (key == "sweep.domega_rel_max") return sweep.domega_rel_max;
  if (key == "sweep.n_deviation") return sweep.n_deviation;
  if (key == "sweep.target_eta") return sweep.target_eta;
  fail(Status::InvalidArgument, "unknown setting '" + key + "'");
}

Scenario Scenario::baseline() {
  Scenario sc;
  sc.drives.set_omega21_polar(0.1, 0.0);
  sc.drives.omega31 = Complex(1.0, 0.0);
  sc.drives.omega32 = Complex(1.0, 0.0);
  sc.drives.delta = 10.0;
  sc.decoherence = DecoherenceConfig::uniform(0.1);
  return sc;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(Status::Io, "cannot open config file '" + path + "'");
  }
  return parse(in, path);
}

Scenario Scenario::parse(std::istream& in, const std::string& origin) {
  Scenario sc = baseline();
  std::string line;
  std::string section;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno);
    size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(Status::InvalidConfig, where + ": malformed section header");
      }
      section = lower(trim(line.substr(1, line.size() - 2)));
      static const char* known[] = {"drives",   "decoherence", "equilibrium",
                                    "molecule", "switch",      "mixture",
                                    "sweep"};
      if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
            return section == k;
          }) == std::end(known)) {
        fail(Status::InvalidConfig, where + ": unknown section [" + section + "]");
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      fail(Status::InvalidConfig, where + ": expected 'key = value'");
    }
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      fail(Status::InvalidConfig, where + ": key outside any section");
    }

    std::string dotted = section + "." + key;
    if (dotted == "molecule.name") {
      sc.molecule.name = value;
    } else if (dotted == "switch.silenced") {
      sc.silenced = parse_chirality(value, where);
    } else if (dotted == "sweep.regimes") {
      sc.sweep.regimes = parse_list(value, where);
    } else if (dotted == "sweep.n_omega" || dotted == "sweep.n_phi" ||
               dotted == "sweep.n_phi_line" || dotted == "sweep.n_delta" ||
               dotted == "sweep.n_deviation") {
      sc.set_value(dotted, parse_int(value, where));
    } else {
      try {
        sc.set_value(dotted, parse_number(value, where));
      } catch (const Error& e) {
        if (e.status() == Status::InvalidArgument) {
          fail(Status::InvalidConfig,
               where + ": unknown key '" + key + "' in [" + section + "]");
        }
        throw;
      }
    }
  }

  sc.validate();
  return sc;
}

}  // namespace chiralswitch
