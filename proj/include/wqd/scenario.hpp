// Declarative scenario model and its plain-text key/value tree format.
// See docs/scenario-format.txt for the schema.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace wqd {

struct WorldlineSpec {
  std::string family = "static";
  double velocity = 0.0;  // const-velocity
  double accel = 0.0;     // const-accel
  // profile for generic-linear (acceleration) and circular (angular velocity)
  std::string profile = "constant";
  double value = 0.0;
  double amplitude = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double omega_g = 0.0;
  double radius = 1.0;    // circular
  double phase = 0.0;     // circular phase offset (0 or pi)

  bool operator==(const WorldlineSpec&) const = default;
};

struct SwitchingSpec {
  std::string kind = "unity";
  double sigma = 1.0;
  double omega_m = 0.0;

  bool operator==(const SwitchingSpec&) const = default;
};

struct SpectrumSpec {
  std::string kind = "super-ohmic";
  double coupling = 1.0;
  double lambda_ir = 0.02;
  double lambda_uv = 10.0;

  bool operator==(const SpectrumSpec&) const = default;
};

struct TimeMapSpec {
  std::string kind = "none";  // none | linear-separation | linear-two-accels
  double separation = 0.0;    // linear-separation L

  bool operator==(const TimeMapSpec&) const = default;
};

struct ModeSpec {
  WorldlineSpec worldline;
  SwitchingSpec switching;
  SpectrumSpec spectrum;
  TimeMapSpec time_map;  // only meaningful on mode2

  bool operator==(const ModeSpec&) const = default;
};

struct SweepSpec {
  std::string kind = "none";  // none | transition-vs-accel | transition-vs-omega | backflow-grid
  std::vector<double> accel;
  std::vector<double> omega;
  std::vector<double> sigma;
  std::vector<double> lambda_ir;
};

struct Variant {
  std::string label;
  std::vector<std::pair<std::string, std::string>> overrides;  // dotted path -> value
};

struct Scenario {
  std::string name = "scenario";
  std::string frame = "M";  // M | E | thermal
  int dimension = 1;
  std::string observer = "mode1";
  double tau_max = 5.0;
  double step = 0.005;
  double rho00 = 1.0;
  double re_rho01 = 0.0;
  double im_rho01 = 0.0;
  double temperature = -1.0;  // thermal frame; < 0 derives a/(2 pi) from mode1
  ModeSpec mode1;
  ModeSpec mode2;
  std::vector<Variant> variants;
  SweepSpec sweep;
  double backflow_threshold = 1e-4;
};

// Parse/serialize the key/value tree format. Parsing reports schema problems
// as SchemaError with "line N:" diagnostics; every serialized scenario
// parses back to an identical structure.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

// Structural validation beyond field syntax (frame names, dimension vs
// worldline family, observer naming for incoherent motion, ...).
void validate_scenario(const Scenario& s);

// One variant's overrides applied to the base (used by presets and multi-
// curve runs); override paths are validated like regular fields.
Scenario apply_variant(const Scenario& base, const Variant& v);

}  // namespace wqd
