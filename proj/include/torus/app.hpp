#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/analytic.hpp"
#include "torus/fields.hpp"
#include "torus/geometry.hpp"

namespace torus::app {

enum class Scenario { constant_vf, pdfv };

// Raw field description as written in the config; build_field turns it into a GaugeField.
struct FieldSpec {
  double e = 1.0;
  std::string ax = "hermitizing";  // zero | hermitizing | cosine
  double ax_amplitude = 1.0;
  std::string au = "quadratic_tied";  // zero | quadratic | quadratic_tied | linear
  cplx C2 = 0.3;
  cplx C3 = 0.0;
  double a2 = 0.2;
};

struct FermiSpec {
  std::string kind = "constant";  // constant | cosine
  double value = 1.0;
  std::optional<double> amplitude;  // cosine; defaults to the tube radius a
  bool allow_constant = false;      // lets a pdfv scenario run with constant V_F
};

struct SweepSpec {
  std::string parameter = "a";
  double from = 0.1;
  double to = 0.9;
  int points = 9;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::constant_vf;
  TorusParams torus;
  FieldSpec field_spec;
  FermiSpec fermi_spec;
  QuantumNumbers quantum;
  int grid_n = 1024;
  int spectrum_n = 8000;
  bool box_selftest = false;
  double alpha = 1.0;
  double C1 = 0.0;
  int levels = 4;
  std::vector<std::string> outputs{"csv", "report", "json", "series"};
  SweepSpec sweep;
  std::string source = "<defaults>";

  // Built by finalize().
  GaugeField field;
  FermiVelocity fermi;

  bool wants(const std::string& artifact) const;
};

// Parse YAML text; errors carry the origin and line:column of the offending key.
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<string>");
ScenarioConfig load_config(const std::string& path);
// Validate and build field/fermi. Throws Error(Config) with a field path in the message.
void finalize(ScenarioConfig& cfg);

GaugeField build_field(const FieldSpec& s, const TorusParams& p, int k);
FermiVelocity build_fermi(const FermiSpec& s, const TorusParams& p);

enum class Status { pass, fail, info };
const char* to_string(Status s);

struct CheckRecord {
  std::string name;
  std::string anchor;  // descriptive tag of the relation checked, or "plumbing"
  double value = 0.0;
  double tolerance = 0.0;
  Status status = Status::info;
  std::optional<double> order;
  std::string note;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<CheckRecord> checks;
  std::vector<std::string> artifacts;

  // value <= tolerance passes
  void below(const std::string& name, const std::string& anchor, double value, double tol,
             std::optional<double> order = std::nullopt, const std::string& note = "");
  // value >= tolerance passes
  void above(const std::string& name, const std::string& anchor, double value, double tol,
             const std::string& note = "");
  void info(const std::string& name, const std::string& anchor, double value, const std::string& note = "");
  void set_meta(const std::string& key, const std::string& value);

  bool ok() const;
  int count(Status s) const;
  std::string text() const;
  std::string json() const;
};

struct RunOptions {
  std::string out_dir = "out";
  bool timestamp = true;
  bool negative_control = false;
};

RunReport cmd_geometry(const ScenarioConfig& cfg, const RunOptions& opt);
RunReport cmd_spectrum(const ScenarioConfig& cfg, const RunOptions& opt);
RunReport cmd_verify(const ScenarioConfig& cfg, const RunOptions& opt);
RunReport cmd_sweep(const ScenarioConfig& cfg, const RunOptions& opt);
RunReport cmd_analytic(const ScenarioConfig& cfg, const RunOptions& opt);

// Lowest cfg.levels numeric levels used by both spectrum and sweep.
struct SpectrumRow {
  int n = 0;
  double numeric = 0.0;
  double residual = 0.0;
  std::optional<double> analytic;
};
std::vector<SpectrumRow> spectrum_levels(const ScenarioConfig& cfg);

// Apply a sweep parameter value to a copy of the config (then finalized).
ScenarioConfig with_parameter(const ScenarioConfig& cfg, const std::string& name, double value);

// 17 significant digits.
std::string fmt(double v);

}  // namespace torus::app
