#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "torus/app.hpp"
#include "torus/errors.hpp"

namespace torus::app {

namespace {

std::string where(const std::string& origin, const YAML::Node& n) {
  const YAML::Mark m = n.Mark();
  if (m.line < 0) return origin;
  return origin + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
}

[[noreturn]] void bad(const std::string& origin, const YAML::Node& n, const std::string& path,
                      const std::string& msg) {
  fail(ErrorKind::Config, where(origin, n) + ": " + path + ": " + msg);
}

void known_keys(const std::string& origin, const YAML::Node& n, const std::string& path,
                const std::set<std::string>& keys) {
  if (!n.IsMap()) bad(origin, n, path, "expected a mapping");
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    if (!keys.count(key)) bad(origin, kv.first, path + "." + key, "unknown key");
  }
}

template <class T>
T get(const std::string& origin, const YAML::Node& parent, const std::string& key, const std::string& path,
      T fallback) {
  const YAML::Node n = parent[key];
  if (!n) return fallback;
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    bad(origin, n, path + "." + key, "wrong type");
  }
}

// real scalar or [re, im]
cplx get_cplx(const std::string& origin, const YAML::Node& parent, const std::string& key,
              const std::string& path, cplx fallback) {
  const YAML::Node n = parent[key];
  if (!n) return fallback;
  try {
    if (n.IsSequence()) {
      if (n.size() != 2) bad(origin, n, path + "." + key, "complex value needs [re, im]");
      return {n[0].as<double>(), n[1].as<double>()};
    }
    return n.as<double>();
  } catch (const YAML::Exception&) {
    bad(origin, n, path + "." + key, "wrong type");
  }
}

}  // namespace

bool ScenarioConfig::wants(const std::string& artifact) const {
  return std::find(outputs.begin(), outputs.end(), artifact) != outputs.end();
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    fail(ErrorKind::Config, origin + ":" + std::to_string(e.mark.line + 1) + ":" +
                                std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  ScenarioConfig c;
  c.source = origin;
  if (!root || root.IsNull()) return c;
  known_keys(origin, root, "config",
             {"case", "torus", "field", "fermi", "quantum", "grid", "analytic", "spectrum", "outputs", "sweep"});

  const auto cs = get<std::string>(origin, root, "case", "config", "constant_vf");
  if (cs == "constant_vf") c.scenario = Scenario::constant_vf;
  else if (cs == "pdfv") c.scenario = Scenario::pdfv;
  else bad(origin, root["case"], "config.case", "expected constant_vf or pdfv");

  if (const auto t = root["torus"]) {
    known_keys(origin, t, "torus", {"a", "c"});
    c.torus.a = get<double>(origin, t, "a", "torus", c.torus.a);
    c.torus.c = get<double>(origin, t, "c", "torus", c.torus.c);
  }
  if (const auto f = root["field"]) {
    known_keys(origin, f, "field", {"e", "ax", "ax_amplitude", "au", "C2", "C3", "a2"});
    auto& s = c.field_spec;
    s.e = get<double>(origin, f, "e", "field", s.e);
    s.ax = get<std::string>(origin, f, "ax", "field", s.ax);
    s.ax_amplitude = get<double>(origin, f, "ax_amplitude", "field", s.ax_amplitude);
    s.au = get<std::string>(origin, f, "au", "field", s.au);
    s.C2 = get_cplx(origin, f, "C2", "field", s.C2);
    s.C3 = get_cplx(origin, f, "C3", "field", s.C3);
    s.a2 = get<double>(origin, f, "a2", "field", s.a2);
    if (s.ax != "zero" && s.ax != "hermitizing" && s.ax != "cosine")
      bad(origin, f["ax"], "field.ax", "unknown family '" + s.ax + "' (zero, hermitizing, cosine)");
    if (s.au != "zero" && s.au != "quadratic" && s.au != "quadratic_tied" && s.au != "linear")
      bad(origin, f["au"], "field.au", "unknown family '" + s.au + "' (zero, quadratic, quadratic_tied, linear)");
  }
  if (const auto f = root["fermi"]) {
    known_keys(origin, f, "fermi", {"kind", "value", "amplitude", "allow_constant"});
    auto& s = c.fermi_spec;
    s.kind = get<std::string>(origin, f, "kind", "fermi", s.kind);
    s.value = get<double>(origin, f, "value", "fermi", s.value);
    if (f["amplitude"]) s.amplitude = get<double>(origin, f, "amplitude", "fermi", 0.0);
    s.allow_constant = get<bool>(origin, f, "allow_constant", "fermi", s.allow_constant);
    if (s.kind != "constant" && s.kind != "cosine")
      bad(origin, f["kind"], "fermi.kind", "unknown family '" + s.kind + "' (constant, cosine)");
  }
  if (const auto q = root["quantum"]) {
    known_keys(origin, q, "quantum", {"k"});
    c.quantum.k = get<int>(origin, q, "k", "quantum", c.quantum.k);
  }
  if (const auto g = root["grid"]) {
    known_keys(origin, g, "grid", {"n"});
    c.grid_n = get<int>(origin, g, "n", "grid", c.grid_n);
  }
  if (const auto a = root["analytic"]) {
    known_keys(origin, a, "analytic", {"alpha", "C1", "levels"});
    c.alpha = get<double>(origin, a, "alpha", "analytic", c.alpha);
    c.C1 = get<double>(origin, a, "C1", "analytic", c.C1);
    c.levels = get<int>(origin, a, "levels", "analytic", c.levels);
  }
  if (const auto s = root["spectrum"]) {
    known_keys(origin, s, "spectrum", {"n", "box_selftest"});
    c.spectrum_n = get<int>(origin, s, "n", "spectrum", c.spectrum_n);
    c.box_selftest = get<bool>(origin, s, "box_selftest", "spectrum", c.box_selftest);
  }
  if (const auto o = root["outputs"]) {
    if (!o.IsSequence()) bad(origin, o, "config.outputs", "expected a list");
    c.outputs.clear();
    for (const auto& item : o) {
      const auto s = item.as<std::string>();
      if (s != "csv" && s != "report" && s != "json" && s != "series")
        bad(origin, item, "config.outputs", "unknown artifact '" + s + "' (csv, report, json, series)");
      c.outputs.push_back(s);
    }
  }
  if (const auto s = root["sweep"]) {
    known_keys(origin, s, "sweep", {"parameter", "from", "to", "points"});
    c.sweep.parameter = get<std::string>(origin, s, "parameter", "sweep", c.sweep.parameter);
    c.sweep.from = get<double>(origin, s, "from", "sweep", c.sweep.from);
    c.sweep.to = get<double>(origin, s, "to", "sweep", c.sweep.to);
    c.sweep.points = get<int>(origin, s, "points", "sweep", c.sweep.points);
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, path + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  ScenarioConfig c = parse_config(ss.str(), path);
  finalize(c);
  return c;
}

GaugeField build_field(const FieldSpec& s, const TorusParams& p, int k) {
  GaugeField au;
  if (s.au == "zero") au = GaugeField::zero(s.e);
  else if (s.au == "quadratic") au = GaugeField::quadratic_au(s.e, s.C2, s.C3);
  else if (s.au == "quadratic_tied") au = GaugeField::quadratic_au_tied(s.e, s.C2, k, p.a);
  else au = GaugeField::linear_au(s.e, s.a2, k);
  if (s.ax == "hermitizing") return au.with_ax(GaugeField::hermitizing_ax(s.e));
  if (s.ax == "cosine") return au.with_ax(GaugeField::cosine_ax(s.e, s.ax_amplitude));
  return au;
}

FermiVelocity build_fermi(const FermiSpec& s, const TorusParams& p) {
  if (s.kind == "cosine") return FermiVelocity::cosine(s.amplitude.value_or(p.a));
  return FermiVelocity::constant(s.value);
}

void finalize(ScenarioConfig& c) {
  const std::string o = c.source + ": ";
  if (!(c.torus.a > 0.0)) fail(ErrorKind::Config, o + "torus.a: must be > 0");
  if (!(c.torus.c > 0.0)) fail(ErrorKind::Config, o + "torus.c: must be > 0");
  if (c.torus.c == c.torus.a) fail(ErrorKind::Config, o + "torus.c: must differ from torus.a (c != a)");
  if (c.field_spec.e == 0.0 && (c.field_spec.ax == "hermitizing" || c.field_spec.au != "zero"))
    fail(ErrorKind::Config, o + "field.e: charge must be nonzero for the chosen families");
  if (c.grid_n < 16) fail(ErrorKind::Config, o + "grid.n: need at least 16 points");
  if (c.spectrum_n < 16) fail(ErrorKind::Config, o + "spectrum.n: need at least 16 points");
  if (c.levels < 1 || c.levels > 12) fail(ErrorKind::Config, o + "analytic.levels: must be in 1..12");
  if (c.outputs.empty()) fail(ErrorKind::Config, o + "outputs: at least one artifact must be requested");
  if (c.sweep.points < 1) fail(ErrorKind::Config, o + "sweep.points: need at least one point");
  if (c.scenario == Scenario::pdfv) {
    if (c.fermi_spec.kind == "constant" && !c.fermi_spec.allow_constant)
      fail(ErrorKind::Config, o + "fermi.kind: pdfv needs a non-constant Fermi velocity "
                                  "(or fermi.allow_constant: true)");
  }
  try {
    c.field = build_field(c.field_spec, c.torus, c.quantum.k);
    c.fermi = build_fermi(c.fermi_spec, c.torus);
  } catch (const Error& e) {
    fail(ErrorKind::Config, o + "field/fermi: " + e.what());
  }
}

}  // namespace torus::app
