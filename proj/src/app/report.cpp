#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "torus/app.hpp"

namespace torus::app {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "?";
}

void RunReport::below(const std::string& name, const std::string& anchor, double value, double tol,
                      std::optional<double> order, const std::string& note) {
  const bool ok = std::isfinite(value) && value <= tol;
  checks.push_back({name, anchor, value, tol, ok ? Status::pass : Status::fail, order, note});
}

void RunReport::above(const std::string& name, const std::string& anchor, double value, double tol,
                      const std::string& note) {
  const bool ok = std::isfinite(value) && value >= tol;
  checks.push_back({name, anchor, value, tol, ok ? Status::pass : Status::fail, std::nullopt, note});
}

void RunReport::info(const std::string& name, const std::string& anchor, double value, const std::string& note) {
  checks.push_back({name, anchor, value, 0.0, Status::info, std::nullopt, note});
}

void RunReport::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : meta)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  meta.emplace_back(key, value);
}

bool RunReport::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

int RunReport::count(Status s) const {
  int n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

std::string RunReport::text() const {
  std::ostringstream os;
  os << "torus-dirac " << command << "\n";
  for (const auto& [k, v] : meta) os << "  " << k << ": " << v << "\n";
  for (const auto& c : checks) {
    os << "[" << to_string(c.status) << "] " << c.name << "  value=" << fmt(c.value);
    if (c.status != Status::info) os << "  tol=" << c.tolerance;
    if (c.order) os << "  order=" << fmt(*c.order);
    os << "  {" << c.anchor << "}";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
  }
  for (const auto& a : artifacts) os << "  wrote " << a << "\n";
  os << "summary: " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::info)
     << " info\n";
  return os.str();
}

std::string RunReport::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["ok"] = ok();
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  j["meta"] = m;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["anchor"] = c.anchor;
    r["status"] = to_string(c.status);
    r["value"] = std::isfinite(c.value) ? nlohmann::ordered_json(c.value) : nlohmann::ordered_json(fmt(c.value));
    if (c.status != Status::info) r["tolerance"] = c.tolerance;
    if (c.order) r["order"] = *c.order;
    if (!c.note.empty()) r["note"] = c.note;
    j["checks"].push_back(r);
  }
  j["artifacts"] = artifacts;
  return j.dump(2) + "\n";
}

}  // namespace torus::app
