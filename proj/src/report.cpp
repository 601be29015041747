#include "anomaly/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace anomaly {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "paper";
    case Provenance::trivial:
      return "trivial";
    case Provenance::derived:
      return "derived";
  }
  return "derived";
}

ordered_json json_value(cplx v) { return ordered_json::array({v.real(), v.imag()}); }
ordered_json json_value(double v) { return v; }
ordered_json json_value(std::int64_t v) { return v; }
ordered_json json_value(bool v) { return v; }
ordered_json json_value(const std::string& v) { return v; }

CheckResult scalar_check(std::string name, cplx computed, cplx expected, Provenance prov,
                         double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(computed);
  c.expected = json_value(expected);
  c.provenance = prov;
  c.abs_error = std::abs(computed - expected);
  c.tolerance = tolerance;
  return c;
}

CheckResult residual_check(std::string name, double residual, Provenance prov,
                           double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(residual);
  c.expected = json_value(0.0);
  c.provenance = prov;
  c.abs_error = std::abs(residual);
  c.tolerance = tolerance;
  return c;
}

CheckResult integer_check(std::string name, std::int64_t computed, std::int64_t expected,
                          Provenance prov) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(computed);
  c.expected = json_value(expected);
  c.provenance = prov;
  c.abs_error = computed == expected ? 0.0 : 1.0;
  c.tolerance = 0.0;
  return c;
}

CheckResult bool_check(std::string name, bool computed, Provenance prov) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(computed);
  c.expected = json_value(true);
  c.provenance = prov;
  c.abs_error = computed ? 0.0 : 1.0;
  c.tolerance = 0.0;
  return c;
}

CheckResult record_value(std::string name, cplx value, Provenance prov) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(value);
  c.expected = json_value(std::string("recorded"));
  c.provenance = prov;
  c.abs_error = 0.0;
  c.tolerance = 0.0;
  return c;
}

CheckResult record_string(std::string name, std::string value, Provenance prov) {
  CheckResult c;
  c.name = std::move(name);
  c.computed = json_value(value);
  c.expected = json_value(std::string("recorded"));
  c.provenance = prov;
  c.abs_error = 0.0;
  c.tolerance = 0.0;
  return c;
}

void VerificationReport::add(CheckResult c) { checks.push_back(std::move(c)); }

void VerificationReport::finalize() {
  if (status == "error") return;
  status = "pass";
  for (const auto& c : checks) {
    if (!c.passes()) {
      status = "fail";
      break;
    }
  }
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["status"] = r.status;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["computed"] = c.computed;
    jc["expected"] = c.expected;
    jc["provenance"] = provenance_name(c.provenance);
    jc["abs_error"] = c.abs_error;
    jc["tolerance"] = c.tolerance;
    jc["runtime_ms"] = 0.0;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

void emit_report(const VerificationReport& r, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp);
    out << to_json(r).dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename report into place: " + path);
  }
}

int exit_code_for(const VerificationReport& r) {
  if (r.status == "pass") return 0;
  if (r.status == "fail") return 1;
  return 3;
}

}  // namespace anomaly
