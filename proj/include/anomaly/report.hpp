#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "anomaly/common.hpp"

namespace anomaly {

using ordered_json = nlohmann::ordered_json;

enum class Provenance { paper, trivial, derived };

std::string provenance_name(Provenance p);

// One verification check.  A check passes when abs_error <= tolerance;
// exact (integer/boolean) checks carry tolerance 0.  runtime_ms is emitted
// as 0 so reports stay byte-identical across runs and worker counts.
struct CheckResult {
  std::string name;
  ordered_json computed;
  ordered_json expected;
  Provenance provenance = Provenance::derived;
  double abs_error = 0.0;
  double tolerance = 0.0;

  bool passes() const { return abs_error <= tolerance; }
};

// JSON scalars for check values: complex numbers as [re, im].
ordered_json json_value(cplx v);
ordered_json json_value(double v);
ordered_json json_value(std::int64_t v);
ordered_json json_value(bool v);
ordered_json json_value(const std::string& v);

CheckResult scalar_check(std::string name, cplx computed, cplx expected, Provenance prov,
                         double tolerance);
// computed = residual against expected 0.
CheckResult residual_check(std::string name, double residual, Provenance prov,
                           double tolerance);
CheckResult integer_check(std::string name, std::int64_t computed, std::int64_t expected,
                          Provenance prov);
CheckResult bool_check(std::string name, bool computed, Provenance prov);
// Informational records: always pass (abs_error = tolerance = 0); used for
// measured constants that the report states without asserting a value.
CheckResult record_value(std::string name, cplx value, Provenance prov);
CheckResult record_string(std::string name, std::string value, Provenance prov);

struct VerificationReport {
  std::string scenario;
  std::string status = "pass";  // pass | fail | error
  std::vector<CheckResult> checks;

  void add(CheckResult c);
  // Overall pass/fail from the checks (does not override an error status).
  void finalize();
};

ordered_json to_json(const VerificationReport& r);

// Atomic write (temp file + rename in the target directory); throws
// std::runtime_error on any I/O failure, leaving no partial file behind.
void emit_report(const VerificationReport& r, const std::string& path);

// 0 pass, 1 fail, 3 error (usage errors are the caller's exit code 2).
int exit_code_for(const VerificationReport& r);

}  // namespace anomaly
