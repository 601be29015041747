// verify: command-line driver for the verification scenarios.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error
// (bad flags, malformed config, unknown scenario, invalid tolerances),
// 3 I/O or internal computation error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anomaly/report.hpp"
#include "anomaly/scenarios.hpp"

namespace {

struct CliOptions {
  anomaly::ScenarioConfig cfg;
  bool parallel = false;
};

// Pre-scan for --config so JSON values become the defaults that explicit
// command-line flags then override.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

// Returns the exit code to use on failure (0 on success).
int load_config(const std::string& path, CliOptions& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config file: " << path << "\n";
    return 3;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: malformed config file: " << e.what() << "\n";
    return 2;
  }
  try {
    if (!j.is_object()) throw std::invalid_argument("config root must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "scenario")
        opt.cfg.scenario = value.get<std::string>();
      else if (key == "quad_order")
        opt.cfg.quad_order = value.get<int>();
      else if (key == "tolerance")
        opt.cfg.tolerance = value.get<double>();
      else if (key == "seed")
        opt.cfg.seed = value.get<std::uint64_t>();
      else if (key == "gauge_p")
        opt.cfg.gauge_p = value.get<int>();
      else if (key == "output_path")
        opt.cfg.output_path = value.get<std::string>();
      else if (key == "parallel")
        opt.parallel = value.get<bool>();
      else
        throw std::invalid_argument("unknown config key: " + key);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: invalid config file: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

void print_summary(const anomaly::VerificationReport& rep) {
  int failed = 0;
  for (const auto& c : rep.checks) {
    const bool ok = c.passes();
    if (!ok) ++failed;
    std::printf("  [%s] %-55s abs_error=%.3e tol=%.3e\n", ok ? "PASS" : "FAIL",
                c.name.c_str(), c.abs_error, c.tolerance);
  }
  std::printf("scenario %s: %s (%zu checks, %d failed)\n", rep.scenario.c_str(),
              rep.status.c_str(), rep.checks.size(), failed);
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;

  const std::string config_path = find_config_path(argc, argv);
  if (!config_path.empty()) {
    const int rc = load_config(config_path, opt);
    if (rc != 0) return rc;
  }

  CLI::App app{"Verification scenarios for current-algebra cocycles, "
               "Chern-Simons/winding invariants, Schwinger terms, crossed "
               "modules, and spectral flow"};
  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON config file (flags override its values)");
  auto* sc = app.add_option("--scenario", opt.cfg.scenario,
                            "Scenario name or 'all'");
  if (opt.cfg.scenario.empty()) sc->required();
  app.add_option("--quad-order", opt.cfg.quad_order, "Quadrature order (>= 8)");
  app.add_option("--tol", opt.cfg.tolerance,
                 "Base tolerance; scales every floating check tolerance by tol/1e-6");
  app.add_option("--seed", opt.cfg.seed, "64-bit PRNG seed (SplitMix64)");
  app.add_option("--gauge-p", opt.cfg.gauge_p, "Gauge group size p for su(p)/u(p)");
  app.add_option("--output", opt.cfg.output_path, "Write the JSON report to this path");
  app.add_flag("--parallel", opt.parallel, "Enable OpenMP/threaded evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  anomaly::set_parallel(opt.parallel);

  anomaly::VerificationReport rep;
  try {
    rep = anomaly::run_scenario(opt.cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  print_summary(rep);

  if (!opt.cfg.output_path.empty()) {
    try {
      anomaly::emit_report(rep, opt.cfg.output_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

  return anomaly::exit_code_for(rep);
}
