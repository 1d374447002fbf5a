// fw-lab: build a static Dirac Hamiltonian, apply the requested
// representation-changing unitaries and verify which of them satisfy the
// wave-function reduction condition, with the exact Eriksen transform as
// the numerical oracle.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwlab/errors.hpp"
#include "fwlab/report.hpp"

namespace {

int run_command(const std::string &config_path,
                const std::vector<std::string> &tol_overrides,
                int grid_size, const std::string &out_override,
                const std::string &format_override) {
  fwlab::RunConfig config;
  try {
    config = fwlab::load_config(config_path);
    for (const std::string &kv : tol_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw fwlab::ConfigError("--tol expects name=value, got '" + kv + "'");
      nlohmann::json patch = config.raw;
      patch["tolerances"][kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      config = fwlab::parse_config(patch);
    }
    if (grid_size > 0) {
      nlohmann::json patch = config.raw;
      if (!patch["scenario"].contains("lattice"))
        throw fwlab::ConfigError(
            "--grid-size applies to lattice scenarios only");
      patch["scenario"]["lattice"]["n_points"] = grid_size;
      config = fwlab::parse_config(patch);
    }
    if (!out_override.empty()) config.output_path = out_override;
    if (!format_override.empty()) {
      config.report_format = format_override;
      if (format_override != "json" && format_override != "csv-tables" &&
          format_override != "both")
        throw fwlab::ConfigError("--format must be json, csv-tables or both");
    }
  } catch (const fwlab::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  fwlab::TransformReport report;
  try {
    report = fwlab::run_scenario(config);
  } catch (const fwlab::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }

  try {
    fwlab::emit_report(report, config.output_path, config.report_format);
  } catch (const std::exception &e) {
    std::cerr << "report emission failed: " << e.what() << "\n";
    return 1;
  }

  for (const auto &r : report.records) {
    if (r.status != "ok") {
      std::printf("%-28s ERROR  %s\n", r.method.c_str(), r.error.c_str());
      continue;
    }
    std::printf(
        "%-28s %s  reduction=%s (lower %.3e, upper %.3e, oracle %.3e, "
        "tol %.1e)\n",
        r.method.c_str(), r.conformant ? "ok    " : "MISMATCH",
        r.reduction.passed ? "pass" : "fail", r.reduction.max_lower_residual,
        r.reduction.max_upper_residual, r.reduction.max_oracle_mismatch,
        r.reduction.threshold);
  }

  const int code = fwlab::conformance_exit_code(report);
  if (code == 0)
    std::printf("conformant: every verdict matches the expected "
                "classification\n");
  else if (code == 2)
    std::printf("numerical precondition failure in at least one transform\n");
  else
    std::printf("conformance mismatch: at least one verdict contradicts the "
                "expected classification\n");
  return code;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"fw-lab: Dirac-to-Foldy-Wouthuysen transformation laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> tol_overrides;
  int grid_size = 0;
  std::string out_override, format_override;

  CLI::App *run = app.add_subcommand("run", "run a scenario config");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--tol", tol_overrides,
                  "tolerance override name=value (repeatable)");
  run->add_option("--grid-size", grid_size, "override lattice n_points");
  run->add_option("--out", out_override, "report output path (no extension)");
  run->add_option("--format", format_override, "json | csv-tables | both");

  CLI::App *ls = app.add_subcommand("list-scenarios", "known scenario kinds");
  CLI::App *lt = app.add_subcommand("list-transforms", "known transforms");

  CLI11_PARSE(app, argc, argv);

  if (ls->parsed()) {
    std::printf("free            free Dirac particle (momentum-mode or "
                "lattice)\n");
    std::printf("electrostatic   beta m + alpha.p + e A0(x), lattice\n");
    std::printf("susy-fields     supercharge structure Q + Qdag + beta m, "
                "lattice (preset: dirac-oscillator)\n");
    std::printf("gravity         beta m V(x) + (1/2){alpha.p, F(x)}, "
                "lattice\n");
    return 0;
  }
  if (lt->parsed()) {
    for (const std::string &name : fwlab::known_transform_names())
      std::printf("%s\n", name.c_str());
    return 0;
  }
  return run_command(config_path, tol_overrides, grid_size, out_override,
                     format_override);
}
