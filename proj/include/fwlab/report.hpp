#pragma once

// Configuration ingestion, scenario orchestration and report emission:
// the library side of the fw-lab command line tool.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fwlab/hamiltonians.hpp"
#include "fwlab/tolerances.hpp"
#include "fwlab/transforms.hpp"
#include "fwlab/verify.hpp"

namespace fwlab {

inline constexpr const char *kToolVersion = "1.0.0";

// One entry of the requested transform list, parsed from its config name
// ("stepwise-2", "su2-susy(minus)", ...).
struct MethodRequest {
  Method method = Method::eriksen;
  Su2Sign su2_sign = Su2Sign::plus;
  int stepwise_depth = 3;
  std::string name;  // canonical display name
};

MethodRequest parse_transform_name(const std::string &raw);
std::vector<std::string> known_transform_names();

// Expected reduction verdict from the classification of the source
// material: true FW transformations pass, the mere block-diagonalizations
// fail, step-by-step methods are approximate and stay unclassified.
enum class ExpectedVerdict { pass, fail, unclassified };
ExpectedVerdict expected_verdict(const MethodRequest &req);
std::string to_string(ExpectedVerdict v);

bool method_applicable(const MethodRequest &req, const ScenarioSpec &spec,
                       std::string *why = nullptr);

struct RunConfig {
  ScenarioSpec scenario;
  std::vector<MethodRequest> transforms;
  Tolerances tolerances;  // effective values, after overrides
  std::map<std::string, double> method_reduction_tol;  // per-method override
  std::string output_path = "fwlab-report";
  std::string report_format = "json";  // json | csv-tables | both
  nlohmann::json raw;                  // config echo
};

RunConfig parse_config(const nlohmann::json &j);
RunConfig load_config(const std::string &path);
nlohmann::json scenario_to_json(const ScenarioSpec &spec);

struct TransformRecord {
  std::string method;
  std::string status = "ok";  // ok | error
  std::string error;
  UnitarityResidual unitarity;
  BlockDiagResidual blockdiag;
  double spectrum_residual = 0.0;
  bool reduction_evaluated = false;
  ReductionVerdict reduction;
  std::string expected;  // pass | fail | unclassified
  bool conformant = true;
  Metadata metadata;
  double wall_time_ms = 0.0;
};

struct TransformReport {
  std::string tool_version;
  std::string kernel_backend;
  std::string eigensolver;
  nlohmann::json config_echo;
  Tolerances tolerances;
  int dim = 0;
  double spectral_gap = 0.0;
  std::vector<TransformRecord> records;
};

TransformReport run_scenario(const RunConfig &config);

nlohmann::json report_to_json(const TransformReport &report);
TransformReport report_from_json(const nlohmann::json &j);

// Writes <path>.json and/or <path>/ CSV tables depending on format.
void emit_report(const TransformReport &report, const std::string &path,
                 const std::string &format);

// 0 conformant, 2 numerical precondition failure, 3 conformance mismatch.
int conformance_exit_code(const TransformReport &report);

}  // namespace fwlab
