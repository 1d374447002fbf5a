#include "fwlab/report.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fwlab/errors.hpp"
#include "fwlab/kernels.hpp"

namespace fwlab {

using nlohmann::json;

MethodRequest parse_transform_name(const std::string &raw) {
  MethodRequest r;
  r.name = raw;
  if (raw == "u0-free") {
    r.method = Method::u0_free;
  } else if (raw == "fw-commuting") {
    r.method = Method::fw_commuting;
  } else if (raw == "eriksen") {
    r.method = Method::eriksen;
  } else if (raw == "stepwise" || raw == "stepwise-3") {
    r.method = Method::stepwise;
    r.stepwise_depth = 3;
    r.name = "stepwise-3";
  } else if (raw == "stepwise-1" || raw == "stepwise-2") {
    r.method = Method::stepwise;
    r.stepwise_depth = raw.back() - '0';
  } else if (raw == "perturbative-electrostatic") {
    r.method = Method::perturbative_electrostatic;
  } else if (raw == "perturbative-gravity") {
    r.method = Method::perturbative_gravity;
  } else if (raw == "su2-susy" || raw == "su2-susy(plus)" ||
             raw == "su2-susy-plus") {
    r.method = Method::su2_susy;
    r.su2_sign = Su2Sign::plus;
    r.name = "su2-susy(plus)";
  } else if (raw == "su2-susy(minus)" || raw == "su2-susy-minus") {
    r.method = Method::su2_susy;
    r.su2_sign = Su2Sign::minus;
    r.name = "su2-susy(minus)";
  } else if (raw == "ek") {
    r.method = Method::ek;
  } else if (raw == "ek-to-fw") {
    r.method = Method::ek_to_fw;
  } else if (raw == "melosh") {
    r.method = Method::melosh;
  } else if (raw == "melosh-to-fw") {
    r.method = Method::melosh_to_fw;
  } else if (raw == "heidenreich") {
    r.method = Method::heidenreich;
  } else {
    throw ConfigError("unknown transform name '" + raw + "'");
  }
  return r;
}

std::vector<std::string> known_transform_names() {
  return {"u0-free",       "fw-commuting",
          "eriksen",       "stepwise-1",
          "stepwise-2",    "stepwise-3",
          "perturbative-electrostatic", "perturbative-gravity",
          "su2-susy(plus)", "su2-susy(minus)",
          "ek",            "ek-to-fw",
          "melosh",        "melosh-to-fw",
          "heidenreich"};
}

ExpectedVerdict expected_verdict(const MethodRequest &req) {
  switch (req.method) {
    case Method::u0_free:
    case Method::fw_commuting:
    case Method::eriksen:
    case Method::perturbative_electrostatic:
    case Method::perturbative_gravity:
    case Method::ek_to_fw:
    case Method::melosh_to_fw:
      return ExpectedVerdict::pass;
    case Method::su2_susy:
      return req.su2_sign == Su2Sign::plus ? ExpectedVerdict::pass
                                           : ExpectedVerdict::fail;
    case Method::ek:
    case Method::melosh:
    case Method::heidenreich:
      return ExpectedVerdict::fail;
    case Method::stepwise:
      return ExpectedVerdict::unclassified;
  }
  return ExpectedVerdict::unclassified;
}

std::string to_string(ExpectedVerdict v) {
  switch (v) {
    case ExpectedVerdict::pass: return "pass";
    case ExpectedVerdict::fail: return "fail";
    case ExpectedVerdict::unclassified: return "unclassified";
  }
  return "?";
}

bool method_applicable(const MethodRequest &req, const ScenarioSpec &spec,
                       std::string *why) {
  auto fail = [&](const std::string &msg) {
    if (why) *why = msg;
    return false;
  };
  const bool lattice = spec.backend == BackendKind::lattice;
  switch (req.method) {
    case Method::u0_free:
      if (spec.kind != ScenarioKind::free)
        return fail("u0-free applies to the free scenario only");
      return true;
    case Method::fw_commuting:
    case Method::eriksen:
    case Method::stepwise:
      return true;
    case Method::perturbative_electrostatic:
      if (spec.kind != ScenarioKind::electrostatic || !lattice)
        return fail("perturbative-electrostatic needs the electrostatic "
                    "lattice scenario");
      return true;
    case Method::perturbative_gravity:
      if (spec.kind != ScenarioKind::gravity || !lattice)
        return fail("perturbative-gravity needs the gravity lattice scenario");
      return true;
    case Method::su2_susy:
      if (spec.kind != ScenarioKind::susy_fields)
        return fail("su2-susy needs the susy-fields scenario");
      return true;
    case Method::ek:
      if (spec.kind != ScenarioKind::free && spec.kind != ScenarioKind::gravity)
        return fail("ek is defined for the free and gravity scenarios, where "
                    "J anticommutes with the Hamiltonian");
      return true;
    case Method::ek_to_fw:
    case Method::melosh:
    case Method::melosh_to_fw:
      if (spec.kind != ScenarioKind::free ||
          spec.backend != BackendKind::momentum_mode)
        return fail(to_string(req.method) +
                    " needs the free momentum-mode scenario");
      return true;
    case Method::heidenreich:
      if (spec.kind != ScenarioKind::gravity || !lattice)
        return fail("heidenreich needs the gravity lattice scenario");
      return true;
  }
  return true;
}

namespace {

FieldProfile profile_from_json(const json &j) {
  FieldProfile p;
  const std::string kind = j.value("kind", "constant");
  if (kind == "constant") {
    p.kind = ProfileKind::constant;
  } else if (kind == "cosine") {
    p.kind = ProfileKind::cosine;
  } else if (kind == "gaussian-periodic") {
    p.kind = ProfileKind::gaussian_periodic;
  } else {
    throw ConfigError("unknown profile kind '" + kind + "'");
  }
  p.amplitude = j.value("amplitude", 0.0);
  if (j.contains("wavenumber")) p.wavenumber = j["wavenumber"].get<double>();
  if (j.contains("width")) p.wavenumber = j["width"].get<double>();
  p.offset = j.value("offset", 0.0);
  return p;
}

json profile_to_json(const FieldProfile &p) {
  json j;
  switch (p.kind) {
    case ProfileKind::constant: j["kind"] = "constant"; break;
    case ProfileKind::cosine: j["kind"] = "cosine"; break;
    case ProfileKind::gaussian_periodic:
      j["kind"] = "gaussian-periodic";
      break;
  }
  j["amplitude"] = p.amplitude;
  j[p.kind == ProfileKind::gaussian_periodic ? "width" : "wavenumber"] =
      p.wavenumber;
  j["offset"] = p.offset;
  return j;
}

ScenarioSpec scenario_from_json(const json &j) {
  ScenarioSpec s;
  if (!j.contains("kind")) throw ConfigError("scenario needs a 'kind'");
  s.kind = scenario_from_string(j["kind"].get<std::string>());
  s.backend = backend_from_string(j.value("backend", "momentum-mode"));
  s.mass = j.value("mass", 1.0);
  s.coupling = j.value("coupling", 0.1);
  if (j.contains("momentum")) {
    auto v = j["momentum"].get<std::vector<double>>();
    if (v.size() != 3)
      throw ConfigError("momentum must have three components");
    s.momentum = {v[0], v[1], v[2]};
  }
  if (j.contains("lattice")) {
    const json &l = j["lattice"];
    s.lattice = make_lattice(l.value("n_points", 64),
                             l.value("length", 16.0));
  }
  if (s.backend == BackendKind::lattice && !s.lattice)
    throw ConfigError("lattice backend needs a 'lattice' block");
  if (j.contains("profiles")) {
    for (auto &[name, pj] : j["profiles"].items())
      s.profiles[name] = profile_from_json(pj);
  }
  s.preset = j.value("preset", std::string{});
  s.omega = j.value("omega", 0.1);
  return s;
}

}  // namespace

json scenario_to_json(const ScenarioSpec &spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  j["backend"] = to_string(spec.backend);
  j["mass"] = spec.mass;
  j["coupling"] = spec.coupling;
  j["momentum"] = {spec.momentum[0], spec.momentum[1], spec.momentum[2]};
  if (spec.lattice)
    j["lattice"] = {{"n_points", spec.lattice->n_points},
                    {"length", spec.lattice->length}};
  if (!spec.profiles.empty()) {
    json pj;
    for (const auto &[name, p] : spec.profiles) pj[name] = profile_to_json(p);
    j["profiles"] = pj;
  }
  if (!spec.preset.empty()) {
    j["preset"] = spec.preset;
    j["omega"] = spec.omega;
  }
  return j;
}

RunConfig parse_config(const json &j) {
  RunConfig c;
  c.raw = j;
  if (!j.contains("scenario")) throw ConfigError("config needs a 'scenario'");
  c.scenario = scenario_from_json(j["scenario"]);

  const int dim = c.scenario.backend == BackendKind::lattice
                      ? 4 * c.scenario.lattice->n_points
                      : 4;
  c.tolerances = Tolerances::for_dim(dim);

  if (!j.contains("transforms") || !j["transforms"].is_array() ||
      j["transforms"].empty())
    throw ConfigError("config needs a non-empty 'transforms' list");
  for (const auto &t : j["transforms"]) {
    MethodRequest req = parse_transform_name(t.get<std::string>());
    std::string why;
    if (!method_applicable(req, c.scenario, &why))
      throw ConfigError("transform '" + req.name + "' is not applicable: " +
                        why);
    c.transforms.push_back(req);
  }

  if (j.contains("tolerances")) {
    for (auto &[key, val] : j["tolerances"].items()) {
      const double x = val.get<double>();
      if (key == "gap_min") c.tolerances.gap_min = x;
      else if (key == "herm") c.tolerances.herm = x;
      else if (key == "unitary") c.tolerances.unitary = x;
      else if (key == "blockdiag") c.tolerances.blockdiag = x;
      else if (key == "reduction") c.tolerances.reduction = x;
      else if (key == "degen") c.tolerances.degen = x;
      else if (key == "commute_scale") c.tolerances.commute_scale = x;
      else if (key.rfind("reduction.", 0) == 0)
        c.method_reduction_tol[key.substr(10)] = x;
      else
        throw ConfigError("unknown tolerance key '" + key + "'");
    }
  }

  c.output_path = j.value("output", c.output_path);
  c.report_format = j.value("format", c.report_format);
  if (c.report_format != "json" && c.report_format != "csv-tables" &&
      c.report_format != "both")
    throw ConfigError("format must be json, csv-tables or both");
  return c;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }
  return parse_config(j);
}

namespace {

TransformResult run_one(const MethodRequest &req, const RunConfig &config,
                        const ScenarioBuild &build,
                        const TransformResult &oracle) {
  const ScenarioSpec &spec = config.scenario;
  const Tolerances &tol = config.tolerances;
  switch (req.method) {
    case Method::u0_free:
      return u0_free(build.split);
    case Method::fw_commuting:
      return fw_commuting(build.split, tol);
    case Method::eriksen:
      return oracle;
    case Method::stepwise:
      return stepwise_fw(build.split, req.stepwise_depth, tol).result;
    case Method::perturbative_electrostatic:
      return perturbative_electrostatic(spec);
    case Method::perturbative_gravity:
      return perturbative_gravity(spec);
    case Method::su2_susy:
      return su2_susy(*build.triple, req.su2_sign, tol);
    case Method::ek:
      return ek(build.split, tol.gap_min);
    case Method::ek_to_fw: {
      TransformResult base = ek(build.split, tol.gap_min);
      TransformResult r;
      r.method = Method::ek_to_fw;
      r.u = ek_to_fw_correction(spec.mass, spec.momentum) * base.u;
      r.u.set_role(Role::unitary);
      Matrix h = r.u * build.split.h_full * r.u.adjoint();
      Matrix ha = h.adjoint();
      h += ha;
      h *= 0.5;
      r.h_transformed = h;
      r.metadata.notes["composition"] = "ek followed by the ek-to-fw rotation";
      return r;
    }
    case Method::melosh:
      return melosh(spec.mass, spec.momentum);
    case Method::melosh_to_fw: {
      TransformResult base = melosh(spec.mass, spec.momentum);
      TransformResult r;
      r.method = Method::melosh_to_fw;
      r.u = melosh_to_fw_correction(spec.mass, spec.momentum,
                                    MeloshDirection::to_fw, tol.gap_min) *
            base.u;
      r.u.set_role(Role::unitary);
      Matrix h = r.u * build.split.h_full * r.u.adjoint();
      Matrix ha = h.adjoint();
      h += ha;
      h *= 0.5;
      r.h_transformed = h;
      r.metadata.notes["composition"] =
          "melosh followed by the melosh-to-fw rotation";
      return r;
    }
    case Method::heidenreich:
      return heidenreich(build.split, tol.gap_min);
  }
  throw ConfigError("unhandled method");
}

}  // namespace

TransformReport run_scenario(const RunConfig &config) {
  TransformReport report;
  report.tool_version = kToolVersion;
  report.kernel_backend = kernels::backend_name();
  report.eigensolver = "lapack-zheevd";
  report.config_echo = config.raw.is_null()
                           ? json{{"scenario", scenario_to_json(config.scenario)}}
                           : config.raw;
  report.tolerances = config.tolerances;

  ScenarioBuild build = build_scenario(config.scenario);
  report.dim = build.split.dim();

  EnergySplitEigensystem es = split_eigensystem(
      build.split.h_full, config.tolerances.gap_min, config.tolerances.degen);
  double gap = std::abs(es.values.front());
  for (double w : es.values) gap = std::min(gap, std::abs(w));
  report.spectral_gap = gap;

  TransformResult oracle =
      eriksen(build.split.h_full, config.tolerances.gap_min);

  for (const MethodRequest &req : config.transforms) {
    TransformRecord rec;
    rec.method = req.name;
    rec.expected = to_string(expected_verdict(req));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      TransformResult tr = run_one(req, config, build, oracle);
      rec.metadata = tr.metadata;
      rec.unitarity = check_unitary(tr.u);
      rec.blockdiag = check_block_diagonal(tr.h_transformed);
      rec.spectrum_residual =
          check_spectrum_preserved(build.split.h_full, tr.h_transformed);

      double tol_red = config.tolerances.reduction;
      if (auto it = config.method_reduction_tol.find(req.name);
          it != config.method_reduction_tol.end())
        tol_red = it->second;
      else if (auto it2 =
                   config.method_reduction_tol.find(to_string(req.method));
               it2 != config.method_reduction_tol.end())
        tol_red = it2->second;

      rec.reduction = check_reduction(tr.u, build.split.h_full, tol_red,
                                      config.tolerances.gap_min,
                                      config.tolerances.degen, &oracle.u);
      rec.reduction_evaluated = true;

      const ExpectedVerdict exp = expected_verdict(req);
      rec.conformant = exp == ExpectedVerdict::unclassified ||
                       (exp == ExpectedVerdict::pass) == rec.reduction.passed;
    } catch (const PreconditionError &e) {
      rec.status = "error";
      rec.error = e.what();
      rec.conformant = true;  // expected-error records do not count against
    } catch (const SpectralGapError &e) {
      rec.status = "error";
      rec.error = e.what();
      rec.conformant = true;
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.records.push_back(std::move(rec));
  }
  return report;
}

namespace {

json tolerances_to_json(const Tolerances &t) {
  return {{"gap_min", t.gap_min},   {"herm", t.herm},
          {"unitary", t.unitary},   {"blockdiag", t.blockdiag},
          {"reduction", t.reduction}, {"degen", t.degen},
          {"commute_scale", t.commute_scale}};
}

Tolerances tolerances_from_json(const json &j) {
  Tolerances t;
  t.gap_min = j["gap_min"];
  t.herm = j["herm"];
  t.unitary = j["unitary"];
  t.blockdiag = j["blockdiag"];
  t.reduction = j["reduction"];
  t.degen = j["degen"];
  t.commute_scale = j["commute_scale"];
  return t;
}

json record_to_json(const TransformRecord &r) {
  json j;
  j["method"] = r.method;
  j["status"] = r.status;
  if (!r.error.empty()) j["error"] = r.error;
  j["expected"] = r.expected;
  j["conformant"] = r.conformant;
  j["wall_time_ms"] = r.wall_time_ms;
  if (r.status == "ok") {
    j["unitarity"] = {{"spectral", r.unitarity.spectral},
                      {"frobenius", r.unitarity.frobenius}};
    j["block_diagonal"] = {{"relative_commutator",
                            r.blockdiag.relative_commutator},
                           {"off_block_norm", r.blockdiag.off_block_norm}};
    j["spectrum_residual"] = r.spectrum_residual;
  }
  if (r.reduction_evaluated) {
    json red;
    red["passed"] = r.reduction.passed;
    red["max_lower_residual"] = r.reduction.max_lower_residual;
    red["max_upper_residual"] = r.reduction.max_upper_residual;
    red["max_oracle_mismatch"] = r.reduction.max_oracle_mismatch;
    red["threshold"] = r.reduction.threshold;
    json states = json::array();
    for (const auto &s : r.reduction.states)
      states.push_back({{"index", s.index},
                        {"eigenvalue", s.eigenvalue},
                        {"sign", s.sign},
                        {"nullity_residual", s.nullity_residual},
                        {"group", s.group}});
    red["states"] = states;
    red["group_mismatch"] = r.reduction.group_mismatch;
    j["reduction"] = red;
  }
  if (!r.metadata.values.empty()) j["metadata_values"] = r.metadata.values;
  if (!r.metadata.notes.empty()) j["metadata_notes"] = r.metadata.notes;
  return j;
}

TransformRecord record_from_json(const json &j) {
  TransformRecord r;
  r.method = j["method"];
  r.status = j["status"];
  r.error = j.value("error", "");
  r.expected = j["expected"];
  r.conformant = j["conformant"];
  r.wall_time_ms = j["wall_time_ms"];
  if (j.contains("unitarity")) {
    r.unitarity.spectral = j["unitarity"]["spectral"];
    r.unitarity.frobenius = j["unitarity"]["frobenius"];
    r.blockdiag.relative_commutator =
        j["block_diagonal"]["relative_commutator"];
    r.blockdiag.off_block_norm = j["block_diagonal"]["off_block_norm"];
    r.spectrum_residual = j["spectrum_residual"];
  }
  if (j.contains("reduction")) {
    r.reduction_evaluated = true;
    const json &red = j["reduction"];
    r.reduction.passed = red["passed"];
    r.reduction.max_lower_residual = red["max_lower_residual"];
    r.reduction.max_upper_residual = red["max_upper_residual"];
    r.reduction.max_oracle_mismatch = red["max_oracle_mismatch"];
    r.reduction.threshold = red["threshold"];
    for (const auto &sj : red["states"]) {
      ReductionStateDetail s;
      s.index = sj["index"];
      s.eigenvalue = sj["eigenvalue"];
      s.sign = sj["sign"];
      s.nullity_residual = sj["nullity_residual"];
      s.group = sj["group"];
      r.reduction.states.push_back(s);
    }
    r.reduction.group_mismatch =
        red["group_mismatch"].get<std::vector<double>>();
  }
  if (j.contains("metadata_values"))
    r.metadata.values =
        j["metadata_values"].get<std::map<std::string, double>>();
  if (j.contains("metadata_notes"))
    r.metadata.notes =
        j["metadata_notes"].get<std::map<std::string, std::string>>();
  return r;
}

}  // namespace

json report_to_json(const TransformReport &report) {
  json j;
  j["tool"] = {{"name", "fw-lab"},
               {"version", report.tool_version},
               {"kernel_backend", report.kernel_backend},
               {"eigensolver", report.eigensolver}};
  j["config"] = report.config_echo;
  j["tolerances"] = tolerances_to_json(report.tolerances);
  j["dim"] = report.dim;
  j["spectral_gap"] = report.spectral_gap;
  json recs = json::array();
  for (const auto &r : report.records) recs.push_back(record_to_json(r));
  j["transforms"] = recs;
  return j;
}

TransformReport report_from_json(const json &j) {
  TransformReport r;
  r.tool_version = j["tool"]["version"];
  r.kernel_backend = j["tool"]["kernel_backend"];
  r.eigensolver = j["tool"]["eigensolver"];
  r.config_echo = j["config"];
  r.tolerances = tolerances_from_json(j["tolerances"]);
  r.dim = j["dim"];
  r.spectral_gap = j["spectral_gap"];
  for (const auto &rj : j["transforms"]) r.records.push_back(record_from_json(rj));
  return r;
}

namespace {

std::string sanitize(const std::string &name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '-';
  return out;
}

void write_file(const std::filesystem::path &p, const std::string &body) {
  std::ofstream out(p);
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
  out << body;
  if (!out) throw ConfigError("write failed for '" + p.string() + "'");
}

}  // namespace

void emit_report(const TransformReport &report, const std::string &path,
                 const std::string &format) {
  const bool want_json = format == "json" || format == "both";
  const bool want_csv = format == "csv-tables" || format == "both";
  if (!want_json && !want_csv)
    throw ConfigError("format must be json, csv-tables or both");

  std::filesystem::path base(path);
  if (base.has_parent_path())
    std::filesystem::create_directories(base.parent_path());

  if (want_json)
    write_file(base.string() + ".json", report_to_json(report).dump(2) + "\n");

  if (want_csv) {
    std::filesystem::path dir(base.string() + "-tables");
    std::filesystem::create_directories(dir);

    std::string summary =
        "method,status,unitarity_spectral,unitarity_frobenius,"
        "blockdiag_relative,blockdiag_offblock,spectrum_residual,"
        "reduction_passed,reduction_max_lower,reduction_max_upper,"
        "reduction_max_oracle,reduction_threshold,expected,conformant,"
        "wall_time_ms,error\n";
    for (const auto &r : report.records) {
      char line[640];
      std::snprintf(line, sizeof line,
                    "%s,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g,"
                    "%.17g,%.17g,%s,%d,%.6g,%s\n",
                    r.method.c_str(), r.status.c_str(), r.unitarity.spectral,
                    r.unitarity.frobenius, r.blockdiag.relative_commutator,
                    r.blockdiag.off_block_norm, r.spectrum_residual,
                    r.reduction.passed ? 1 : 0,
                    r.reduction.max_lower_residual,
                    r.reduction.max_upper_residual,
                    r.reduction.max_oracle_mismatch, r.reduction.threshold,
                    r.expected.c_str(), r.conformant ? 1 : 0, r.wall_time_ms,
                    r.error.c_str());
      summary += line;
    }
    write_file(dir / "summary.csv", summary);

    for (const auto &r : report.records) {
      if (!r.reduction_evaluated) continue;
      std::string body =
          "index,eigenvalue,sign,nullity_residual,group,group_mismatch\n";
      for (const auto &s : r.reduction.states) {
        char line[256];
        std::snprintf(line, sizeof line, "%d,%.17g,%d,%.17g,%d,%.17g\n",
                      s.index, s.eigenvalue, s.sign, s.nullity_residual,
                      s.group, r.reduction.group_mismatch[s.group]);
        body += line;
      }
      write_file(dir / (sanitize(r.method) + ".csv"), body);
    }
  }
}

int conformance_exit_code(const TransformReport &report) {
  for (const auto &r : report.records)
    if (r.status != "ok") return 2;
  for (const auto &r : report.records)
    if (!r.conformant) return 3;
  return 0;
}

}  // namespace fwlab
