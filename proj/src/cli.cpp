// Copyright 2026 The qcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcycle/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "qcycle/documents.hpp"
#include "qcycle/testkit.hpp"

namespace qcycle::cli {

namespace {

using io::Json;

// QCYCLE_VERBOSE: 0 errors only, 1 summaries and warnings (default).
int verbosity() {
  const char* v = std::getenv("QCYCLE_VERBOSE");
  if (!v || !*v) return 1;
  return std::atoi(v);
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

struct SimulateOptions {
  std::string system, schedule;
  std::string initial, target;
  bool full_ode = false;
  bool oracle = false;
  std::string field_clock = "local";
  int steps_per_period = IntegratorConfig{}.steps_per_drive_period;
};

IntegratorConfig integrator_config(const SimulateOptions& o) {
  IntegratorConfig c;
  c.steps_per_drive_period = o.steps_per_period;
  c.field_clock = field_clock_from_string(o.field_clock);
  return c;
}

int cmd_classify(const std::string& system_file, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse_system(io::read_json_file(system_file));
  const auto spectrum = validate_spectrum(doc.levels, doc.hbar);
  const auto cls = classify_gaps(spectrum);

  Json tables = Json::array();
  for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
    if (cls.supports(p)) tables.push_back(io::to_json(transition_table(spectrum, p)));
  }
  Json result = io::to_json(cls);
  result["levels"] = std::vector<double>(spectrum.levels().begin(), spectrum.levels().end());
  result["shift"] = spectrum.shift();
  result["hbar"] = spectrum.hbar();
  result["transition_tables"] = tables;
  emit(out, result);

  if (verbosity() >= 1) {
    err << to_string(cls.kind) << '\n';
  }
  return 0;
}

int cmd_synthesize(const std::string& system_file, const std::string& target_file,
                   const std::string& out_file, const std::optional<std::vector<double>>& rabi,
                   const std::optional<std::string>& protocol, std::ostream& out,
                   std::ostream& err) {
  const auto system = io::resolve_system(io::parse_system(io::read_json_file(system_file)),
                                         protocol, rabi);
  if (system.rabi.empty()) {
    throw Error(ErrorKind::InvalidDocument, "no Rabi rates: set 'rabi' or pass --rabi");
  }
  const Json target_json = io::read_json_file(target_file);
  std::optional<std::string> warning;
  const auto target = io::normalized_target(io::parse_target(target_json), &warning);
  if (warning && verbosity() >= 1) err << "warning: " << *warning << '\n';

  SynthesisConfig config;
  config.rabi = system.rabi;
  const auto result = synthesize(system.spectrum, system.protocol, target, config);

  io::ScheduleDocument doc{result.schedule, {}};
  doc.metadata.target_hash = io::content_hash(target_json);
  doc.metadata.global_phase = result.decomposition.dwell.global_phase;
  const Json schedule_json = io::to_json(doc);

  if (out_file.empty()) {
    emit(out, schedule_json);
  } else {
    io::write_json_file(out_file, schedule_json);
    emit(out, Json{{"schedule", out_file},
                   {"protocol", std::string(to_string(system.protocol))},
                   {"fidelity", result.fidelity},
                   {"global_phase", doc.metadata.global_phase},
                   {"total_time", result.schedule.total_time()}});
  }
  if (verbosity() >= 1) {
    err.precision(17);
    err << "predicted fidelity " << result.fidelity << '\n';
  }
  return 0;
}

struct Loaded {
  io::ResolvedSystem system;
  io::ScheduleDocument schedule;
};

Loaded load(const SimulateOptions& o) {
  auto schedule = io::parse_schedule(io::read_json_file(o.schedule));
  auto system = io::resolve_system(io::parse_system(io::read_json_file(o.system)),
                                   std::string(to_string(schedule.schedule.protocol())));
  check_schedule(system.spectrum, schedule.schedule);
  return Loaded{std::move(system), std::move(schedule)};
}

std::optional<QuantumState> optional_state(const std::string& file, std::ostream& err) {
  if (file.empty()) return std::nullopt;
  std::optional<std::string> warning;
  auto s = io::normalized_target(io::parse_target(io::read_json_file(file)), &warning);
  if (warning && verbosity() >= 1) err << "warning: " << *warning << '\n';
  return s;
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const auto [system, doc] = load(o);
  const auto& spectrum = system.spectrum;
  const auto& schedule = doc.schedule;
  const std::size_t n = spectrum.dimension();

  const auto initial = optional_state(o.initial, err).value_or(QuantumState::ground(n));
  const bool from_ground =
      max_abs_difference(initial.amplitudes(), QuantumState::ground(n).amplitudes()) == 0.0;
  const auto run = run_schedule(spectrum, schedule, initial);

  Json result;
  result["protocol"] = std::string(to_string(schedule.protocol()));
  result["final"] = io::amplitudes_to_json(run.final_state.amplitudes());
  Json trace = Json::array();
  for (const auto& s : run.trace.snapshots) trace.push_back(io::amplitudes_to_json(s.amplitudes()));
  result["trace"] = trace;
  if (from_ground) {
    result["closed_form_max_deviation"] = max_abs_difference(
        closed_form_amplitudes(spectrum, schedule).amplitudes(), run.final_state.amplitudes());
  }
  if (o.oracle) {
    if (!from_ground) {
      throw Error(ErrorKind::InvalidDocument, "--oracle needs the ground-state initial condition");
    }
    result["oracle_max_deviation"] = max_abs_difference(
        testkit::dense_schedule_oracle(spectrum, schedule).amplitudes(),
        run.final_state.amplitudes());
  }
  const auto target = optional_state(o.target, err);
  if (target) result["fidelity_vs_target"] = fidelity(run.final_state, *target);

  if (o.full_ode) {
    if (!from_ground) {
      throw Error(ErrorKind::InvalidDocument, "--full-ode needs the ground-state initial condition");
    }
    const auto report =
        rwa_report(spectrum, schedule, target.value_or(run.final_state), integrator_config(o));
    result["report"] = io::to_json(report);
    result["field_clock"] = o.field_clock;
  }
  emit(out, result);
  return 0;
}

int cmd_verify(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const auto [system, doc] = load(o);
  const auto& spectrum = system.spectrum;
  const auto& schedule = doc.schedule;
  const auto run = run_schedule(spectrum, schedule, QuantumState::ground(spectrum.dimension()));

  Json checks = Json::array();
  bool ok = true;
  auto check = [&](const std::string& name, double value, double bound, bool below) {
    const bool pass = below ? value <= bound : value >= bound;
    ok = ok && pass;
    checks.push_back({{"name", name}, {"value", value}, {"bound", bound}, {"pass", pass}});
  };

  check("closed_form_max_deviation",
        max_abs_difference(closed_form_amplitudes(spectrum, schedule).amplitudes(),
                           run.final_state.amplitudes()),
        1e-12, true);
  if (o.oracle) {
    check("oracle_max_deviation",
          max_abs_difference(testkit::dense_schedule_oracle(spectrum, schedule).amplitudes(),
                             run.final_state.amplitudes()),
          1e-11, true);
  }
  const auto target = optional_state(o.target, err);
  if (target) check("fidelity_vs_target", fidelity(run.final_state, *target), 1.0 - 1e-9, false);
  if (o.full_ode) {
    const auto config = integrator_config(o);
    const auto report =
        rwa_report(spectrum, schedule, target.value_or(run.final_state), config);
    check("max_norm_drift", report.max_norm_drift, config.norm_drift_tolerance, true);
    checks.push_back({{"name", "fidelity_full_vs_analytic"},
                      {"value", report.fidelity_full_vs_analytic}});
  }

  emit(out, Json{{"checks", checks}, {"pass", ok}});
  if (verbosity() >= 1) err << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? 0 : 4;
}

int cmd_controllability(const std::string& system_file, const std::optional<std::string>& protocol,
                        const std::optional<std::vector<std::size_t>>& restrict_to,
                        std::ostream& out, std::ostream& err) {
  const auto system =
      io::resolve_system(io::parse_system(io::read_json_file(system_file)), protocol);
  const auto generators = build_generators(system.spectrum, system.protocol, restrict_to);
  const auto report = lie_closure_dimension(generators);

  Json result = io::to_json(report);
  result["protocol"] = std::string(to_string(system.protocol));
  result["generators"] = generators.labels;
  emit(out, result);
  if (verbosity() >= 1) {
    err << "closure dimension " << report.dimension << " of " << report.target_dimension
        << (report.is_fully_controllable ? " (controllable)" : " (not controllable)") << '\n';
  }
  return 0;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfeasibleModuli:
      return 3;
    case ErrorKind::VerificationFailed:
    case ErrorKind::NormDriftExceeded:
    case ErrorKind::IterationCapExceeded:
      return 4;
    default:
      return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic pulse-schedule synthesis for N-level quantum systems"};
  app.require_subcommand(1);

  std::string system_file;
  std::optional<std::string> protocol;
  std::optional<std::vector<double>> rabi;
  std::optional<std::vector<std::size_t>> restrict_to;
  std::string target_file, out_file;
  SimulateOptions sim;

  auto* classify = app.add_subcommand("classify", "Classify the gap structure of a system");
  classify->add_option("system", system_file, "system.json")->required();

  auto* synth = app.add_subcommand("synthesize", "Synthesize a schedule reaching a target state");
  synth->add_option("system", system_file, "system.json")->required();
  synth->add_option("target", target_file, "target.json")->required();
  synth->add_option("-o,--output", out_file, "schedule.json to write (stdout if omitted)");
  synth->add_option("--rabi", rabi, "Rabi rates: one value or N-1 values")->delimiter(',');
  synth->add_option("--protocol", protocol, "auto | system-i | system-ii");

  auto add_sim_options = [&](CLI::App* cmd) {
    cmd->add_option("system", sim.system, "system.json")->required();
    cmd->add_option("schedule", sim.schedule, "schedule.json")->required();
    cmd->add_option("--target", sim.target, "target.json to compare against");
    cmd->add_flag("--full-ode", sim.full_ode, "also integrate the lab-frame equation exactly");
    cmd->add_flag("--oracle", sim.oracle, "cross-check against the dense-matrix oracle");
    cmd->add_option("--field-clock", sim.field_clock, "local | global")
        ->check(CLI::IsMember({"local", "global"}));
    cmd->add_option("--steps-per-period", sim.steps_per_period,
                    "integrator steps per fastest period");
  };
  auto* simulate = app.add_subcommand("simulate", "Propagate a schedule");
  add_sim_options(simulate);
  simulate->add_option("--initial", sim.initial, "initial state (target.json format)");

  auto* verify = app.add_subcommand("verify", "Check a schedule against closed forms and oracles");
  add_sim_options(verify);

  auto* ctrl = app.add_subcommand("controllability", "Lie-algebra closure of the generators");
  ctrl->add_option("system", system_file, "system.json")->required();
  ctrl->add_option("--protocol", protocol, "auto | system-i | system-ii");
  ctrl->add_option("--restrict", restrict_to, "control indices to keep, e.g. 1,2")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(system_file, out, err);
    if (*synth) return cmd_synthesize(system_file, target_file, out_file, rabi, protocol, out, err);
    if (*simulate) return cmd_simulate(sim, out, err);
    if (*verify) return cmd_verify(sim, out, err);
    if (*ctrl) return cmd_controllability(system_file, protocol, restrict_to, out, err);
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()
        << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace qcycle::cli
