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

#include "qcycle/documents.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle::io {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidDocument, what);
}

// Wraps nlohmann access errors into InvalidDocument.
template <typename F>
auto guarded(const char* context, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    invalid(std::string(context) + ": " + e.what());
  }
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) invalid("complex numbers are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

Protocol parse_protocol(const std::string& text) {
  if (text == "system-i") return Protocol::SystemI;
  if (text == "system-ii") return Protocol::SystemII;
  invalid("protocol must be 'system-i' or 'system-ii', got '" + text + "'");
}

SystemDocument parse_system(const Json& doc) {
  return guarded("system document", [&] {
    SystemDocument out;
    if (!doc.is_object()) invalid("system document must be a JSON object");
    out.levels = doc.at("levels").get<std::vector<double>>();
    if (doc.contains("hbar")) out.hbar = doc.at("hbar").get<double>();
    if (doc.contains("protocol")) out.protocol = doc.at("protocol").get<std::string>();
    if (doc.contains("rabi")) {
      const auto& r = doc.at("rabi");
      out.rabi = r.is_array() ? r.get<std::vector<double>>() : std::vector<double>{r.get<double>()};
    }
    return out;
  });
}

Json to_json(const SystemDocument& doc) {
  Json j;
  j["levels"] = doc.levels;
  j["hbar"] = doc.hbar;
  j["protocol"] = doc.protocol;
  j["rabi"] = doc.rabi;
  return j;
}

ResolvedSystem resolve_system(const SystemDocument& doc,
                              const std::optional<std::string>& protocol_override,
                              const std::optional<std::vector<double>>& rabi_override) {
  auto spectrum = validate_spectrum(doc.levels, doc.hbar);
  auto classification = classify_gaps(spectrum);
  const std::string requested = protocol_override.value_or(doc.protocol);

  Protocol protocol;
  if (requested == "auto") {
    switch (classification.kind) {
      case GapKind::SystemI: protocol = Protocol::SystemI; break;
      case GapKind::SystemII:
      case GapKind::Both: protocol = Protocol::SystemII; break;
      default:
        throw Error(ErrorKind::IncompatibleProtocol,
                    "gap structure supports neither protocol");
    }
  } else {
    protocol = parse_protocol(requested);
  }
  auto table = transition_table(spectrum, protocol);

  std::vector<double> rabi = rabi_override.value_or(doc.rabi);
  const std::size_t cycles = spectrum.dimension() - 1;
  if (rabi.size() == 1) rabi.assign(cycles, rabi.front());
  if (!rabi.empty() && rabi.size() != cycles) {
    std::ostringstream msg;
    msg << "rabi needs 1 or " << cycles << " entries, got " << rabi.size();
    invalid(msg.str());
  }
  for (double r : rabi) {
    if (!(r > 0.0) || !std::isfinite(r)) invalid("Rabi rates must be positive");
  }
  return ResolvedSystem{std::move(spectrum), std::move(classification), protocol,
                        std::move(table), std::move(rabi)};
}

TargetDocument parse_target(const Json& doc) {
  return guarded("target document", [&] {
    if (!doc.is_object()) invalid("target document must be a JSON object");
    TargetDocument out;
    for (const auto& a : doc.at("amplitudes")) out.amplitudes.push_back(parse_complex(a));
    return out;
  });
}

Json to_json(const TargetDocument& doc) {
  Json arr = Json::array();
  for (const auto& a : doc.amplitudes) arr.push_back({a.real(), a.imag()});
  return Json{{"amplitudes", arr}};
}

QuantumState normalized_target(const TargetDocument& doc, std::optional<std::string>* warning) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(doc.amplitudes.size()));
  for (std::size_t i = 0; i < doc.amplitudes.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = doc.amplitudes[i];
  }
  if (v.size() == 0 || !v.allFinite()) invalid("target amplitudes must be finite and non-empty");
  const double norm = v.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::UnnormalizedInput, "target is the zero vector");
  if (std::abs(norm - 1.0) > 1e-10 && warning) {
    std::ostringstream msg;
    msg << "target norm " << std::setprecision(17) << norm << " renormalized to 1";
    *warning = msg.str();
  }
  v /= norm;
  return QuantumState::from_amplitudes(std::move(v));
}

ScheduleDocument parse_schedule(const Json& doc) {
  return guarded("schedule document", [&] {
    if (!doc.is_object()) invalid("schedule document must be a JSON object");
    const Protocol protocol = parse_protocol(doc.at("protocol").get<std::string>());
    std::vector<CycleControl> cycles;
    for (const auto& c : doc.at("cycles")) {
      CycleControl cc;
      cc.m = c.at("m").get<std::size_t>();
      cc.rabi = c.at("rabi").get<double>();
      cc.drive_frequency = c.at("frequency").get<double>();
      cc.tau = c.at("tau").get<double>();
      cc.tau_prime = c.at("tau_prime").get<double>();
      cycles.push_back(cc);
    }
    ScheduleMetadata meta;
    if (doc.contains("metadata")) {
      const auto& m = doc.at("metadata");
      meta.solver_version = m.value("solver_version", std::string{});
      meta.target_hash = m.value("target_hash", std::string{});
      meta.global_phase = m.value("global_phase", 0.0);
    }
    return ScheduleDocument{PulseSchedule(protocol, std::move(cycles)), std::move(meta)};
  });
}

Json to_json(const ScheduleDocument& doc) {
  Json cycles = Json::array();
  for (const auto& c : doc.schedule.cycles()) {
    cycles.push_back({{"m", c.m},
                      {"rabi", c.rabi},
                      {"frequency", c.drive_frequency},
                      {"tau", c.tau},
                      {"tau_prime", c.tau_prime}});
  }
  return Json{{"protocol", std::string(to_string(doc.schedule.protocol()))},
              {"cycles", cycles},
              {"metadata",
               {{"solver_version", doc.metadata.solver_version},
                {"target_hash", doc.metadata.target_hash},
                {"global_phase", doc.metadata.global_phase}}}};
}

std::string content_hash(const Json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Json amplitudes_to_json(const Eigen::VectorXcd& amplitudes) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < amplitudes.size(); ++k) {
    arr.push_back({amplitudes(k).real(), amplitudes(k).imag()});
  }
  return arr;
}

Json to_json(const GapClassification& classification) {
  return Json{{"kind", std::string(to_string(classification.kind))},
              {"gaps", classification.gaps},
              {"cumulative_gaps", classification.cumulative_gaps}};
}

Json to_json(const TransitionTable& table) {
  Json pairs = Json::array();
  for (const auto& [a, b] : table.coupled_pairs) pairs.push_back({a, b});
  return Json{{"protocol", std::string(to_string(table.protocol))},
              {"frequencies", table.frequencies},
              {"coupled_pairs", pairs}};
}

Json to_json(const RwaReport& report) {
  Json cycles = Json::array();
  for (const auto& c : report.cycles) {
    cycles.push_back({{"m", c.m}, {"fidelity_full_vs_analytic", c.fidelity_full_vs_analytic}});
  }
  return Json{{"fidelity_analytic_vs_target", report.fidelity_analytic_vs_target},
              {"fidelity_full_vs_target", report.fidelity_full_vs_target},
              {"fidelity_full_vs_analytic", report.fidelity_full_vs_analytic},
              {"max_norm_drift", report.max_norm_drift},
              {"steps", report.steps},
              {"cycles", cycles}};
}

Json to_json(const ClosureReport& report) {
  return Json{{"dimension", report.dimension},
              {"target_dimension", report.target_dimension},
              {"is_fully_controllable", report.is_fully_controllable},
              {"iterations", report.iterations},
              {"commutators", report.commutators},
              {"rank_tolerance", report.rank_tolerance}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    invalid(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) invalid("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace qcycle::io
