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

// JSON interchange: system.json, target.json, schedule.json and the report
// documents. Complex numbers are [re, im] pairs; level and cycle indices are
// 1-based.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcycle/controllability.hpp"
#include "qcycle/propagator.hpp"
#include "qcycle/spectrum.hpp"
#include "qcycle/synthesis.hpp"
#include "qcycle/verifier.hpp"

namespace qcycle::io {

using Json = nlohmann::json;

inline constexpr const char* kSolverVersion = "qcycle-synthesis/1";

struct SystemDocument {
  std::vector<double> levels;
  double hbar = 1.0;
  std::string protocol = "auto";  // auto | system-i | system-ii
  std::vector<double> rabi;       // one value (broadcast) or N-1 values
};

SystemDocument parse_system(const Json& doc);
Json to_json(const SystemDocument& doc);

/// A system document checked against the spectrum and protocol rules.
struct ResolvedSystem {
  EnergySpectrum spectrum;
  GapClassification classification;
  Protocol protocol;
  TransitionTable table;
  std::vector<double> rabi;  // expanded to N-1 entries, may be empty
};

/// "auto" picks SystemI or SystemII from the gap classification; a spectrum
/// classified as Both resolves to SystemII. Overrides replace the document's
/// protocol and Rabi rates.
ResolvedSystem resolve_system(const SystemDocument& doc,
                              const std::optional<std::string>& protocol_override = {},
                              const std::optional<std::vector<double>>& rabi_override = {});

Protocol parse_protocol(const std::string& text);

struct TargetDocument {
  std::vector<Complex> amplitudes;
};

TargetDocument parse_target(const Json& doc);
Json to_json(const TargetDocument& doc);

/// Target normalization policy: deviations of ||a|| from 1 up to 1e-10 pass
/// silently; larger ones are renormalized and reported through `warning`.
/// The zero vector is rejected.
QuantumState normalized_target(const TargetDocument& doc, std::optional<std::string>* warning);

struct ScheduleMetadata {
  std::string solver_version = kSolverVersion;
  std::string target_hash;
  double global_phase = 0.0;
};

struct ScheduleDocument {
  PulseSchedule schedule;
  ScheduleMetadata metadata;
};

ScheduleDocument parse_schedule(const Json& doc);
Json to_json(const ScheduleDocument& doc);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string content_hash(const Json& doc);

Json amplitudes_to_json(const Eigen::VectorXcd& amplitudes);
Json to_json(const GapClassification& classification);
Json to_json(const TransitionTable& table);
Json to_json(const RwaReport& report);
Json to_json(const ClosureReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace qcycle::io
