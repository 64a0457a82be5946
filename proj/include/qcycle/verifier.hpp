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

#pragma once

#include <limits>
#include <string_view>
#include <vector>

#include "qcycle/propagator.hpp"

namespace qcycle {

/// Where the cosine drive of cycle m takes its time origin.
///   Local:  cos(nu_m (t - t_{m-1})), matching the per-cycle RWA frame.
///   Global: cos(nu_m t) with the lab clock running across cycles.
enum class FieldClock { Local, Global };

std::string_view to_string(FieldClock clock);
FieldClock field_clock_from_string(std::string_view text);

struct IntegratorConfig {
  int steps_per_drive_period = 200;  // >= 20
  double max_step = std::numeric_limits<double>::infinity();
  double norm_drift_tolerance = 1e-8;
  FieldClock field_clock = FieldClock::Local;
};

struct FullIntegration {
  QuantumState final_state;
  std::vector<QuantumState> snapshots;  // after each cycle
  double norm_drift;                    // max | ||psi|| - 1 | over the run
  long long steps;                      // RK4 steps taken
};

/// Integrates i hbar d psi/dt = [H_0 + Omega_m cos(nu_m t) X_m] psi without the
/// rotating-wave approximation. Pulse windows use fixed-step classical RK4 in
/// the frame of H_0 (an exact change of variables); dwell windows are exact
/// diagonal phases.
/// Throws Error{StepTooLarge | NormDriftExceeded | ScheduleMismatch}.
FullIntegration integrate_full(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                               const QuantumState& initial, const IntegratorConfig& config = {});

struct CycleReport {
  std::size_t m;
  double fidelity_full_vs_analytic;
};

struct RwaReport {
  double fidelity_analytic_vs_target;
  double fidelity_full_vs_target;
  double fidelity_full_vs_analytic;
  double max_norm_drift;
  long long steps;
  std::vector<CycleReport> cycles;
};

/// Runs the analytic and exact propagators from |1> and compares both
/// against the target and each other.
RwaReport rwa_report(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                     const QuantumState& target, const IntegratorConfig& config = {});

}  // namespace qcycle
