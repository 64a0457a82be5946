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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qcycle/spectrum.hpp"
#include "qcycle/state.hpp"

namespace qcycle {

/// One pulse window followed by one dwell window.
struct CycleControl {
  std::size_t m = 1;             // 1-based cycle index
  double rabi = 0.0;             // Omega_m = xi_m g_m, energy units
  double drive_frequency = 0.0;  // nu_m
  double tau = 0.0;              // field on
  double tau_prime = 0.0;        // field off

  /// Omega'_m = Omega_m / (2 hbar).
  double half_rabi(double hbar) const { return rabi / (2.0 * hbar); }
  /// Accumulated Rabi angle theta_m = Omega'_m tau_m.
  double angle(double hbar) const { return half_rabi(hbar) * tau; }
  double total() const { return tau + tau_prime; }
};

/// N-1 cycles in order. Construction rejects negative durations, negative
/// Rabi rates and out-of-order indices with Error{ScheduleMismatch}.
class PulseSchedule {
 public:
  PulseSchedule(Protocol protocol, std::vector<CycleControl> cycles);

  Protocol protocol() const noexcept { return protocol_; }
  const std::vector<CycleControl>& cycles() const noexcept { return cycles_; }
  std::size_t size() const noexcept { return cycles_.size(); }

  /// t_m = sum_{k<=m} (tau_k + tau'_k), m = 0..N-1 (t_0 = 0).
  std::vector<double> boundaries() const;
  double total_time() const;

 private:
  Protocol protocol_;
  std::vector<CycleControl> cycles_;
};

/// Snapshots after each cycle, Schrodinger picture.
struct AmplitudeTrace {
  std::vector<QuantumState> snapshots;
};

struct ScheduleRun {
  QuantumState final_state;
  AmplitudeTrace trace;
};

/// Verifies the schedule has N-1 cycles and that every drive frequency and
/// protocol agrees with the spectrum's transition table.
/// Throws Error{ScheduleMismatch} (or IncompatibleProtocol).
void check_schedule(const EnergySpectrum& spectrum, const PulseSchedule& schedule);

/// Dense RWA cycle unitary in the interaction picture:
///   I + (cos theta - 1)(P_a + P_b) - i sin theta (|a><b| + |b><a|).
Eigen::MatrixXcd cycle_unitary(Protocol protocol, std::size_t dimension, std::size_t m,
                               double theta);

/// a_k <- exp(-i E_k t / hbar) a_k.
QuantumState free_evolution(const QuantumState& state, const EnergySpectrum& spectrum,
                            double duration);

/// Applies U_0(tau'_m) U_0(tau_m) V_m(theta_m) cycle by cycle, restarting the
/// interaction-picture clock at each cycle start.
ScheduleRun run_schedule(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                         const QuantumState& initial);

/// Final amplitudes from the product-of-sines/cosines closed forms, assuming
/// the system starts in |1>.
QuantumState closed_form_amplitudes(const EnergySpectrum& spectrum,
                                    const PulseSchedule& schedule);

}  // namespace qcycle
