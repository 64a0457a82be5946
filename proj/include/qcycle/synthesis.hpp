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

#include <span>
#include <vector>

#include "qcycle/propagator.hpp"
#include "qcycle/spectrum.hpp"
#include "qcycle/state.hpp"

namespace qcycle {

inline constexpr double kDefaultZeroThreshold = 1e-10;
inline constexpr double kSynthesisFidelityFloor = 1e-9;  // 1 - F allowed

struct SynthesisConfig {
  std::vector<double> rabi;  // Omega_m > 0, one per cycle
  double zero_threshold = kDefaultZeroThreshold;
  double phase_tolerance = 1e-8;

  static SynthesisConfig uniform(std::size_t dimension, double rabi);
};

/// Target written as a_n = C_n exp(i beta_n) with C_n >= 0.
struct AmplitudeDecomposition {
  std::vector<double> moduli;  // C_n
  std::vector<double> phases;  // beta_n in [0, 2 pi); 0 where masked
  std::vector<bool> masked;    // C_n <= threshold, phase undefined
};

AmplitudeDecomposition amplitude_decompose(const QuantumState& target,
                                           double zero_threshold = kDefaultZeroThreshold);

/// Inverts the hyperspherical chain of moduli to pulse angles in [0, pi/2].
///
/// SystemI:  C_2 = sin t_1, C_n = sin t_{n-1} prod_{i<=n-2} cos t_i, C_1 = prod cos t_i.
/// SystemII: C_1 = cos t_1, C_m = cos t_m prod_{i<m} sin t_i,        C_N = prod sin t_i.
///
/// A slot whose denominator product falls below the threshold must itself be
/// below it; its angle is then 0. Throws Error{InfeasibleModuli}.
std::vector<double> solve_pulse_angles(std::span<const double> moduli, Protocol protocol,
                                       double zero_threshold = kDefaultZeroThreshold);

struct DwellSolution {
  std::vector<double> cycle_times;  // T_m = tau_m + tau'_m >= tau_m
  std::vector<double> tail_sums;    // R_m = sum_{i>=m} T_i, m = 1..N-1
  double global_phase = 0.0;        // alpha: produced = exp(i alpha) * target
};

/// Solves the phase congruences for the tail sums R_m, largest index first,
/// taking for each the smallest representative with R_m >= R_{m+1} + tau_m.
/// `pulse_durations` are the tau_m already fixed by the pulse angles.
DwellSolution solve_dwell_times(const AmplitudeDecomposition& decomposition,
                                std::span<const double> pulse_durations,
                                const EnergySpectrum& spectrum, Protocol protocol);

struct SynthesisDecomposition {
  AmplitudeDecomposition amplitudes;
  std::vector<double> angles;  // theta_m
  DwellSolution dwell;
};

struct SynthesisResult {
  PulseSchedule schedule;
  SynthesisDecomposition decomposition;
  double fidelity;  // forward-verified, run_schedule from |1>
};

/// Full inverse problem: target -> schedule with 2(N-1) durations. The
/// schedule is forward-simulated before returning; a fidelity below
/// 1 - 1e-9 raises Error{VerificationFailed}.
SynthesisResult synthesize(const EnergySpectrum& spectrum, Protocol protocol,
                           const QuantumState& target, const SynthesisConfig& config);

}  // namespace qcycle
