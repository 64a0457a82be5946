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

// Independent oracles: random generators with fixed seeds, a series matrix
// exponential and a dense-matrix re-implementation of the schedule
// propagator. None of this code calls into the analytic propagator.

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qcycle/propagator.hpp"
#include "qcycle/spectrum.hpp"
#include "qcycle/state.hpp"

namespace qcycle::testkit {

using Seed = std::uint64_t;

/// Standard complex normal components, normalized. Deterministic per seed.
QuantumState random_target(std::size_t dimension, Seed seed);

/// Random traceless spectrum with the requested gap structure. SystemI
/// spectra have a distinct first gap followed by equal gaps; SystemII
/// spectra have pairwise distinct gaps (at least 5% apart).
EnergySpectrum random_spectrum(Protocol protocol, std::size_t dimension, Seed seed);

/// Random valid schedule: theta_m uniform in [0, pi/2], Rabi rates in
/// [0.05, 1], dwell times in [0, 5].
PulseSchedule random_schedule(const EnergySpectrum& spectrum, Protocol protocol, Seed seed);

/// exp(-i H t / hbar) by scaling and squaring of the Taylor series.
/// Throws Error{NonHermitianInput}.
Eigen::MatrixXcd matrix_exponential_oracle(const Eigen::MatrixXcd& hamiltonian, double t,
                                           double hbar = 1.0);

/// Time-independent interaction-picture Hamiltonian of cycle m under the RWA,
/// (Omega_m / 2)(|a><b| + |b><a|).
Eigen::MatrixXcd rwa_cycle_hamiltonian(Protocol protocol, std::size_t dimension,
                                       std::size_t m, double rabi);

/// Drift Hamiltonian as a dense matrix.
Eigen::MatrixXcd drift_hamiltonian(const EnergySpectrum& spectrum);

/// Propagates |1> through U_0(tau'_m) U_0(tau_m) exp(-i H_I^(m) tau_m / hbar)
/// for every cycle using dense matrix products.
QuantumState dense_schedule_oracle(const EnergySpectrum& spectrum, const PulseSchedule& schedule);

}  // namespace qcycle::testkit
