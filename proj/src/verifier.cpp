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

#include "qcycle/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Pair = std::array<Complex, 2>;

Pair axpy(const Pair& x, double h, const Pair& k) { return {x[0] + h * k[0], x[1] + h * k[1]}; }

// Right-hand side of the two driven amplitudes in the frame of H_0:
//   d phi_a/ds = -(i/hbar) f(s) exp(+i w s) phi_b
//   d phi_b/ds = -(i/hbar) f(s) exp(-i w s) phi_a
// with w = (E_a - E_b)/hbar and f(s) = Omega cos(nu (s + offset)).
struct DrivenPair {
  double rabi, nu, offset, bohr, hbar;

  Pair operator()(double s, const Pair& phi) const {
    const double f = rabi * std::cos(nu * (s + offset)) / hbar;
    const Complex rot = std::polar(1.0, bohr * s);
    return {-kI * f * rot * phi[1], -kI * f * std::conj(rot) * phi[0]};
  }
};

}  // namespace

std::string_view to_string(FieldClock clock) {
  return clock == FieldClock::Local ? "local" : "global";
}

FieldClock field_clock_from_string(std::string_view text) {
  if (text == "local") return FieldClock::Local;
  if (text == "global") return FieldClock::Global;
  throw Error(ErrorKind::InvalidDocument, "field clock must be 'local' or 'global'");
}

FullIntegration integrate_full(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                               const QuantumState& initial, const IntegratorConfig& config) {
  if (config.steps_per_drive_period < 20) {
    throw Error(ErrorKind::StepTooLarge, "need at least 20 steps per drive period");
  }
  if (!(config.max_step > 0.0)) {
    throw Error(ErrorKind::StepTooLarge, "max_step must be positive");
  }
  check_schedule(spectrum, schedule);
  if (initial.dimension() != spectrum.dimension()) {
    throw Error(ErrorKind::ScheduleMismatch, "initial state and spectrum dimensions differ");
  }

  const std::size_t n = spectrum.dimension();
  const double hbar = spectrum.hbar();
  const auto levels = spectrum.levels();

  // Step size tied to the fastest of the drive frequencies and the largest
  // Bohr frequency.
  double fastest = (levels.back() - levels.front()) / hbar;
  for (const auto& c : schedule.cycles()) fastest = std::max(fastest, c.drive_frequency);
  const double h_target =
      std::min(kTwoPi / (fastest * config.steps_per_drive_period), config.max_step);

  Eigen::VectorXcd psi = initial.amplitudes();
  FullIntegration out{initial, {}, 0.0, 0};
  const double initial_norm = psi.norm();
  const auto starts = schedule.boundaries();

  auto free_phase = [&](double duration) {
    for (std::size_t k = 0; k < n; ++k) psi(static_cast<Eigen::Index>(k)) *= std::polar(1.0, -levels[k] * duration / hbar);
  };

  for (const auto& cycle : schedule.cycles()) {
    if (cycle.tau > 0.0 && cycle.rabi > 0.0) {
      const auto [a, b] = coupled_pair(schedule.protocol(), cycle.m);
      const auto ia = static_cast<Eigen::Index>(a - 1);
      const auto ib = static_cast<Eigen::Index>(b - 1);
      const DrivenPair rhs{cycle.rabi, cycle.drive_frequency,
                           config.field_clock == FieldClock::Global ? starts[cycle.m - 1] : 0.0,
                           (levels[a - 1] - levels[b - 1]) / hbar, hbar};

      const auto steps = static_cast<long long>(std::ceil(cycle.tau / h_target));
      const double h = cycle.tau / static_cast<double>(steps);
      Pair phi{psi(ia), psi(ib)};
      for (long long i = 0; i < steps; ++i) {
        const double s = static_cast<double>(i) * h;
        const Pair k1 = rhs(s, phi);
        const Pair k2 = rhs(s + 0.5 * h, axpy(phi, 0.5 * h, k1));
        const Pair k3 = rhs(s + 0.5 * h, axpy(phi, 0.5 * h, k2));
        const Pair k4 = rhs(s + h, axpy(phi, h, k3));
        for (int j = 0; j < 2; ++j) phi[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      }
      out.steps += steps;
      psi(ia) = phi[0];
      psi(ib) = phi[1];
    }
    free_phase(cycle.total());

    out.norm_drift = std::max(out.norm_drift, std::abs(psi.norm() - initial_norm));
    out.snapshots.push_back(unchecked_state(psi));
  }

  if (out.norm_drift > config.norm_drift_tolerance) {
    std::ostringstream msg;
    msg << "integrator norm drift " << out.norm_drift << " exceeds "
        << config.norm_drift_tolerance;
    throw Error(ErrorKind::NormDriftExceeded, msg.str());
  }
  out.final_state = unchecked_state(std::move(psi));
  return out;
}

RwaReport rwa_report(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                     const QuantumState& target, const IntegratorConfig& config) {
  const auto ground = QuantumState::ground(spectrum.dimension());
  const auto analytic = run_schedule(spectrum, schedule, ground);
  const auto full = integrate_full(spectrum, schedule, ground, config);

  RwaReport report;
  report.fidelity_analytic_vs_target = fidelity(analytic.final_state, target);
  report.fidelity_full_vs_target = fidelity(full.final_state, target);
  report.fidelity_full_vs_analytic = fidelity(full.final_state, analytic.final_state);
  report.max_norm_drift = full.norm_drift;
  report.steps = full.steps;
  for (std::size_t i = 0; i < full.snapshots.size(); ++i) {
    report.cycles.push_back(
        {i + 1, fidelity(full.snapshots[i], analytic.trace.snapshots[i])});
  }
  return report;
}

}  // namespace qcycle
