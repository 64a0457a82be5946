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

#include "qcycle/propagator.hpp"

#include <cmath>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Index idx(std::size_t one_based) { return static_cast<Eigen::Index>(one_based - 1); }

// (-i)^k without going through cos/sin of multiples of pi/2.
Complex minus_i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

PulseSchedule::PulseSchedule(Protocol protocol, std::vector<CycleControl> cycles)
    : protocol_(protocol), cycles_(std::move(cycles)) {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    const auto& c = cycles_[i];
    if (c.m != i + 1) {
      std::ostringstream msg;
      msg << "cycle at position " << i + 1 << " has index " << c.m;
      throw Error(ErrorKind::ScheduleMismatch, msg.str());
    }
    if (!std::isfinite(c.tau) || !std::isfinite(c.tau_prime) || c.tau < 0.0 ||
        c.tau_prime < 0.0) {
      std::ostringstream msg;
      msg << "cycle " << c.m << " has a negative or non-finite duration";
      throw Error(ErrorKind::NegativeDuration, msg.str());
    }
    if (!std::isfinite(c.rabi) || c.rabi < 0.0 || !std::isfinite(c.drive_frequency)) {
      std::ostringstream msg;
      msg << "cycle " << c.m << " has an invalid Rabi rate or drive frequency";
      throw Error(ErrorKind::ScheduleMismatch, msg.str());
    }
  }
}

std::vector<double> PulseSchedule::boundaries() const {
  std::vector<double> t{0.0};
  for (const auto& c : cycles_) t.push_back(t.back() + c.total());
  return t;
}

double PulseSchedule::total_time() const { return boundaries().back(); }

void check_schedule(const EnergySpectrum& spectrum, const PulseSchedule& schedule) {
  const std::size_t n = spectrum.dimension();
  if (schedule.size() != n - 1) {
    std::ostringstream msg;
    msg << "schedule has " << schedule.size() << " cycles, a " << n
        << "-level system needs " << n - 1;
    throw Error(ErrorKind::ScheduleMismatch, msg.str());
  }
  const auto table = transition_table(spectrum, schedule.protocol());
  for (const auto& c : schedule.cycles()) {
    const double expected = table.frequencies[c.m - 1];
    if (std::abs(c.drive_frequency - expected) > 1e-9 * std::abs(expected)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "cycle " << c.m << " drives at " << c.drive_frequency
          << " but the transition frequency is " << expected;
      throw Error(ErrorKind::ScheduleMismatch, msg.str());
    }
  }
}

Eigen::MatrixXcd cycle_unitary(Protocol protocol, std::size_t dimension, std::size_t m,
                               double theta) {
  if (dimension < 2 || m < 1 || m >= dimension) {
    std::ostringstream msg;
    msg << "cycle index " << m << " outside 1.." << (dimension > 0 ? dimension - 1 : 0);
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
  const auto [a, b] = coupled_pair(protocol, m);
  const auto n = static_cast<Eigen::Index>(dimension);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  u(idx(a), idx(a)) = c;
  u(idx(b), idx(b)) = c;
  u(idx(a), idx(b)) = -kI * s;
  u(idx(b), idx(a)) = -kI * s;
  return u;
}

QuantumState free_evolution(const QuantumState& state, const EnergySpectrum& spectrum,
                            double duration) {
  if (duration < 0.0 || !std::isfinite(duration)) {
    throw Error(ErrorKind::NegativeDuration, "free evolution needs a non-negative duration");
  }
  if (state.dimension() != spectrum.dimension()) {
    throw Error(ErrorKind::ScheduleMismatch, "state and spectrum dimensions differ");
  }
  Eigen::VectorXcd v = state.amplitudes();
  for (std::size_t k = 1; k <= spectrum.dimension(); ++k) {
    v(idx(k)) *= phase(-spectrum.level(k) * duration / spectrum.hbar());
  }
  return unchecked_state(std::move(v));
}

ScheduleRun run_schedule(const EnergySpectrum& spectrum, const PulseSchedule& schedule,
                         const QuantumState& initial) {
  check_schedule(spectrum, schedule);
  if (initial.dimension() != spectrum.dimension()) {
    throw Error(ErrorKind::ScheduleMismatch, "initial state and spectrum dimensions differ");
  }
  if (std::abs(initial.amplitudes().squaredNorm() - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::UnnormalizedInput, "initial state is not normalized");
  }

  const double hbar = spectrum.hbar();
  const std::size_t n = spectrum.dimension();
  Eigen::VectorXcd psi = initial.amplitudes();
  AmplitudeTrace trace;
  trace.snapshots.reserve(schedule.size());

  for (const auto& cycle : schedule.cycles()) {
    // 2x2 block of the interaction-picture unitary, then U_0(tau + tau').
    const auto [a, b] = coupled_pair(schedule.protocol(), cycle.m);
    const double theta = cycle.angle(hbar);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex xa = psi(idx(a));
    const Complex xb = psi(idx(b));
    psi(idx(a)) = c * xa - kI * s * xb;
    psi(idx(b)) = -kI * s * xa + c * xb;

    const double t = cycle.total();
    for (std::size_t k = 1; k <= n; ++k) psi(idx(k)) *= phase(-spectrum.level(k) * t / hbar);
    trace.snapshots.push_back(unchecked_state(psi));
  }
  return ScheduleRun{unchecked_state(std::move(psi)), std::move(trace)};
}

QuantumState closed_form_amplitudes(const EnergySpectrum& spectrum,
                                    const PulseSchedule& schedule) {
  check_schedule(spectrum, schedule);
  const double hbar = spectrum.hbar();
  const std::size_t n = spectrum.dimension();
  const std::size_t cycles = n - 1;

  // 1-based helpers over the cycle records.
  std::vector<double> T(cycles + 1, 0.0), cos_t(cycles + 1, 1.0), sin_t(cycles + 1, 0.0);
  for (const auto& c : schedule.cycles()) {
    T[c.m] = c.total();
    cos_t[c.m] = std::cos(c.angle(hbar));
    sin_t[c.m] = std::sin(c.angle(hbar));
  }
  auto sum_T = [&](std::size_t from, std::size_t to) {
    double s = 0.0;
    for (std::size_t i = from; i <= to; ++i) s += T[i];
    return s;
  };
  auto E = [&](std::size_t k) { return spectrum.level(k); };

  Eigen::VectorXcd a(static_cast<Eigen::Index>(n));
  if (schedule.protocol() == Protocol::SystemI) {
    double cos_product = 1.0;
    for (std::size_t i = 1; i <= cycles; ++i) cos_product *= cos_t[i];
    a(0) = phase(-E(1) * sum_T(1, cycles) / hbar) * cos_product;

    // a_k = -i exp{-i [E_k sum_{i>=k-1} T_i + E_1 sum_{i<=k-2} T_i]} sin t_{k-1} prod_{i<=k-2} cos t_i
    double leading_cos = 1.0;
    for (std::size_t k = 2; k <= n; ++k) {
      const double exponent = E(k) * sum_T(k - 1, cycles) + E(1) * sum_T(1, k - 2);
      a(idx(k)) = -kI * phase(-exponent / hbar) * sin_t[k - 1] * leading_cos;
      leading_cos *= cos_t[k - 1];
    }
  } else {
    a(0) = phase(-E(1) * sum_T(1, cycles) / hbar) * cos_t[1];

    // a_m = (-i)^{m-1} exp{-i [E_m sum_{i>=m} T_i + sum_{i<m} E_{i+1} T_i]}
    //       cos t_m prod_{i<m} sin t_i, with cos t_N := 1.
    double sin_product = 1.0;
    double ladder_phase = 0.0;  // sum_{i<m} E_{i+1} T_i
    for (std::size_t m = 2; m <= n; ++m) {
      sin_product *= sin_t[m - 1];
      ladder_phase += E(m) * T[m - 1];
      const double tail = m <= cycles ? sum_T(m, cycles) : 0.0;
      const double modulus = (m <= cycles ? cos_t[m] : 1.0) * sin_product;
      a(idx(m)) = minus_i_power(m - 1) * phase(-(E(m) * tail + ladder_phase) / hbar) * modulus;
    }
  }
  return unchecked_state(std::move(a));
}

}  // namespace qcycle
