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

#include "qcycle/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
// Moduli must be normalized to this tolerance and the leftover slot of the
// chain must be reproduced to it.
constexpr double kChainTolerance = 1e-9;

double wrap_phase(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Smallest R >= r_min with omega * R == rho (mod 2 pi), omega > 0.
double smallest_representative(double omega, double rho, double r_min) {
  rho = wrap_phase(rho);
  const double k = std::ceil((omega * r_min - rho) / kTwoPi);
  return (rho + kTwoPi * std::max(k, 0.0)) / omega;
}

double sum_of_squares(std::span<const double> c, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to; ++i) s += c[i] * c[i];
  return s;
}

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::InfeasibleModuli, what);
}

}  // namespace

SynthesisConfig SynthesisConfig::uniform(std::size_t dimension, double rabi) {
  SynthesisConfig config;
  config.rabi.assign(dimension > 0 ? dimension - 1 : 0, rabi);
  return config;
}

AmplitudeDecomposition amplitude_decompose(const QuantumState& target, double zero_threshold) {
  if (std::abs(target.amplitudes().squaredNorm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::UnnormalizedInput, "target state is not normalized");
  }
  AmplitudeDecomposition out;
  for (std::size_t n = 1; n <= target.dimension(); ++n) {
    const Complex a = target.amplitude(n);
    const double modulus = std::abs(a);
    const bool masked = !(modulus > zero_threshold);
    out.moduli.push_back(modulus);
    out.masked.push_back(masked);
    out.phases.push_back(masked ? 0.0 : wrap_phase(std::arg(a)));
  }
  return out;
}

std::vector<double> solve_pulse_angles(std::span<const double> moduli, Protocol protocol,
                                       double zero_threshold) {
  const std::size_t n = moduli.size();
  if (n < 2) infeasible("need at least two moduli");
  for (double c : moduli) {
    if (!std::isfinite(c) || c < 0.0) infeasible("moduli must be finite and non-negative");
  }
  if (std::abs(sum_of_squares(moduli, 0, n) - 1.0) > kChainTolerance) {
    infeasible("moduli are not normalized");
  }

  // Each angle is taken from the slot modulus and the norm of the slots the
  // chain has not reached yet; the running product of cosines (SystemI) or
  // sines (SystemII) is the chain denominator.
  std::vector<double> theta(n - 1, 0.0);
  double denominator = 1.0;
  auto check_ratio = [&](double numerator, std::size_t slot) {
    if (numerator > denominator * (1.0 + kChainTolerance) + 1e-15) {
      std::ostringstream msg;
      msg << "modulus C_" << slot << " = " << numerator << " exceeds the chain bound "
          << denominator;
      infeasible(msg.str());
    }
  };
  auto masked_slot = [&](double numerator, std::size_t slot) {
    if (!(numerator < zero_threshold)) {
      std::ostringstream msg;
      msg << "modulus C_" << slot << " = " << numerator
          << " is unreachable: the chain has no amplitude left";
      infeasible(msg.str());
    }
  };

  if (protocol == Protocol::SystemI) {
    // Slot k (2..N) fixes theta_{k-1}: C_k = sin theta_{k-1} prod_{i<=k-2} cos theta_i.
    for (std::size_t k = 2; k <= n; ++k) {
      const double ck = moduli[k - 1];
      if (denominator < zero_threshold) {
        masked_slot(ck, k);
        continue;
      }
      check_ratio(ck, k);
      const double rest = std::sqrt(moduli[0] * moduli[0] + sum_of_squares(moduli, k, n));
      const double hyp = std::hypot(ck, rest);
      if (hyp == 0.0) {
        denominator = 0.0;
        continue;
      }
      theta[k - 2] = std::atan2(ck, rest);
      denominator *= rest / hyp;
    }
    if (std::abs(moduli[0] - denominator) > kChainTolerance) {
      infeasible("leftover modulus C_1 is inconsistent with the solved angles");
    }
  } else {
    // Slot m (1..N-1) fixes theta_m: C_m = cos theta_m prod_{i<m} sin theta_i.
    for (std::size_t m = 1; m < n; ++m) {
      const double cm = moduli[m - 1];
      if (denominator < zero_threshold) {
        masked_slot(cm, m);
        denominator = 0.0;
        continue;
      }
      check_ratio(cm, m);
      const double tail = std::sqrt(sum_of_squares(moduli, m, n));
      const double hyp = std::hypot(cm, tail);
      if (hyp == 0.0) {
        denominator = 0.0;
        continue;
      }
      theta[m - 1] = std::atan2(tail, cm);
      denominator *= tail / hyp;
    }
    if (std::abs(moduli[n - 1] - denominator) > kChainTolerance) {
      infeasible("leftover modulus C_N is inconsistent with the solved angles");
    }
  }
  return theta;
}

DwellSolution solve_dwell_times(const AmplitudeDecomposition& decomposition,
                                std::span<const double> pulse_durations,
                                const EnergySpectrum& spectrum, Protocol protocol) {
  const std::size_t n = spectrum.dimension();
  if (decomposition.moduli.size() != n || pulse_durations.size() != n - 1) {
    throw Error(ErrorKind::ScheduleMismatch, "decomposition does not match the spectrum");
  }
  const double hbar = spectrum.hbar();
  const auto& beta = decomposition.phases;
  const auto& masked = decomposition.masked;
  auto E = [&](std::size_t k) { return spectrum.level(k); };
  auto tau = [&](std::size_t m) { return pulse_durations[m - 1]; };

  // R[m] for m = 1..N, R[N] = 0.
  std::vector<double> R(n + 1, 0.0);
  double alpha = 0.0;

  if (protocol == Protocol::SystemI) {
    // With alpha' = alpha + E_1 R_1 / hbar, slot 1 gives alpha' = -beta_1 and
    // slot n >= 2 gives (E_n - E_1) R_{n-1} / hbar == -pi/2 - beta_n - alpha'.
    std::optional<double> alpha_reduced;
    if (!masked[0]) alpha_reduced = -beta[0];
    for (std::size_t m = n - 1; m >= 1; --m) {
      const std::size_t slot = m + 1;
      const double r_min = R[m + 1] + tau(m);
      const double omega = (E(slot) - E(1)) / hbar;
      if (masked[slot - 1]) {
        R[m] = r_min;
      } else if (!alpha_reduced) {
        // Free global phase: this slot is the reference.
        R[m] = r_min;
        alpha_reduced = -kHalfPi - beta[slot - 1] - omega * R[m];
      } else {
        R[m] = smallest_representative(omega, -kHalfPi - beta[slot - 1] - *alpha_reduced, r_min);
      }
    }
    if (!alpha_reduced) {
      throw Error(ErrorKind::NoReferenceSlot, "every target amplitude is below threshold");
    }
    alpha = *alpha_reduced - E(1) * R[1] / hbar;
  } else {
    // Between consecutive unmasked slots p < q:
    //   sum_{j=p}^{q-1} omega_j R_j == -(pi/2)(q - p) - (beta_q - beta_p),
    // with omega_j = (E_{j+1} - E_j) / hbar; R_p is the unknown once the
    // larger-index tail sums are fixed.
    std::vector<std::size_t> unmasked;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!masked[k - 1]) unmasked.push_back(k);
    }
    if (unmasked.empty()) {
      throw Error(ErrorKind::NoReferenceSlot, "every target amplitude is below threshold");
    }
    std::vector<std::size_t> next_unmasked(n + 1, 0);
    for (std::size_t i = 0; i + 1 < unmasked.size(); ++i) {
      next_unmasked[unmasked[i]] = unmasked[i + 1];
    }
    auto omega = [&](std::size_t j) { return (E(j + 1) - E(j)) / hbar; };

    for (std::size_t m = n - 1; m >= 1; --m) {
      const double r_min = R[m + 1] + tau(m);
      const std::size_t q = masked[m - 1] ? 0 : next_unmasked[m];
      if (q == 0) {
        R[m] = r_min;
        continue;
      }
      double rho = -kHalfPi * static_cast<double>(q - m) - (beta[q - 1] - beta[m - 1]);
      for (std::size_t j = m + 1; j < q; ++j) rho -= omega(j) * R[j];
      R[m] = smallest_representative(omega(m), rho, r_min);
    }

    // alpha from the lowest unmasked slot p:
    //   arg gamma_p = -(E_p R_p + sum_{i<p} E_{i+1} T_i) / hbar - (pi/2)(p - 1).
    const std::size_t p = unmasked.front();
    double phi = E(p) * R[p];
    for (std::size_t i = 1; i < p; ++i) phi += E(i + 1) * (R[i] - R[i + 1]);
    alpha = -phi / hbar - kHalfPi * static_cast<double>(p - 1) - beta[p - 1];
  }

  DwellSolution out;
  out.cycle_times.resize(n - 1);
  for (std::size_t m = 1; m < n; ++m) {
    // Rounding in the representative search can leave T_m a few ulps short of tau_m.
    const double dwell = std::max(0.0, R[m] - R[m + 1] - tau(m));
    out.cycle_times[m - 1] = tau(m) + dwell;
  }
  out.tail_sums.assign(n - 1, 0.0);
  double acc = 0.0;
  for (std::size_t m = n - 1; m >= 1; --m) {
    acc += out.cycle_times[m - 1];
    out.tail_sums[m - 1] = acc;
  }
  out.global_phase = wrap_phase(alpha);
  return out;
}

SynthesisResult synthesize(const EnergySpectrum& spectrum, Protocol protocol,
                           const QuantumState& target, const SynthesisConfig& config) {
  const std::size_t n = spectrum.dimension();
  const auto table = transition_table(spectrum, protocol);
  if (target.dimension() != n) {
    throw Error(ErrorKind::InvalidDocument, "target dimension does not match the spectrum");
  }
  if (config.rabi.size() != n - 1) {
    throw Error(ErrorKind::InvalidDocument, "need one Rabi rate per cycle");
  }
  for (double rabi : config.rabi) {
    if (!(rabi > 0.0) || !std::isfinite(rabi)) {
      throw Error(ErrorKind::InvalidDocument, "Rabi rates must be positive");
    }
  }

  SynthesisDecomposition decomposition;
  decomposition.amplitudes = amplitude_decompose(target, config.zero_threshold);
  decomposition.angles =
      solve_pulse_angles(decomposition.amplitudes.moduli, protocol, config.zero_threshold);

  const double hbar = spectrum.hbar();
  std::vector<double> taus(n - 1);
  for (std::size_t m = 0; m + 1 < n; ++m) {
    taus[m] = decomposition.angles[m] * 2.0 * hbar / config.rabi[m];
  }
  decomposition.dwell = solve_dwell_times(decomposition.amplitudes, taus, spectrum, protocol);

  std::vector<CycleControl> cycles;
  for (std::size_t m = 1; m < n; ++m) {
    CycleControl c;
    c.m = m;
    c.rabi = config.rabi[m - 1];
    c.drive_frequency = table.frequencies[m - 1];
    c.tau = taus[m - 1];
    c.tau_prime = decomposition.dwell.cycle_times[m - 1] - taus[m - 1];
    cycles.push_back(c);
  }
  PulseSchedule schedule(protocol, std::move(cycles));

  const auto run = run_schedule(spectrum, schedule, QuantumState::ground(n));
  const double f = fidelity(run.final_state, target);
  if (1.0 - f > kSynthesisFidelityFloor) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "forward verification failed: fidelity " << f;
    throw Error(ErrorKind::VerificationFailed, msg.str());
  }
  return SynthesisResult{std::move(schedule), std::move(decomposition), f};
}

}  // namespace qcycle
