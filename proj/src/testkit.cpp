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

#include "qcycle/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcycle/errors.hpp"

namespace qcycle::testkit {

namespace {

constexpr Complex kI{0.0, 1.0};

bool well_separated(const std::vector<double>& gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    for (std::size_t j = i + 1; j < gaps.size(); ++j) {
      if (std::abs(gaps[i] - gaps[j]) < 0.05 * std::max(gaps[i], gaps[j])) return false;
    }
  }
  return true;
}

}  // namespace

QuantumState random_target(std::size_t dimension, Seed seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dimension));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  v /= v.norm();
  return QuantumState::from_amplitudes(std::move(v));
}

EnergySpectrum random_spectrum(Protocol protocol, std::size_t dimension, Seed seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(0.5, 3.0);
  std::vector<double> gaps(dimension - 1);
  do {
    if (protocol == Protocol::SystemI) {
      const double first = gap(rng);
      const double rest = gap(rng);
      gaps.assign(dimension - 1, rest);
      gaps.front() = first;
      if (dimension > 2 && std::abs(first - rest) < 0.05 * std::max(first, rest)) continue;
      break;
    }
    for (double& g : gaps) g = gap(rng);
  } while (protocol == Protocol::SystemI || !well_separated(gaps));

  std::vector<double> levels{0.0};
  for (double g : gaps) levels.push_back(levels.back() + g);
  return validate_spectrum(levels);
}

PulseSchedule random_schedule(const EnergySpectrum& spectrum, Protocol protocol, Seed seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 0.5 * std::numbers::pi);
  std::uniform_real_distribution<double> rabi(0.05, 1.0);
  std::uniform_real_distribution<double> dwell(0.0, 5.0);
  const auto table = transition_table(spectrum, protocol);
  std::vector<CycleControl> cycles;
  for (std::size_t m = 1; m < spectrum.dimension(); ++m) {
    CycleControl c;
    c.m = m;
    c.rabi = rabi(rng);
    c.drive_frequency = table.frequencies[m - 1];
    c.tau = angle(rng) * 2.0 * spectrum.hbar() / c.rabi;
    c.tau_prime = dwell(rng);
    cycles.push_back(c);
  }
  return PulseSchedule(protocol, std::move(cycles));
}

Eigen::MatrixXcd matrix_exponential_oracle(const Eigen::MatrixXcd& hamiltonian, double t,
                                           double hbar) {
  const Eigen::Index n = hamiltonian.rows();
  if (n != hamiltonian.cols()) throw Error(ErrorKind::NonHermitianInput, "matrix is not square");
  const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
  if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorKind::NonHermitianInput, "matrix is not Hermitian");
  }

  const Eigen::MatrixXcd a = (-kI * t / hbar) * hamiltonian;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Eigen::MatrixXcd b = a / std::ldexp(1.0, squarings);

  // Taylor series of exp(b) with ||b||_1 <= 1/2; terms shrink at least as 2^-k / k!.
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Eigen::MatrixXcd rwa_cycle_hamiltonian(Protocol protocol, std::size_t dimension,
                                       std::size_t m, double rabi) {
  const auto n = static_cast<Eigen::Index>(dimension);
  const auto [a, b] = coupled_pair(protocol, m);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  h(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(b - 1)) = 0.5 * rabi;
  h(static_cast<Eigen::Index>(b - 1), static_cast<Eigen::Index>(a - 1)) = 0.5 * rabi;
  return h;
}

Eigen::MatrixXcd drift_hamiltonian(const EnergySpectrum& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.dimension());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) h(k, k) = spectrum.levels()[static_cast<std::size_t>(k)];
  return h;
}

QuantumState dense_schedule_oracle(const EnergySpectrum& spectrum, const PulseSchedule& schedule) {
  const std::size_t n = spectrum.dimension();
  if (schedule.size() != n - 1) {
    throw Error(ErrorKind::ScheduleMismatch, "schedule length does not match the spectrum");
  }
  (void)transition_table(spectrum, schedule.protocol());

  const double hbar = spectrum.hbar();
  const Eigen::MatrixXcd h0 = drift_hamiltonian(spectrum);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  psi(0) = 1.0;
  for (const auto& c : schedule.cycles()) {
    const Eigen::MatrixXcd pulse = matrix_exponential_oracle(
        rwa_cycle_hamiltonian(schedule.protocol(), n, c.m, c.rabi), c.tau, hbar);
    const Eigen::MatrixXcd lab = matrix_exponential_oracle(h0, c.tau, hbar);
    const Eigen::MatrixXcd dwell = matrix_exponential_oracle(h0, c.tau_prime, hbar);
    psi = dwell * (lab * (pulse * psi));
  }
  return unchecked_state(std::move(psi));
}

}  // namespace qcycle::testkit
