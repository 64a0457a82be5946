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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcycle {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

/// Normalized amplitude vector over the energy eigenbasis |1>..|N>.
class QuantumState {
 public:
  /// Throws Error{UnnormalizedInput} if | ||a||^2 - 1 | > tolerance.
  static QuantumState from_amplitudes(Eigen::VectorXcd amplitudes,
                                      double tolerance = kNormTolerance);
  static QuantumState from_amplitudes(const std::vector<Complex>& amplitudes,
                                      double tolerance = kNormTolerance);
  /// Basis state |n>, 1-based.
  static QuantumState basis(std::size_t dimension, std::size_t n);
  static QuantumState ground(std::size_t dimension) { return basis(dimension, 1); }

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
  /// 1-based amplitude a_n.
  Complex amplitude(std::size_t n) const { return amps_(static_cast<Eigen::Index>(n - 1)); }
  double norm() const { return amps_.norm(); }

 private:
  explicit QuantumState(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {}

  // Propagators build states whose norm is preserved by construction.
  friend QuantumState unchecked_state(Eigen::VectorXcd amplitudes);

  Eigen::VectorXcd amps_;
};

/// Wraps a vector without the normalization check. Only for results of
/// unitary maps applied to already-normalized states.
QuantumState unchecked_state(Eigen::VectorXcd amplitudes);

/// |<a|b>|^2, global-phase invariant, clamped to [0, 1].
/// Throws Error{UnnormalizedInput} on unnormalized or mismatched inputs.
double fidelity(const QuantumState& a, const QuantumState& b);

/// Largest componentwise modulus |a_k - b_k|.
double max_abs_difference(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace qcycle
