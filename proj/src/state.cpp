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

#include "qcycle/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle {

QuantumState QuantumState::from_amplitudes(Eigen::VectorXcd amplitudes, double tolerance) {
  if (amplitudes.size() < 1) {
    throw Error(ErrorKind::UnnormalizedInput, "empty amplitude vector");
  }
  if (!amplitudes.allFinite()) {
    throw Error(ErrorKind::UnnormalizedInput, "non-finite amplitude");
  }
  const double deviation = std::abs(amplitudes.squaredNorm() - 1.0);
  if (deviation > tolerance) {
    std::ostringstream msg;
    msg << "state is not normalized: | ||a||^2 - 1 | = " << deviation;
    throw Error(ErrorKind::UnnormalizedInput, msg.str());
  }
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::from_amplitudes(const std::vector<Complex>& amplitudes,
                                           double tolerance) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  return from_amplitudes(std::move(v), tolerance);
}

QuantumState QuantumState::basis(std::size_t dimension, std::size_t n) {
  if (n < 1 || n > dimension) {
    throw Error(ErrorKind::IndexOutOfRange, "basis index outside 1..N");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension));
  v(static_cast<Eigen::Index>(n - 1)) = 1.0;
  return QuantumState(std::move(v));
}

QuantumState unchecked_state(Eigen::VectorXcd amplitudes) {
  return QuantumState(std::move(amplitudes));
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::UnnormalizedInput, "fidelity of states with different dimensions");
  }
  for (const auto* s : {&a, &b}) {
    if (std::abs(s->amplitudes().squaredNorm() - 1.0) > 1e-6) {
      throw Error(ErrorKind::UnnormalizedInput, "fidelity needs normalized states");
    }
  }
  const double f = std::norm(a.amplitudes().dot(b.amplitudes()));
  return std::clamp(f, 0.0, 1.0);
}

double max_abs_difference(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qcycle
