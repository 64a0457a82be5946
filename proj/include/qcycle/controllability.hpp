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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcycle/spectrum.hpp"

namespace qcycle {

inline constexpr double kDefaultRankTolerance = 1e-9;

/// Skew-Hermitian traceless generators iH_0, iH_1, ..., iH_{N-1}.
struct GeneratorSet {
  std::vector<Eigen::MatrixXcd> elements;
  std::vector<std::string> labels;
};

/// Drift plus control generators. `restrict_to` keeps only the listed
/// (1-based) control indices; the drift is always included.
GeneratorSet build_generators(const EnergySpectrum& spectrum, Protocol protocol,
                              const std::optional<std::vector<std::size_t>>& restrict_to = {});

struct ClosureReport {
  std::size_t dimension = 0;
  std::size_t target_dimension = 0;  // N^2 - 1
  bool is_fully_controllable = false;
  std::size_t iterations = 0;   // commutator sweeps
  std::size_t commutators = 0;  // commutator evaluations
  double rank_tolerance = kDefaultRankTolerance;
};

/// Orthonormal (real inner product Re tr(A^dagger B)) basis of a real span of
/// matrices, grown by projection.
class LieSpan {
 public:
  LieSpan(std::size_t matrix_dimension, double rank_tolerance);

  /// Adds the component of `candidate` orthogonal to the span when its
  /// relative residual exceeds the rank tolerance. Returns true if added.
  bool add(const Eigen::MatrixXcd& candidate);

  /// Relative norm of the part of `candidate` outside the span.
  double residual(const Eigen::MatrixXcd& candidate) const;

  const std::vector<Eigen::MatrixXcd>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  Eigen::MatrixXcd project_out(const Eigen::MatrixXcd& m) const;

  std::size_t n_;
  double tol_;
  std::vector<Eigen::MatrixXcd> basis_;
};

/// Closes the span of the generators under commutation. Every pair of basis
/// elements is bracketed once; a sweep that adds nothing terminates the loop.
/// Throws Error{IterationCapExceeded} past N^4 commutator evaluations.
ClosureReport lie_closure_dimension(const GeneratorSet& generators,
                                    double rank_tolerance = kDefaultRankTolerance,
                                    LieSpan* span_out = nullptr);

ClosureReport check_controllability(const EnergySpectrum& spectrum, Protocol protocol,
                                    double rank_tolerance = kDefaultRankTolerance);

/// Chevalley elements ix_n, iy_n, ih_n (n = 1..N-1) produced from the
/// generators by the bracket recursion of the star (SystemI) coupling:
///   ix_1 = iH_1,  iy_m = [iH_m, iH_{m-1}] for m >= 2,
///   ix_m = mu_m^{-1} [iy_m, iH_0],  iy_1 = mu_1^{-1} [iH_0, ix_1],
///   ih_n = -[ix_n, iy_n] / 2.
struct ChevalleyElements {
  std::vector<Eigen::MatrixXcd> ix, iy, ih;
};

ChevalleyElements chevalley_from_star_generators(const EnergySpectrum& spectrum);

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qcycle
