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
#include <string_view>
#include <utility>
#include <vector>

namespace qcycle {

/// Relative tolerance used when deciding whether two energy gaps are equal.
inline constexpr double kDefaultGapTolerance = 1e-9;

/// Coupling topology of the drive.
///   SystemI:  cycle m couples |1> and |m+1>, resonant with E_{m+1} - E_1.
///   SystemII: cycle m couples |m> and |m+1>, resonant with E_{m+1} - E_m.
enum class Protocol { SystemI, SystemII };

enum class GapKind { SystemI, SystemII, Both, Neither };

std::string_view to_string(Protocol protocol);
std::string_view to_string(GapKind kind);

/// Non-degenerate drift Hamiltonian H_0 = sum_n E_n |n><n|, stored traceless.
///
/// Levels are kept in ascending order and shifted by their mean on
/// construction; the shift only contributes a global phase and is kept for
/// reporting. Immutable after construction.
class EnergySpectrum {
 public:
  EnergySpectrum(std::vector<double> centered_levels, double hbar, double shift);

  std::size_t dimension() const noexcept { return levels_.size(); }
  std::span<const double> levels() const noexcept { return levels_; }

  /// 1-based level access, E_n for n in [1, N].
  double level(std::size_t n) const { return levels_.at(n - 1); }
  double hbar() const noexcept { return hbar_; }
  /// Amount subtracted from the raw levels to make them traceless.
  double shift() const noexcept { return shift_; }

 private:
  std::vector<double> levels_;
  double hbar_;
  double shift_;
};

/// Checks N >= 2 and strict ordering, then centres the levels.
/// Throws Error{TooFewLevels | NonIncreasingLevels}; also rejects hbar <= 0
/// or non-finite input as InvalidDocument.
EnergySpectrum validate_spectrum(std::span<const double> raw_levels, double hbar = 1.0);

struct GapClassification {
  GapKind kind;
  std::vector<double> gaps;             // mu_i = E_{i+1} - E_i
  std::vector<double> cumulative_gaps;  // E_{i+1} - E_1

  bool supports(Protocol protocol) const noexcept;
};

GapClassification classify_gaps(const EnergySpectrum& spectrum,
                                double tolerance = kDefaultGapTolerance);

struct TransitionTable {
  Protocol protocol;
  std::vector<double> frequencies;  // nu_m, angular frequency
  std::vector<std::pair<std::size_t, std::size_t>> coupled_pairs;  // 1-based

  std::size_t cycles() const noexcept { return frequencies.size(); }
};

/// Drive frequencies and coupled level pairs for each cycle.
/// Throws Error{IncompatibleProtocol} when the gap structure does not allow
/// the requested protocol.
TransitionTable transition_table(const EnergySpectrum& spectrum, Protocol protocol,
                                 double tolerance = kDefaultGapTolerance);

/// Coupled pair (a, b), 1-based, for cycle m of the given protocol.
std::pair<std::size_t, std::size_t> coupled_pair(Protocol protocol, std::size_t m);

}  // namespace qcycle
