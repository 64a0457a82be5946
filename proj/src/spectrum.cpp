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

#include "qcycle/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcycle/errors.hpp"

namespace qcycle {

namespace {

bool gaps_equal(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::string_view to_string(Protocol protocol) {
  return protocol == Protocol::SystemI ? "system-i" : "system-ii";
}

std::string_view to_string(GapKind kind) {
  switch (kind) {
    case GapKind::SystemI: return "system-i";
    case GapKind::SystemII: return "system-ii";
    case GapKind::Both: return "both";
    case GapKind::Neither: return "neither";
  }
  return "neither";
}

EnergySpectrum::EnergySpectrum(std::vector<double> centered_levels, double hbar, double shift)
    : levels_(std::move(centered_levels)), hbar_(hbar), shift_(shift) {}

EnergySpectrum validate_spectrum(std::span<const double> raw_levels, double hbar) {
  if (raw_levels.size() < 2) {
    throw Error(ErrorKind::TooFewLevels, "a spectrum needs at least two levels");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorKind::InvalidDocument, "hbar must be a positive finite number");
  }
  for (double e : raw_levels) {
    if (!std::isfinite(e)) throw Error(ErrorKind::InvalidDocument, "non-finite energy level");
  }
  for (std::size_t i = 0; i + 1 < raw_levels.size(); ++i) {
    if (!(raw_levels[i + 1] > raw_levels[i])) {
      std::ostringstream msg;
      msg << "levels must be strictly increasing: E_" << i + 2 << " = " << raw_levels[i + 1]
          << " <= E_" << i + 1 << " = " << raw_levels[i];
      throw Error(ErrorKind::NonIncreasingLevels, msg.str());
    }
  }
  const double mean = std::accumulate(raw_levels.begin(), raw_levels.end(), 0.0) /
                      static_cast<double>(raw_levels.size());
  std::vector<double> centered(raw_levels.begin(), raw_levels.end());
  for (double& e : centered) e -= mean;
  return EnergySpectrum(std::move(centered), hbar, mean);
}

bool GapClassification::supports(Protocol protocol) const noexcept {
  if (kind == GapKind::Both) return true;
  return protocol == Protocol::SystemI ? kind == GapKind::SystemI : kind == GapKind::SystemII;
}

GapClassification classify_gaps(const EnergySpectrum& spectrum, double tolerance) {
  const auto levels = spectrum.levels();
  GapClassification out;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    out.gaps.push_back(levels[i + 1] - levels[i]);
    out.cumulative_gaps.push_back(levels[i + 1] - levels[0]);
  }
  const auto& g = out.gaps;
  if (g.size() == 1) {
    out.kind = GapKind::Both;
    return out;
  }

  bool star = !gaps_equal(g[0], g[1], tolerance);
  for (std::size_t i = 2; star && i < g.size(); ++i) star = gaps_equal(g[1], g[i], tolerance);

  bool ladder = true;
  for (std::size_t i = 0; ladder && i < g.size(); ++i) {
    for (std::size_t j = i + 1; ladder && j < g.size(); ++j) {
      ladder = !gaps_equal(g[i], g[j], tolerance);
    }
  }

  if (star && ladder) {
    out.kind = GapKind::Both;
  } else if (star) {
    out.kind = GapKind::SystemI;
  } else if (ladder) {
    out.kind = GapKind::SystemII;
  } else {
    out.kind = GapKind::Neither;
  }
  return out;
}

std::pair<std::size_t, std::size_t> coupled_pair(Protocol protocol, std::size_t m) {
  return protocol == Protocol::SystemI ? std::pair<std::size_t, std::size_t>{1, m + 1}
                                       : std::pair<std::size_t, std::size_t>{m, m + 1};
}

TransitionTable transition_table(const EnergySpectrum& spectrum, Protocol protocol,
                                 double tolerance) {
  const auto cls = classify_gaps(spectrum, tolerance);
  if (!cls.supports(protocol)) {
    std::ostringstream msg;
    msg << "spectrum classified as " << to_string(cls.kind) << " does not support the "
        << to_string(protocol) << " protocol";
    throw Error(ErrorKind::IncompatibleProtocol, msg.str());
  }
  TransitionTable table{protocol, {}, {}};
  for (std::size_t m = 1; m < spectrum.dimension(); ++m) {
    const auto [a, b] = coupled_pair(protocol, m);
    table.frequencies.push_back((spectrum.level(b) - spectrum.level(a)) / spectrum.hbar());
    table.coupled_pairs.emplace_back(a, b);
  }
  return table;
}

}  // namespace qcycle
