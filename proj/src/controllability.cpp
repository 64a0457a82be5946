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

#include "qcycle/controllability.hpp"

#include <cmath>
#include <sstream>

#include "qcycle/errors.hpp"
#include "qcycle/state.hpp"

namespace qcycle {

namespace {

constexpr Complex kI{0.0, 1.0};

double real_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

Eigen::MatrixXcd drift_generator(const EnergySpectrum& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.dimension());
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) g(k, k) = kI * spectrum.levels()[static_cast<std::size_t>(k)];
  return g;
}

// i (|a><b| + |b><a|), 1-based.
Eigen::MatrixXcd coupling_generator(std::size_t dimension, std::size_t a, std::size_t b) {
  const auto n = static_cast<Eigen::Index>(dimension);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  g(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(b - 1)) = kI;
  g(static_cast<Eigen::Index>(b - 1), static_cast<Eigen::Index>(a - 1)) = kI;
  return g;
}

}  // namespace

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

GeneratorSet build_generators(const EnergySpectrum& spectrum, Protocol protocol,
                              const std::optional<std::vector<std::size_t>>& restrict_to) {
  const std::size_t n = spectrum.dimension();
  (void)transition_table(spectrum, protocol);  // IncompatibleProtocol

  std::vector<std::size_t> controls;
  if (restrict_to) {
    for (std::size_t m : *restrict_to) {
      if (m < 1 || m >= n) {
        std::ostringstream msg;
        msg << "control index " << m << " outside 1.." << n - 1;
        throw Error(ErrorKind::IndexOutOfRange, msg.str());
      }
      controls.push_back(m);
    }
  } else {
    for (std::size_t m = 1; m < n; ++m) controls.push_back(m);
  }

  GeneratorSet set;
  set.elements.push_back(drift_generator(spectrum));
  set.labels.emplace_back("iH_0");
  for (std::size_t m : controls) {
    const auto [a, b] = coupled_pair(protocol, m);
    set.elements.push_back(coupling_generator(n, a, b));
    set.labels.push_back("iH_" + std::to_string(m));
  }
  return set;
}

LieSpan::LieSpan(std::size_t matrix_dimension, double rank_tolerance)
    : n_(matrix_dimension), tol_(rank_tolerance) {}

Eigen::MatrixXcd LieSpan::project_out(const Eigen::MatrixXcd& m) const {
  Eigen::MatrixXcd r = m;
  // Two Gram-Schmidt passes keep the basis orthonormal to working precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis_) r -= real_inner(b, r) * b;
  }
  return r;
}

double LieSpan::residual(const Eigen::MatrixXcd& candidate) const {
  const double norm = candidate.norm();
  if (norm == 0.0) return 0.0;
  return project_out(candidate / norm).norm();
}

bool LieSpan::add(const Eigen::MatrixXcd& candidate) {
  const double norm = candidate.norm();
  if (!(norm > tol_)) return false;
  Eigen::MatrixXcd r = project_out(candidate / norm);
  const double rn = r.norm();
  if (!(rn > tol_)) return false;
  basis_.push_back(r / rn);
  return true;
}

ClosureReport lie_closure_dimension(const GeneratorSet& generators, double rank_tolerance,
                                    LieSpan* span_out) {
  if (generators.elements.empty()) {
    throw Error(ErrorKind::InvalidDocument, "empty generator set");
  }
  const auto n = static_cast<std::size_t>(generators.elements.front().rows());
  const std::size_t cap = n * n * n * n;

  LieSpan span(n, rank_tolerance);
  for (const auto& g : generators.elements) span.add(g);

  ClosureReport report;
  report.rank_tolerance = rank_tolerance;
  report.target_dimension = n * n - 1;

  // Each sweep brackets every element added since the previous sweep with
  // every element before it, so each pair is evaluated exactly once.
  std::size_t done = 0;
  while (done < span.dimension()) {
    const std::size_t end = span.dimension();
    for (std::size_t j = done; j < end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (++report.commutators > cap) {
          std::ostringstream msg;
          msg << "Lie closure exceeded " << cap << " commutator evaluations";
          throw Error(ErrorKind::IterationCapExceeded, msg.str());
        }
        span.add(commutator(span.basis()[i], span.basis()[j]));
      }
    }
    done = end;
    ++report.iterations;
  }

  report.dimension = span.dimension();
  report.is_fully_controllable = report.dimension == report.target_dimension;
  if (span_out) *span_out = std::move(span);
  return report;
}

ClosureReport check_controllability(const EnergySpectrum& spectrum, Protocol protocol,
                                    double rank_tolerance) {
  return lie_closure_dimension(build_generators(spectrum, protocol), rank_tolerance);
}

ChevalleyElements chevalley_from_star_generators(const EnergySpectrum& spectrum) {
  const std::size_t n = spectrum.dimension();
  const auto drift = drift_generator(spectrum);
  auto star = [&](std::size_t m) { return coupling_generator(n, 1, m + 1); };
  auto mu = [&](std::size_t m) { return spectrum.level(m + 1) - spectrum.level(m); };

  ChevalleyElements out;
  for (std::size_t m = 1; m < n; ++m) {
    Eigen::MatrixXcd ix, iy;
    if (m == 1) {
      ix = star(1);
      iy = commutator(drift, ix) / mu(1);
    } else {
      iy = commutator(star(m), star(m - 1));
      ix = commutator(iy, drift) / mu(m);
    }
    out.ih.push_back(-0.5 * commutator(ix, iy));
    out.ix.push_back(std::move(ix));
    out.iy.push_back(std::move(iy));
  }
  return out;
}

}  // namespace qcycle
