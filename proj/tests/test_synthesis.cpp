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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qcycle/synthesis.hpp"
#include "qcycle/testkit.hpp"
#include "test_support.hpp"

using namespace qcycle;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double wrapped_distance(double x) {
  const double r = std::remainder(x, 2.0 * kPi);
  return std::abs(r);
}

QuantumState state(std::vector<Complex> v) {
  Eigen::VectorXcd e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  e /= e.norm();
  return QuantumState::from_amplitudes(e);
}

// Forward chain evaluation, independent of the solver.
std::vector<double> chain_moduli(const std::vector<double>& theta, Protocol p) {
  const std::size_t n = theta.size() + 1;
  std::vector<double> c(n);
  if (p == Protocol::SystemI) {
    double cos_prod = 1.0;
    for (std::size_t k = 2; k <= n; ++k) {
      c[k - 1] = std::sin(theta[k - 2]) * cos_prod;
      cos_prod *= std::cos(theta[k - 2]);
    }
    c[0] = cos_prod;
  } else {
    double sin_prod = 1.0;
    for (std::size_t m = 1; m < n; ++m) {
      c[m - 1] = std::cos(theta[m - 1]) * sin_prod;
      sin_prod *= std::sin(theta[m - 1]);
    }
    c[n - 1] = sin_prod;
  }
  return c;
}

void check_synthesis_invariants(const EnergySpectrum& s, Protocol p, const QuantumState& target,
                                const SynthesisResult& r) {
  const std::size_t n = s.dimension();
  CHECK(1.0 - r.fidelity <= 1e-9);
  // Independent forward check with the dense oracle.
  CHECK(1.0 - fidelity(testkit::dense_schedule_oracle(s, r.schedule), target) <= 1e-9);

  REQUIRE(r.schedule.size() == n - 1);
  std::size_t durations = 0;
  for (const auto& c : r.schedule.cycles()) {
    CHECK(c.tau >= 0.0);
    CHECK(c.tau_prime >= 0.0);
    durations += 2;
  }
  CHECK(durations == 2 * (n - 1));

  for (double th : r.decomposition.angles) {
    CHECK(th >= 0.0);
    CHECK(th <= kPi / 2);
  }
  const auto chain = chain_moduli(r.decomposition.angles, p);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(chain[k] - r.decomposition.amplitudes.moduli[k]) <= 1e-10);
  }

  const auto produced = closed_form_amplitudes(s, r.schedule);
  const auto& d = r.decomposition.amplitudes;
  for (std::size_t k = 1; k <= n; ++k) {
    if (d.masked[k - 1]) continue;
    const double mismatch =
        std::arg(produced.amplitude(k)) - d.phases[k - 1] - r.decomposition.dwell.global_phase;
    CHECK(wrapped_distance(mismatch) <= 1e-8);
  }
}

}  // namespace

TEST_SUITE("synthesis") {
  TEST_CASE("amplitude_decompose") {
    const auto a = amplitude_decompose(QuantumState::ground(2));
    CHECK(a.moduli == std::vector<double>{1.0, 0.0});
    CHECK(a.phases[0] == 0.0);
    CHECK(a.masked == std::vector<bool>{false, true});

    const auto b = amplitude_decompose(state({1.0, -kI}));
    CHECK(b.moduli[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(b.moduli[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(b.phases[1] == doctest::Approx(1.5 * kPi).epsilon(1e-15));

    const auto c = amplitude_decompose(state({0.0, kI, 0.0}));
    CHECK(c.moduli == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(c.phases[1] == doctest::Approx(kPi / 2));
    CHECK(c.masked == std::vector<bool>{true, false, true});

    CHECK_THROWS_KIND(amplitude_decompose(unchecked_state(Eigen::VectorXcd::Ones(2))),
                      ErrorKind::UnnormalizedInput);
  }

  TEST_CASE("solve_pulse_angles examples") {
    const std::vector<double> c{0.5, 0.5, std::sqrt(0.5)};

    const auto ladder = solve_pulse_angles(c, Protocol::SystemII);
    REQUIRE(ladder.size() == 2);
    CHECK(ladder[0] == doctest::Approx(kPi / 3).epsilon(1e-14));
    CHECK(ladder[1] == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-14));
    CHECK(ladder[1] == doctest::Approx(0.955317).epsilon(1e-6));
    // C_3 = sin t_1 sin t_2 = sqrt(2)/2.
    CHECK(std::sin(ladder[0]) * std::sin(ladder[1]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

    const auto star = solve_pulse_angles(c, Protocol::SystemI);
    CHECK(star[0] == doctest::Approx(kPi / 6).epsilon(1e-14));
    CHECK(star[1] == doctest::Approx(std::asin(std::sqrt(2.0 / 3.0))).epsilon(1e-14));
    // C_1 = cos t_1 cos t_2 = 1/2.
    CHECK(std::cos(star[0]) * std::cos(star[1]) == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(solve_pulse_angles(std::vector<double>{1, 0, 0}, Protocol::SystemII) ==
          std::vector<double>{0.0, 0.0});
  }

  TEST_CASE("solve_pulse_angles rejects infeasible moduli") {
    CHECK_THROWS_KIND(solve_pulse_angles(std::vector<double>{0.5, 0.5, 0.9}, Protocol::SystemI),
                      ErrorKind::InfeasibleModuli);
    CHECK_THROWS_KIND(solve_pulse_angles(std::vector<double>{-0.6, 0.8}, Protocol::SystemII),
                      ErrorKind::InfeasibleModuli);
    CHECK_THROWS_KIND(solve_pulse_angles(std::vector<double>{1.0}, Protocol::SystemII),
                      ErrorKind::InfeasibleModuli);
  }

  TEST_CASE("solve_dwell_times: two-level example") {
    const auto s = validate_spectrum(std::vector<double>{-0.5, 0.5});
    const auto d = amplitude_decompose(state({1.0, -kI}));
    const std::vector<double> tau{5 * kPi};
    for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
      const auto sol = solve_dwell_times(d, tau, s, p);
      CHECK(sol.cycle_times[0] == doctest::Approx(6 * kPi).epsilon(1e-14));
      CHECK(sol.global_phase == doctest::Approx(kPi).epsilon(1e-12));
    }
  }

  TEST_CASE("solve_dwell_times: ground target has no phase constraints") {
    const auto s = validate_spectrum(std::vector<double>{-3, 0, 1, 2});
    const auto d = amplitude_decompose(QuantumState::ground(4));
    const std::vector<double> tau{0, 0, 0};
    const auto sol = solve_dwell_times(d, tau, s, Protocol::SystemI);
    CHECK(sol.cycle_times == std::vector<double>{0, 0, 0});

    AmplitudeDecomposition empty{{0, 0}, {0, 0}, {true, true}};
    CHECK_THROWS_KIND(solve_dwell_times(empty, std::vector<double>{0},
                                        validate_spectrum(std::vector<double>{0, 1}),
                                        Protocol::SystemI),
                      ErrorKind::NoReferenceSlot);
  }

  TEST_CASE("synthesize: ground target gives the empty schedule") {
    for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
      const auto s = testkit::random_spectrum(p, 5, 3);
      const auto r = synthesize(s, p, QuantumState::ground(5), SynthesisConfig::uniform(5, 0.3));
      CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-15));
      for (const auto& c : r.schedule.cycles()) {
        CHECK(c.tau == 0.0);
        CHECK(c.tau_prime == 0.0);
      }
    }
  }

  TEST_CASE("synthesize: two-level worked example") {
    const auto s = validate_spectrum(std::vector<double>{-0.5, 0.5});
    const auto target = state({1.0, -kI});
    const auto r = synthesize(s, Protocol::SystemI, target, SynthesisConfig::uniform(2, 0.1));
    CHECK(r.schedule.cycles()[0].tau == doctest::Approx(5 * kPi).epsilon(1e-14));
    CHECK(r.schedule.cycles()[0].tau_prime == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(r.fidelity >= 1.0 - 1e-12);
    check_synthesis_invariants(s, Protocol::SystemI, target, r);
  }

  TEST_CASE("synthesize: random targets, N = 5") {
    for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
      const auto s = testkit::random_spectrum(p, 5, 17);
      for (testkit::Seed seed = 1; seed <= 100; ++seed) {
        const auto target = testkit::random_target(5, seed);
        const auto r = synthesize(s, p, target, SynthesisConfig::uniform(5, 0.2));
        check_synthesis_invariants(s, p, target, r);
      }
    }
  }

  TEST_CASE("synthesize: round trip for N = 2..8 with per-cycle Rabi rates") {
    for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
      for (std::size_t n = 2; n <= 8; ++n) {
        const auto s = testkit::random_spectrum(p, n, 1000 + n);
        SynthesisConfig config;
        for (std::size_t m = 1; m < n; ++m) config.rabi.push_back(0.05 + 0.1 * static_cast<double>(m));
        for (testkit::Seed seed = 0; seed < 10; ++seed) {
          const auto target = testkit::random_target(n, 50 * n + seed);
          check_synthesis_invariants(s, p, target, synthesize(s, p, target, config));
        }
      }
    }
  }

  TEST_CASE("synthesize: degenerate targets") {
    for (Protocol p : {Protocol::SystemI, Protocol::SystemII}) {
      const std::size_t n = 6;
      const auto s = testkit::random_spectrum(p, n, 5);
      const auto config = SynthesisConfig::uniform(n, 0.25);
      std::vector<QuantumState> targets{QuantumState::ground(n), QuantumState::basis(n, n),
                                        QuantumState::basis(n, 3)};
      targets.push_back(state({0.0, 1.0, 0.0, kI, 0.0, -1.0}));
      targets.push_back(state({1.0, 0.0, 0.0, 0.0, 0.0, kI}));
      targets.push_back(state({0.0, 0.0, 2.0, 0.0, 1.0 + kI, 0.0}));
      for (const auto& t : targets) check_synthesis_invariants(s, p, t, synthesize(s, p, t, config));
    }
  }

  TEST_CASE("scaling the Rabi rates scales the pulse durations") {
    const auto s = testkit::random_spectrum(Protocol::SystemII, 4, 9);
    const auto target = testkit::random_target(4, 9);
    const auto slow = synthesize(s, Protocol::SystemII, target, SynthesisConfig::uniform(4, 0.1));
    const auto fast = synthesize(s, Protocol::SystemII, target, SynthesisConfig::uniform(4, 0.3));
    for (std::size_t m = 0; m < 3; ++m) {
      CHECK(fast.decomposition.angles[m] == slow.decomposition.angles[m]);
      CHECK(fast.schedule.cycles()[m].tau ==
            doctest::Approx(slow.schedule.cycles()[m].tau / 3.0).epsilon(1e-14));
    }
  }

  TEST_CASE("synthesize: config validation") {
    const auto s = validate_spectrum(std::vector<double>{-3, 0, 1, 2});
    const auto t = testkit::random_target(4, 1);
    CHECK_THROWS_KIND(synthesize(s, Protocol::SystemI, t, SynthesisConfig::uniform(4, 0.0)),
                      ErrorKind::InvalidDocument);
    CHECK_THROWS_KIND(synthesize(s, Protocol::SystemI, t, SynthesisConfig::uniform(3, 0.1)),
                      ErrorKind::InvalidDocument);
    CHECK_THROWS_KIND(synthesize(s, Protocol::SystemII, t, SynthesisConfig::uniform(4, 0.1)),
                      ErrorKind::IncompatibleProtocol);
  }

  TEST_CASE("fidelity") {
    const auto a = QuantumState::ground(2);
    const auto b = QuantumState::basis(2, 2);
    CHECK(fidelity(a, a) == 1.0);
    CHECK(fidelity(a, b) == 0.0);
    const auto psi = testkit::random_target(4, 2);
    for (double phi : {0.3, 1.0, 2.5, -4.0}) {
      const auto rotated = unchecked_state(std::polar(1.0, phi) * psi.amplitudes());
      CHECK(fidelity(psi, rotated) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_KIND(fidelity(a, unchecked_state(Eigen::VectorXcd::Ones(2))),
                      ErrorKind::UnnormalizedInput);
  }
}
