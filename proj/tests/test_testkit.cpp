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
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "qcycle/testkit.hpp"
#include "test_support.hpp"

using namespace qcycle;
using qcycle::test::max_diff;

namespace {

Eigen::MatrixXcd random_hermitian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index k = 0; k < a.size(); ++k) a(k) = Complex(normal(rng), normal(rng));
  return 0.5 * (a + a.adjoint());
}

Eigen::MatrixXcd spectral_exponential(const Eigen::MatrixXcd& h, double t, double hbar) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::exp(Complex(0, -es.eigenvalues()(k) * t / hbar));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST_SUITE("testkit") {
  TEST_CASE("random_target is deterministic and normalized") {
    const auto a = testkit::random_target(6, 99);
    const auto b = testkit::random_target(6, 99);
    const auto c = testkit::random_target(6, 100);
    CHECK(max_diff(a.amplitudes(), b.amplitudes()) == 0.0);
    CHECK(max_diff(a.amplitudes(), c.amplitudes()) > 0.0);
    CHECK(std::abs(a.norm() - 1.0) <= 1e-14);
  }

  TEST_CASE("random_target is Haar-like in its first population") {
    double sum = 0.0;
    for (testkit::Seed seed = 1; seed <= 1000; ++seed) {
      sum += std::norm(testkit::random_target(4, seed).amplitude(1));
    }
    const double mean = sum / 1000.0;
    CHECK(mean >= 0.15);
    CHECK(mean <= 0.35);
  }

  TEST_CASE("random spectra and schedules") {
    for (auto p : {Protocol::SystemI, Protocol::SystemII}) {
      for (std::size_t n = 2; n <= 8; ++n) {
        const auto s = testkit::random_spectrum(p, n, 7 * n);
        CHECK(s.dimension() == n);
        CHECK(classify_gaps(s).supports(p));
        const auto sched = testkit::random_schedule(s, p, 11 * n);
        CHECK(sched.cycles().size() == n - 1);
        for (const auto& c : sched.cycles()) {
          CHECK(c.angle(s.hbar()) >= 0.0);
          CHECK(c.angle(s.hbar()) <= std::numbers::pi / 2 + 1e-12);
          CHECK(c.tau_prime >= 0.0);
          CHECK(c.tau_prime <= 5.0);
        }
      }
    }
  }

  TEST_CASE("matrix exponential oracle") {
    const auto zero = Eigen::MatrixXcd::Zero(4, 4).eval();
    CHECK(max_diff(testkit::matrix_exponential_oracle(zero, 3.0),
                   Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto h = random_hermitian(5, seed);
      const double t = 0.37 * static_cast<double>(seed);
      const auto u = testkit::matrix_exponential_oracle(h, t, 0.8);
      CHECK(max_diff(u.adjoint() * u, Eigen::MatrixXcd::Identity(5, 5)) <= 1e-12);
      CHECK(max_diff(u, spectral_exponential(h, t, 0.8)) <= 1e-11);
    }
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_KIND(testkit::matrix_exponential_oracle(bad, 1.0),
                      ErrorKind::NonHermitianInput);
  }

  TEST_CASE("dense oracle agrees with the analytic propagator") {
    const auto ground = [](std::size_t n) { return QuantumState::ground(n); };
    for (auto p : {Protocol::SystemI, Protocol::SystemII}) {
      for (std::size_t n = 2; n <= 6; ++n) {
        for (testkit::Seed seed = 1; seed <= 40; ++seed) {
          const auto s = testkit::random_spectrum(p, n, seed);
          const auto sched = testkit::random_schedule(s, p, seed + 1000);
          const auto dense = testkit::dense_schedule_oracle(s, sched);
          const auto fast = run_schedule(s, sched, ground(n)).final_state;
          CHECK(max_diff(dense.amplitudes(), fast.amplitudes()) <= 1e-11);
        }
      }
    }
  }

  TEST_CASE("rwa_cycle_hamiltonian couples the protocol pair") {
    const auto star = testkit::rwa_cycle_hamiltonian(Protocol::SystemI, 4, 3, 0.6);
    CHECK(star(0, 3) == Complex(0.3, 0));
    CHECK(star(3, 0) == Complex(0.3, 0));
    CHECK(star.cwiseAbs().sum() == doctest::Approx(0.6));
    const auto ladder = testkit::rwa_cycle_hamiltonian(Protocol::SystemII, 4, 3, 0.6);
    CHECK(ladder(2, 3) == Complex(0.3, 0));
  }
}
