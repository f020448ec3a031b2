// Copyright 2026 The alphaz Authors
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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "alphaz/timedomain.hpp"

using namespace alphaz;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Samples f at t = (k+1) T for k = 0 .. n-1, matching the convention that
// each sample closes one integration step of width T starting from t = 0.
SampledSignal sample_fn(double (*f)(double), double T, std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k)
    s[k] = f(static_cast<double>(k + 1) * T);
  return SampledSignal(std::move(s), SampleSpec(T));
}

double sin_tau(double t) { return std::sin(kTau * t); }

// Max deviation of the running integral from the exact antiderivative of
// sin(2 pi t) over all partial sums.
double integration_error(double T, std::size_t n, double alpha) {
  const auto u = integrate_sequence(sample_fn(sin_tau, T, n), AlphaParam(alpha), 0.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k + 1) * T;
    const double exact = (1.0 - std::cos(kTau * t)) / kTau;
    worst = std::max(worst, std::abs(u.samples[k] - exact));
  }
  return worst;
}

}  // namespace

TEST_CASE("hexagonal step") {
  const SampleSpec t01(0.1);
  // Constant integrand: alpha drops out.
  for (double a : {0.5, 0.63, 1.0})
    CHECK(hexagonal_step(0.0, 1.0, 1.0, AlphaParam(a), t01) ==
          doctest::Approx(0.1).epsilon(1e-14));

  CHECK(hexagonal_step(0.0, 0.0, 1.0, AlphaParam(0.7), SampleSpec(1.0)) == 0.7);

  // alpha = 0.5 reproduces the trapezoid rule.
  CHECK(hexagonal_step(0.0, 1.0, 3.0, AlphaParam(0.5), SampleSpec(2.0)) == 4.0);
}

TEST_CASE("step output is the convex mix of the forward and backward rectangles") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_real_distribution<double> alpha(0.0, 1.0);
  const SampleSpec t(0.05);
  for (int i = 0; i < 500; ++i) {
    const double u = val(rng), ep = val(rng), en = val(rng);
    const double forward = hexagonal_step(u, ep, en, AlphaParam(0.0), t);
    const double backward = hexagonal_step(u, ep, en, AlphaParam(1.0), t);
    const double mixed = hexagonal_step(u, ep, en, AlphaParam(alpha(rng)), t);
    CHECK(mixed >= std::min(forward, backward) - 1e-12);
    CHECK(mixed <= std::max(forward, backward) + 1e-12);
  }
}

TEST_CASE("integrating a constant signal") {
  const SampledSignal ones(std::vector<double>(10, 1.0), SampleSpec(0.1));
  for (double a : {0.5, 0.7, 1.0}) {
    const auto u = integrate_sequence(ones, AlphaParam(a), 0.0);
    REQUIRE(u.samples.size() == 10);
    // First step only sees the backward rectangle (e_prev = 0 convention).
    CHECK(u.samples.front() == doctest::Approx(a * 0.1).epsilon(1e-14));
    CHECK(u.samples.back() ==
          doctest::Approx(1.0 - (1.0 - a) * 0.1).epsilon(1e-12));
  }
  const auto euler = integrate_sequence(ones, AlphaParam(1.0), 0.0);
  CHECK(euler.samples.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("u0 seeds the accumulator") {
  const SampledSignal zeros(std::vector<double>(5, 0.0), SampleSpec(0.1));
  const auto u = integrate_sequence(zeros, AlphaParam(0.5), 2.5);
  for (double v : u.samples) CHECK(v == 2.5);
}

TEST_CASE("one period of a sine integrates to nearly zero at alpha = 0.5") {
  const auto u = integrate_sequence(sample_fn(sin_tau, 1e-3, 1000),
                                    AlphaParam(0.5), 0.0);
  CHECK(std::abs(u.samples.back()) <= 1e-5);
}

TEST_CASE("empirical convergence orders under T halving") {
  // Trapezoid (alpha = 0.5) is second order; every other alpha is first order.
  const double e1 = integration_error(1e-3, 1000, 0.5);
  const double e2 = integration_error(5e-4, 2000, 0.5);
  const double order_05 = std::log2(e1 / e2);
  CHECK(order_05 > 1.8);
  CHECK(order_05 < 2.2);

  for (double a : {0.6, 0.7, 0.8, 0.9, 1.0}) {
    const double f1 = integration_error(1e-3, 1000, a);
    const double f2 = integration_error(5e-4, 2000, a);
    const double order = std::log2(f1 / f2);
    CHECK(order > 0.8);
    CHECK(order < 1.2);
  }
}

TEST_CASE("property: integration is linear in the signal") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const SampleSpec t(0.01);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 100;
    std::vector<double> e1(n), e2(n), mix(n);
    const double a = 2.0, b = -0.5;
    for (std::size_t i = 0; i < n; ++i) {
      e1[i] = val(rng);
      e2[i] = val(rng);
      mix[i] = a * e1[i] + b * e2[i];
    }
    const AlphaParam alpha(0.7);
    const auto u1 = integrate_sequence(SampledSignal(e1, t), alpha, 0.0);
    const auto u2 = integrate_sequence(SampledSignal(e2, t), alpha, 0.0);
    const auto um = integrate_sequence(SampledSignal(mix, t), alpha, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(um.samples[i] - (a * u1.samples[i] + b * u2.samples[i])) <=
            1e-12);
  }
}

TEST_CASE("simulate: identity and pure delay") {
  const SampleSpec t(1e-2);
  std::vector<double> x{1.0, -2.0, 3.0, 0.25};

  const DiscreteTransferFunction identity(Polynomial{1.0}, Polynomial{1.0}, t,
                                          AlphaParam(0.5));
  const auto y = simulate_dtf(identity, SampledSignal(x, t));
  CHECK(y.samples == x);

  const DiscreteTransferFunction delay(Polynomial{1.0}, Polynomial{0.0, 1.0},
                                       t, AlphaParam(0.5));
  const auto z = simulate_dtf(delay, SampledSignal(x, t));
  CHECK(z.samples == std::vector<double>{0.0, 1.0, -2.0, 3.0});
}

TEST_CASE("simulate guards") {
  const SampleSpec t(1e-2);
  const DiscreteTransferFunction h(Polynomial{1.0}, Polynomial{1.0, 1.0}, t,
                                   AlphaParam(0.5));
  CHECK_THROWS_AS(
      simulate_dtf(h, SampledSignal({1.0, 2.0}, SampleSpec(2e-2))),
      SampleRateMismatch);

  const DiscreteTransferFunction acausal(Polynomial{0.0, 0.0, 1.0},
                                         Polynomial{1.0, 1.0}, t,
                                         AlphaParam(0.5));
  CHECK_THROWS_AS(simulate_dtf(acausal, SampledSignal({1.0}, t)),
                  NonCausalSystem);
}

TEST_CASE("master cross-check: the discretized integrator is the recursion") {
  // Simulating alpha_substitute(1/s) must reproduce integrate_sequence
  // sample for sample: the z-domain derivation and the time-domain rule are
  // the same object.
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const ContinuousTransferFunction integ(Polynomial{1.0}, Polynomial{0.0, 1.0});

  for (int trial = 0; trial < 100; ++trial) {
    const SampleSpec t(trial % 2 == 0 ? 1e-2 : 1e-3);
    std::vector<double> e(128);
    for (double& v : e) v = val(rng);
    const SampledSignal sig(e, t);

    for (double a : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
      const auto hd = alpha_substitute(integ, AlphaParam(a), t);
      const auto via_filter = simulate_dtf(hd, sig);
      const auto via_fold = integrate_sequence(sig, AlphaParam(a), 0.0);
      for (std::size_t i = 0; i < e.size(); ++i)
        CHECK(std::abs(via_filter.samples[i] - via_fold.samples[i]) <= 1e-12);
    }
  }
}

TEST_CASE("signals must be non-empty") {
  CHECK_THROWS_AS(SampledSignal({}, SampleSpec(0.1)), InvalidArgument);
}
