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
#include <complex>
#include <numbers>

#include "alphaz/analysis.hpp"
#include "alphaz/systems.hpp"

using namespace alphaz;
using cx = std::complex<double>;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

TEST_CASE("low pass filter") {
  const auto lpf = make_lpf(2400.0);
  const double wc = kTau * 2400.0;
  CHECK(lpf.den == Polynomial{wc, 1.0});
  CHECK(lpf.num == Polynomial{wc});
  CHECK(lpf.den[0] == doctest::Approx(15079.644737231007).epsilon(1e-14));

  CHECK(std::abs(continuous_response(lpf, 1e-9) - cx(1.0)) < 1e-9);
  const double gain_at_fc = std::abs(continuous_response(lpf, 2400.0));
  CHECK(gain_at_fc == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(20.0 * std::log10(gain_at_fc) == doctest::Approx(-3.0103).epsilon(1e-4));

  CHECK_THROWS_AS(make_lpf(0.0), NonPositiveFrequency);
  CHECK_THROWS_AS(make_lpf(-10.0), NonPositiveFrequency);
}

TEST_CASE("pi controller") {
  const auto pure_p = make_pi(1.0, 0.0);
  CHECK(std::abs(continuous_response(pure_p, 123.0) - cx(1.0)) < 1e-15);

  const auto pure_i = make_pi(0.0, 1.0);
  CHECK(pure_i.num == Polynomial{1.0});
  CHECK(pure_i.den == Polynomial{0.0, 1.0});

  const auto pi = make_pi(2.0, 100.0);
  CHECK(pi.num == Polynomial{100.0, 2.0});
  CHECK(pi.den == Polynomial{0.0, 1.0});
  CHECK(pi.proper());  // deg num == deg den
}

TEST_CASE("pr controller") {
  const auto pure_p = make_pr(1.0, 0.0, 50.0);
  CHECK(std::abs(continuous_response(pure_p, 10.0) - cx(1.0)) < 1e-12);

  // Resonance: unbounded magnitude in the pole neighborhood.
  const auto resonant = make_pr(0.0, 1.0, 50.0);
  try {
    const cx r = continuous_response(resonant, 50.0 + 1e-14);
    CHECK(std::abs(r) > 1e12);
  } catch (const PoleOnAxis&) {
    // Landing exactly on the pole is the same demonstration.
    CHECK(true);
  }

  const double w0 = 100.0 * std::numbers::pi;
  const auto pr = make_pr(1.0, 50.0, 50.0);
  CHECK(pr.num == Polynomial{w0 * w0, 50.0, 1.0});
  CHECK(pr.den == Polynomial{w0 * w0, 0.0, 1.0});

  CHECK_THROWS_AS(make_pr(1.0, 1.0, 0.0), NonPositiveFrequency);
}

TEST_CASE("notch filter") {
  const auto notch = make_notch(50.0, 2.0);
  CHECK(std::abs(continuous_response(notch, 50.0)) == 0.0);
  CHECK(std::abs(continuous_response(notch, 50.0 * 1e-8) - cx(1.0)) < 1e-6);
  CHECK(std::abs(std::abs(continuous_response(notch, 50.0 * 1e8)) - 1.0) < 1e-6);

  const double w0 = 100.0 * std::numbers::pi;
  CHECK(notch.den == Polynomial{w0 * w0, w0 / 2.0, 1.0});
  CHECK(notch.num == Polynomial{w0 * w0, 0.0, 1.0});

  CHECK_THROWS_AS(make_notch(0.0, 2.0), NonPositiveFrequency);
  CHECK_THROWS_AS(make_notch(50.0, 0.0), NonPositiveQ);
  CHECK_THROWS_AS(make_notch(50.0, -1.0), NonPositiveQ);
}

TEST_CASE("stability classes of the canonical plants") {
  CHECK(hurwitz_stable(make_lpf(2400.0)) == StabilityClass::stable);
  CHECK(hurwitz_stable(make_notch(50.0, 2.0)) == StabilityClass::stable);
  CHECK(hurwitz_stable(make_pi(1.0, 100.0)) == StabilityClass::marginal);
  CHECK(hurwitz_stable(make_pr(1.0, 100.0, 50.0)) == StabilityClass::marginal);
}

TEST_CASE("plant spec dispatch with defaults") {
  PlantSpec spec;
  spec.kind = PlantKind::notch;
  const auto h = spec.make();
  CHECK(h.den.degree() == 2);
  CHECK(std::abs(continuous_response(h, 50.0)) == 0.0);

  spec.kind = PlantKind::lpf;
  CHECK(spec.make().den[0] == doctest::Approx(kTau * 2400.0));
}
