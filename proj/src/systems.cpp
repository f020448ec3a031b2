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

#include "alphaz/systems.hpp"

#include <cmath>
#include <numbers>

namespace alphaz {

namespace {
double angular(double f_hz) { return 2.0 * std::numbers::pi * f_hz; }
}  // namespace

ContinuousTransferFunction make_lpf(double fc_hz) {
  if (!(fc_hz > 0.0))
    throw NonPositiveFrequency("lpf: crossing frequency must be > 0");
  const double wc = angular(fc_hz);
  return {Polynomial{wc}, Polynomial{wc, 1.0}};
}

ContinuousTransferFunction make_pi(double kp, double ki) {
  if (!std::isfinite(kp) || !std::isfinite(ki))
    throw InvalidArgument("pi: gains must be finite");
  return {Polynomial{ki, kp}, Polynomial{0.0, 1.0}};
}

ContinuousTransferFunction make_pr(double kp, double kr, double f0_hz) {
  if (!(f0_hz > 0.0))
    throw NonPositiveFrequency("pr: resonant frequency must be > 0");
  if (!std::isfinite(kp) || !std::isfinite(kr))
    throw InvalidArgument("pr: gains must be finite");
  const double w0 = angular(f0_hz);
  // kp + kr s / (s^2 + w0^2) over the common denominator.
  return {Polynomial{kp * w0 * w0, kr, kp}, Polynomial{w0 * w0, 0.0, 1.0}};
}

ContinuousTransferFunction make_notch(double f0_hz, double q) {
  if (!(f0_hz > 0.0))
    throw NonPositiveFrequency("notch: center frequency must be > 0");
  if (!(q > 0.0)) throw NonPositiveQ("notch: Q must be > 0");
  const double w0 = angular(f0_hz);
  return {Polynomial{w0 * w0, 0.0, 1.0}, Polynomial{w0 * w0, w0 / q, 1.0}};
}

ContinuousTransferFunction PlantSpec::make() const {
  switch (kind) {
    case PlantKind::lpf:
      return make_lpf(fc);
    case PlantKind::pi:
      return make_pi(kp, ki);
    case PlantKind::pr:
      return make_pr(kp, kr, f0);
    case PlantKind::notch:
      return make_notch(f0, q);
  }
  throw InvalidArgument("unknown plant kind");
}

const char* plant_kind_name(PlantKind kind) {
  switch (kind) {
    case PlantKind::lpf:
      return "lpf";
    case PlantKind::pi:
      return "pi";
    case PlantKind::pr:
      return "pr";
    case PlantKind::notch:
      return "notch";
  }
  return "?";
}

}  // namespace alphaz
