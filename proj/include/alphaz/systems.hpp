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

#pragma once

#include "alphaz/transform.hpp"

namespace alphaz {

/// First-order low pass, H(s) = wc / (s + wc), wc = 2 pi fc. Unity DC gain,
/// -3.01 dB at the crossing frequency fc.
ContinuousTransferFunction make_lpf(double fc_hz);

/// H(s) = kp + ki/s = (kp s + ki) / s.
ContinuousTransferFunction make_pi(double kp, double ki);

/// Ideal (undamped) proportional-resonant controller,
/// H(s) = kp + kr s / (s^2 + w0^2), w0 = 2 pi f0.
ContinuousTransferFunction make_pr(double kp, double kr, double f0_hz);

/// H(s) = (s^2 + w0^2) / (s^2 + (w0/Q) s + w0^2): unity gain away from f0,
/// perfect rejection at f0.
ContinuousTransferFunction make_notch(double f0_hz, double q);

enum class PlantKind { lpf, pi, pr, notch };

/// Named plant plus its parameters; defaults are the CLI defaults.
struct PlantSpec {
  PlantKind kind = PlantKind::lpf;
  double fc = 2400.0;  // lpf crossing frequency, Hz
  double kp = 1.0;     // pi / pr proportional gain
  double ki = 100.0;   // pi integral gain, 1/s
  double kr = 100.0;   // pr resonant gain, 1/s
  double f0 = 50.0;    // pr / notch center frequency, Hz
  double q = 2.0;      // notch quality factor

  ContinuousTransferFunction make() const;
};

const char* plant_kind_name(PlantKind kind);

}  // namespace alphaz
