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

#include <complex>
#include <optional>
#include <utility>

#include "alphaz/errors.hpp"
#include "alphaz/poly.hpp"

namespace alphaz {

/// Design parameter of the first-order s->z map
///   s = (1/T) (z - 1) / (alpha z + 1 - alpha).
/// alpha = 0.5 is the trapezoidal (Tustin) rule, alpha = 1 the backward
/// difference. Values outside [0.5, 1] are legal to construct; stable_range()
/// flags whether the map keeps the left half plane inside the unit circle.
struct AlphaParam {
  double value;

  explicit AlphaParam(double v) : value(v) {
    if (!std::isfinite(v)) throw InvalidArgument("alpha must be finite");
  }
  bool stable_range() const { return value >= 0.5; }
};

/// Sample period T (> 0) plus the derived rates.
struct SampleSpec {
  double T;

  explicit SampleSpec(double period) : T(period) {
    if (!(period > 0.0) || !std::isfinite(period))
      throw InvalidArgument("sample period must be positive and finite");
  }
  double fs() const { return 1.0 / T; }
  double f_nyquist() const { return 0.5 / T; }
};

/// H(s) = num(s)/den(s). Improper functions (PI, PR controllers) are allowed;
/// proper() just reports the degree relation.
struct ContinuousTransferFunction {
  Polynomial num;
  Polynomial den;

  ContinuousTransferFunction(Polynomial n, Polynomial d)
      : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
      throw InvalidArgument("continuous transfer function: zero denominator");
  }
  bool proper() const { return num.degree() <= den.degree(); }
};

/// H(z) = num(z)/den(z) bound to the sample period it was produced for,
/// with the alpha used kept as provenance.
struct DiscreteTransferFunction {
  Polynomial num;
  Polynomial den;
  SampleSpec sample;
  AlphaParam alpha_used;

  DiscreteTransferFunction(Polynomial n, Polynomial d, SampleSpec s,
                           AlphaParam a)
      : num(std::move(n)), den(std::move(d)), sample(s), alpha_used(a) {
    if (den.is_zero())
      throw InvalidArgument("discrete transfer function: zero denominator");
  }
};

/// Image of the closed left half s-plane in the z-plane: a disk centered on
/// the real axis. Its upper real-axis crossing is 1 exactly (s = 0 maps to
/// z = 1 for every alpha); the lower crossing is 1 - 1/alpha. Both are stored
/// so the exact values survive instead of being recomputed from
/// center +- radius in floating point.
struct StabilityDisk {
  double center;
  double radius;
  double crossing_low;
  double crossing_high;
};

/// z = (1 + s(1-alpha)T) / (1 - s alpha T). Throws MapSingularity at the pole.
std::complex<double> s_to_z_point(std::complex<double> s, AlphaParam alpha,
                                  SampleSpec sample);

/// s = (1/T)(z - 1) / (alpha z + 1 - alpha). Throws MapSingularity at the pole.
std::complex<double> z_to_s_point(std::complex<double> z, AlphaParam alpha,
                                  SampleSpec sample);

/// Substitutes the point map into H(s). With n = max(deg num, deg den) and
/// P = z - 1, Q = T(alpha z + 1 - alpha), every s^k becomes P^k Q^(n-k),
/// clearing denominators uniformly so improper functions work unchanged.
DiscreteTransferFunction alpha_substitute(const ContinuousTransferFunction& h,
                                          AlphaParam alpha, SampleSpec sample);

/// center = 1 - 1/(2 alpha), radius = |1/(2 alpha)|. Throws AlphaZero.
StabilityDisk stability_disk(AlphaParam alpha);

/// True iff the disk lies inside the closed unit disk (|center| + radius <= 1,
/// with a 1e-12 slack); for disks from stability_disk this is alpha >= 0.5.
bool disk_within_unit_circle(const StabilityDisk& d);

/// Published first-order discretization rules expressible as an alpha value.
enum class Method { euler, tustin, kim, al_alaoui, gbt };

/// Converts a method (+ its own parameter, where it has one) to alpha:
/// euler -> 1, tustin -> 0.5, kim -> 1/(1+p) with p in [0,1],
/// al_alaoui -> (1+a)/2 with a in [0,1], gbt -> passthrough.
AlphaParam to_alpha(Method method, std::optional<double> param = std::nullopt);

}  // namespace alphaz
