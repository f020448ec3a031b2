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

#include "alphaz/transform.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace alphaz {

namespace {
// "Effectively zero in double precision" guard for the Moebius pole.
constexpr double kSingularityFloor = 1e-300;
}  // namespace

std::complex<double> s_to_z_point(std::complex<double> s, AlphaParam alpha,
                                  SampleSpec sample) {
  const double a = alpha.value;
  const double T = sample.T;
  const std::complex<double> den = 1.0 - s * (a * T);
  if (std::abs(den) < kSingularityFloor)
    throw MapSingularity("s_to_z_point: 1 - s*alpha*T vanishes");
  return (1.0 + s * ((1.0 - a) * T)) / den;
}

std::complex<double> z_to_s_point(std::complex<double> z, AlphaParam alpha,
                                  SampleSpec sample) {
  const double a = alpha.value;
  const std::complex<double> den = a * z + (1.0 - a);
  if (std::abs(den) < kSingularityFloor)
    throw MapSingularity("z_to_s_point: alpha*z + 1 - alpha vanishes");
  return (z - 1.0) / (sample.T * den);
}

DiscreteTransferFunction alpha_substitute(const ContinuousTransferFunction& h,
                                          AlphaParam alpha, SampleSpec sample) {
  const double a = alpha.value;
  const double T = sample.T;
  const int n = std::max(h.num.degree(), h.den.degree());

  const Polynomial p{-1.0, 1.0};                      // z - 1
  const Polynomial q{T * (1.0 - a), T * a};           // T (alpha z + 1 - alpha)

  // Powers P^k and Q^k for k = 0..n, computed once.
  std::vector<Polynomial> p_pow(static_cast<std::size_t>(n) + 1);
  std::vector<Polynomial> q_pow(static_cast<std::size_t>(n) + 1);
  p_pow[0] = Polynomial{1.0};
  q_pow[0] = Polynomial{1.0};
  for (int k = 1; k <= n; ++k) {
    p_pow[static_cast<std::size_t>(k)] = p_pow[static_cast<std::size_t>(k - 1)] * p;
    q_pow[static_cast<std::size_t>(k)] = q_pow[static_cast<std::size_t>(k - 1)] * q;
  }

  auto substitute = [&](const Polynomial& coeffs) {
    Polynomial acc;  // zero
    for (int k = 0; k <= coeffs.degree(); ++k) {
      const double c = coeffs[static_cast<std::size_t>(k)];
      if (c == 0.0) continue;
      acc = add_scaled(acc,
                       p_pow[static_cast<std::size_t>(k)] *
                           q_pow[static_cast<std::size_t>(n - k)],
                       c);
    }
    return acc;
  };

  Polynomial num_z = substitute(h.num);
  Polynomial den_z = substitute(h.den);
  if (den_z.is_zero())
    throw DegenerateDenominator("alpha_substitute: z-domain denominator is zero");
  return DiscreteTransferFunction(std::move(num_z), std::move(den_z), sample,
                                  alpha);
}

StabilityDisk stability_disk(AlphaParam alpha) {
  const double a = alpha.value;
  if (std::abs(a) < kSingularityFloor)
    throw AlphaZero("stability_disk: undefined at alpha = 0");
  const double center = 1.0 - 1.0 / (2.0 * a);
  const double radius = std::abs(1.0 / (2.0 * a));
  // s = 0 maps to z = 1 for every alpha, so one crossing is exactly 1.
  const double other = 1.0 - 1.0 / a;
  return StabilityDisk{center, radius, std::min(1.0, other),
                       std::max(1.0, other)};
}

bool disk_within_unit_circle(const StabilityDisk& d) {
  return std::abs(d.center) + d.radius <= 1.0 + 1e-12;
}

AlphaParam to_alpha(Method method, std::optional<double> param) {
  switch (method) {
    case Method::euler:
      return AlphaParam(1.0);
    case Method::tustin:
      return AlphaParam(0.5);
    case Method::kim: {
      if (!param) throw MissingParam("kim method needs its parameter");
      const double p = *param;
      if (!(p >= 0.0 && p <= 1.0))
        throw ParamOutOfRange("kim parameter must lie in [0, 1]");
      return AlphaParam(1.0 / (1.0 + p));
    }
    case Method::al_alaoui: {
      if (!param) throw MissingParam("al_alaoui method needs its parameter");
      const double p = *param;
      if (!(p >= 0.0 && p <= 1.0))
        throw ParamOutOfRange("al_alaoui parameter must lie in [0, 1]");
      return AlphaParam((1.0 + p) / 2.0);
    }
    case Method::gbt: {
      if (!param) throw MissingParam("gbt method needs its parameter");
      if (!std::isfinite(*param))
        throw ParamOutOfRange("gbt parameter must be finite");
      return AlphaParam(*param);
    }
  }
  throw InvalidArgument("unknown method");
}

}  // namespace alphaz
