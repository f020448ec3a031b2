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

#include <vector>

#include "alphaz/transform.hpp"

namespace alphaz {

/// Uniformly sampled real signal. start_index is carried as metadata only.
struct SampledSignal {
  std::vector<double> samples;
  SampleSpec sample;
  int start_index = 0;

  SampledSignal(std::vector<double> s, SampleSpec spec, int start = 0)
      : samples(std::move(s)), sample(spec), start_index(start) {
    if (samples.empty()) throw InvalidArgument("signal must be non-empty");
  }
};

/// One step of the mixed-rectangle integration rule:
///   u = (1 - alpha) e_prev T + alpha e_now T + u_prev.
/// alpha weights the backward rectangle, 1 - alpha the forward one; alpha = 1
/// is the rectangular rule, alpha = 0.5 the trapezoid.
double hexagonal_step(double u_prev, double e_prev, double e_now,
                      AlphaParam alpha, SampleSpec sample);

/// Folds hexagonal_step over the signal. The sample before the first one is
/// taken as 0 (zero initial conditions); u0 seeds the accumulator.
SampledSignal integrate_sequence(const SampledSignal& e, AlphaParam alpha,
                                 double u0);

/// Direct-form difference equation with zero initial conditions, denominator
/// normalized by its leading coefficient. One output sample per input sample.
SampledSignal simulate_dtf(const DiscreteTransferFunction& h,
                           const SampledSignal& input);

}  // namespace alphaz
