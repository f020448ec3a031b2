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

#include "alphaz/timedomain.hpp"

#include <cmath>

namespace alphaz {

double hexagonal_step(double u_prev, double e_prev, double e_now,
                      AlphaParam alpha, SampleSpec sample) {
  const double a = alpha.value;
  const double T = sample.T;
  return (1.0 - a) * e_prev * T + a * e_now * T + u_prev;
}

SampledSignal integrate_sequence(const SampledSignal& e, AlphaParam alpha,
                                 double u0) {
  std::vector<double> out;
  out.reserve(e.samples.size());
  double u = u0;
  double e_prev = 0.0;
  for (double e_now : e.samples) {
    u = hexagonal_step(u, e_prev, e_now, alpha, e.sample);
    out.push_back(u);
    e_prev = e_now;
  }
  return SampledSignal(std::move(out), e.sample, e.start_index);
}

SampledSignal simulate_dtf(const DiscreteTransferFunction& h,
                           const SampledSignal& input) {
  if (input.sample.T != h.sample.T)
    throw SampleRateMismatch("simulate_dtf: signal and system sample periods differ");
  const int m = h.den.degree();
  if (h.num.degree() > m)
    throw NonCausalSystem("simulate_dtf: more zeros than poles");

  const double norm = h.den.leading();
  const std::size_t n = input.samples.size();
  std::vector<double> out(n, 0.0);

  // y[t] = ( sum_k num[k] x[t-(m-k)] - sum_{k<m} den[k] y[t-(m-k)] ) / den[m]
  for (std::size_t t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int k = 0; k <= h.num.degree(); ++k) {
      const long idx = static_cast<long>(t) - (m - k);
      if (idx >= 0) acc += h.num[static_cast<std::size_t>(k)] * input.samples[static_cast<std::size_t>(idx)];
    }
    for (int k = 0; k < m; ++k) {
      const long idx = static_cast<long>(t) - (m - k);
      if (idx >= 0) acc -= h.den[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(idx)];
    }
    out[t] = acc / norm;
  }
  return SampledSignal(std::move(out), input.sample, input.start_index);
}

}  // namespace alphaz
