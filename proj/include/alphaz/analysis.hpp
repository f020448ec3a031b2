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
#include <vector>

#include "alphaz/transform.hpp"

namespace alphaz {

/// Strictly increasing evaluation frequencies in Hz. Positivity and ordering
/// are checked here; the Nyquist bound is checked where a SampleSpec is known.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> points_hz);

  static FrequencyGrid log_spaced(double f_min, double f_max, std::size_t n);
  static FrequencyGrid linear_spaced(double f_min, double f_max, std::size_t n);

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<double> points_;
};

/// One grid point of a distortion profile. Errors are discrete minus analog,
/// amplitudes in dB, phases in degrees after grid-ordered unwrapping.
struct DistortionRecord {
  double f_hz;
  double amp_analog_db;
  double amp_discrete_db;
  double amp_err_db;
  double phase_analog_deg;
  double phase_discrete_deg;
  double phase_err_deg;
};

struct DistortionProfile {
  std::vector<DistortionRecord> records;
  AlphaParam alpha;
  SampleSpec sample;
};

enum class Objective { amplitude, phase };
enum class Metric { max_abs, rms };

struct AlphaSearchResult {
  double alpha_star;
  double objective_value;  // dB or degrees, the metric at alpha_star
  Metric metric;
  Objective objective;
  std::vector<std::pair<double, double>> trace;  // coarse scan (alpha, value)
  bool degenerate;  // objective insensitive to alpha over the scan
};

/// Per-frequency argmin records of an exclusion scan. A frequency is
/// degenerate when a response was singular there or when both error columns
/// tie across the whole alpha grid; degenerate rows are excluded from the
/// summary.
struct ExclusionRecord {
  double f_hz;
  double alpha_amp_argmin;
  double alpha_phase_argmin;
  double amp_min_db;
  double phase_min_deg;
  bool coincident;
  bool degenerate;
};

struct ExclusionSummary {
  std::size_t n_coincident;
  std::size_t n_total;       // non-degenerate frequencies
  std::size_t n_degenerate;
  std::optional<bool> hypothesis_consistent;  // nullopt: not applicable
};

struct ExclusionReport {
  std::vector<ExclusionRecord> records;
  ExclusionSummary summary;
  double alpha_lo;
  double alpha_hi;
  double alpha_step;
};

enum class StabilityClass { stable, marginal, unstable };

struct DiscretizationVerdict {
  bool schur_stable;  // all pole moduli < 1 - 1e-9
  std::vector<std::complex<double>> poles;
  std::vector<double> pole_moduli;
};

/// H(j 2 pi f). Throws PoleOnAxis when the denominator vanishes there.
std::complex<double> continuous_response(const ContinuousTransferFunction& h,
                                         double f_hz);

/// H(e^{j 2 pi f T}) for 0 < f < f_nyquist. Throws FrequencyOutOfRange /
/// PoleOnCircle.
std::complex<double> discrete_response(const DiscreteTransferFunction& h,
                                       double f_hz);

/// Discretizes h once and tabulates amplitude/phase errors over the grid.
/// Exact response zeros record +-inf dB instead of failing.
DistortionProfile distortion_profile(const ContinuousTransferFunction& h,
                                     AlphaParam alpha, SampleSpec sample,
                                     const FrequencyGrid& grid);

/// max_abs or rms of the chosen error column.
double aggregate(const DistortionProfile& profile, Objective objective,
                 Metric metric);

/// Coarse scan at step 0.01 over [lo, hi] followed by golden-section
/// refinement around the best coarse point to a bracket width of 1e-4.
/// degenerate = true (and alpha_star = lo) when the coarse values span
/// less than 1e-12.
AlphaSearchResult search_alpha(const ContinuousTransferFunction& h,
                               SampleSpec sample, const FrequencyGrid& grid,
                               Objective objective, Metric metric,
                               double lo = 0.5, double hi = 1.0);

/// For each frequency independently, the alpha-grid argmin of |amp_err| and
/// of |phase_err| (principal-value phase difference, so each frequency is
/// self-contained). Coincident when the two argmins differ by at most one
/// grid step. Deterministic: ties break toward the lowest alpha.
ExclusionReport exclusion_scan(const ContinuousTransferFunction& h,
                               SampleSpec sample,
                               const FrequencyGrid& freq_grid, double alpha_lo,
                               double alpha_hi, double alpha_step);

/// Pole test of the continuous denominator: stable (all real parts negative),
/// marginal (some on the axis, none positive), unstable. Constant
/// denominators have no poles and report stable.
StabilityClass hurwitz_stable(const ContinuousTransferFunction& h);

/// Poles of the alpha-discretized system and their moduli.
DiscretizationVerdict discretization_stable(const ContinuousTransferFunction& h,
                                            AlphaParam alpha,
                                            SampleSpec sample);

const char* objective_name(Objective o);
const char* metric_name(Metric m);
const char* stability_class_name(StabilityClass c);

}  // namespace alphaz
