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

#include "alphaz/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace alphaz {

namespace {

constexpr double kPoleFloor = 1e-300;
constexpr double kPi = std::numbers::pi;

double to_db(double magnitude) { return 20.0 * std::log10(magnitude); }
double to_deg(double radians) { return radians * (180.0 / kPi); }

// Principal-value difference in degrees, wrapped to (-180, 180].
double wrap_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w <= -180.0) w += 360.0;
  if (w > 180.0) w -= 360.0;
  return w;
}

// Grid-ordered unwrap: removes artificial +-360 jumps between neighbors.
void unwrap_deg(std::vector<double>& phases) {
  for (std::size_t i = 1; i < phases.size(); ++i) {
    const double jump = std::round((phases[i] - phases[i - 1]) / 360.0);
    phases[i] -= 360.0 * jump;
  }
}

}  // namespace

FrequencyGrid::FrequencyGrid(std::vector<double> points_hz)
    : points_(std::move(points_hz)) {
  if (points_.size() < 2)
    throw InvalidArgument("frequency grid needs at least 2 points");
  double prev = 0.0;
  for (double f : points_) {
    if (!(f > prev) || !std::isfinite(f))
      throw InvalidArgument("frequency grid must be positive and strictly increasing");
    prev = f;
  }
}

FrequencyGrid FrequencyGrid::log_spaced(double f_min, double f_max,
                                        std::size_t n) {
  if (!(f_min > 0.0) || !(f_max > f_min))
    throw InvalidArgument("log grid needs 0 < f_min < f_max");
  if (n < 2) throw InvalidArgument("grid needs at least 2 points");
  std::vector<double> pts(n);
  const double ratio = f_max / f_min;
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = f_min * std::pow(ratio, static_cast<double>(i) /
                                         static_cast<double>(n - 1));
  pts.front() = f_min;
  pts.back() = f_max;
  return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::linear_spaced(double f_min, double f_max,
                                           std::size_t n) {
  if (!(f_min > 0.0) || !(f_max > f_min))
    throw InvalidArgument("linear grid needs 0 < f_min < f_max");
  if (n < 2) throw InvalidArgument("grid needs at least 2 points");
  std::vector<double> pts(n);
  const double step = (f_max - f_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = f_min + step * static_cast<double>(i);
  pts.front() = f_min;
  pts.back() = f_max;
  return FrequencyGrid(std::move(pts));
}

std::complex<double> continuous_response(const ContinuousTransferFunction& h,
                                         double f_hz) {
  const std::complex<double> s(0.0, 2.0 * kPi * f_hz);
  const std::complex<double> den = h.den.eval(s);
  if (std::abs(den) < kPoleFloor)
    throw PoleOnAxis("continuous_response: pole at j*2*pi*f");
  return h.num.eval(s) / den;
}

std::complex<double> discrete_response(const DiscreteTransferFunction& h,
                                       double f_hz) {
  if (!(f_hz > 0.0) || !(f_hz < h.sample.f_nyquist()))
    throw FrequencyOutOfRange("discrete_response: f must lie in (0, f_nyquist)");
  const double theta = 2.0 * kPi * f_hz * h.sample.T;
  const std::complex<double> z = std::polar(1.0, theta);
  const std::complex<double> den = h.den.eval(z);
  if (std::abs(den) < kPoleFloor)
    throw PoleOnCircle("discrete_response: pole on the unit circle at this frequency");
  return h.num.eval(z) / den;
}

DistortionProfile distortion_profile(const ContinuousTransferFunction& h,
                                     AlphaParam alpha, SampleSpec sample,
                                     const FrequencyGrid& grid) {
  if (grid.points().back() >= sample.f_nyquist())
    throw FrequencyOutOfRange("distortion_profile: grid exceeds f_nyquist");

  const DiscreteTransferFunction hd = alpha_substitute(h, alpha, sample);
  const std::size_t n = grid.size();

  std::vector<double> amp_a(n), amp_d(n), ph_a(n), ph_d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = grid.points()[i];
    const std::complex<double> ra = continuous_response(h, f);
    const std::complex<double> rd = discrete_response(hd, f);
    amp_a[i] = to_db(std::abs(ra));  // -inf at exact zeros, by design
    amp_d[i] = to_db(std::abs(rd));
    ph_a[i] = to_deg(std::arg(ra));
    ph_d[i] = to_deg(std::arg(rd));
  }
  unwrap_deg(ph_a);
  unwrap_deg(ph_d);

  DistortionProfile profile{{}, alpha, sample};
  profile.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    profile.records.push_back({grid.points()[i], amp_a[i], amp_d[i],
                               amp_d[i] - amp_a[i], ph_a[i], ph_d[i],
                               ph_d[i] - ph_a[i]});
  }
  return profile;
}

double aggregate(const DistortionProfile& profile, Objective objective,
                 Metric metric) {
  if (profile.records.empty())
    throw InvalidArgument("aggregate: empty profile");
  double max_abs = 0.0;
  double sum_sq = 0.0;
  for (const auto& r : profile.records) {
    const double err =
        objective == Objective::amplitude ? r.amp_err_db : r.phase_err_deg;
    max_abs = std::max(max_abs, std::abs(err));
    sum_sq += err * err;
  }
  if (metric == Metric::max_abs) return max_abs;
  return std::sqrt(sum_sq / static_cast<double>(profile.records.size()));
}

namespace {

// Golden-section minimization on [a, b] down to the requested width.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double width) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

AlphaSearchResult search_alpha(const ContinuousTransferFunction& h,
                               SampleSpec sample, const FrequencyGrid& grid,
                               Objective objective, Metric metric, double lo,
                               double hi) {
  if (!(lo < hi)) throw ParamOutOfRange("search_alpha: need lo < hi");

  const auto evaluate = [&](double a) {
    return aggregate(distortion_profile(h, AlphaParam(a), sample, grid),
                     objective, metric);
  };

  constexpr double kCoarseStep = 0.01;
  std::vector<std::pair<double, double>> trace;
  for (std::size_t i = 0;; ++i) {
    double a = lo + kCoarseStep * static_cast<double>(i);
    if (a > hi - kCoarseStep / 2.0) a = hi;
    trace.emplace_back(a, evaluate(a));
    if (a == hi) break;
  }

  std::size_t best = 0;
  double vmin = trace.front().second;
  double vmax = trace.front().second;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    vmin = std::min(vmin, trace[i].second);
    vmax = std::max(vmax, trace[i].second);
    if (trace[i].second < trace[best].second) best = i;
  }

  if (vmax - vmin < 1e-12) {
    // Objective insensitive to alpha over the scanned interval.
    return AlphaSearchResult{lo, evaluate(lo), metric, objective,
                             std::move(trace), true};
  }

  const double bracket_lo = best == 0 ? lo : trace[best - 1].first;
  const double bracket_hi =
      best + 1 == trace.size() ? hi : trace[best + 1].first;
  const double alpha_star = golden_min(evaluate, bracket_lo, bracket_hi, 1e-4);
  return AlphaSearchResult{alpha_star, evaluate(alpha_star), metric, objective,
                           std::move(trace), false};
}

ExclusionReport exclusion_scan(const ContinuousTransferFunction& h,
                               SampleSpec sample,
                               const FrequencyGrid& freq_grid, double alpha_lo,
                               double alpha_hi, double alpha_step) {
  if (!(alpha_lo < alpha_hi)) throw ParamOutOfRange("exclusion_scan: need alpha_lo < alpha_hi");
  if (!(alpha_step > 0.0)) throw ParamOutOfRange("exclusion_scan: need alpha_step > 0");
  if (freq_grid.points().back() >= sample.f_nyquist())
    throw FrequencyOutOfRange("exclusion_scan: grid exceeds f_nyquist");

  std::vector<double> alphas;
  for (std::size_t i = 0;; ++i) {
    const double a = alpha_lo + alpha_step * static_cast<double>(i);
    if (a > alpha_hi + alpha_step * 1e-9) break;
    alphas.push_back(a);
  }

  const std::size_t nf = freq_grid.size();
  const std::size_t na = alphas.size();
  const double inf = std::numeric_limits<double>::infinity();

  // |amp err| and |phase err| per (alpha, frequency); singular evaluations
  // poison the whole frequency column.
  std::vector<std::vector<double>> aerr(na, std::vector<double>(nf));
  std::vector<std::vector<double>> perr(na, std::vector<double>(nf));
  std::vector<bool> singular(nf, false);

  std::vector<std::complex<double>> analog(nf);
  for (std::size_t j = 0; j < nf; ++j) {
    try {
      analog[j] = continuous_response(h, freq_grid.points()[j]);
    } catch (const Error&) {
      singular[j] = true;
    }
  }

  for (std::size_t i = 0; i < na; ++i) {
    const DiscreteTransferFunction hd =
        alpha_substitute(h, AlphaParam(alphas[i]), sample);
    for (std::size_t j = 0; j < nf; ++j) {
      if (singular[j]) continue;
      std::complex<double> rd;
      try {
        rd = discrete_response(hd, freq_grid.points()[j]);
      } catch (const Error&) {
        singular[j] = true;
        continue;
      }
      aerr[i][j] = std::abs(to_db(std::abs(rd)) - to_db(std::abs(analog[j])));
      perr[i][j] =
          std::abs(wrap_deg(to_deg(std::arg(rd)) - to_deg(std::arg(analog[j]))));
    }
  }

  ExclusionReport report{{}, {0, 0, 0, std::nullopt}, alpha_lo, alpha_hi,
                         alpha_step};
  report.records.reserve(nf);

  for (std::size_t j = 0; j < nf; ++j) {
    ExclusionRecord rec{};
    rec.f_hz = freq_grid.points()[j];
    if (singular[j]) {
      rec.degenerate = true;
      rec.alpha_amp_argmin = rec.alpha_phase_argmin = std::nan("");
      rec.amp_min_db = rec.phase_min_deg = std::nan("");
      report.records.push_back(rec);
      ++report.summary.n_degenerate;
      continue;
    }

    std::size_t ia = 0, ip = 0;
    double amp_lo = inf, amp_hi = -inf, ph_lo = inf, ph_hi = -inf;
    for (std::size_t i = 0; i < na; ++i) {
      if (aerr[i][j] < aerr[ia][j]) ia = i;
      if (perr[i][j] < perr[ip][j]) ip = i;
      amp_lo = std::min(amp_lo, aerr[i][j]);
      amp_hi = std::max(amp_hi, aerr[i][j]);
      ph_lo = std::min(ph_lo, perr[i][j]);
      ph_hi = std::max(ph_hi, perr[i][j]);
    }

    // All-alpha tie in both columns (constant plants): argmin is meaningless.
    if (amp_hi - amp_lo < 1e-15 && ph_hi - ph_lo < 1e-15) {
      rec.degenerate = true;
      rec.alpha_amp_argmin = rec.alpha_phase_argmin = std::nan("");
      rec.amp_min_db = rec.phase_min_deg = std::nan("");
      report.records.push_back(rec);
      ++report.summary.n_degenerate;
      continue;
    }

    rec.alpha_amp_argmin = alphas[ia];
    rec.alpha_phase_argmin = alphas[ip];
    rec.amp_min_db = aerr[ia][j];
    rec.phase_min_deg = perr[ip][j];
    rec.coincident = std::abs(rec.alpha_amp_argmin - rec.alpha_phase_argmin) <=
                     alpha_step * (1.0 + 1e-9);
    rec.degenerate = false;
    report.records.push_back(rec);
    ++report.summary.n_total;
    if (rec.coincident) ++report.summary.n_coincident;
  }

  if (report.summary.n_total > 0)
    report.summary.hypothesis_consistent = report.summary.n_coincident == 0;
  return report;
}

StabilityClass hurwitz_stable(const ContinuousTransferFunction& h) {
  if (h.den.degree() == 0) return StabilityClass::stable;  // no poles
  const auto poles = roots(h.den);
  double scale = 1.0;
  for (const auto& p : poles) scale = std::max(scale, std::abs(p));
  const double tol = 1e-9 * scale;
  bool marginal = false;
  for (const auto& p : poles) {
    if (p.real() > tol) return StabilityClass::unstable;
    if (p.real() >= -tol) marginal = true;
  }
  return marginal ? StabilityClass::marginal : StabilityClass::stable;
}

DiscretizationVerdict discretization_stable(const ContinuousTransferFunction& h,
                                            AlphaParam alpha,
                                            SampleSpec sample) {
  const DiscreteTransferFunction hd = alpha_substitute(h, alpha, sample);
  DiscretizationVerdict verdict{true, {}, {}};
  if (hd.den.degree() == 0) return verdict;  // no poles
  verdict.poles = roots(hd.den);
  verdict.pole_moduli.reserve(verdict.poles.size());
  for (const auto& p : verdict.poles) {
    const double m = std::abs(p);
    verdict.pole_moduli.push_back(m);
    if (!(m < 1.0 - 1e-9)) verdict.schur_stable = false;
  }
  return verdict;
}

const char* objective_name(Objective o) {
  return o == Objective::amplitude ? "amplitude" : "phase";
}

const char* metric_name(Metric m) {
  return m == Metric::max_abs ? "max_abs" : "rms";
}

const char* stability_class_name(StabilityClass c) {
  switch (c) {
    case StabilityClass::stable:
      return "stable";
    case StabilityClass::marginal:
      return "marginal";
    case StabilityClass::unstable:
      return "unstable";
  }
  return "?";
}

}  // namespace alphaz
