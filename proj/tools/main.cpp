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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alphaz/analysis.hpp"
#include "alphaz/systems.hpp"
#include "alphaz/timedomain.hpp"
#include "alphaz/transform.hpp"
#include "text_format.hpp"

namespace {

using json = nlohmann::json;
using namespace alphaz;
using cli::fmt17;
using cli::fmt6;
using cli::join17;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

// ---------------------------------------------------------------------------
// Shared option state. Presets fill whatever the user left unset, so every
// value starts as "absent".
// ---------------------------------------------------------------------------

struct CommonOptions {
  std::string preset;

  std::string plant;  // lpf|pi|pr|notch|all
  std::optional<double> fc, kp, ki, kr, f0, q;
  std::string raw_num, raw_den;  // comma separated, ascending

  std::optional<double> alpha;
  std::string method;
  std::optional<double> method_param;

  std::optional<double> fs;
  std::string grid;  // fmin,fmax,n,log|linear

  std::string metric = "max_abs";
  std::string objective = "amplitude";
  std::string format = "csv";
  std::string out;

  std::optional<double> alpha_lo, alpha_hi, alpha_step;
  double u0 = 0.0;
  bool trace = false;
  std::string input;
};

void add_plant_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--plant", o.plant,
                  "Canonical plant: lpf, pi, pr, notch (exclusion also takes 'all')");
  cmd->add_option("--fc", o.fc, "LPF crossing frequency, Hz (default 2400)");
  cmd->add_option("--kp", o.kp, "PI/PR proportional gain (default 1)");
  cmd->add_option("--ki", o.ki, "PI integral gain, 1/s (default 100)");
  cmd->add_option("--kr", o.kr, "PR resonant gain, 1/s (default 100)");
  cmd->add_option("--f0", o.f0, "PR/notch center frequency, Hz (default 50)");
  cmd->add_option("--q", o.q, "Notch quality factor (default 2)");
  cmd->add_option("--num", o.raw_num,
                  "Raw s-domain numerator coefficients, ascending, comma separated");
  cmd->add_option("--den", o.raw_den,
                  "Raw s-domain denominator coefficients, ascending, comma separated");
}

void add_alpha_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--alpha", o.alpha, "Design parameter alpha");
  cmd->add_option("--method", o.method,
                  "euler|tustin|kim|al_alaoui|gbt (alternative to --alpha)");
  cmd->add_option("--param", o.method_param, "Parameter of --method kim|al_alaoui|gbt");
}

void add_output_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output path (default stdout)");
}

// ---------------------------------------------------------------------------
// Preset + default resolution
// ---------------------------------------------------------------------------

void apply_preset(CommonOptions& o) {
  if (o.preset.empty()) return;
  if (o.preset == "fig3") {
    if (o.plant.empty()) o.plant = "lpf";
    if (!o.fc) o.fc = 2400.0;
    if (!o.fs) o.fs = 10000.0;
    if (o.grid.empty()) o.grid = "default";
    return;
  }
  if (o.preset == "section6") {
    if (o.plant.empty()) o.plant = "all";
    if (!o.fs) o.fs = 10000.0;
    if (o.grid.empty()) o.grid = "default200";
    if (!o.alpha_lo) o.alpha_lo = 0.5;
    if (!o.alpha_hi) o.alpha_hi = 1.0;
    if (!o.alpha_step) o.alpha_step = 0.005;
    return;
  }
  throw InvalidArgument("unknown preset '" + o.preset + "' (known: fig3, section6)");
}

std::vector<double> parse_double_list(const std::string& text,
                                      const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument(std::string(what) + ": empty element");
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      throw InvalidArgument(std::string(what) + ": cannot parse '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(std::string(what) + ": empty list");
  return out;
}

PlantSpec plant_spec_from(const CommonOptions& o, PlantKind kind) {
  PlantSpec spec;
  spec.kind = kind;
  if (o.fc) spec.fc = *o.fc;
  if (o.kp) spec.kp = *o.kp;
  if (o.ki) spec.ki = *o.ki;
  if (o.kr) spec.kr = *o.kr;
  if (o.f0) spec.f0 = *o.f0;
  if (o.q) spec.q = *o.q;
  return spec;
}

PlantKind parse_plant_kind(const std::string& name) {
  if (name == "lpf") return PlantKind::lpf;
  if (name == "pi") return PlantKind::pi;
  if (name == "pr") return PlantKind::pr;
  if (name == "notch") return PlantKind::notch;
  throw InvalidArgument("unknown plant '" + name + "'");
}

// Human-readable plant description for output headers.
std::string plant_header(const CommonOptions& o, const std::string& name) {
  if (!o.raw_num.empty() || !o.raw_den.empty())
    return "raw num=" + o.raw_num + " den=" + o.raw_den;
  PlantSpec s = plant_spec_from(o, parse_plant_kind(name));
  switch (s.kind) {
    case PlantKind::lpf:
      return "lpf fc=" + fmt6(s.fc);
    case PlantKind::pi:
      return "pi kp=" + fmt6(s.kp) + " ki=" + fmt6(s.ki);
    case PlantKind::pr:
      return "pr kp=" + fmt6(s.kp) + " kr=" + fmt6(s.kr) + " f0=" + fmt6(s.f0);
    case PlantKind::notch:
      return "notch f0=" + fmt6(s.f0) + " q=" + fmt6(s.q);
  }
  return name;
}

ContinuousTransferFunction resolve_plant(const CommonOptions& o) {
  const bool has_raw = !o.raw_num.empty() || !o.raw_den.empty();
  if (has_raw && !o.plant.empty())
    throw InvalidArgument("give either --plant or --num/--den, not both");
  if (has_raw) {
    if (o.raw_num.empty() || o.raw_den.empty())
      throw InvalidArgument("--num and --den must be given together");
    return {Polynomial(parse_double_list(o.raw_num, "--num")),
            Polynomial(parse_double_list(o.raw_den, "--den"))};
  }
  if (o.plant.empty())
    throw InvalidArgument("no plant: give --plant or --num/--den (or a preset)");
  if (o.plant == "all")
    throw InvalidArgument("--plant all is only valid for the exclusion command");
  return plant_spec_from(o, parse_plant_kind(o.plant)).make();
}

AlphaParam resolve_alpha(const CommonOptions& o) {
  if (o.alpha && !o.method.empty())
    throw InvalidArgument("give either --alpha or --method, not both");
  if (o.alpha) return AlphaParam(*o.alpha);
  if (o.method.empty()) throw InvalidArgument("no alpha: give --alpha or --method");

  Method m;
  if (o.method == "euler") m = Method::euler;
  else if (o.method == "tustin") m = Method::tustin;
  else if (o.method == "kim") m = Method::kim;
  else if (o.method == "al_alaoui") m = Method::al_alaoui;
  else if (o.method == "gbt") m = Method::gbt;
  else throw InvalidArgument("unknown method '" + o.method + "'");

  if ((m == Method::euler || m == Method::tustin) && o.method_param)
    throw InvalidArgument("--method " + o.method + " takes no --param");
  return to_alpha(m, o.method_param);
}

SampleSpec resolve_sample(const CommonOptions& o) {
  if (!o.fs) throw InvalidArgument("missing --fs");
  if (!(*o.fs > 0.0)) throw InvalidArgument("--fs must be positive");
  return SampleSpec(1.0 / *o.fs);
}

FrequencyGrid resolve_grid(const CommonOptions& o, const SampleSpec& sample) {
  std::string spec = o.grid;
  if (spec.empty() || spec == "default")
    return FrequencyGrid::log_spaced(10.0, 0.98 * sample.f_nyquist(), 500);
  if (spec == "default200")
    return FrequencyGrid::log_spaced(10.0, 0.98 * sample.f_nyquist(), 200);

  std::stringstream ss(spec);
  std::string fmin_s, fmax_s, n_s, kind;
  if (!std::getline(ss, fmin_s, ',') || !std::getline(ss, fmax_s, ',') ||
      !std::getline(ss, n_s, ',') || !std::getline(ss, kind, ','))
    throw InvalidArgument("--grid expects fmin,fmax,n,log|linear");
  const double fmin = std::stod(fmin_s);
  const double fmax = std::stod(fmax_s);
  const long n = std::stol(n_s);
  if (n < 2) throw InvalidArgument("--grid needs n >= 2");
  if (!(fmax < sample.f_nyquist()))
    throw FrequencyOutOfRange("--grid fmax must stay below f_nyquist");
  if (kind == "log") return FrequencyGrid::log_spaced(fmin, fmax, static_cast<std::size_t>(n));
  if (kind == "linear")
    return FrequencyGrid::linear_spaced(fmin, fmax, static_cast<std::size_t>(n));
  throw InvalidArgument("--grid spacing must be log or linear");
}

Metric resolve_metric(const CommonOptions& o) {
  if (o.metric == "max_abs") return Metric::max_abs;
  if (o.metric == "rms") return Metric::rms;
  throw InvalidArgument("unknown metric '" + o.metric + "'");
}

Objective resolve_objective(const CommonOptions& o) {
  if (o.objective == "amplitude") return Objective::amplitude;
  if (o.objective == "phase") return Objective::phase;
  throw InvalidArgument("unknown objective '" + o.objective + "'");
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + path + "'");
  f << text;
}

std::string with_plant_suffix(const std::string& path, const std::string& plant) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "_" + plant;
  return path.substr(0, dot) + "_" + plant + path.substr(dot);
}

std::string stability_warning(double alpha) {
  if (alpha >= 0.5) return {};
  return "# warning: alpha " + fmt6(alpha) +
         " is below the stable range [0.5, 1]; the mapped left half plane "
         "exceeds the unit circle\n";
}

json poles_json(const std::vector<std::complex<double>>& poles) {
  json arr = json::array();
  for (const auto& p : poles) arr.push_back({p.real(), p.imag()});
  return arr;
}

std::string poles_text(const std::vector<std::complex<double>>& poles) {
  std::string out;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (i) out += " ";
    out += fmt17(poles[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_discretize(CommonOptions& o) {
  apply_preset(o);
  const auto h = resolve_plant(o);
  const auto alpha = resolve_alpha(o);
  const auto sample = resolve_sample(o);

  const auto hd = alpha_substitute(h, alpha, sample);
  const auto verdict = discretization_stable(h, alpha, sample);

  if (o.format == "json") {
    json doc{{"alpha", alpha.value},
             {"T", sample.T},
             {"order", "ascending"},
             {"num", hd.num.coeffs()},
             {"den", hd.den.coeffs()},
             {"schur_stable", verdict.schur_stable},
             {"pole_moduli", verdict.pole_moduli}};
    if (!alpha.stable_range())
      doc["warning"] = "alpha below the stable range [0.5, 1]";
    write_text(o.out, doc.dump(2) + "\n");
    return kExitOk;
  }

  std::string text;
  text += "# alphaz discretize\n";
  text += "# order: ascending\n";
  text += stability_warning(alpha.value);
  text += "alpha: " + fmt17(alpha.value) + "\n";
  text += "T: " + fmt17(sample.T) + "\n";
  text += "num: " + join17(hd.num.coeffs()) + "\n";
  text += "den: " + join17(hd.den.coeffs()) + "\n";
  text += std::string("schur_stable: ") + (verdict.schur_stable ? "true" : "false") + "\n";
  text += "pole_moduli: " + join17(verdict.pole_moduli) + "\n";
  write_text(o.out, text);
  return kExitOk;
}

int cmd_distortion(CommonOptions& o) {
  apply_preset(o);
  const auto h = resolve_plant(o);
  const auto alpha = resolve_alpha(o);
  const auto sample = resolve_sample(o);
  const auto grid = resolve_grid(o, sample);

  const auto profile = distortion_profile(h, alpha, sample, grid);

  if (o.format == "json") {
    json recs = json::array();
    for (const auto& r : profile.records)
      recs.push_back({{"f_hz", r.f_hz},
                      {"amp_analog_db", r.amp_analog_db},
                      {"amp_discrete_db", r.amp_discrete_db},
                      {"amp_err_db", r.amp_err_db},
                      {"phase_analog_deg", r.phase_analog_deg},
                      {"phase_discrete_deg", r.phase_discrete_deg},
                      {"phase_err_deg", r.phase_err_deg}});
    json doc{{"plant", plant_header(o, o.plant)},
             {"alpha", alpha.value},
             {"fs", sample.fs()},
             {"records", recs}};
    write_text(o.out, doc.dump(2) + "\n");
    return kExitOk;
  }

  std::string text;
  text += "# alphaz distortion\n";
  text += "# plant: " + plant_header(o, o.plant) + "\n";
  text += "# alpha: " + fmt17(alpha.value) + "\n";
  text += "# fs: " + fmt17(sample.fs()) + "\n";
  text += "# convention: err = discrete - analog (dB / unwrapped degrees)\n";
  text += stability_warning(alpha.value);
  text += "f_hz,amp_analog_db,amp_discrete_db,amp_err_db,"
          "phase_analog_deg,phase_discrete_deg,phase_err_deg\n";
  for (const auto& r : profile.records) {
    text += fmt17(r.f_hz) + "," + fmt17(r.amp_analog_db) + "," +
            fmt17(r.amp_discrete_db) + "," + fmt17(r.amp_err_db) + "," +
            fmt17(r.phase_analog_deg) + "," + fmt17(r.phase_discrete_deg) +
            "," + fmt17(r.phase_err_deg) + "\n";
  }
  write_text(o.out, text);
  return kExitOk;
}

int cmd_search(CommonOptions& o) {
  apply_preset(o);
  const auto h = resolve_plant(o);
  const auto sample = resolve_sample(o);
  const auto grid = resolve_grid(o, sample);
  const auto metric = resolve_metric(o);
  const auto objective = resolve_objective(o);
  const double lo = o.alpha_lo.value_or(0.5);
  const double hi = o.alpha_hi.value_or(1.0);

  const auto result = search_alpha(h, sample, grid, objective, metric, lo, hi);

  json doc{{"alpha_star", result.alpha_star},
           {"objective_value", result.objective_value},
           {"metric", metric_name(result.metric)},
           {"objective", objective_name(result.objective)},
           {"interval", {lo, hi}},
           {"degenerate", result.degenerate}};
  if (lo < 0.5)
    doc["warning"] = "search interval extends below the stable range [0.5, 1]";
  if (o.trace) {
    json tr = json::array();
    for (const auto& [a, v] : result.trace) tr.push_back({a, v});
    doc["trace"] = tr;
  }
  write_text(o.out, doc.dump(2) + "\n");
  return result.degenerate ? kExitDegenerate : kExitOk;
}

json summary_json(const ExclusionSummary& s) {
  json out{{"n_coincident", s.n_coincident},
           {"n_total", s.n_total},
           {"n_degenerate", s.n_degenerate}};
  if (s.hypothesis_consistent.has_value())
    out["hypothesis_consistent"] = *s.hypothesis_consistent;
  else
    out["hypothesis_consistent"] = "not_applicable";
  return out;
}

int cmd_exclusion(CommonOptions& o) {
  apply_preset(o);
  const auto sample = resolve_sample(o);
  const auto grid = resolve_grid(o, sample);
  const double lo = o.alpha_lo.value_or(0.5);
  const double hi = o.alpha_hi.value_or(1.0);
  const double step = o.alpha_step.value_or(0.005);

  std::vector<std::string> plants;
  const bool has_raw = !o.raw_num.empty() || !o.raw_den.empty();
  if (o.plant == "all") {
    plants = {"lpf", "pi", "pr", "notch"};
  } else {
    plants = {o.plant};  // may be empty; resolve_plant will complain for raw-less
  }

  std::string combined;
  for (std::size_t pi_ = 0; pi_ < plants.size(); ++pi_) {
    const std::string& name = plants[pi_];
    ContinuousTransferFunction h =
        (o.plant == "all")
            ? plant_spec_from(o, parse_plant_kind(name)).make()
            : resolve_plant(o);
    const std::string header = (o.plant == "all" || !has_raw)
                                   ? plant_header(o, name)
                                   : plant_header(o, o.plant);

    const auto report = exclusion_scan(h, sample, grid, lo, hi, step);

    if (o.format == "json") {
      json recs = json::array();
      for (const auto& r : report.records)
        recs.push_back({{"f_hz", r.f_hz},
                        {"alpha_amp_argmin", r.alpha_amp_argmin},
                        {"alpha_phase_argmin", r.alpha_phase_argmin},
                        {"amp_min_db", r.amp_min_db},
                        {"phase_min_deg", r.phase_min_deg},
                        {"coincident", r.coincident},
                        {"degenerate", r.degenerate}});
      json doc{{"plant", header},
               {"alpha_grid", {lo, hi, step}},
               {"records", recs},
               {"summary", summary_json(report.summary)}};
      const std::string text = doc.dump(2) + "\n";
      if (plants.size() > 1 && !o.out.empty())
        write_text(with_plant_suffix(o.out, name), text);
      else
        combined += text;
      continue;
    }

    std::string text;
    text += "# alphaz exclusion\n";
    text += "# plant: " + header + "\n";
    text += "# fs: " + fmt17(sample.fs()) + "\n";
    text += "# alpha_grid: " + fmt17(lo) + "," + fmt17(hi) + "," + fmt17(step) + "\n";
    text += "# convention: per-frequency argmin of |err|; phase uses the principal value\n";
    text += "f_hz,alpha_amp_argmin,alpha_phase_argmin,coincident\n";
    for (const auto& r : report.records) {
      text += fmt17(r.f_hz) + "," + fmt17(r.alpha_amp_argmin) + "," +
              fmt17(r.alpha_phase_argmin) + "," +
              (r.coincident ? "1" : "0") + "\n";
    }
    text += "# summary: " + summary_json(report.summary).dump() + "\n";

    if (plants.size() > 1 && !o.out.empty())
      write_text(with_plant_suffix(o.out, name), text);
    else {
      combined += text;
      if (pi_ + 1 < plants.size()) combined += "\n";
    }
  }

  if (!combined.empty() || o.out.empty()) write_text(o.out, combined);
  return kExitOk;  // the tool reports; it never asserts the hypothesis
}

int cmd_stability(CommonOptions& o) {
  apply_preset(o);
  const auto alpha = resolve_alpha(o);
  const auto disk = stability_disk(alpha);
  const bool within = disk_within_unit_circle(disk);

  const bool has_plant =
      !o.plant.empty() || !o.raw_num.empty() || !o.raw_den.empty();

  if (o.format == "json") {
    json doc{{"alpha", alpha.value},
             {"disk_center", disk.center},
             {"disk_radius", disk.radius},
             {"crossing_low", disk.crossing_low},
             {"crossing_high", disk.crossing_high},
             {"within_unit_circle", within}};
    if (has_plant) {
      const auto h = resolve_plant(o);
      const auto sample = resolve_sample(o);
      const auto verdict = discretization_stable(h, alpha, sample);
      doc["hurwitz"] = stability_class_name(hurwitz_stable(h));
      doc["continuous_poles"] = poles_json(h.den.degree() >= 1 ? roots(h.den) : std::vector<std::complex<double>>{});
      doc["mapped_poles"] = poles_json(verdict.poles);
      doc["pole_moduli"] = verdict.pole_moduli;
      doc["schur_stable"] = verdict.schur_stable;
    }
    write_text(o.out, doc.dump(2) + "\n");
    return kExitOk;
  }

  std::string text;
  text += "# alphaz stability\n";
  text += stability_warning(alpha.value);
  text += "alpha: " + fmt17(alpha.value) + "\n";
  text += "disk_center: " + fmt17(disk.center) + "\n";
  text += "disk_radius: " + fmt17(disk.radius) + "\n";
  text += "crossing_low: " + fmt17(disk.crossing_low) + "\n";
  text += "crossing_high: " + fmt17(disk.crossing_high) + "\n";
  text += std::string("within_unit_circle: ") + (within ? "true" : "false") + "\n";

  if (has_plant) {
    const auto h = resolve_plant(o);
    const auto sample = resolve_sample(o);
    const auto verdict = discretization_stable(h, alpha, sample);
    text += std::string("hurwitz: ") + stability_class_name(hurwitz_stable(h)) + "\n";
    text += "continuous_poles: " +
            poles_text(h.den.degree() >= 1 ? roots(h.den)
                                           : std::vector<std::complex<double>>{}) +
            "\n";
    text += "mapped_poles: " + poles_text(verdict.poles) + "\n";
    text += "pole_moduli: " + join17(verdict.pole_moduli) + "\n";
    text += std::string("schur_stable: ") + (verdict.schur_stable ? "true" : "false") + "\n";
  }
  write_text(o.out, text);
  return kExitOk;
}

// One real per line; an unparsable first line is treated as a header.
std::vector<double> read_signal(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw InvalidArgument("cannot open input file '" + path + "'");
    in = &file;
  }

  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;  // blank line
    const std::string item = line.substr(start);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0') {
      if (lineno == 1) continue;  // header row
      throw InvalidArgument("input parse error at line " + std::to_string(lineno) +
                            ": '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InvalidArgument("input contains no samples");
  return values;
}

std::string signal_text(const SampledSignal& u, const std::string& header) {
  std::string text = header;
  for (double v : u.samples) text += fmt17(v) + "\n";
  return text;
}

int cmd_integrate(CommonOptions& o) {
  apply_preset(o);
  const auto alpha = resolve_alpha(o);
  const auto sample = resolve_sample(o);
  const auto values = read_signal(o.input);

  const auto u = integrate_sequence(SampledSignal(values, sample), alpha, o.u0);
  std::string header = "# alphaz integrate\n# alpha: " + fmt17(alpha.value) +
                       "\n# T: " + fmt17(sample.T) +
                       "\n# u0: " + fmt17(o.u0) + "\n";
  header += stability_warning(alpha.value);
  write_text(o.out, signal_text(u, header));
  return kExitOk;
}

int cmd_simulate(CommonOptions& o) {
  apply_preset(o);
  const auto sample = resolve_sample(o);
  const auto values = read_signal(o.input);

  std::string header = "# alphaz simulate\n";
  std::optional<DiscreteTransferFunction> hd;
  if (!o.raw_num.empty() && !o.raw_den.empty() && o.plant.empty() &&
      !o.alpha && o.method.empty()) {
    // Raw coefficients without a discretization request are taken as z-domain.
    hd.emplace(Polynomial(parse_double_list(o.raw_num, "--num")),
               Polynomial(parse_double_list(o.raw_den, "--den")), sample,
               AlphaParam(0.5));
    header += "# system: z-domain num=" + o.raw_num + " den=" + o.raw_den + "\n";
  } else {
    const auto h = resolve_plant(o);
    const auto alpha = resolve_alpha(o);
    hd = alpha_substitute(h, alpha, sample);
    header += "# system: " + plant_header(o, o.plant) +
              " discretized with alpha=" + fmt17(alpha.value) + "\n";
    header += stability_warning(alpha.value);
  }

  const auto y = simulate_dtf(*hd, SampledSignal(values, sample));
  header += "# T: " + fmt17(sample.T) + "\n";
  write_text(o.out, signal_text(y, header));
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"alpha-parameterized s->z discretization toolkit"};
  app.require_subcommand(1);

  CommonOptions o;

  auto add_common = [&](CLI::App* cmd, bool plant, bool alpha, bool grid_fs) {
    cmd->add_option("--preset", o.preset, "fig3 | section6");
    if (plant) add_plant_flags(cmd, o);
    if (alpha) add_alpha_flags(cmd, o);
    if (grid_fs) {
      cmd->add_option("--fs", o.fs, "Sampling frequency, Hz");
      cmd->add_option("--grid", o.grid, "fmin,fmax,n,log|linear");
    } else {
      cmd->add_option("--fs", o.fs, "Sampling frequency, Hz");
    }
    add_output_flags(cmd, o);
  };

  CLI::App* discretize = app.add_subcommand(
      "discretize", "Map an s-domain transfer function to the z-domain");
  add_common(discretize, true, true, false);

  CLI::App* distortion = app.add_subcommand(
      "distortion", "Amplitude/phase error of the discretization over a frequency grid");
  add_common(distortion, true, true, true);

  CLI::App* search = app.add_subcommand(
      "search", "Scalar search for the alpha minimizing a distortion metric");
  add_common(search, true, false, true);
  search->add_option("--metric", o.metric, "max_abs|rms (default max_abs)");
  search->add_option("--objective", o.objective, "amplitude|phase (default amplitude)");
  search->add_option("--alpha-lo", o.alpha_lo, "Search interval lower bound (default 0.5)");
  search->add_option("--alpha-hi", o.alpha_hi, "Search interval upper bound (default 1.0)");
  search->add_flag("--trace", o.trace, "Include the coarse scan trace");

  CLI::App* exclusion = app.add_subcommand(
      "exclusion", "Per-frequency argmin-alpha scan for amplitude and phase errors");
  add_common(exclusion, true, false, true);
  exclusion->add_option("--alpha-lo", o.alpha_lo, "Alpha grid lower bound (default 0.5)");
  exclusion->add_option("--alpha-hi", o.alpha_hi, "Alpha grid upper bound (default 1.0)");
  exclusion->add_option("--alpha-step", o.alpha_step, "Alpha grid step (default 0.005)");

  CLI::App* stability = app.add_subcommand(
      "stability", "Stability disk and (optionally) pole mapping of a plant");
  add_common(stability, true, true, false);

  CLI::App* integrate = app.add_subcommand(
      "integrate", "Run the mixed-rectangle integration recursion over a sample file");
  add_common(integrate, false, true, false);
  integrate->add_option("--input", o.input, "Input CSV, one sample per line ('-' = stdin)");
  integrate->add_option("--u0", o.u0, "Initial accumulator value (default 0)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a difference equation over a sample file");
  add_common(simulate, true, true, false);
  simulate->add_option("--input", o.input, "Input CSV, one sample per line ('-' = stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (discretize->parsed()) return cmd_discretize(o);
    if (distortion->parsed()) return cmd_distortion(o);
    if (search->parsed()) return cmd_search(o);
    if (exclusion->parsed()) return cmd_exclusion(o);
    if (stability->parsed()) return cmd_stability(o);
    if (integrate->parsed()) return cmd_integrate(o);
    if (simulate->parsed()) return cmd_simulate(o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingParam& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonPositiveFrequency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonPositiveQ& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FrequencyOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SampleRateMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // MapSingularity, DegenerateDenominator, pole hits, root-finding
    // degeneracies: numerically degenerate result.
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
