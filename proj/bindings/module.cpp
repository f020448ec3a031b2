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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "alphaz/analysis.hpp"
#include "alphaz/systems.hpp"
#include "alphaz/timedomain.hpp"
#include "alphaz/transform.hpp"

namespace py = pybind11;
using namespace alphaz;

namespace {

Method method_from_name(const std::string& name) {
  if (name == "euler") return Method::euler;
  if (name == "tustin") return Method::tustin;
  if (name == "kim") return Method::kim;
  if (name == "al_alaoui") return Method::al_alaoui;
  if (name == "gbt") return Method::gbt;
  throw InvalidArgument("unknown method '" + name + "'");
}

Objective objective_from_name(const std::string& name) {
  if (name == "amplitude") return Objective::amplitude;
  if (name == "phase") return Objective::phase;
  throw InvalidArgument("unknown objective '" + name + "'");
}

Metric metric_from_name(const std::string& name) {
  if (name == "max_abs") return Metric::max_abs;
  if (name == "rms") return Metric::rms;
  throw InvalidArgument("unknown metric '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "First-order s->z discretization (alpha rule): transforms, "
            "stability analysis, distortion analysis and time-domain "
            "integration recursions";

  py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
  py::register_exception<ParamOutOfRange>(m, "ParamOutOfRangeError", PyExc_ValueError);
  py::register_exception<MissingParam>(m, "MissingParamError", PyExc_ValueError);
  py::register_exception<FrequencyOutOfRange>(m, "FrequencyOutOfRangeError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<double>>(), py::arg("coeffs"),
           "Ascending coefficients; trailing zeros are trimmed")
      .def_property_readonly("coeffs", &Polynomial::coeffs)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__",
           [](const Polynomial& p, std::complex<double> x) { return p.eval(x); })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__repr__", [](const Polynomial& p) {
        std::string s = "Polynomial([";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(p.coeffs()[i]);
        }
        return s + "])";
      });

  m.def("roots",
        [](const std::vector<double>& coeffs) { return roots(Polynomial(coeffs)); },
        py::arg("coeffs"),
        "All roots (with multiplicity) of the ascending-coefficient polynomial");

  py::class_<ContinuousTransferFunction>(m, "ContinuousTransferFunction")
      .def(py::init([](std::vector<double> num, std::vector<double> den) {
             return ContinuousTransferFunction(Polynomial(std::move(num)),
                                               Polynomial(std::move(den)));
           }),
           py::arg("num"), py::arg("den"))
      .def_property_readonly("num",
                             [](const ContinuousTransferFunction& h) { return h.num.coeffs(); })
      .def_property_readonly("den",
                             [](const ContinuousTransferFunction& h) { return h.den.coeffs(); })
      .def_property_readonly("proper", &ContinuousTransferFunction::proper);

  py::class_<DiscreteTransferFunction>(m, "DiscreteTransferFunction")
      .def(py::init([](std::vector<double> num, std::vector<double> den, double T,
                       double alpha) {
             return DiscreteTransferFunction(Polynomial(std::move(num)),
                                             Polynomial(std::move(den)),
                                             SampleSpec(T), AlphaParam(alpha));
           }),
           py::arg("num"), py::arg("den"), py::arg("T"), py::arg("alpha") = 0.5)
      .def_property_readonly("num",
                             [](const DiscreteTransferFunction& h) { return h.num.coeffs(); })
      .def_property_readonly("den",
                             [](const DiscreteTransferFunction& h) { return h.den.coeffs(); })
      .def_property_readonly("T", [](const DiscreteTransferFunction& h) { return h.sample.T; })
      .def_property_readonly("alpha",
                             [](const DiscreteTransferFunction& h) { return h.alpha_used.value; });

  py::class_<StabilityDisk>(m, "StabilityDisk")
      .def_readonly("center", &StabilityDisk::center)
      .def_readonly("radius", &StabilityDisk::radius)
      .def_readonly("crossing_low", &StabilityDisk::crossing_low)
      .def_readonly("crossing_high", &StabilityDisk::crossing_high);

  m.def("make_lpf", &make_lpf, py::arg("fc_hz"));
  m.def("make_pi", &make_pi, py::arg("kp"), py::arg("ki"));
  m.def("make_pr", &make_pr, py::arg("kp"), py::arg("kr"), py::arg("f0_hz"));
  m.def("make_notch", &make_notch, py::arg("f0_hz"), py::arg("q"));

  m.def("s_to_z",
        [](std::complex<double> s, double alpha, double T) {
          return s_to_z_point(s, AlphaParam(alpha), SampleSpec(T));
        },
        py::arg("s"), py::arg("alpha"), py::arg("T"),
        "z = (1 + s(1-alpha)T) / (1 - s alpha T)");
  m.def("z_to_s",
        [](std::complex<double> z, double alpha, double T) {
          return z_to_s_point(z, AlphaParam(alpha), SampleSpec(T));
        },
        py::arg("z"), py::arg("alpha"), py::arg("T"),
        "s = (1/T)(z - 1) / (alpha z + 1 - alpha)");

  m.def("alpha_substitute",
        [](const ContinuousTransferFunction& h, double alpha, double T) {
          return alpha_substitute(h, AlphaParam(alpha), SampleSpec(T));
        },
        py::arg("h"), py::arg("alpha"), py::arg("T"));

  m.def("stability_disk",
        [](double alpha) { return stability_disk(AlphaParam(alpha)); },
        py::arg("alpha"));
  m.def("disk_within_unit_circle", &disk_within_unit_circle, py::arg("disk"));

  m.def("to_alpha",
        [](const std::string& method, std::optional<double> param) {
          return to_alpha(method_from_name(method), param).value;
        },
        py::arg("method"), py::arg("param") = py::none());

  m.def("continuous_response", &continuous_response, py::arg("h"), py::arg("f_hz"));
  m.def("discrete_response", &discrete_response, py::arg("h"), py::arg("f_hz"));

  py::class_<DistortionRecord>(m, "DistortionRecord")
      .def_readonly("f_hz", &DistortionRecord::f_hz)
      .def_readonly("amp_analog_db", &DistortionRecord::amp_analog_db)
      .def_readonly("amp_discrete_db", &DistortionRecord::amp_discrete_db)
      .def_readonly("amp_err_db", &DistortionRecord::amp_err_db)
      .def_readonly("phase_analog_deg", &DistortionRecord::phase_analog_deg)
      .def_readonly("phase_discrete_deg", &DistortionRecord::phase_discrete_deg)
      .def_readonly("phase_err_deg", &DistortionRecord::phase_err_deg);

  py::class_<DistortionProfile>(m, "DistortionProfile")
      .def_readonly("records", &DistortionProfile::records)
      .def_property_readonly("alpha",
                             [](const DistortionProfile& p) { return p.alpha.value; });

  m.def("distortion_profile",
        [](const ContinuousTransferFunction& h, double alpha, double T,
           const std::vector<double>& freqs_hz) {
          return distortion_profile(h, AlphaParam(alpha), SampleSpec(T),
                                    FrequencyGrid(freqs_hz));
        },
        py::arg("h"), py::arg("alpha"), py::arg("T"), py::arg("freqs_hz"));

  m.def("log_grid",
        [](double f_min, double f_max, std::size_t n) {
          return FrequencyGrid::log_spaced(f_min, f_max, n).points();
        },
        py::arg("f_min"), py::arg("f_max"), py::arg("n"));

  m.def("aggregate",
        [](const DistortionProfile& p, const std::string& objective,
           const std::string& metric) {
          return aggregate(p, objective_from_name(objective), metric_from_name(metric));
        },
        py::arg("profile"), py::arg("objective"), py::arg("metric"));

  py::class_<AlphaSearchResult>(m, "AlphaSearchResult")
      .def_readonly("alpha_star", &AlphaSearchResult::alpha_star)
      .def_readonly("objective_value", &AlphaSearchResult::objective_value)
      .def_readonly("trace", &AlphaSearchResult::trace)
      .def_readonly("degenerate", &AlphaSearchResult::degenerate);

  m.def("search_alpha",
        [](const ContinuousTransferFunction& h, double T,
           const std::vector<double>& freqs_hz, const std::string& objective,
           const std::string& metric, double lo, double hi) {
          return search_alpha(h, SampleSpec(T), FrequencyGrid(freqs_hz),
                              objective_from_name(objective),
                              metric_from_name(metric), lo, hi);
        },
        py::arg("h"), py::arg("T"), py::arg("freqs_hz"), py::arg("objective"),
        py::arg("metric") = "max_abs", py::arg("lo") = 0.5, py::arg("hi") = 1.0);

  py::class_<ExclusionRecord>(m, "ExclusionRecord")
      .def_readonly("f_hz", &ExclusionRecord::f_hz)
      .def_readonly("alpha_amp_argmin", &ExclusionRecord::alpha_amp_argmin)
      .def_readonly("alpha_phase_argmin", &ExclusionRecord::alpha_phase_argmin)
      .def_readonly("amp_min_db", &ExclusionRecord::amp_min_db)
      .def_readonly("phase_min_deg", &ExclusionRecord::phase_min_deg)
      .def_readonly("coincident", &ExclusionRecord::coincident)
      .def_readonly("degenerate", &ExclusionRecord::degenerate);

  py::class_<ExclusionSummary>(m, "ExclusionSummary")
      .def_readonly("n_coincident", &ExclusionSummary::n_coincident)
      .def_readonly("n_total", &ExclusionSummary::n_total)
      .def_readonly("n_degenerate", &ExclusionSummary::n_degenerate)
      .def_property_readonly("hypothesis_consistent",
                             [](const ExclusionSummary& s) -> py::object {
                               if (!s.hypothesis_consistent) return py::none();
                               return py::bool_(*s.hypothesis_consistent);
                             });

  py::class_<ExclusionReport>(m, "ExclusionReport")
      .def_readonly("records", &ExclusionReport::records)
      .def_readonly("summary", &ExclusionReport::summary)
      .def_readonly("alpha_lo", &ExclusionReport::alpha_lo)
      .def_readonly("alpha_hi", &ExclusionReport::alpha_hi)
      .def_readonly("alpha_step", &ExclusionReport::alpha_step);

  m.def("exclusion_scan",
        [](const ContinuousTransferFunction& h, double T,
           const std::vector<double>& freqs_hz, double alpha_lo, double alpha_hi,
           double alpha_step) {
          return exclusion_scan(h, SampleSpec(T), FrequencyGrid(freqs_hz),
                                alpha_lo, alpha_hi, alpha_step);
        },
        py::arg("h"), py::arg("T"), py::arg("freqs_hz"), py::arg("alpha_lo") = 0.5,
        py::arg("alpha_hi") = 1.0, py::arg("alpha_step") = 0.005);

  m.def("hurwitz_stable",
        [](const ContinuousTransferFunction& h) {
          return std::string(stability_class_name(hurwitz_stable(h)));
        },
        py::arg("h"));

  py::class_<DiscretizationVerdict>(m, "DiscretizationVerdict")
      .def_readonly("schur_stable", &DiscretizationVerdict::schur_stable)
      .def_readonly("poles", &DiscretizationVerdict::poles)
      .def_readonly("pole_moduli", &DiscretizationVerdict::pole_moduli);

  m.def("discretization_stable",
        [](const ContinuousTransferFunction& h, double alpha, double T) {
          return discretization_stable(h, AlphaParam(alpha), SampleSpec(T));
        },
        py::arg("h"), py::arg("alpha"), py::arg("T"));

  m.def("hexagonal_step",
        [](double u_prev, double e_prev, double e_now, double alpha, double T) {
          return hexagonal_step(u_prev, e_prev, e_now, AlphaParam(alpha),
                                SampleSpec(T));
        },
        py::arg("u_prev"), py::arg("e_prev"), py::arg("e_now"), py::arg("alpha"),
        py::arg("T"),
        "u = (1 - alpha) e_prev T + alpha e_now T + u_prev");

  m.def("integrate_sequence",
        [](const std::vector<double>& e, double alpha, double T, double u0) {
          return integrate_sequence(SampledSignal(e, SampleSpec(T)),
                                    AlphaParam(alpha), u0)
              .samples;
        },
        py::arg("e"), py::arg("alpha"), py::arg("T"), py::arg("u0") = 0.0);

  m.def("simulate_dtf",
        [](const DiscreteTransferFunction& h, const std::vector<double>& input) {
          return simulate_dtf(h, SampledSignal(input, h.sample)).samples;
        },
        py::arg("h"), py::arg("input"),
        "Direct-form difference equation with zero initial conditions");
}
