# Copyright 2026 The alphaz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""First-order s->z discretization (the alpha rule).

The map s = (1/T)(z - 1)/(alpha z + 1 - alpha) interpolates the backward
difference (alpha = 1) and the trapezoidal / Tustin rule (alpha = 0.5).
This package exposes the point maps, the rational-function substitution,
stability analysis (disk geometry and pole mapping), frequency-domain
distortion analysis, a scalar alpha search, the per-frequency exclusion
scanner, and the time-domain integration recursions.
"""

from alphaz._core import (
    AlphaSearchResult,
    ContinuousTransferFunction,
    DiscreteTransferFunction,
    DiscretizationVerdict,
    DistortionProfile,
    DistortionRecord,
    ExclusionRecord,
    ExclusionReport,
    ExclusionSummary,
    Polynomial,
    StabilityDisk,
    aggregate,
    alpha_substitute,
    continuous_response,
    discrete_response,
    discretization_stable,
    disk_within_unit_circle,
    distortion_profile,
    exclusion_scan,
    hexagonal_step,
    hurwitz_stable,
    integrate_sequence,
    log_grid,
    make_lpf,
    make_notch,
    make_pi,
    make_pr,
    roots,
    s_to_z,
    search_alpha,
    simulate_dtf,
    stability_disk,
    to_alpha,
    z_to_s,
)

__version__ = "1.0.0"

__all__ = [
    "AlphaSearchResult",
    "ContinuousTransferFunction",
    "DiscreteTransferFunction",
    "DiscretizationVerdict",
    "DistortionProfile",
    "DistortionRecord",
    "ExclusionRecord",
    "ExclusionReport",
    "ExclusionSummary",
    "Polynomial",
    "StabilityDisk",
    "aggregate",
    "alpha_substitute",
    "continuous_response",
    "discrete_response",
    "discretization_stable",
    "disk_within_unit_circle",
    "distortion_profile",
    "exclusion_scan",
    "hexagonal_step",
    "hurwitz_stable",
    "integrate_sequence",
    "log_grid",
    "make_lpf",
    "make_notch",
    "make_pi",
    "make_pr",
    "roots",
    "s_to_z",
    "search_alpha",
    "simulate_dtf",
    "stability_disk",
    "to_alpha",
    "z_to_s",
]
