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

import cmath
import math

import pytest

import alphaz


def test_point_maps_round_trip():
    z0 = 0.3 + 0.4j
    s = alphaz.z_to_s(z0, alpha=0.7, T=1e-3)
    assert abs(alphaz.s_to_z(s, alpha=0.7, T=1e-3) - z0) < 1e-12
    assert alphaz.s_to_z(0j, alpha=0.8, T=1e-4) == 1.0 + 0j


def test_tustin_integrator_coefficients():
    integ = alphaz.ContinuousTransferFunction(num=[1.0], den=[0.0, 1.0])
    hd = alphaz.alpha_substitute(integ, alpha=0.5, T=2.0)
    assert hd.num == [1.0, 1.0]
    assert hd.den == [-1.0, 1.0]
    assert hd.alpha == 0.5


def test_stability_disk():
    disk = alphaz.stability_disk(0.5)
    assert disk.center == 0.0 and disk.radius == 1.0
    assert disk.crossing_high == 1.0
    assert alphaz.disk_within_unit_circle(disk)
    assert not alphaz.disk_within_unit_circle(alphaz.stability_disk(0.49))


def test_method_relations():
    assert alphaz.to_alpha("tustin") == 0.5
    assert alphaz.to_alpha("euler") == 1.0
    assert alphaz.to_alpha("al_alaoui", 0.5) == 0.75
    with pytest.raises(ValueError):
        alphaz.to_alpha("kim", 2.0)
    with pytest.raises(ValueError):
        alphaz.to_alpha("gbt")


def test_lpf_responses():
    lpf = alphaz.make_lpf(2400.0)
    assert alphaz.hurwitz_stable(lpf) == "stable"
    assert abs(abs(alphaz.continuous_response(lpf, 2400.0)) - 1 / math.sqrt(2)) < 1e-12

    hd = alphaz.alpha_substitute(lpf, alpha=0.5, T=1e-4)
    assert abs(alphaz.discrete_response(hd, 1e-3) - 1.0) < 1e-6

    verdict = alphaz.discretization_stable(lpf, alpha=0.75, T=1e-4)
    assert verdict.schur_stable
    assert all(m < 1.0 for m in verdict.pole_moduli)


def test_roots():
    rs = sorted(alphaz.roots([-1.0, 0.0, 1.0]), key=lambda z: z.real)
    assert abs(rs[0] + 1.0) < 1e-12 and abs(rs[1] - 1.0) < 1e-12


def test_distortion_and_search():
    lpf = alphaz.make_lpf(2400.0)
    grid = alphaz.log_grid(10.0, 4900.0, 60)
    profile = alphaz.distortion_profile(lpf, alpha=0.7, T=1e-4, freqs_hz=grid)
    assert len(profile.records) == 60
    assert abs(profile.records[0].amp_err_db) < 0.01  # DC anchoring

    worst = alphaz.aggregate(profile, "amplitude", "max_abs")
    assert worst > 0.0

    flat = alphaz.ContinuousTransferFunction(num=[2.0], den=[1.0])
    result = alphaz.search_alpha(flat, T=1e-4, freqs_hz=grid, objective="amplitude")
    assert result.degenerate and result.alpha_star == 0.5


def test_exclusion_scan_integrator():
    integ = alphaz.ContinuousTransferFunction(num=[1.0], den=[0.0, 1.0])
    grid = alphaz.log_grid(10.0, 4900.0, 25)
    report = alphaz.exclusion_scan(integ, T=1e-4, freqs_hz=grid)
    assert report.summary.n_total == 25
    assert report.summary.n_coincident == 0
    assert report.summary.hypothesis_consistent is True
    assert all(r.alpha_phase_argmin == 0.5 for r in report.records)
    assert all(r.alpha_amp_argmin > 0.5 for r in report.records)


def test_time_domain():
    u = alphaz.integrate_sequence([1.0] * 10, alpha=1.0, T=0.1)
    assert u[-1] == pytest.approx(1.0, abs=1e-12)
    assert alphaz.hexagonal_step(0.0, 1.0, 3.0, alpha=0.5, T=2.0) == 4.0

    integ = alphaz.ContinuousTransferFunction(num=[1.0], den=[0.0, 1.0])
    hd = alphaz.alpha_substitute(integ, alpha=0.7, T=0.1)
    e = [0.5, -1.0, 2.0, 0.0]
    assert alphaz.simulate_dtf(hd, e) == pytest.approx(
        alphaz.integrate_sequence(e, alpha=0.7, T=0.1), abs=1e-14
    )
