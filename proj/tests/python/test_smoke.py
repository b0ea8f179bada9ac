# Copyright 2026 The anyonint Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import anyonint as ai

PHI = (1 + math.sqrt(5)) / 2
RT2 = 1 / math.sqrt(2)


def test_builtin_models_verify():
    for name in ai.builtin_model_names():
        report = ai.verify_model(ai.builtin_model(name))
        assert report.all_passed(), report.to_text()
        assert report.max_deviation() < 1e-12


def test_model_algebra():
    ising = ai.builtin_model("ising")
    assert ising.charges == ["1", "sigma", "psi"]
    assert ising.fusion_products("sigma", "sigma") == ["1", "psi"]
    assert abs(ising.monodromy("sigma", "sigma")) < 1e-12
    assert abs(ising.monodromy("psi", "sigma") + 1) < 1e-12

    fib = ai.builtin_model("fibonacci")
    assert abs(fib.qdim("eps") - PHI) < 1e-12
    assert abs(fib.monodromy("eps", "eps") + 1 / PHI**2) < 1e-12
    assert fib.difference_channels("eps", "eps") == [("1", 1), ("eps", 1)]


def test_serialize_round_trip():
    ising = ai.builtin_model("ising")
    again = ai.load_model(ai.serialize_model(ising))
    assert ai.models_equal(ising, again)


def test_ising_full_decoherence():
    m = ai.builtin_model("ising")
    a = 1 / math.sqrt(3)
    target = ai.TargetState(m, {"1": a, "psi": a, "sigma": a})
    probe = ai.ProbeSpec.definite(m, "sigma")
    config = ai.InterferometerConfig(t1=ai.BeamSplitter(RT2, RT2))

    rho = ai.evolve(target, probe, config, 200)
    assert abs(rho.trace() - 1) < 1e-12
    assert abs(rho.entry("1", "1", 0, "1", 0) - 1 / 3) < 1e-12
    assert abs(rho.entry("sigma", "1", 0, "sigma", 0) - 1 / 6) < 1e-12
    assert abs(rho.entry("sigma", "psi", 0, "sigma", 0) - 1 / 6) < 1e-12
    assert abs(rho.entry("1", "1", 0, "psi", 0)) < 1e-12

    report = ai.check_density_matrix(rho, target)
    assert report.passed()


def test_fibonacci_asymptotics():
    m = ai.builtin_model("fibonacci")
    target = ai.TargetState(m, {"1": 0.6, "eps": 0.8})
    probe = ai.ProbeSpec.definite(m, "eps")
    config = ai.InterferometerConfig(t1=ai.BeamSplitter(0.8, 0.6))

    rho, report = ai.asymptotic(target, probe, config)
    assert report.fully_convergent()
    assert abs(rho.entry("eps", "1", 0, "eps", 0) - 0.64 / PHI**2) < 1e-9
    assert abs(rho.entry("eps", "eps", 0, "eps", 0) - 0.64 / PHI) < 1e-9


def test_oracle_comparison():
    m = ai.builtin_model("ising")
    a = 1 / math.sqrt(3)
    target = ai.TargetState(m, {"1": a, "psi": a, "sigma": a})
    probes = [
        ai.ProbeSpec.definite(m, "sigma"),
        ai.ProbeSpec.definite(m, "psi"),
        ai.ProbeSpec(m, {"sigma": (0.6, 0.0), "psi": (0.0, 0.8)}),
    ]
    config = ai.InterferometerConfig(t1=ai.BeamSplitter(0.8, 0.6j))
    report = ai.closed_form_vs_oracle(target, probes, config, 3)
    assert report.passed
    assert report.max_deviation < 1e-10


def test_stray_semion_oscillation():
    m = ai.builtin_model("semion")
    target = ai.TargetState(m, {"1": 0.6, "s": 0.8})
    probe = ai.ProbeSpec.definite(m, "s")
    rho1 = ai.stray_anyon_pass(target, probe, 1)
    rho2 = ai.stray_anyon_pass(target, probe, 2)
    assert abs(rho1.entry("1", "1", 0, "s", 0) + 0.48) < 1e-12
    assert abs(rho2.entry("1", "1", 0, "s", 0) - 0.48) < 1e-12


def test_validation_errors():
    m = ai.builtin_model("ising")
    with pytest.raises(ai.DomainError):
        ai.TargetState(m, {"1": 0.5})
    with pytest.raises(ai.DomainError):
        ai.BeamSplitter(0.9, 0.9)
    with pytest.raises(ai.Error):
        ai.load_model("not json")
