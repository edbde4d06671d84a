import math
from fractions import Fraction

import pytest

import ricci_orbit as ro


def test_fubini_study_density():
    v = ro.hessian_density("1 + x")
    assert v == {"num": ["1"], "den": ["1", "2", "1"]}
    assert ro.is_einstein(v) == "4"
    assert ro.check_kahler(v)["status"] == "Kahler"


def test_einstein_constant_scales_inversely():
    assert ro.is_einstein("2/(1+x)^2") == "2"
    assert ro.is_einstein("4/(1+x)^2") == "1"


def test_parameter_family_orbit():
    v = ro.hessian_density("1 + a*x + x^2", a="19/10")
    orbit = ro.iterate(v, k=2)
    assert orbit["halted_at"] is None
    assert len(orbit["densities"]) == 3


def test_ricci_potential_of_binomial_is_induced():
    pot = ro.ricci_potential("(1 + x)^3")
    verdict = ro.is_projectively_induced(pot)
    assert verdict["induced"]
    assert verdict["embedding"]["n"] == 4


def test_volume_of_fubini_study():
    report = ro.symplectic_volume("1/(1+x)^2")
    assert report["finite"]
    assert abs(float(report["value"]) - math.pi) < 1e-12


def test_kahler_interval_k1():
    result = ro.kahler_interval(1, resolution="1/1000")
    last = result["inner"][-1]
    lo, hi = Fraction(last["lo"]), Fraction(last["hi"])
    assert hi == 2
    assert abs(float(lo) - 2 ** 0.5) < 2e-3


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        ro.hessian_density("1 + x +")
    with pytest.raises(ro.RicciOrbitError):
        ro.hessian_density("1 + a*x")
