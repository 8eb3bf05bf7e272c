# SPDX-License-Identifier: Apache-2.0
from fractions import Fraction

import pytest

import isog3


def test_char3_example():
    r = isog3.char3(3, [0, 1, 0, 0, 0])
    assert r["frobenius_check"] is True
    assert r["isomorphic_to_input"] is True
    assert r["certificate"]["meets_rank"] == 3
    assert all(p["identity"] for p in r["torsion"]["pairs"])


def test_errors_carry_codes():
    with pytest.raises(isog3.Error) as e:
        isog3.char3(3, [0, 0, 0, 0, 0])
    assert e.value.code == "SingularCurve"
    assert e.value.degeneracy is True
    with pytest.raises(isog3.Error) as e:
        isog3.sweep(2187, count=1)
    assert e.value.code == "InvalidInput"
    assert e.value.degeneracy is False


def test_sweep_is_deterministic():
    a = isog3.sweep(9, count=20, seed=3)
    b = isog3.sweep(9, count=20, seed=3, threads=2)
    assert a == b
    assert a["frobenius_certified"] == a["completed"] == 20
    assert "timing" not in a


def test_iso():
    assert isog3.iso(9, [2, 1, 3, 0, 0], [2, 1, 3, 0, 0])["isomorphic"] is True


def test_kernel_map_lands_on_the_quartic():
    z = [1, 2, Fraction(-3, 2), 5]
    assert isog3.phi40(z) != "0"
    alpha = isog3.cminus(z)
    assert len(alpha) == 5
    assert isog3.burkhardt(alpha) == "0"
    assert isog3.burkhardt([1, 1, 1, 1, 1]) == "81"


def test_complex_report():
    r = isog3.complex([1, 2, -3, 5], digits=60)
    assert len(r["branch_values"]) == 6
    assert r["restricted_rank"] == 4
    assert float(r["residuals"]["conic"]) < 1e-40


@pytest.mark.parametrize("check", ["salmon", "reflections", "burkhardt"])
def test_verify(check):
    assert isog3.verify(check)["pass"] is True
