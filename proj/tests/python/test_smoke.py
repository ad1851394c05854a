"""Smoke tests for the native module, plus a float cross-check of one expansion."""

from fractions import Fraction

import pytest

import _jpalib


def test_family_verify_passes():
    r = _jpalib.family_verify(3, 4, "1", ["1", "0", "1"])
    assert r["pass"] is True
    assert r["status"] == "PurelyPeriodic"
    assert (r["l0"], r["l1"]) == (0, 4)
    assert r["unit_norm"] == "1"


def test_family_poly_known():
    assert _jpalib.family_poly(4, 4, "1", ["1", "0", "1", "1"]) == "-2,0,-2,-2,1"
    assert _jpalib.family_poly(4, 5, "10", ["1", "0", "0", "1"]) == "-11,-10,0,-11,1"


def test_family_unit_norm_is_one():
    r = _jpalib.family_unit(3, 17, "1", ["1", "1", "2"])
    assert r["norm"] in ("1", "-1")


def test_cube_root_17_period():
    r = _jpalib.nth_root_expand(17)
    assert r["status"] == "Periodic"
    assert r["l0"] + r["l1"] == 93


def test_unit_disk_count_knowns():
    assert _jpalib.unit_disk_count("-2,-3,1") == (1, 0)
    assert _jpalib.unit_disk_count("1,-1,1") == (0, 2)  # sixth cyclotomic


def test_is_pisot_knowns():
    assert _jpalib.is_pisot("-2,-2,1")[0] == "Yes"
    assert _jpalib.is_pisot("-2,0,-2,-2,1")[0] == "No"


def test_analyze_report_shape():
    r = _jpalib.analyze("-11,-10,0,-11,1")
    assert r["inside_unit_disk"] + r["on_unit_circle"] + r["outside_unit_disk"] == 4
    lo, hi = (Fraction(s) for s in r["max_nonreal_modulus"])
    assert Fraction("1.19075") < lo <= hi < Fraction("1.19085")


def test_expand_rational_terminates():
    r = _jpalib.expand("-1,-2,1", ["7/3,0"], 50)
    assert r["status"] == "Terminated"
    assert r["digits"] == [[2], [3]]


def test_invalid_params_raise():
    with pytest.raises(Exception):
        _jpalib.family_poly(3, 2, "1", ["1", "0", "1"])  # m < n


def test_digits_match_float_simulation():
    # run the cube-root-of-5 expansion in plain floats and compare the first
    # digits; float precision easily covers this short horizon
    r = _jpalib.nth_root_expand(5, 3, 200)
    assert (r["l0"], r["l1"]) == (7, 6)
    w = 5.0 ** (1.0 / 3.0)
    a1, a2 = w, w * w
    for step in r["digits"][:12]:
        d1, d2 = int(step[0]), int(step[1])
        assert int(a1) == d1 and int(a2) == d2
        a1, a2 = (a2 - d2) / (a1 - d1), 1.0 / (a1 - d1)
