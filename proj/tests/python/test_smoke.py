"""Smoke tests for the python bindings."""

import os
import sys

import pytest

try:
    import twistroot as tr
except ImportError:  # build-tree fallback: compiled module next to the repo build
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "..", "build"))
    import _core as tr  # type: ignore

TABLES = os.environ.get(
    "TWISTROOT_TABLES",
    os.path.join(os.path.dirname(__file__), "..", "..", "tables"),
)


def test_validate_and_genus():
    assert tr.validate({"n": 2, "g0": 1}) == []
    assert tr.genus({"n": 2, "g0": 1}) == 1
    errs = tr.validate({"n": 3, "g0": 0, "a": [1], "cones": [[1, 3]]})
    assert "CongruenceSumNonzero" in errs
    assert tr.genus({"n": 6, "g0": 0, "cones": [[1, 6], [1, 2], [1, 3]]}) == 1


def test_angles():
    assert tr.theta(2, 3) == (2, 3)
    assert tr.fixed_angle(3, 5) == (2, 5)
    assert tr.theta(0, 1) == (0, 1)


def test_power_map():
    sq = {"n": 4, "g0": 0, "cones": [[1, 4], [1, 2], [1, 4]]}
    halved = tr.power(sq, 2)
    assert halved["n"] == 2
    assert halved["cones"] == [[1, 2]] * 4


def test_enumeration():
    got = tr.enumerate_datasets(1, 2)
    assert {"n": 2, "g0": 1} in got
    assert len(got) == 2
    perm = tr.enumerate_permuting(0, 3, [3, 3])
    assert len(perm) == 1
    assert perm[0]["orbits"] == [[[0, 1], 2]]


def test_bounds():
    assert tr.bound_nonseparating(4, 2, 0) == 10
    assert tr.bound_nonseparating(5, 1, 1) == 9
    assert tr.stable_bound(22) == 1824
    chain = {"chain": [{"g1": 1}, {"g1": 1}], "edges": [{"k": 2, "sizes": [1, 1]}]}
    assert tr.bound_separating(chain) == 20
    assert tr.multicurve_genus(chain) == 3


def test_classify_nonseparating():
    spec = {"nonseparating": {"genus": 3, "curves": 3, "r": 0, "sizes": [3]}}
    recs = tr.classify(spec)
    assert len(recs) == 1
    assert recs[0]["degree"] == 3
    assert recs[0]["components"][0]["dataset"]["cones"] == [[1, 3], [2, 3]]


def test_classify_separating_strict_subset():
    spec = {"chain": [{"g1": 1}, {"g1": 1}], "edges": [{"k": 2, "sizes": [2]}]}
    full = tr.classify(spec)
    strict = tr.classify(spec, strict=True)
    assert len(strict) < len(full)


def test_reproduce_table():
    if not os.path.isdir(TABLES):
        pytest.skip("tables not available")
    rep = tr.reproduce_table("g3-sep-chain-rk20", TABLES)
    assert rep["clean"]
    assert rep["matched"] == 7
    ids = tr.table_ids(TABLES)
    assert "g4-nonsep-m4" in ids
