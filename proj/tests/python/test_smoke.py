import json
from fractions import Fraction

import pytest

import mapcount


def test_counts():
    assert mapcount.count_bipartite(0, "3:1") == 5
    assert mapcount.count_bipartite(1, {4: 1}) == 10
    assert mapcount.count_angulation(2, 0, 2) == 9
    assert mapcount.count_constellation(3, 0, 2) == 6
    assert mapcount.count_constellation_by_faces(3, 0, 2, 1) == 3
    assert mapcount.count_constellation_by_faces(3, 0, 2, 1, variant="printed") == 1
    assert mapcount.count_one_faced(2, 1, 4) == 10
    assert mapcount.count_monotone(0, 2) == Fraction(1, 2)


def test_big_values_are_python_ints():
    v = mapcount.count_angulation(2, 3, 40)
    assert isinstance(v, int)
    assert v > 2**64


def test_profiles():
    p = mapcount.parse_profile("2:1,1:2")
    assert str(p) == "1:2,2:1"
    assert p.edges == 4 and p.faces == 3
    assert len(mapcount.subprofiles(p)) == 6
    with pytest.raises(ValueError):
        mapcount.parse_profile("1:1,1:1")


def test_oracle_agrees():
    table = mapcount.oracle_constellations(2, 4)
    assert table[(1, "4:1")] == mapcount.count_bipartite(1, "4:1")
    assert mapcount.oracle_monotone(3, 1) == mapcount.count_monotone(1, 3)


def test_errors():
    with pytest.raises(ValueError):
        mapcount.count_one_faced(3, 0, 2)
    with pytest.raises(mapcount.ExactnessViolation):
        mapcount.count_one_faced(3, 1, 2, allow_experimental=True)


def test_series_and_cli():
    assert mapcount.planar_angulation_series(2, 2) == [0, 2, 9]
    code, out, _ = mapcount.run_cli(["monotone", "--genus", "0", "-n", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"model": "monotone", "params": {"g": 0, "n": 2}, "value": "1/2", "provenance": "formula"}
