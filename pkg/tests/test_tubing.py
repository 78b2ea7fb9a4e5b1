from __future__ import annotations

import json

import pytest

import ppcd.diagram as dg
from ppcd.errors import RangeViolation
from ppcd.tubing import Tube, build_tubing, component_genera, to_dict, to_json


def d300():
    return dg.validate(3, [(0, 1), (2, 7), (3, 4), (5, 6)], 0)


def test_build_tubing_fixture():
    t = build_tubing(d300(), 0)
    assert t.genus == 3
    assert t.sc_choice == 0
    assert t.spheres == (1, 2)
    assert t.tubes == (
        Tube((0, 1), from_sphere=1, from_arc=0, to_sphere=2, to_arc=0, nesting_depth=4),
        Tube((2, 7), from_sphere=2, from_arc=1, to_sphere=1, to_arc=3, nesting_depth=3),
        Tube((3, 4), from_sphere=1, from_arc=1, to_sphere=1, to_arc=2, nesting_depth=2),
        Tube((5, 6), from_sphere=2, from_arc=2, to_sphere=2, to_arc=3, nesting_depth=1),
    )


def test_sc_choice_is_recorded_only():
    base = build_tubing(d300(), 0)
    other = build_tubing(d300(), 1)
    assert other.sc_choice == 1
    assert other.tubes == base.tubes
    with pytest.raises(RangeViolation):
        build_tubing(d300(), 2)


def test_depths_follow_length(corpus):
    for genus, diagrams in corpus.items():
        deepest = 2 * (genus - 1)
        for d in diagrams:
            t = build_tubing(d, 0)
            depths = sorted(tube.nesting_depth for tube in t.tubes)
            assert depths == list(range(1, deepest + 1))
            by_depth = {tube.chord: tube.nesting_depth for tube in t.tubes}
            for c1 in d.matching:
                for c2 in d.matching:
                    if dg.chord_length(d, c1) > dg.chord_length(d, c2):
                        assert by_depth[c1] > by_depth[c2]


def test_endpoints_cover_every_puncture(corpus):
    # each (sphere, arc) pair is hit by exactly one tube end
    for genus, diagrams in corpus.items():
        k = genus - 1
        want = {(s, r) for s in range(1, k + 1) for r in range(4)}
        for d in diagrams:
            t = build_tubing(d, 0)
            ends = [(tube.from_sphere, tube.from_arc) for tube in t.tubes]
            ends += [(tube.to_sphere, tube.to_arc) for tube in t.tubes]
            assert len(ends) == len(set(ends)) == d.points
            assert set(ends) == want


def test_component_genera_fixtures():
    assert component_genera(d300()) == (3,)
    split = dg.validate(3, [(0, 3), (1, 2), (4, 7), (5, 6)], 0)
    assert component_genera(split) == (2, 2)


def test_component_genus_deficits_sum(corpus):
    # the genus deficits of the components always add up to g - 1
    for genus, diagrams in corpus.items():
        for d in diagrams:
            genera = component_genera(d)
            assert sum(k - 1 for k in genera) == genus - 1
            assert all(k >= 2 for k in genera)


def test_json_round_trip():
    t = build_tubing(d300(), 1)
    obj = json.loads(to_json(t))
    plain = to_dict(t)
    assert set(obj) == set(plain) == {"genus", "sc_choice", "spheres", "tubes"}
    assert obj["spheres"] == list(plain["spheres"])
    assert [tube["nesting_depth"] for tube in obj["tubes"]] == [
        tube["nesting_depth"] for tube in plain["tubes"]
    ]
    assert obj["genus"] == 3
    assert obj["sc_choice"] == 1
    assert obj["tubes"][0]["chord"] == [0, 1]
    assert obj["tubes"][0]["nesting_depth"] == 4
