import pytest

from adeq import parse_pd
from adeq.exceptions import MixedTwistState, ReducibleDiagram, SizeOne
from adeq.resolution import apply_state, state_graph
from adeq.twist import (
    LONG,
    SHORT,
    bigon_faces,
    classify_resolution,
    find_twist_regions,
    loop_condition,
    two_edge_loops,
)

from conftest import LOOP_VIOLATOR, diagram, oracle_loops

HOPF_RII = "X[3,2,4,1] X[4,2,3,1]"  # Hopf link with one crossing flipped


@pytest.mark.parametrize("name,sizes", [
    ("3_1", [3]), ("4_1", [2, 2]), ("5_1", [5]), ("5_2", [2, 3]), ("6_1", [2, 4]),
    ("6_2", [1, 2, 3]), ("7_1", [7]), ("7_4", [1, 3, 3]), ("L4a1", [4]),
])
def test_twist_region_sizes(name, sizes):
    assert sorted(r.size for r in find_twist_regions(diagram(name))) == sizes


def test_regions_partition_crossings(diagrams):
    for d in diagrams:
        regions = find_twist_regions(d)
        seen = sorted(c for r in regions for c in r.crossings)
        assert seen == list(range(d.n))


def test_consecutive_crossings_share_a_bigon(diagrams):
    for d in diagrams:
        bigons = set(bigon_faces(d))
        for r in find_twist_regions(d):
            for x, y in zip(r.crossings, r.crossings[1:]):
                shared = [f for f in bigons if {h // 4 for h in d.faces[f]} == {x, y}]
                assert shared


def test_reidemeister_two_bigon_is_rejected():
    d = parse_pd(HOPF_RII)
    assert not d.is_alternating()
    with pytest.raises(ReducibleDiagram):
        find_twist_regions(d)


def test_classify_trefoil(trefoil):
    (r,) = find_twist_regions(trefoil)
    assert classify_resolution(r, "AAA", apply_state(trefoil, "AAA")) == SHORT
    assert classify_resolution(r, "BBB", apply_state(trefoil, "BBB")) == LONG
    with pytest.raises(MixedTwistState):
        classify_resolution(r, "ABA", apply_state(trefoil, "ABA"))


def test_classify_size_one():
    d = diagram("6_2")
    r = next(r for r in find_twist_regions(d) if r.size == 1)
    with pytest.raises(SizeOne):
        classify_resolution(r, "A" * 6, apply_state(d, "A" * 6))


def test_two_edge_loops_match_pair_scan(diagrams):
    for d in diagrams:
        text = " ".join("X[%s]" % ",".join(map(str, c.labels)) for c in d.crossings)
        for s in ("A" * d.n, "B" * d.n):
            got = {lp.segments for lp in two_edge_loops(state_graph(apply_state(d, s)))}
            assert got == oracle_loops(text, s)


def test_trefoil_and_figure_eight_satisfy_condition(trefoil):
    assert loop_condition(trefoil, "AAA").holds
    d = diagram("4_1")
    assert loop_condition(d, "AAAA").holds
    assert loop_condition(d, "BBBB").holds


def test_violating_loop_witness():
    d = parse_pd(LOOP_VIOLATOR)
    s = "A" * d.n
    verdict = loop_condition(d, s)
    assert not verdict.holds
    lp = verdict.violating_loop
    assert lp.segments in oracle_loops(LOOP_VIOLATOR, s)
    regions = find_twist_regions(d)
    where = {c: r.id for r in regions for c in r.crossings}
    assert where[lp.segments[0]] != where[lp.segments[1]]
    assert lp.same_twist_region is False


def test_alternating_loops_stay_in_one_region():
    d = diagram("5_2")
    for s in ("AAAAA", "BBBBB"):
        v = loop_condition(d, s)
        for lp in v.loops:
            assert lp.same_twist_region
        assert v.holds
