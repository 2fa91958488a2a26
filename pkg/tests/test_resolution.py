import pytest
from hypothesis import given, settings, strategies as st

from adeq.exceptions import DisconnectedGraph, IncompleteState
from adeq.resolution import (
    StateGraph,
    apply_state,
    euler_char_neg,
    normalize_state,
    reduce,
    state_graph,
    verdicts,
)

from conftest import (
    A_NOT_B,
    CENSUS,
    KINK,
    TREFOIL,
    all_states,
    corpus,
    diagram,
    oracle_circles,
    oracle_verdicts,
    pd_tuples,
)
from adeq import parse_pd


def test_trefoil_all_a_splits_into_two_circles(trefoil):
    sc = apply_state(trefoil, "AAA")
    assert len(sc.circles) == 2
    assert len(sc.segments) == 3
    assert {frozenset(s.circles) for s in sc.segments} == {frozenset({0, 1})}
    assert len(sc.regions) == 3


def test_trefoil_all_b_is_a_triangle(trefoil):
    sc = apply_state(trefoil, "BBB")
    g = state_graph(sc)
    assert g.num_vertices == 3 and len(g.edges) == 3
    assert len({e for e in g.edges}) == 3
    assert euler_char_neg(reduce(g)) == 0


def test_reduced_trefoil_graph(trefoil):
    g = reduce(state_graph(apply_state(trefoil, "AAA")))
    assert (g.num_vertices, len(g.edges)) == (2, 1)
    assert g.reduced


@pytest.mark.parametrize("row", [r for r in CENSUS["diagrams"] if r["crossings"] <= 7],
                         ids=lambda r: r["name"])
def test_circles_and_verdicts_match_oracle(row):
    d = parse_pd(row["pd"])
    for s in all_states(d.n):
        sc = apply_state(d, s)
        assert len(sc.circles) == oracle_circles(row["pd"], s)
        assert len(sc.faces) == d.n + 2
        # k disjoint circles on the sphere leave k + 1 regions
        assert len(sc.regions) == len(sc.circles) + 1
        v = verdicts(sc)
        assert (v.adequate, v.homogeneous) == oracle_verdicts(row["pd"], s)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([r for r in CENSUS["diagrams"] if r["crossings"] == 8]), st.data())
def test_eight_crossing_states_match_oracle(row, data):
    d = parse_pd(row["pd"])
    s = data.draw(st.text(alphabet="AB", min_size=8, max_size=8))
    sc = apply_state(d, s)
    assert len(sc.circles) == oracle_circles(row["pd"], s)
    v = verdicts(sc)
    assert (v.adequate, v.homogeneous) == oracle_verdicts(row["pd"], s)


def test_every_circle_dart_is_used_once(diagrams):
    for d in diagrams[:10]:
        for s in ("A" * d.n, "B" * d.n):
            sc = apply_state(d, s)
            flat = [v for c in sc.circles for v in c]
            assert sorted(flat) == list(range(2 * d.n))


def test_segment_ends_lie_on_their_circles(diagrams):
    for d in diagrams:
        sc = apply_state(d, "A" * d.n)
        for seg in sc.segments:
            assert sc.circle_of[seg.u] == seg.circles[0]
            assert sc.circle_of[seg.w] == seg.circles[1]


def test_all_a_and_all_b_are_homogeneous(diagrams):
    for d in diagrams:
        for letter in "AB":
            assert verdicts(apply_state(d, letter * d.n)).homogeneous


def test_one_sided_adequacy():
    d = parse_pd(A_NOT_B)
    assert verdicts(apply_state(d, "A" * 8)).adequate
    v = verdicts(apply_state(d, "B" * 8))
    assert not v.adequate and v.adequacy.loop_segment is not None


def test_kink_resolutions():
    d = parse_pd(KINK)
    a = verdicts(apply_state(d, "A"))
    assert not a.adequate and a.adequacy.loop_segment == 0
    assert verdicts(apply_state(d, "B")).adequate


def test_mirror_swaps_letters():
    plain, mirrored = parse_pd(TREFOIL), parse_pd(TREFOIL, mirror=True)
    for s in all_states(3):
        flipped = s.translate(str.maketrans("AB", "BA"))
        assert len(apply_state(mirrored, s).circles) == len(apply_state(plain, flipped).circles)


@pytest.mark.parametrize("name,state,chi", [
    ("6_2", "BBBBBB", 1),
    ("7_7", "BBBBBBB", 2),
    ("8_18", "AAAAAAAA", 3),
    ("4_1", "AAAA", 0),
    ("L6a4", "AAAAAA", 2),
])
def test_chi_minus_values(name, state, chi):
    assert euler_char_neg(reduce(state_graph(apply_state(diagram(name), state)))) == chi


def test_state_forms(trefoil):
    assert normalize_state(trefoil, ["A", "B", "A"]) == "ABA"
    assert normalize_state(trefoil, {0: "A", 1: "B", 2: "B"}) == "ABB"
    assert normalize_state(trefoil, "aba") == "ABA"
    for bad in ("AB", "ABC", {0: "A"}):
        with pytest.raises(IncompleteState):
            apply_state(trefoil, bad)


def test_disconnected_graph_has_no_chi():
    with pytest.raises(DisconnectedGraph):
        euler_char_neg(StateGraph(3, ((0, 1),), (0,)))


def test_reduce_keeps_first_parallel_edge():
    g = StateGraph(3, ((0, 1), (0, 1), (1, 2), (2, 2), (2, 2)), (0, 1, 2, 3, 4))
    r = reduce(g)
    assert r.edges == ((0, 1), (1, 2), (2, 2))
    assert r.segment_ids == (0, 2, 3)


def test_to_dict(trefoil):
    out = apply_state(trefoil, "AAA").to_dict()
    assert out["state"] == "AAA"
    assert len(out["segments"]) == 3
    assert sum(not r["trivial"] for r in out["regions"]) == 1
