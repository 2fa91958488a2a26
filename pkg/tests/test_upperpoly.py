import pytest

from adeq import apply_state, find_homogeneously_adequate, is_prime, parse_pd
from adeq.exceptions import NonPrimeRegion
from adeq.upperpoly import (
    HGeometry,
    build_shaded_faces,
    check_escher,
    enumerate_staircases,
    find_nonprime_arcs,
    is_maximal,
    lower_polyhedron_diagram,
    lower_polyhedron_diagrams,
    polyhedral_regions,
)

from conftest import A_NOT_B, KINK, corpus, diagram


def _qualifying():
    for d in corpus():
        for r in find_homogeneously_adequate(d, "full").records:
            yield d, apply_state(d, r.state)


QUALIFYING = list(_qualifying())


def test_trefoil_hand_construction(trefoil):
    sc = apply_state(trefoil, "AAA")
    up = build_shaded_faces(sc)
    assert up.arcs == []
    assert len(up.disks) == 2 and len(up.faces) == 2
    for face in up.faces:
        assert len(face.disks) == 1 and len(face.tentacles) == 3
        assert face.is_tree()
    # checkerboard count: the three bigons are white
    assert up.num_white_faces == 3 == up.euler_white_faces()
    assert {t.direction for t in up.geometry.tentacles} == {"right-down"}


def test_one_tentacle_per_segment_side():
    for d, sc in QUALIFYING:
        geo = HGeometry(sc)
        assert len(geo.tentacles) == 2 * d.n
        assert sorted(t.tail_run for t in geo.tentacles) == [r.id for r in geo.runs]


@pytest.mark.parametrize("i", range(len(QUALIFYING)), ids=lambda i: f"{QUALIFYING[i][0].name}-{QUALIFYING[i][1].state}")
def test_shaded_face_structure(i):
    d, sc = QUALIFYING[i]
    up = build_shaded_faces(sc)
    assert all(f.is_connected() and f.is_tree() for f in up.faces)
    assert len(up.faces) == len(up.disks) - len(up.arcs)
    # regions of the complement of H and the arcs, less the shaded disks
    complement = len(sc.faces) + len(up.arcs)
    assert up.num_white_faces == complement - len(up.disks)
    assert up.num_white_faces == up.euler_white_faces()
    assert sorted(x for f in up.faces for x in f.disks) == sorted(up.disks)


def test_escher_stairs_never_close():
    for d, sc in QUALIFYING:
        v = check_escher(sc)
        assert v.ok, (d.name, sc.state, v.counterexample)
        assert v.staircases_checked >= 2 * d.n


def test_polyhedral_regions_are_prime_and_maximal():
    for d, sc in QUALIFYING:
        regions = polyhedral_regions(sc)
        assert is_maximal(sc, regions)
        for low in lower_polyhedron_diagrams(sc, regions):
            assert low.is_alternating()
            assert is_prime(low).verdict


def test_alternating_all_a_region_is_the_diagram():
    for name in ("4_1", "6_2", "7_7", "8_18"):
        d = diagram(name)
        sc = apply_state(d, "A" * d.n)
        (region,) = polyhedral_regions(sc)
        low = lower_polyhedron_diagram(sc, region)
        assert low.n == d.n and low.is_alternating()
        assert sorted(map(len, low.faces)) == sorted(map(len, d.faces))


@pytest.mark.parametrize("name,state,arcs,disks,faces,white,regions", [
    ("7_5", "BBAAAAA", 1, 4, 3, 6, 3),
    ("8_12", "AAAABBBB", 2, 4, 2, 8, 4),
    ("8_6", "AAABBBAA", 1, 5, 4, 6, 3),
    ("L6a1", "AAAABB", 1, 3, 2, 6, 3),
])
def test_frozen_counts(name, state, arcs, disks, faces, white, regions):
    sc = apply_state(diagram(name), state)
    up = build_shaded_faces(sc)
    got = (len(up.arcs), len(up.disks), len(up.faces), up.num_white_faces,
           len(polyhedral_regions(sc)))
    assert got == (arcs, disks, faces, white, regions)


def test_skipping_arcs_leaves_a_non_prime_region():
    sc = apply_state(diagram("8_12"), "AAAABBBB")
    assert find_nonprime_arcs(sc)
    with pytest.raises(NonPrimeRegion):
        lower_polyhedron_diagrams(sc, polyhedral_regions(sc, arcs=[]))


def test_connect_sum_all_a_needs_an_arc():
    from conftest import ROWS
    d = parse_pd(ROWS["3_1#3_1"]["pd"])
    up = build_shaded_faces(apply_state(d, "A" * 6))
    assert len(up.arcs) == 1
    assert len(up.faces) == len(up.disks) - 1
    assert all(f.is_tree() for f in up.faces)


def test_staircases_chain_circles():
    sc = apply_state(diagram("7_7"), "BBBBBBB")
    up = build_shaded_faces(sc)
    found = 0
    for face in up.faces:
        for c in range(len(sc.circles)):
            for stair in enumerate_staircases(sc, face, c, up.geometry):
                found += 1
                assert stair.top == c
                for a, b in zip(stair.steps, stair.steps[1:]):
                    assert a.bottom == b.top
                circles = [stair.top] + [s.bottom for s in stair.steps]
                assert len(set(circles)) == len(circles)
    assert found > 0


def test_escher_negative_controls():
    kink = apply_state(parse_pd(KINK), "A")
    v = check_escher(kink)
    assert not v.ok and v.counterexample.kind == "same-side"
    # an inadequate state of a larger diagram also trips the check
    d = parse_pd(A_NOT_B)
    assert not check_escher(apply_state(d, "B" * d.n)).ok


def test_to_dict(trefoil):
    out = build_shaded_faces(apply_state(trefoil, "AAA")).to_dict()
    assert out["white_faces"] == 3
    assert len(out["shaded_faces"]) == 2 and len(out["tentacles"]) == 6
