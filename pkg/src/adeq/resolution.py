"""States, state circles, the trivalent graph H and the state graphs.

Resolving crossing ``c`` keeps two of its corners as they were (the "cut"
corners) and opens a channel joining the other two. The A-resolution
joins the corners swept by rotating the over-strand counterclockwise.
Each resolved crossing becomes two trivalent vertices of H joined by a
segment:

    u = 2c   rotation (slot k,   slot k+1, seg)
    w = 2c+1 rotation (slot k+2, slot k+3, seg)

where ``k`` is the first cut corner. Darts ``0 .. 4n-1`` are the diagram
half-edges, darts ``4n + 2c`` and ``4n + 2c + 1`` are the two ends of
segment ``c``. Faces of H are traced exactly as faces of the diagram, so
H inherits one face per diagram face.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from adeq.diagram import Diagram
from adeq.exceptions import DisconnectedGraph, IncompleteState

StateLike = Union[str, Sequence[str], dict]

FLAT, DEPART, ARRIVE = "flat", "depart", "arrive"


def normalize_state(d: Diagram, s: StateLike) -> str:
    if isinstance(s, dict):
        missing = [c for c in range(d.n) if c not in s]
        if missing:
            raise IncompleteState(f"no resolution chosen for crossings {missing}")
        s = [s[c] for c in range(d.n)]
    s = "".join(str(x).upper() for x in s)
    if len(s) != d.n:
        raise IncompleteState(f"state has {len(s)} letters for {d.n} crossings")
    if set(s) - {"A", "B"}:
        raise IncompleteState(f"state letters must be A or B, got {s!r}")
    return s


@dataclass(frozen=True)
class Segment:
    id: int  # equals the crossing id
    letter: str
    u: int
    w: int
    circles: tuple[int, int]


@dataclass(frozen=True)
class Region:
    id: int
    faces: tuple[int, ...]
    circles: tuple[int, ...]
    segments: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return not self.segments and len(self.circles) == 1


@dataclass(frozen=True)
class StateComplex:
    diagram: Diagram
    state: str
    rot: tuple[int, ...]  # counterclockwise successor of each dart
    partner: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def num_darts(self) -> int:
        return len(self.rot)

    def vertex(self, dart: int) -> int:
        n4 = 4 * self.n
        if dart < n4:
            c, s = divmod(dart, 4)
            k = _first_cut_corner(self.diagram, c, self.state[c])
            return 2 * c + ((s - k) % 4 >= 2)
        return dart - n4

    def seg_dart(self, v: int) -> int:
        return 4 * self.n + v

    def is_seg_dart(self, dart: int) -> bool:
        return dart >= 4 * self.n

    @cached_property
    def vertex_darts(self) -> tuple[tuple[int, int, int], ...]:
        """``(a, b, seg)`` counterclockwise at every vertex."""
        out = []
        for v in range(2 * self.n):
            s = self.seg_dart(v)
            a = self.rot[s]
            out.append((a, self.rot[a], s))
        return tuple(out)

    # circles -----------------------------------------------------------
    @cached_property
    def _circle_data(self):
        order: list[list[int]] = []
        circle_of = [-1] * (2 * self.n)
        through = [(0, 0)] * (2 * self.n)  # (in dart, out dart)
        for start in range(2 * self.n):
            if circle_of[start] >= 0:
                continue
            cid = len(order)
            seq = []
            a, b, _ = self.vertex_darts[start]
            v, d_in, d_out = start, a, b
            while circle_of[v] < 0:
                circle_of[v] = cid
                seq.append(v)
                through[v] = (d_in, d_out)
                arrive = self.partner[d_out]
                v = self.vertex(arrive)
                x, y, _ = self.vertex_darts[v]
                d_in, d_out = arrive, (y if arrive == x else x)
            order.append(seq)
        return tuple(tuple(c) for c in order), tuple(circle_of), tuple(through)

    @property
    def circles(self) -> tuple[tuple[int, ...], ...]:
        """Each circle as its vertices in traversal order."""
        return self._circle_data[0]

    @property
    def circle_of(self) -> tuple[int, ...]:
        return self._circle_data[1]

    @property
    def through(self) -> tuple[tuple[int, int], ...]:
        return self._circle_data[2]

    def segment_on_left(self, v: int) -> bool:
        a, b, _ = self.vertex_darts[v]
        return self.through[v] == (a, b)

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        return tuple(
            Segment(c, self.state[c], 2 * c, 2 * c + 1,
                    (self.circle_of[2 * c], self.circle_of[2 * c + 1]))
            for c in range(self.n)
        )

    # faces and regions -------------------------------------------------
    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces of H as cycles of corners; corner ``d`` lies between ``d`` and ``rot[d]``."""
        seen = [False] * self.num_darts
        out = []
        for start in range(self.num_darts):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.partner[self.rot[x]]
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def face_of_corner(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for f, cyc in enumerate(self.faces):
            for c in cyc:
                out[c] = f
        return tuple(out)

    def corner_kind(self, corner: int) -> str:
        if self.is_seg_dart(corner):
            return ARRIVE
        if self.is_seg_dart(self.rot[corner]):
            return DEPART
        return FLAT

    def flat_corner(self, v: int) -> int:
        return self.vertex_darts[v][0]

    def depart_corner(self, v: int) -> int:
        return self.vertex_darts[v][1]

    def arrive_corner(self, v: int) -> int:
        return self.vertex_darts[v][2]

    @cached_property
    def regions(self) -> tuple[Region, ...]:
        parent = list(range(len(self.faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for seg in self.segments:
            f1 = self.face_of_corner[self.depart_corner(seg.u)]
            f2 = self.face_of_corner[self.arrive_corner(seg.u)]
            parent[find(f1)] = find(f2)
        groups: dict[int, list[int]] = {}
        for f in range(len(self.faces)):
            groups.setdefault(find(f), []).append(f)
        members = sorted(groups.values())
        region_of_face = [0] * len(self.faces)
        for r, fs in enumerate(members):
            for f in fs:
                region_of_face[f] = r
        segs: list[list[int]] = [[] for _ in members]
        for seg in self.segments:
            segs[region_of_face[self.face_of_corner[self.depart_corner(seg.u)]]].append(seg.id)
        out = []
        for r, fs in enumerate(members):
            circ = sorted({self.circle_of[self.vertex(c)] for f in fs for c in self.faces[f]})
            out.append(Region(r, tuple(fs), tuple(circ), tuple(segs[r])))
        return tuple(out)

    @cached_property
    def region_of_face(self) -> tuple[int, ...]:
        out = [0] * len(self.faces)
        for reg in self.regions:
            for f in reg.faces:
                out[f] = reg.id
        return tuple(out)

    @cached_property
    def region_of_segment(self) -> tuple[int, ...]:
        out = [0] * self.n
        for reg in self.regions:
            for s in reg.segments:
                out[s] = reg.id
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "state": self.state,
            "circles": [list(c) for c in self.circles],
            "segments": [
                {"id": s.id, "letter": s.letter, "circles": list(s.circles),
                 "region": self.region_of_segment[s.id]}
                for s in self.segments
            ],
            "regions": [
                {"id": r.id, "circles": list(r.circles), "segments": list(r.segments),
                 "trivial": r.trivial}
                for r in self.regions
            ],
        }


def _first_cut_corner(d: Diagram, c: int, letter: str) -> int:
    x = d.crossings[c]
    return (x.b_corners if letter == "A" else x.a_corners)[0]


def apply_state(d: Diagram, s: StateLike) -> StateComplex:
    state = normalize_state(d, s)
    n4 = 4 * d.n
    rot = [0] * (n4 + 2 * d.n)
    partner = list(d.partner) + [0] * (2 * d.n)
    for c in range(d.n):
        k = _first_cut_corner(d, c, state[c])
        su, sw = n4 + 2 * c, n4 + 2 * c + 1
        for seg, (p, q) in ((su, (k, k + 1)), (sw, (k + 2, k + 3))):
            a, b = 4 * c + p % 4, 4 * c + q % 4
            rot[a], rot[b], rot[seg] = b, seg, a
        partner[su], partner[sw] = sw, su
    sc = StateComplex(d, state, tuple(rot), tuple(partner))
    v, e, f = 2 * d.n, 3 * d.n, len(sc.faces)
    assert v - e + f == 2, "resolution broke planarity"
    return sc


def regions(sc: StateComplex) -> tuple[Region, ...]:
    return sc.regions


@dataclass(frozen=True)
class StateGraph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]  # sorted circle pair per edge
    segment_ids: tuple[int, ...]
    reduced: bool = False

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        adj: dict[int, set[int]] = {v: set() for v in range(self.num_vertices)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, stack = {0}, [0]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.num_vertices

    def loops(self) -> list[int]:
        return [s for s, (a, b) in zip(self.segment_ids, self.edges) if a == b]


def state_graph(sc: StateComplex) -> StateGraph:
    edges = tuple(tuple(sorted(s.circles)) for s in sc.segments)
    return StateGraph(len(sc.circles), edges, tuple(s.id for s in sc.segments))


def reduce(g: StateGraph) -> StateGraph:
    """Keep one edge per parallel class; loops survive as single loops."""
    seen = set()
    edges, ids = [], []
    for e, s in zip(g.edges, g.segment_ids):
        if e not in seen:
            seen.add(e)
            edges.append(e)
            ids.append(s)
    return StateGraph(g.num_vertices, tuple(edges), tuple(ids), reduced=True)


def euler_char_neg(g: StateGraph) -> int:
    if not g.is_connected():
        raise DisconnectedGraph("negative Euler characteristic needs a connected graph")
    return max(len(g.edges) - g.num_vertices, 0)


@dataclass(frozen=True)
class AdequacyVerdict:
    adequate: bool
    loop_segment: Optional[int] = None


@dataclass(frozen=True)
class HomogeneityVerdict:
    homogeneous: bool
    witness: Optional[tuple[int, int, int]] = None  # (region, A segment, B segment)


@dataclass(frozen=True)
class Verdicts:
    adequacy: AdequacyVerdict
    homogeneity: HomogeneityVerdict

    @property
    def adequate(self) -> bool:
        return self.adequacy.adequate

    @property
    def homogeneous(self) -> bool:
        return self.homogeneity.homogeneous


def check_adequate(sc: StateComplex) -> AdequacyVerdict:
    for seg in sc.segments:
        if seg.circles[0] == seg.circles[1]:
            return AdequacyVerdict(False, seg.id)
    return AdequacyVerdict(True)


def check_homogeneous(sc: StateComplex) -> HomogeneityVerdict:
    for reg in sc.regions:
        a = [s for s in reg.segments if sc.state[s] == "A"]
        b = [s for s in reg.segments if sc.state[s] == "B"]
        if a and b:
            return HomogeneityVerdict(False, (reg.id, a[0], b[0]))
    return HomogeneityVerdict(True)


def verdicts(sc: StateComplex) -> Verdicts:
    return Verdicts(check_adequate(sc), check_homogeneous(sc))
