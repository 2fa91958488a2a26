"""Combinatorics of the upper polyhedron read off the graph H.

Every face of H is cut into *runs*: maximal stretches of one state circle
between two segment sides. A run starts at an arrival corner (the face
has just come along a segment) and ends at a departure corner.

Gaps follow one rule per letter, applied at both ends of each segment:
A-segments lose the circle bit beside their arrival corners, B-segments
the bit beside their departure corners. A tentacle enters its face through
a gap, runs along the segment, then along one run:

* A: gap at the arrival end, tail on the run ending at the departure end
  (the tentacle travels against the face orientation);
* B: gap at the departure end, tail on the run starting at the arrival end.

The piece feeding a tentacle is whatever covers the flat corner on the
far side of its gap. Non-prime arcs are chords between two runs of one
face on the same circle; their endpoints sit at the head end of the run,
so every flat corner of a run is covered by the last part of its
tentacle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from adeq.diagram import Crossing, Diagram, _components, is_prime
from adeq.exceptions import FloodingContradiction, NonPrimeRegion
from adeq.resolution import ARRIVE, DEPART, FLAT, StateComplex

Node = tuple  # ("disk", region) | ("part", tentacle, k) | ("switch", arc)


@dataclass(frozen=True)
class Run:
    id: int
    face: int
    circle: int
    start: int  # vertex of the arrival corner
    end: int  # vertex of the departure corner
    flats: tuple[int, ...]
    forward: bool  # traversal agrees with the circle's own direction

    @property
    def circle_start(self) -> int:
        return self.start if self.forward else self.end

    @property
    def circle_end(self) -> int:
        return self.end if self.forward else self.start


@dataclass(frozen=True)
class NonPrimeArc:
    id: int
    circle: int
    region: int
    # gaps named by their bounding attachment vertices, in circle order
    ends: tuple[tuple[int, int], tuple[int, int]]
    inside: tuple[int, ...]
    outside: tuple[int, ...]
    runs: tuple[int, int] = (-1, -1)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "circle": self.circle,
            "region": self.region,
            "ends": [list(e) for e in self.ends],
            "inside": list(self.inside),
            "outside": list(self.outside),
            "runs": list(self.runs),
        }


@dataclass(frozen=True)
class PolyhedralRegion:
    id: int
    region: int
    circles: tuple[int, ...]
    segments: tuple[int, ...]
    arcs: tuple[int, ...]
    letter: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "region": self.region,
            "circles": list(self.circles),
            "segments": list(self.segments),
            "arcs": list(self.arcs),
            "letter": self.letter,
        }


@dataclass(frozen=True)
class Tentacle:
    id: int
    segment: int
    letter: str
    gap_vertex: int
    tail_run: int
    top_circle: int
    bottom_circle: int
    parts: int = 1

    @property
    def direction(self) -> str:
        return "right-down" if self.letter == "A" else "left-down"


@dataclass(frozen=True)
class ShadedFace:
    color: int
    disks: tuple[int, ...]
    tentacles: tuple[int, ...]
    switches: tuple[int, ...]
    nodes: tuple[Node, ...]
    edges: tuple[tuple[Node, Node], ...]

    def is_connected(self) -> bool:
        index = {v: i for i, v in enumerate(self.nodes)}
        pairs = [(index[a], index[b]) for a, b in self.edges]
        return _components(len(self.nodes), pairs) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.nodes) - 1

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "disks": list(self.disks),
            "tentacles": list(self.tentacles),
            "switches": list(self.switches),
            "nodes": [node_name(v) for v in self.nodes],
            "edges": [[node_name(a), node_name(b)] for a, b in self.edges],
        }


def node_name(v: Node) -> str:
    if v[0] == "disk":
        return f"D{v[1]}"
    if v[0] == "switch":
        return f"S{v[1]}"
    return f"T{v[1]}.{v[2]}"


@dataclass(frozen=True)
class Step:
    segment: int
    top: int
    bottom: int
    letter: str

    @property
    def direction(self) -> str:
        return "right" if self.letter == "A" else "left"


@dataclass(frozen=True)
class Staircase:
    steps: tuple[Step, ...]
    tentacles: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.steps[0].top

    @property
    def bottom(self) -> int:
        return self.steps[-1].bottom


@dataclass(frozen=True)
class EscherViolation:
    kind: str  # "same-side" or "loop"
    circle: int
    tentacles: tuple[int, ...]


@dataclass(frozen=True)
class EscherVerdict:
    violations: tuple[EscherViolation, ...] = ()
    staircases_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def counterexample(self) -> Optional[EscherViolation]:
        return self.violations[0] if self.violations else None


class HGeometry:
    """Runs and tentacles of H; valid for any state."""

    def __init__(self, sc: StateComplex):
        self.sc = sc
        self.runs: list[Run] = []
        self.face_runs: list[list[int]] = []
        self.disk_faces: set[int] = set()
        self.flat_run: dict[int, int] = {}
        self.run_after: dict[int, int] = {}
        self.run_before: dict[int, int] = {}
        self._build_runs()
        self.tentacles: list[Tentacle] = []
        self._build_tentacles()

    def _build_runs(self) -> None:
        sc = self.sc
        for f, cyc in enumerate(sc.faces):
            kinds = [sc.corner_kind(c) for c in cyc]
            if ARRIVE not in kinds:
                self.disk_faces.add(f)
                self.face_runs.append([])
                continue
            k = kinds.index(ARRIVE)
            cyc = cyc[k:] + cyc[:k]
            kinds = kinds[k:] + kinds[:k]
            ids = []
            i = 0
            while i < len(cyc):
                assert kinds[i] == ARRIVE
                x = sc.vertex(cyc[i])
                flats = []
                i += 1
                while kinds[i] == FLAT:
                    flats.append(sc.vertex(cyc[i]))
                    i += 1
                assert kinds[i] == DEPART
                y = sc.vertex(cyc[i])
                i += 1
                a = sc.vertex_darts[x][0]
                forward = a == sc.through[x][1]
                run = Run(len(self.runs), f, sc.circle_of[x], x, y, tuple(flats), forward)
                self.runs.append(run)
                ids.append(run.id)
                for v in flats:
                    self.flat_run[v] = run.id
                self.run_after[run.circle_start] = run.id
                self.run_before[run.circle_end] = run.id
            self.face_runs.append(ids)
        self.run_of_depart = {self.runs[r].end: r for r in range(len(self.runs))}
        self.run_of_arrive = {self.runs[r].start: r for r in range(len(self.runs))}

    def _build_tentacles(self) -> None:
        sc = self.sc
        # one tentacle per segment side; the side is named by its departure vertex
        for y in range(2 * sc.n):
            seg = y // 2
            letter = sc.state[seg]
            y2 = y ^ 1
            if letter == "A":
                gap, tail = y2, self.run_of_depart[y]
            else:
                gap, tail = y, self.run_of_arrive[y2]
            self.tentacles.append(
                Tentacle(len(self.tentacles), seg, letter, gap, tail,
                         sc.circle_of[gap], self.runs[tail].circle)
            )

    def source_run(self, t: Tentacle) -> Optional[int]:
        """Run whose tail covers the far side of the gap; None inside a disk."""
        return self.flat_run.get(t.gap_vertex)

    @cached_property
    def tentacles_on_run(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for t in self.tentacles:
            out.setdefault(t.tail_run, []).append(t.id)
        return out

    @cached_property
    def flow(self) -> dict[int, list[int]]:
        """Downstream successors: tentacles fed through gaps on a tentacle's tail."""
        out: dict[int, list[int]] = {t.id: [] for t in self.tentacles}
        for t in self.tentacles:
            r = self.source_run(t)
            if r is None:
                continue
            for up in self.tentacles_on_run.get(r, []):
                out[up].append(t.id)
        return out

    def side_of(self, v: int) -> bool:
        return self.sc.segment_on_left(v)


# non-prime arcs -----------------------------------------------------------

def _circle_attachments(sc: StateComplex, segs: set[int], circle: int) -> list[int]:
    return [v for v in sc.circles[circle] if v // 2 in segs]


def _components_without(sc: StateComplex, segs: list[int], circle: int) -> dict[int, int]:
    """Label segments by connectivity through circles other than ``circle``."""
    parent = {s: s for s in segs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_circle: dict[int, list[int]] = {}
    for s in segs:
        for c in set(sc.segments[s].circles):
            if c != circle:
                by_circle.setdefault(c, []).append(s)
    for members in by_circle.values():
        for s in members[1:]:
            parent[find(s)] = find(members[0])
    return {s: find(s) for s in segs}


def _find_split(sc: StateComplex, segs: list[int]):
    """First circle with two or more attachment components, and a block to cut off."""
    seg_set = set(segs)
    circles = sorted({c for s in segs for c in sc.segments[s].circles})
    for circle in circles:
        label = _components_without(sc, segs, circle)
        att = _circle_attachments(sc, seg_set, circle)
        labels = [label[v // 2] for v in att]
        if len(set(labels)) < 2:
            continue
        m = len(att)
        for start in range(m):
            lab = labels[start]
            if labels[start - 1] == lab:
                continue
            stop = start
            while labels[(stop + 1) % m] == lab:
                stop = (stop + 1) % m
            block = {(start + k) % m for k in range((stop - start) % m + 1)}
            if all(labels[i] != lab for i in range(m) if i not in block):
                first, last = att[start], att[stop]
                before, after = att[(start - 1) % m], att[(stop + 1) % m]
                inside = sorted(s for s in segs if label[s] == lab)
                return circle, ((before, first), (last, after)), inside
        raise AssertionError(f"attachments on circle {circle} interleave; H is not planar")
    return None


def _split_all(sc: StateComplex):
    arcs: list[NonPrimeArc] = []
    pieces: list[tuple[int, list[int], list[int]]] = []  # (region, segments, arcs)
    queue = [(r.id, sorted(r.segments), []) for r in sc.regions if r.segments]
    while queue:
        region, segs, bounding = queue.pop(0)
        hit = _find_split(sc, segs)
        if hit is None:
            pieces.append((region, segs, bounding))
            continue
        circle, ends, inside = hit
        outside = sorted(set(segs) - set(inside))
        arc = NonPrimeArc(len(arcs), circle, region, ends, tuple(inside), tuple(outside))
        arcs.append(arc)
        queue.append((region, inside, bounding + [arc.id]))
        queue.append((region, outside, bounding + [arc.id]))
    return arcs, pieces


def find_nonprime_arcs(sc: StateComplex) -> list[NonPrimeArc]:
    """A maximal collection of non-prime arcs, chosen greedily and deterministically."""
    arcs, _ = _split_all(sc)
    geo = HGeometry(sc)
    out = []
    for a in arcs:
        (before, first), (last, after) = a.ends
        r1 = geo.run_before[first]
        r2 = geo.run_after[last]
        if geo.runs[r1].face != geo.runs[r2].face:
            raise AssertionError(f"non-prime arc {a.id} does not fit in one face of H")
        out.append(NonPrimeArc(a.id, a.circle, a.region, a.ends, a.inside, a.outside, (r1, r2)))
    return out


def polyhedral_regions(sc: StateComplex, arcs: Optional[list[NonPrimeArc]] = None) -> list[PolyhedralRegion]:
    if arcs is None:
        arcs = find_nonprime_arcs(sc)
    pieces = [(r.id, set(r.segments), []) for r in sc.regions if r.segments]
    for a in arcs:
        for i, (region, segs, bounding) in enumerate(pieces):
            if set(a.inside) <= segs and set(a.outside) <= segs and region == a.region:
                pieces[i] = (region, set(a.inside), bounding + [a.id])
                pieces.append((region, set(a.outside), bounding + [a.id]))
                break
        else:
            raise AssertionError(f"arc {a.id} splits no current piece")
    out = []
    for region, segs, bounding in sorted(pieces, key=lambda p: (p[0], min(p[1]))):
        letters = {sc.state[s] for s in segs}
        circles = sorted({c for s in segs for c in sc.segments[s].circles})
        out.append(PolyhedralRegion(len(out), region, tuple(circles), tuple(sorted(segs)),
                                    tuple(bounding), letters.pop() if len(letters) == 1 else "?"))
    return out


def is_maximal(sc: StateComplex, regions: list[PolyhedralRegion]) -> bool:
    return all(_find_split(sc, list(r.segments)) is None for r in regions)


def lower_polyhedron_diagram(sc: StateComplex, region: PolyhedralRegion) -> Diagram:
    """Re-insert a crossing for each segment of the region on its boundary circles."""
    segs = list(region.segments)
    index = {s: i for i, s in enumerate(segs)}
    slot_of: dict[int, int] = {}
    crossings = []
    for s in segs:
        i = index[s]
        au, bu, _ = sc.vertex_darts[2 * s]
        aw, bw, _ = sc.vertex_darts[2 * s + 1]
        for k, dart in enumerate((au, bu, aw, bw)):
            slot_of[dart] = 4 * i + k
        crossings.append(Crossing(i, tuple(4 * i + k for k in range(4)),
                                  1 if sc.state[s] == "A" else 0))
    partner = [0] * (4 * len(segs))
    seg_set = set(segs)
    for c in region.circles:
        att = _circle_attachments(sc, seg_set, c)
        for k, v in enumerate(att):
            nxt = att[(k + 1) % len(att)]
            out_h = slot_of[sc.through[v][1]]
            in_h = slot_of[sc.through[nxt][0]]
            partner[out_h], partner[in_h] = in_h, out_h
    d = Diagram(tuple(crossings), tuple(partner), name=f"region{region.id}")
    if d.euler_characteristic() != 2:
        raise AssertionError(f"lower diagram of region {region.id} is not planar")
    return d


def lower_polyhedron_diagrams(sc: StateComplex, regions: Optional[list[PolyhedralRegion]] = None) -> list[Diagram]:
    regions = regions if regions is not None else polyhedral_regions(sc)
    out = []
    for r in regions:
        d = lower_polyhedron_diagram(sc, r)
        if not is_prime(d).verdict:
            raise NonPrimeRegion(f"polyhedral region {r.id} still has a non-prime subdiagram")
        out.append(d)
    return out


# shaded faces --------------------------------------------------------------

@dataclass
class UpperPolyhedron:
    sc: StateComplex
    geometry: HGeometry
    arcs: list[NonPrimeArc]
    faces: list[ShadedFace]
    disks: list[int]  # region ids of innermost disks
    run_endpoints: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    @property
    def num_white_faces(self) -> int:
        """Faces of H plus arcs, less the innermost disks (which are shaded)."""
        return len(self.sc.faces) + len(self.arcs) - len(self.disks)

    def ideal_vertex_count(self) -> int:
        """Components of H once every gap has been cut out."""
        sc = self.sc
        pairs = []
        for v in range(2 * sc.n):
            a, b, s = sc.vertex_darts[v]
            gap = a if sc.state[v // 2] == "A" else b
            keep = b if gap == a else a
            pairs.append((s, keep))
        for d in range(sc.num_darts):
            if d < sc.partner[d]:
                pairs.append((d, sc.partner[d]))
        return _components(sc.num_darts, pairs)

    def euler_white_faces(self) -> int:
        # 4-valent ideal vertices: E = 2V, so F = V + 2
        return self.ideal_vertex_count() + 2 - len(self.faces)

    def to_dict(self) -> dict:
        return {
            "arcs": [a.to_dict() for a in self.arcs],
            "shaded_faces": [f.to_dict() for f in self.faces],
            "white_faces": self.num_white_faces,
            "tentacles": [
                {"id": t.id, "segment": t.segment, "letter": t.letter, "direction": t.direction,
                 "top": t.top_circle, "bottom": t.bottom_circle, "parts": t.parts}
                for t in self.geometry.tentacles
            ],
        }


def _order_endpoints(geo: HGeometry, arcs: list[NonPrimeArc]) -> dict[int, list[tuple[int, int]]]:
    """Chord endpoints per run, in face-traversal order, nested so chords never cross."""
    per_run: dict[int, list[tuple[tuple, tuple[int, int]]]] = {}
    for a in arcs:
        f = geo.runs[a.runs[0]].face
        runs = geo.face_runs[f]
        pos = {r: i for i, r in enumerate(runs)}
        L = len(runs)
        for k in (0, 1):
            here, there = a.runs[k], a.runs[1 - k]
            i, j = pos[here], pos[there]
            dist = (j - i) % L
            tie = a.id if i < j else -a.id
            per_run.setdefault(here, []).append(((-dist, tie), (a.id, k)))
    return {r: [e for _, e in sorted(items)] for r, items in per_run.items()}


def _chords_cross(geo: HGeometry, arcs: list[NonPrimeArc], order) -> bool:
    by_face: dict[int, list[tuple[int, int]]] = {}
    for a in arcs:
        f = geo.runs[a.runs[0]].face
        seq = []
        for r in geo.face_runs[f]:
            seq.extend(order.get(r, []))
        where = {e: i for i, e in enumerate(seq)}
        by_face.setdefault(f, []).append(tuple(sorted((where[(a.id, 0)], where[(a.id, 1)]))))
    for chords in by_face.values():
        for p1, q1 in chords:
            for p2, q2 in chords:
                if p1 < p2 < q1 < q2:
                    return True
    return False


def build_shaded_faces(sc: StateComplex, arcs: Optional[list[NonPrimeArc]] = None) -> UpperPolyhedron:
    if arcs is None:
        arcs = find_nonprime_arcs(sc)
    geo = HGeometry(sc)
    disks = [r.id for r in sc.regions if r.trivial]
    disk_of_face = {r.faces[0]: r.id for r in sc.regions if r.trivial}

    covering: dict[int, int] = {}
    for t in geo.tentacles:
        if t.tail_run in covering:
            raise FloodingContradiction(f"run {t.tail_run} is claimed by two tentacles")
        covering[t.tail_run] = t.id
    missing = [r.id for r in geo.runs if r.id not in covering]
    if missing:
        raise FloodingContradiction(f"runs {missing} are reached by no tentacle")

    order = _order_endpoints(geo, arcs)
    if _chords_cross(geo, arcs, order):
        raise FloodingContradiction("non-prime arcs cross inside a face of H")

    # split tentacles at arc endpoints, head end first
    parts_of: dict[int, int] = {}
    switch_edges: list[tuple[Node, Node]] = []
    for t in geo.tentacles:
        ends = order.get(t.tail_run, [])
        if t.letter == "A":
            ends = list(reversed(ends))
        parts_of[t.id] = len(ends) + 1
        for k, (arc_id, _) in enumerate(ends):
            switch_edges.append((("part", t.id, k), ("switch", arc_id)))
            switch_edges.append((("switch", arc_id), ("part", t.id, k + 1)))
    geo.tentacles = [
        Tentacle(t.id, t.segment, t.letter, t.gap_vertex, t.tail_run,
                 t.top_circle, t.bottom_circle, parts_of[t.id])
        for t in geo.tentacles
    ]

    def last_part(tid: int) -> Node:
        return ("part", tid, parts_of[tid] - 1)

    feed_edges: list[tuple[Node, Node]] = []
    for t in geo.tentacles:
        r = geo.source_run(t)
        if r is None:
            src: Node = ("disk", sc.region_of_face[sc.face_of_corner[sc.flat_corner(t.gap_vertex)]])
        else:
            src = last_part(covering[r])
        feed_edges.append((src, ("part", t.id, 0)))

    # flood colours outward from the innermost disks
    color: dict[Node, int] = {("disk", r): i for i, r in enumerate(disks)}
    children: dict[Node, list[Node]] = {}
    for a, b in feed_edges:
        children.setdefault(a, []).append(b)
    for t in geo.tentacles:
        for k in range(parts_of[t.id] - 1):
            children.setdefault(("part", t.id, k), []).append(("part", t.id, k + 1))
    frontier = [("disk", r) for r in disks]
    while frontier:
        nxt = []
        for v in frontier:
            for w in children.get(v, []):
                if w in color:
                    raise FloodingContradiction(f"{node_name(w)} receives two colours")
                color[w] = color[v]
                nxt.append(w)
        frontier = nxt
    unreached = [t.id for t in geo.tentacles if ("part", t.id, 0) not in color]
    if unreached:
        raise FloodingContradiction(f"tentacles {unreached} never receive a colour")

    # non-prime switches merge the two colours they touch
    merged = list(range(len(disks)))

    def find(x):
        while merged[x] != x:
            merged[x] = merged[merged[x]]
            x = merged[x]
        return x

    for a in arcs:
        t1, t2 = covering[a.runs[0]], covering[a.runs[1]]
        c1, c2 = find(color[("part", t1, 0)]), find(color[("part", t2, 0)])
        if c1 == c2:
            raise FloodingContradiction(f"switch {a.id} joins a face to itself")
        merged[c1] = c2
        color[("switch", a.id)] = c2

    nodes: dict[int, list[Node]] = {}
    for v in color:
        nodes.setdefault(find(color[v]), []).append(v)
    edges: dict[int, list[tuple[Node, Node]]] = {}
    for a, b in feed_edges + switch_edges:
        edges.setdefault(find(color[a]), []).append((a, b))
    faces = []
    for i, key in enumerate(sorted(nodes, key=lambda k: min(v[1] for v in nodes[k] if v[0] == "disk"))):
        vs = sorted(nodes[key], key=_node_key)
        faces.append(ShadedFace(
            i,
            tuple(v[1] for v in vs if v[0] == "disk"),
            tuple(sorted({v[1] for v in vs if v[0] == "part"})),
            tuple(v[1] for v in vs if v[0] == "switch"),
            tuple(vs),
            tuple(sorted(edges.get(key, []), key=lambda e: (_node_key(e[0]), _node_key(e[1])))),
        ))
    return UpperPolyhedron(sc, geo, list(arcs), faces, disks, order)


def _node_key(v: Node) -> tuple:
    return ({"disk": 0, "part": 1, "switch": 2}[v[0]],) + tuple(v[1:])


# staircases ------------------------------------------------------------------

def _step(geo: HGeometry, tid: int) -> Step:
    t = geo.tentacles[tid]
    return Step(t.segment, t.top_circle, t.bottom_circle, t.letter)


def enumerate_staircases(
    sc: StateComplex, face: ShadedFace, origin: int, geometry: Optional[HGeometry] = None
) -> list[Staircase]:
    """Maximal downstream tentacle paths inside ``face`` whose top is ``origin``."""
    geo = geometry or HGeometry(sc)
    allowed = set(face.tentacles)
    out: list[Staircase] = []
    for t in sorted(allowed):
        if geo.tentacles[t].top_circle != origin:
            continue
        stack = [(t,)]
        while stack:
            path = stack.pop()
            circles = [geo.tentacles[path[0]].top_circle] + [geo.tentacles[x].bottom_circle for x in path]
            nxt = [x for x in geo.flow[path[-1]] if x in allowed
                   and geo.tentacles[x].bottom_circle not in circles]
            if not nxt:
                out.append(Staircase(tuple(_step(geo, x) for x in path), path))
            for x in sorted(nxt, reverse=True):
                stack.append(path + (x,))
    return out


def check_escher(sc: StateComplex, upper: Optional[UpperPolyhedron] = None, limit: int = 100) -> EscherVerdict:
    """Search every downstream tentacle path for a circle met twice.

    Works on any state: the tentacle flow is read off H directly, so a
    non-adequate complex can serve as a negative control.
    """
    geo = upper.geometry if upper is not None else HGeometry(sc)
    violations: list[EscherViolation] = []
    checked = 0
    for start in range(len(geo.tentacles)):
        t0 = geo.tentacles[start]
        stack = [((start,), (t0.top_circle, t0.bottom_circle))]
        while stack:
            path, circles = stack.pop()
            checked += 1
            if circles[-1] in circles[:-1]:
                violations.append(_classify_violation(sc, geo, path, circles))
                if len(violations) >= limit:
                    return EscherVerdict(tuple(violations), checked)
                continue
            for x in geo.flow[path[-1]]:
                stack.append((path + (x,), circles + (geo.tentacles[x].bottom_circle,)))
    return EscherVerdict(tuple(violations), checked)


def _classify_violation(sc, geo: HGeometry, path, circles) -> EscherViolation:
    c = circles[-1]
    i = circles.index(c)
    first = geo.tentacles[path[i]] if i < len(path) else geo.tentacles[path[-1]]
    last = geo.tentacles[path[-1]]
    top_v = first.gap_vertex if i == 0 else _bottom_vertex(geo, geo.tentacles[path[i - 1]])
    bottom_v = _bottom_vertex(geo, last)
    same = sc.circle_of[top_v] == c and sc.circle_of[bottom_v] == c and \
        sc.segment_on_left(top_v) == sc.segment_on_left(bottom_v)
    return EscherViolation("same-side" if same else "loop", c, tuple(path[i:] if i < len(path) else path))


def _bottom_vertex(geo: HGeometry, t: Tentacle) -> int:
    run = geo.runs[t.tail_run]
    return run.end if t.letter == "A" else run.start
