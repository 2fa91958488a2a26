"""Link diagrams as 4-valent planar combinatorial maps.

A diagram with ``n`` crossings has ``4n`` half-edges. Half-edge ``4*c + s``
sits in slot ``s`` of crossing ``c``; slots are numbered counterclockwise
and slot 0 is the incoming under-strand of the PD tuple. Two structures
carry the whole embedding:

* the rotation ``s -> s + 1 (mod 4)`` inside each crossing, and
* the involution pairing the two half-edges of each diagram edge.

The corner ``4*c + s`` is the angle swept counterclockwise from slot ``s``
to slot ``s + 1``. Faces are orbits of corners under
``corner -> partner(rotate(corner))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional

from adeq.exceptions import (
    Disconnected,
    DuplicateEdgeLabel,
    MalformedCode,
    NonPlanar,
)

__all__ = [
    "Crossing",
    "Diagram",
    "PrimenessCertificate",
    "parse_pd",
    "to_pd",
    "faces",
    "is_prime",
    "separates",
]

_TUPLE_RE = re.compile(r"X\s*\[([^\[\]]*)\]")
_LIST_RE = re.compile(r"\[([^\[\]]*)\]")
_ALLOWED_LEFTOVER = re.compile(r"^(?:PD|[\s,\[\]\(\)])*$")


def half_edge(crossing: int, slot: int) -> int:
    return 4 * crossing + (slot % 4)


@dataclass(frozen=True)
class Crossing:
    """One crossing: four half-edges counterclockwise plus the over-strand.

    ``over`` is 1 when slots (1, 3) form the over-strand, 0 when slots
    (0, 2) do.
    """

    id: int
    half_edges: tuple[int, int, int, int]
    over: int = 1
    labels: tuple[int, int, int, int] = (0, 0, 0, 0)

    def __post_init__(self):
        if len(set(self.half_edges)) != 4:
            raise MalformedCode(f"crossing {self.id}: half-edges must be distinct")
        if self.over not in (0, 1):
            raise MalformedCode(f"crossing {self.id}: over marker must be 0 or 1")

    def is_over(self, slot: int) -> bool:
        return slot % 2 == self.over

    @property
    def a_corners(self) -> tuple[int, int]:
        """Corners swept when the over-strand turns counterclockwise."""
        return (self.over, self.over + 2)

    @property
    def b_corners(self) -> tuple[int, int]:
        return (1 - self.over, 3 - self.over)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    partner: tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(h, partner(h))`` with ``h`` the smaller half-edge."""
        return tuple((h, p) for h, p in enumerate(self.partner) if h < p)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        out = [0] * len(self.partner)
        for e, (h, p) in enumerate(self.edges):
            out[h] = out[p] = e
        return tuple(out)

    def crossing_of(self, h: int) -> int:
        return h // 4

    def rotate(self, h: int, k: int = 1) -> int:
        return 4 * (h // 4) + (h % 4 + k) % 4

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        h, p = self.edges[e]
        return h // 4, p // 4

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_orbits(len(self.partner), lambda c: self.partner[self.rotate(c)]))

    @cached_property
    def face_of_corner(self) -> tuple[int, ...]:
        out = [0] * len(self.partner)
        for f, cyc in enumerate(self.faces):
            for c in cyc:
                out[c] = f
        return tuple(out)

    def face_edges(self, f: int) -> list[int]:
        """Edges along face ``f``, in traversal order."""
        return [self.edge_of[self.rotate(c)] for c in self.faces[f]]

    @cached_property
    def edge_faces(self) -> tuple[tuple[int, int], ...]:
        """The two faces bordering each edge."""
        sides: list[list[int]] = [[] for _ in self.edges]
        for f in range(len(self.faces)):
            for e in self.face_edges(f):
                sides[e].append(f)
        return tuple((s[0], s[1]) for s in sides)

    def euler_characteristic(self) -> int:
        return self.n - len(self.edges) + len(self.faces)

    def is_alternating(self) -> bool:
        for h, p in self.edges:
            if self.crossings[h // 4].is_over(h % 4) == self.crossings[p // 4].is_over(p % 4):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "crossings": [
                {"id": c.id, "half_edges": list(c.half_edges), "over": c.over}
                for c in self.crossings
            ],
            "involution": list(self.partner),
            "faces": [list(f) for f in self.faces],
        }


def _orbits(size: int, step) -> list[tuple[int, ...]]:
    seen = [False] * size
    out = []
    for start in range(size):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = step(x)
        out.append(tuple(cyc))
    return out


def _tokenize(text: str) -> list[list[str]]:
    matches = list(_TUPLE_RE.finditer(text))
    regex = _TUPLE_RE
    if not matches:
        matches = list(_LIST_RE.finditer(text))
        regex = _LIST_RE
    leftover = regex.sub("", text)
    if not _ALLOWED_LEFTOVER.match(leftover):
        raise MalformedCode(f"unexpected text outside crossing tuples: {leftover.strip()!r}")
    return [m.group(1).split(",") for m in matches]


def parse_pd(text: str, mirror: bool = False, name: str = "") -> Diagram:
    """Parse PD text such as ``X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]``.

    ``mirror`` reflects the diagram, which swaps the roles of A and B.
    """
    if not text or not text.strip():
        raise MalformedCode("empty PD code")
    tuples = []
    for raw in _tokenize(text):
        if len(raw) != 4:
            raise MalformedCode(f"crossing tuple has {len(raw)} entries, expected 4")
        try:
            tuples.append([int(x) for x in raw])
        except ValueError:
            raise MalformedCode(f"non-integer edge label in {raw}") from None
    if not tuples:
        raise MalformedCode("no crossing tuples found")

    where: dict[int, list[int]] = {}
    for c, tup in enumerate(tuples):
        for s, lab in enumerate(tup):
            where.setdefault(lab, []).append(half_edge(c, s))
    for lab, hs in where.items():
        if len(hs) > 2:
            raise DuplicateEdgeLabel(f"edge label {lab} appears {len(hs)} times")
        if len(hs) < 2:
            raise MalformedCode(f"edge label {lab} appears only once")

    partner = [0] * (4 * len(tuples))
    for h1, h2 in where.values():
        partner[h1], partner[h2] = h2, h1
    over = 0 if mirror else 1
    crossings = tuple(
        Crossing(c, tuple(half_edge(c, s) for s in range(4)), over, tuple(tup))
        for c, tup in enumerate(tuples)
    )
    d = Diagram(crossings, tuple(partner), name=name)
    _validate(d)
    return d


def _validate(d: Diagram) -> None:
    if _components(d.n, [d.edge_endpoints(e) for e in range(len(d.edges))]) != 1:
        raise Disconnected("underlying 4-valent graph is not connected")
    chi = d.euler_characteristic()
    if chi != 2:
        raise NonPlanar(f"V - E + F = {chi}, expected 2")


def _components(n: int, pairs) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def to_pd(d: Diagram) -> str:
    """Serialise with labels ``edge id + 1``; slot 0 is always under."""
    parts = []
    for c in d.crossings:
        shift = 0 if c.over == 1 else 1
        labels = [d.edge_of[c.half_edges[(s + shift) % 4]] + 1 for s in range(4)]
        parts.append("X[" + ",".join(map(str, labels)) + "]")
    return " ".join(parts)


def faces(d: Diagram) -> list[tuple[int, ...]]:
    return list(d.faces)


@dataclass(frozen=True)
class PrimenessCertificate:
    verdict: bool
    witness: Optional[tuple[int, int]] = None

    def __post_init__(self):
        assert (self.witness is None) == self.verdict


def separates(d: Diagram, cut: tuple[int, ...]) -> bool:
    """True when deleting the edges ``cut`` leaves crossings on two sides."""
    removed = set(cut)
    pairs = [d.edge_endpoints(e) for e in range(len(d.edges)) if e not in removed]
    return _components(d.n, pairs) > 1


def is_prime(d: Diagram) -> PrimenessCertificate:
    """Look for a 2-edge cut whose edges border a common pair of faces."""
    shared: dict[tuple[int, int], list[int]] = {}
    for e, (f, g) in enumerate(d.edge_faces):
        shared.setdefault((min(f, g), max(f, g)), []).append(e)
    for key in sorted(shared):
        for e1, e2 in combinations(shared[key], 2):
            if separates(d, (e1, e2)):
                return PrimenessCertificate(False, (e1, e2))
    return PrimenessCertificate(True)
