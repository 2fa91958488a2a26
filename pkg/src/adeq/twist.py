"""Twist regions, short/long resolutions and the 2-edge loop condition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from adeq.diagram import Diagram
from adeq.exceptions import MixedTwistState, ReducibleDiagram, SizeOne
from adeq.resolution import StateComplex, StateGraph, apply_state, state_graph

SHORT, LONG = "short", "long"


@dataclass(frozen=True)
class TwistRegion:
    id: int
    crossings: tuple[int, ...]  # in chain order
    bigons: tuple[int, ...]  # diagram face ids

    @property
    def size(self) -> int:
        return len(self.crossings)


def bigon_faces(d: Diagram) -> list[int]:
    """Faces with two corners at two distinct crossings."""
    out = []
    for f, cyc in enumerate(d.faces):
        if len(cyc) == 2 and cyc[0] // 4 != cyc[1] // 4:
            out.append(f)
    return out


def find_twist_regions(d: Diagram) -> tuple[TwistRegion, ...]:
    bigons = bigon_faces(d)
    adj: dict[int, list[tuple[int, int]]] = {c: [] for c in range(d.n)}
    for f in bigons:
        for e in d.face_edges(f):
            h, p = d.edges[e]
            if d.crossings[h // 4].is_over(h % 4) == d.crossings[p // 4].is_over(p % 4):
                raise ReducibleDiagram(
                    f"bigon face {f} is not alternating; a Reidemeister II move removes it"
                )
        c1, c2 = (c // 4 for c in d.faces[f])
        adj[c1].append((c2, f))
        adj[c2].append((c1, f))

    assigned = [-1] * d.n
    out: list[TwistRegion] = []
    for c in range(d.n):
        if assigned[c] >= 0:
            continue
        comp = _component(adj, c)
        ends = sorted(x for x in comp if len(adj[x]) == 1)
        start = ends[0] if ends else min(comp)
        chain, faces_used = _walk(adj, start)
        if set(chain) != comp:
            raise AssertionError(f"bigon chain through crossing {c} is not a simple string")
        rid = len(out)
        for x in chain:
            if assigned[x] >= 0:
                raise AssertionError(f"crossing {x} lies in two twist regions")
            assigned[x] = rid
        out.append(TwistRegion(rid, tuple(chain), tuple(faces_used)))
    return tuple(out)


def _component(adj, start) -> set[int]:
    seen, stack = {start}, [start]
    while stack:
        for y, _ in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _walk(adj, start) -> tuple[list[int], list[int]]:
    chain, used = [start], []
    cur = start
    while True:
        nxt = [(y, f) for y, f in sorted(adj[cur], key=lambda t: t[1]) if f not in used]
        if not nxt:
            break
        y, f = nxt[0]
        used.append(f)
        if y in chain:
            break
        chain.append(y)
        cur = y
    # a closed chain (every face a bigon between the same crossings) can leave faces unused
    for x in chain:
        for _, f in adj[x]:
            if f not in used:
                used.append(f)
    return chain, sorted(used)


def region_index(regions: tuple[TwistRegion, ...], n: int) -> list[int]:
    out = [0] * n
    for r in regions:
        for c in r.crossings:
            out[c] = r.id
    return out


def classify_resolution(tr: TwistRegion, s: str, sc: StateComplex) -> str:
    if tr.size < 2:
        raise SizeOne(f"twist region {tr.id} has a single crossing")
    letters = {s[c] for c in tr.crossings}
    if len(letters) > 1:
        raise MixedTwistState(f"twist region {tr.id} mixes A and B resolutions")
    pairs = {frozenset(sc.segments[c].circles) for c in tr.crossings}
    return SHORT if len(pairs) == 1 else LONG


@dataclass(frozen=True)
class TwoEdgeLoop:
    segments: tuple[int, int]
    circles: tuple[int, int]
    same_twist_region: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "segments": list(self.segments),
            "circles": list(self.circles),
            "same_twist_region": self.same_twist_region,
        }


def two_edge_loops(g: StateGraph, regions: Optional[tuple[TwistRegion, ...]] = None) -> list[TwoEdgeLoop]:
    """Every unordered pair of non-loop edges joining the same two circles."""
    by_pair: dict[tuple[int, int], list[int]] = {}
    for seg, pair in zip(g.segment_ids, g.edges):
        if pair[0] != pair[1]:
            by_pair.setdefault(pair, []).append(seg)
    where = None
    if regions is not None:
        where = region_index(regions, max(g.segment_ids, default=-1) + 1)
    out = []
    for pair in sorted(by_pair):
        for s1, s2 in combinations(sorted(by_pair[pair]), 2):
            same = None if where is None else where[s1] == where[s2]
            out.append(TwoEdgeLoop((s1, s2), pair, same))
    return out


@dataclass(frozen=True)
class LoopConditionVerdict:
    holds: bool
    violating_loop: Optional[TwoEdgeLoop] = None
    loops: tuple[TwoEdgeLoop, ...] = ()

    def __post_init__(self):
        assert (self.violating_loop is None) == self.holds


def loop_condition(
    d: Diagram,
    s: str,
    sc: Optional[StateComplex] = None,
    g: Optional[StateGraph] = None,
    regions: Optional[tuple[TwistRegion, ...]] = None,
) -> LoopConditionVerdict:
    """Every 2-edge loop must come from one short-resolved twist region."""
    sc = sc or apply_state(d, s)
    g = g or state_graph(sc)
    regions = regions if regions is not None else find_twist_regions(d)
    where = region_index(regions, d.n)
    short = {}
    for r in regions:
        if r.size < 2 or len({s[c] for c in r.crossings}) > 1:
            short[r.id] = False
        else:
            short[r.id] = classify_resolution(r, s, sc) == SHORT
    loops = tuple(two_edge_loops(g, regions))
    for lp in loops:
        r1, r2 = where[lp.segments[0]], where[lp.segments[1]]
        if r1 != r2 or not short[r1]:
            return LoopConditionVerdict(False, lp, loops)
    return LoopConditionVerdict(True, None, loops)
