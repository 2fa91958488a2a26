"""Enumerate states and collect the homogeneously adequate ones."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Optional

from adeq.diagram import Diagram
from adeq.exceptions import BudgetExceeded
from adeq.resolution import (
    Verdicts,
    apply_state,
    euler_char_neg,
    reduce,
    state_graph,
    verdicts,
)
from adeq.twist import LoopConditionVerdict, TwistRegion, find_twist_regions, loop_condition

DEFAULT_BUDGET = 1 << 20
FULL, TWIST = "full", "twist"


def enumerate_states(
    d: Diagram,
    mode: str = TWIST,
    budget: int = DEFAULT_BUDGET,
    regions: Optional[tuple[TwistRegion, ...]] = None,
) -> Iterator[str]:
    if mode == FULL:
        groups = [(c,) for c in range(d.n)]
    elif mode == TWIST:
        regions = regions if regions is not None else find_twist_regions(d)
        groups = [r.crossings for r in regions]
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    total = 1 << len(groups)
    if total > budget:
        raise BudgetExceeded(f"{total} states exceed the budget of {budget}")
    for bits in range(total):
        letters = ["A"] * d.n
        for i, grp in enumerate(groups):
            if bits >> i & 1:
                for c in grp:
                    letters[c] = "B"
        yield "".join(letters)


@dataclass(frozen=True)
class StateRecord:
    state: str
    verdicts: Verdicts
    chi_minus: int
    loop: LoopConditionVerdict

    def to_dict(self) -> dict:
        lp = self.loop.violating_loop
        return {
            "state": self.state,
            "adequate": self.verdicts.adequate,
            "homogeneous": self.verdicts.homogeneous,
            "chi_minus": self.chi_minus,
            "loop_condition": self.loop.holds,
            "violating_loop": None if lp is None else lp.to_dict(),
        }


@dataclass(frozen=True)
class SearchResult:
    records: tuple[StateRecord, ...]
    examined: int
    pruned: int
    mode: str = TWIST
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def states(self) -> list[str]:
        return [r.state for r in self.records]

    @property
    def best(self) -> Optional[StateRecord]:
        return self.records[0] if self.records else None


def evaluate_state(d: Diagram, s: str, regions=None) -> tuple[Verdicts, object, object]:
    sc = apply_state(d, s)
    return verdicts(sc), sc, state_graph(sc)


def find_homogeneously_adequate(
    d: Diagram, mode: str = TWIST, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    regions = find_twist_regions(d)
    records = []
    examined = 0
    for s in enumerate_states(d, mode, budget, regions):
        examined += 1
        v, sc, g = evaluate_state(d, s)
        if not (v.adequate and v.homogeneous):
            continue
        chi = euler_char_neg(reduce(g))
        records.append(StateRecord(s, v, chi, loop_condition(d, s, sc, g, regions)))
    records.sort(key=lambda r: (-r.chi_minus, r.state))
    return SearchResult(tuple(records), examined, (1 << d.n) - examined, mode)
