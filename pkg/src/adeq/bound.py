"""Certified volume lower bounds from a homogeneously adequate state."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Optional

from adeq.diagram import Diagram, is_prime
from adeq.exceptions import PreconditionMissing
from adeq.resolution import Verdicts, apply_state, euler_char_neg, reduce, state_graph, verdicts
from adeq.twist import LoopConditionVerdict, loop_condition

SCHEMA_VERSION = "adeq.bound/1"

# volume of the regular ideal hyperbolic octahedron
V8 = Decimal("3.663862376708876")

CERTIFIED_ZERO, UNKNOWN = "certified-zero", "unknown"


def certify_ec_zero(v: Verdicts, loop: LoopConditionVerdict, prime: bool = True) -> str:
    """Complex product disks vanish once the 2-edge loop condition holds."""
    if not (prime and v.adequate and v.homogeneous):
        raise PreconditionMissing("needs a prime diagram with an adequate, homogeneous state")
    return CERTIFIED_ZERO if loop.holds else UNKNOWN


def guts_chi(chi_minus: int, ec_status: str) -> Optional[int]:
    return chi_minus if ec_status == CERTIFIED_ZERO else None


def format_decimal(x: Decimal, precision: int) -> str:
    """Truncate (never round up) to ``precision`` digits after the point."""
    q = Decimal(1).scaleb(-precision)
    return str(x.quantize(q, rounding="ROUND_DOWN"))


@dataclass(frozen=True)
class BoundReport:
    diagram: str
    state: str
    prime: bool
    adequate: bool
    homogeneous: bool
    chi_minus: int
    loop_condition: bool
    ec_status: str
    guts: Optional[int]
    hyperbolic: bool
    precision: int = 4
    violating_loop: Optional[dict] = None

    @property
    def has_bound(self) -> bool:
        return self.prime and self.adequate and self.homogeneous and self.loop_condition

    @property
    def v8_multiple(self) -> Optional[int]:
        return self.guts if self.has_bound else None

    @property
    def volume_bound(self) -> Optional[Decimal]:
        m = self.v8_multiple
        return None if m is None else V8 * m

    @property
    def gromov_bound(self) -> Optional[int]:
        m = self.v8_multiple
        return None if m is None else 2 * m

    @property
    def caveat(self) -> str:
        if not self.has_bound:
            return "E_c unknown: only chi_minus of the reduced state graph is reported"
        if not self.hyperbolic:
            return "volume inequality assumes the link is hyperbolic (not asserted)"
        return "link asserted hyperbolic by the user"

    def to_dict(self) -> dict:
        vb = self.volume_bound
        return {
            "schema": SCHEMA_VERSION,
            "diagram": self.diagram,
            "state": self.state,
            "prime": self.prime,
            "adequate": self.adequate,
            "homogeneous": self.homogeneous,
            "chi_minus": self.chi_minus,
            "loop_condition": self.loop_condition,
            "violating_loop": self.violating_loop,
            "ec_status": self.ec_status,
            "guts_chi_minus": self.guts,
            "v8": format_decimal(V8, 15),
            "v8_multiple": self.v8_multiple,
            "volume_lower_bound": None if vb is None else format_decimal(vb, self.precision),
            "gromov_norm_lower_bound": self.gromov_bound,
            "hyperbolic_asserted": self.hyperbolic,
            "caveat": self.caveat,
        }

    def summary(self) -> str:
        vb = self.volume_bound
        shown = "-" if vb is None else f"{format_decimal(vb, self.precision)} (= {self.v8_multiple} v8)"
        return (f"{self.diagram or '<diagram>'}  state={self.state}  chi_-={self.chi_minus}  "
                f"E_c={self.ec_status}  bound={shown}")


def volume_lower_bound(
    d: Diagram,
    state: str,
    hyperbolic: bool = False,
    precision: int = 4,
    prime: Optional[bool] = None,
) -> BoundReport:
    sc = apply_state(d, state)
    v = verdicts(sc)
    g = state_graph(sc)
    chi = euler_char_neg(reduce(g))
    prime = is_prime(d).verdict if prime is None else prime
    if prime and v.adequate and v.homogeneous:
        loop = loop_condition(d, sc.state, sc, g)
        status = certify_ec_zero(v, loop, prime)
        lp = loop.violating_loop
        return BoundReport(d.name, sc.state, prime, True, True, chi, loop.holds, status,
                           guts_chi(chi, status), hyperbolic, precision,
                           None if lp is None else lp.to_dict())
    return BoundReport(d.name, sc.state, prime, v.adequate, v.homogeneous, chi, False,
                       UNKNOWN, None, hyperbolic, precision)


def best_bound(
    d: Diagram,
    mode: str = "twist",
    budget: int = 1 << 20,
    hyperbolic: bool = False,
    precision: int = 4,
) -> BoundReport:
    """Largest certified bound over the homogeneously adequate states found.

    Falls back to the largest-chi uncertified state, then to all-A.
    """
    from adeq.search import find_homogeneously_adequate

    prime = is_prime(d).verdict
    result = find_homogeneously_adequate(d, mode, budget)
    certified = [r for r in result.records if r.loop.holds]
    pick = certified[0] if certified else result.best
    state = pick.state if pick is not None else "A" * d.n
    return volume_lower_bound(d, state, hyperbolic, precision, prime)
