"""Adequate states of link diagrams and the volume bounds they certify."""

__version__ = "0.1.0"

from adeq.bound import V8, BoundReport, best_bound, volume_lower_bound  # noqa: E402
from adeq.diagram import Diagram, is_prime, parse_pd, to_pd  # noqa: E402
from adeq.resolution import apply_state, euler_char_neg, reduce, state_graph, verdicts  # noqa: E402
from adeq.search import find_homogeneously_adequate  # noqa: E402
from adeq.twist import find_twist_regions, loop_condition  # noqa: E402

__all__ = [
    "V8",
    "BoundReport",
    "Diagram",
    "apply_state",
    "best_bound",
    "euler_char_neg",
    "find_homogeneously_adequate",
    "find_twist_regions",
    "is_prime",
    "loop_condition",
    "parse_pd",
    "reduce",
    "state_graph",
    "to_pd",
    "verdicts",
    "volume_lower_bound",
]
