"""DOT, JSON and SVG renderings. All output is byte-stable for equal input."""

from __future__ import annotations

import json
import math

from adeq.resolution import StateComplex, StateGraph
from adeq.upperpoly import UpperPolyhedron, node_name

LETTER_COLOR = {"A": "#c0392b", "B": "#2471a3"}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def state_graph_dot(g: StateGraph, sc: StateComplex, name: str = "G") -> str:
    lines = [f"graph {_ident(name)} {{", "  node [shape=circle];"]
    lines += [f"  c{v};" for v in range(g.num_vertices)]
    for seg, (a, b) in zip(g.segment_ids, g.edges):
        letter = sc.state[seg]
        lines.append(f'  c{a} -- c{b} [label="s{seg}", color="{LETTER_COLOR[letter]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def piece_graph_dot(up: UpperPolyhedron, name: str = "shaded") -> str:
    lines = [f"digraph {_ident(name)} {{", "  rankdir=TB;"]
    for face in up.faces:
        lines.append(f"  subgraph cluster_{face.color} {{")
        lines.append(f'    label="shaded face {face.color}";')
        for v in face.nodes:
            shape = {"disk": "doublecircle", "part": "box", "switch": "diamond"}[v[0]]
            lines.append(f'    "{node_name(v)}" [shape={shape}];')
        for a, b in face.edges:
            lines.append(f'    "{node_name(a)}" -> "{node_name(b)}";')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_json(sc: StateComplex, up: UpperPolyhedron | None = None) -> dict:
    out = {"schema": "adeq.complex/1", "diagram": sc.diagram.name, **sc.to_dict()}
    if up is not None:
        out["upper_polyhedron"] = up.to_dict()
    return out


def h_sketch_svg(sc: StateComplex, size: int = 400) -> str:
    """Schematic: circles on a ring, segments as chords coloured by letter.

    Positions carry no geometric meaning.
    """
    k = len(sc.circles)
    c = size / 2
    ring = size * 0.35 if k > 1 else 0.0
    r = max(12.0, min(40.0, size / (3 * max(k, 1))))
    pos = [(c + ring * math.cos(2 * math.pi * i / k), c + ring * math.sin(2 * math.pi * i / k))
           for i in range(k)]
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">']
    seen: dict[tuple[int, int], int] = {}
    for seg in sc.segments:
        a, b = sorted(seg.circles)
        m = seen.get((a, b), 0)
        seen[(a, b)] = m + 1
        (x1, y1), (x2, y2) = pos[a], pos[b]
        if a == b:
            path = f"M {x1:.2f} {y1 - r:.2f} c {r:.2f} {-2 * r - 6 * m:.2f} {-r:.2f} {-2 * r - 6 * m:.2f} 0 0"
        else:
            off = 10.0 * (m - (m % 2) * 2 * m) / 2 if m else 0.0
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            dx, dy = y2 - y1, x1 - x2
            norm = math.hypot(dx, dy) or 1.0
            qx, qy = mx + off * dx / norm, my + off * dy / norm
            path = f"M {x1:.2f} {y1:.2f} Q {qx:.2f} {qy:.2f} {x2:.2f} {y2:.2f}"
        parts.append(f'<path d="{path}" fill="none" stroke="{LETTER_COLOR[seg.letter]}" '
                     f'stroke-dasharray="4 3"><title>s{seg.id} ({seg.letter})</title></path>')
    for i, (x, y) in enumerate(pos):
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="white" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{y + 4:.2f}" text-anchor="middle" '
                     f'font-size="12">C{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _ident(name: str) -> str:
    cleaned = "".join(ch if ch.isalnum() else "_" for ch in name)
    return cleaned if cleaned and not cleaned[0].isdigit() else f"g_{cleaned}"
