"""Regenerate tests/data/census.json. Needs SnapPy, which the package itself does not use.

    python3 tools/make_census.py > tests/data/census.json
"""

import json
import sys

import snappy

KNOTS = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4",
         "7_5", "7_6", "7_7"] + [f"8_{i}" for i in range(1, 22)]
LINKS = ["L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a4", "L7a1", "L7n1", "L8n1"]
CONNECT_SUMS = [("3_1", "3_1"), ("3_1", "4_1")]


def pd_text(link) -> str:
    return " ".join("X[%s]" % ",".join(str(x + 1) for x in t) for t in link.PD_code())


def entry(name, link):
    ext = link.exterior()
    hyperbolic = ext.solution_type() == "all tetrahedra positively oriented"
    return {
        "name": name,
        "pd": pd_text(link),
        "crossings": len(link.crossings),
        "components": len(link.link_components),
        "alternating": link.is_alternating(),
        "hyperbolic": hyperbolic,
        "volume": f"{float(ext.volume()):.12f}" if hyperbolic else None,
    }


def main():
    rows = [entry(n, snappy.Link(n)) for n in KNOTS + LINKS]
    for a, b in CONNECT_SUMS:
        link = snappy.Link(a).connected_sum(snappy.Link(b))
        rows.append({"name": f"{a}#{b}", "pd": pd_text(link), "crossings": len(link.crossings),
                     "components": 1, "alternating": link.is_alternating(),
                     "hyperbolic": False, "volume": None})
    doc = {
        "source": f"SnapPy {snappy.__version__}: Link(name).PD_code(), exterior().volume()",
        "pd_convention": "counterclockwise from the incoming under-strand, 1-based labels",
        "diagrams": rows,
    }
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
