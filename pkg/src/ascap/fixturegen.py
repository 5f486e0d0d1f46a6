"""Reproduce the searches behind the stored graph6 fixtures.

Run ``python3 -m ascap.fixturegen [DIR]`` to rewrite the fixture files;
the test suite re-runs the searches and compares against the stored files.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .classify import is_ap, is_asc
from .enumeration import GenSpec, enumerate_graphs
from .graph import Graph, duplicate_vertex, to_graph6

CHAIN_LIMIT = 62

AP_DEG3_NOTE = """\
graph6 fixture: ap_deg3_{n}
search space: connected graphs of order {n} with maximum degree at most 3,
  one per isomorphism class, in sorted order of canonical graph6 strings.
predicate: almost peripheral, maximum degree exactly 3, some vertex of
  maximum degree has a non-central neighbour of degree 2, and repeatedly
  duplicating the lowest-indexed such neighbour keeps the graph almost
  peripheral up to order {limit}.
selection: first graph in the search order satisfying the predicate.
candidates satisfying the predicate: {count}
"""

CUBIC_NOTE = """\
graph6 fixture: cubic_asc_12
search space: connected 3-regular graphs of order 12, one per isomorphism
  class, in sorted order of canonical graph6 strings.
predicate: almost self-centered.
selection: first graph in the search order satisfying the predicate.
candidates satisfying the predicate: {count}
"""


def chain_stays_ap(g: Graph, limit: int = CHAIN_LIMIT) -> bool:
    from .constructors import duplication_vertex

    while True:
        if not is_ap(g):
            return False
        if g.n >= limit:
            return True
        u = duplication_vertex(g)
        if u is None:
            return False
        g = duplicate_vertex(g, u)


def ap_deg3_candidates(n: int) -> list[Graph]:
    from .constructors import duplication_vertex

    out = []
    for g in enumerate_graphs(GenSpec(order=n, max_degree=3)):
        if max(g.degrees()) == 3 and is_ap(g) and duplication_vertex(g) is not None:
            if chain_stays_ap(g):
                out.append(g)
    return out


def cubic_asc_candidates() -> list[Graph]:
    return [g for g in enumerate_graphs(GenSpec(order=12, regular=3)) if is_asc(g)]


def searched_fixtures() -> dict[str, tuple[str, str]]:
    """name -> (graph6, sidecar text)."""
    out = {}
    for n in range(7, 11):
        found = ap_deg3_candidates(n)
        if not found:
            raise RuntimeError(f"no max-degree-3 AP base of order {n}")
        out[f"ap_deg3_{n}"] = (to_graph6(found[0]),
                               AP_DEG3_NOTE.format(n=n, limit=CHAIN_LIMIT, count=len(found)))
    found = cubic_asc_candidates()
    out["cubic_asc_12"] = (to_graph6(found[0]), CUBIC_NOTE.format(count=len(found)))
    return out


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    target = Path(args[0]) if args else Path(__file__).with_name("fixtures")
    target.mkdir(parents=True, exist_ok=True)
    for name, (g6, note) in searched_fixtures().items():
        (target / f"{name}.g6").write_text(g6 + "\n", encoding="ascii")
        (target / f"{name}.txt").write_text(note, encoding="utf-8")
        print(name, g6)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
