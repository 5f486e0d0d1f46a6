"""Deterministic builders for the named families and extremal constructions.

Graphs that are only pinned down by a search (small max-degree-3 AP bases
and a cubic ASC witness on 12 vertices) are loaded from graph6 fixtures in
``ascap/fixtures``; each fixture has a sidecar text file recording the
predicate and search space that produced it.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from importlib import resources

from .classify import ThetaSpec
from .graph import (
    Graph,
    GraphError,
    _bits,
    attach_pendant,
    blow_up,
    complement,
    complete,
    cycle,
    disjoint_union,
    duplicate_vertex,
    from_graph6,
    kn_minus_edge,
    path,
    star,
)
from .metrics import eccentricities


class FamilyId(str, enum.Enum):
    cycle = "cycle"
    path = "path"
    complete = "complete"
    star = "star"
    kn_minus_edge = "kn_minus_edge"
    theta = "theta"
    cycle_pendant = "cycle_pendant"
    girth_extremal = "girth_extremal"
    Z = "Z"
    regular_asc = "regular_asc"
    ap_max_size = "ap_max_size"
    ap_degree = "ap_degree"
    ap_top_extremal = "ap_top_extremal"


# fixtures ----------------------------------------------------------------


def fixture_names() -> list[str]:
    root = resources.files("ascap") / "fixtures"
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".g6"))


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Graph:
    root = resources.files("ascap") / "fixtures"
    try:
        text = (root / f"{name}.g6").read_text(encoding="ascii")
    except FileNotFoundError:
        raise GraphError(f"no fixture named {name!r}") from None
    return from_graph6(text.strip())


def fixture_note(name: str) -> str:
    root = resources.files("ascap") / "fixtures"
    return (root / f"{name}.txt").read_text(encoding="utf-8")


# thetas and girth extremals -----------------------------------------------


def theta(a: int, b: int, c: int) -> Graph:
    """Theta graph; vertices 0 and 1 are the branch vertices.

    Internal vertices follow path by path in increasing length order.
    """
    spec = ThetaSpec.of(a, b, c)
    edges = []
    nxt = 2
    for length in spec.as_tuple():
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def cycle_pendant(n: int) -> Graph:
    """C_{n-1} on 0..n-2 with pendant vertex n-1 attached to 0."""
    if n < 7 or n % 2 == 0:
        raise GraphError(f"cycle_pendant needs odd n >= 7, got {n}")
    return attach_pendant(cycle(n - 1), 0)


def _girth_theta(n: int) -> Graph:
    if n < 12 or n % 2:
        raise GraphError(f"girth extremal construction needs even n >= 12, got {n}")
    k = n // 6
    return theta(2 * k, 2 * k, n - 4 * k)


def girth_extremal_asc(n: int) -> Graph:
    """theta(2k, 2k, n-4k) with k = n // 6 plus a pendant at branch vertex 0."""
    return attach_pendant(_girth_theta(n), 0)


def girth_extremal_variants(n: int) -> list[Graph]:
    """Pendant attached at each vertex of one shortest theta path.

    The path runs 0, 2, 3, ..., 2k, 1.  Returned in that order; the
    variants are candidates, not all of them need to be ASC.
    """
    base = _girth_theta(n)
    k = n // 6
    spots = [0] + list(range(2, 2 * k + 1)) + [1]
    return [attach_pendant(base, v) for v in spots]


# independence extremals -----------------------------------------------------


def Z(n: int, r: int) -> Graph:
    """Cycle v1..v_{2r} as 0..2r-1, pendant 2r at v1, the rest joined to v1 and v3."""
    if r < 2 or n < 2 * r + 1:
        raise GraphError(f"Z(n, r) needs r >= 2 and n >= 2r+1, got n={n}, r={r}")
    g = attach_pendant(cycle(2 * r), 0)
    edges = g.edges()
    for v in range(2 * r + 1, n):
        edges += [(v, 0), (v, 2)]
    return Graph.from_edges(n, edges)


def cor7_extremals(n: int) -> tuple[Graph, Graph]:
    """The two graphs on a diametral path 0-1-2-3 with the other vertices
    joined to {1, 3} in the first graph and to {1, 2} in the second."""
    if n < 5:
        raise GraphError(f"needs n >= 5, got {n}")
    spine = [(0, 1), (1, 2), (2, 3)]
    first = Graph.from_edges(n, spine + [(s, t) for s in range(4, n) for t in (1, 3)])
    second = Graph.from_edges(n, spine + [(s, t) for s in range(4, n) for t in (1, 2)])
    return first, second


# regular ASC graphs -----------------------------------------------------------


def regular_asc(k: int) -> Graph:
    """k-regular ASC graph of order 2k+2 for k >= 4.

    Vertex x_i is ``i`` and y_i is ``k + 1 + i`` for 0 <= i <= k, so the
    periphery is {0, k+1}.  Adjacency lists are symmetrized and the result
    must come out k-regular.
    """
    if k < 4:
        raise GraphError(f"regular_asc needs k >= 4, got {k} (the cubic case is a stored witness)")

    def x(i):
        return i

    def y(i):
        return k + 1 + i

    def res(i):
        return (i - 1) % k + 1

    nbrs: dict[int, set[int]] = {x(0): {x(i) for i in range(1, k + 1)},
                                 y(0): {y(i) for i in range(1, k + 1)}}
    if k % 2 == 0:
        h = k // 2
        for i in range(1, k + 1):
            partner = i + h if i <= h else i - h
            nbrs[x(i)] = {x(partner)} | {y(res(j)) for j in range(i, i + k - 2)}
        for i in range(1, h + 1):
            nbrs.setdefault(y(i), set()).add(y(i + h))
    else:
        h = (k + 1) // 2
        nbrs[x(1)] = {x(i) for i in range(2, h + 1)} | {y(i) for i in range(1, h)}
        for i in range(2, h + 1):
            nbrs[x(i)] = {x(1)} | {y(j) for j in range(1, k + 1) if j not in (i - 1, k)}
        # the later x_j are not adjacent to x_1: x_1 already has its k neighbours
        for j in range(h + 1, k + 1):
            nbrs[x(j)] = {y(i) for i in range(1, k + 1) if i != j - h}
        nbrs[y(k)] = {x(j) for j in range(h + 1, k + 1)} | {y(i) for i in range(1, h)}
    edges = {(min(u, v), max(u, v)) for u, vs in nbrs.items() for v in vs}
    g = Graph.from_edges(2 * k + 2, sorted(edges))
    bad = [v for v, d in enumerate(g.degrees()) if d != k]
    if bad:
        raise AssertionError(f"regular_asc({k}) is not {k}-regular at vertices {bad}")
    return g


def cubic_asc_witness() -> Graph:
    return load_fixture("cubic_asc_12")


# almost peripheral graphs -----------------------------------------------------------


def ap_max_size(n: int) -> Graph:
    """Complement of K1 + perfect matching (odd n) or K1 + matching + P3 (even n).

    Vertex 0 is the isolated vertex of the complemented graph, so it is the
    dominating (central) vertex.
    """
    if n < 3:
        raise GraphError(f"ap_max_size needs n >= 3, got {n}")
    parts = [Graph.empty(1)]
    if n % 2:
        parts += [complete(2)] * ((n - 1) // 2)
    else:
        parts += [complete(2)] * ((n - 4) // 2) + [path(3)]
    g = parts[0]
    for p in parts[1:]:
        g = disjoint_union(g, p)
    return complement(g)


# prism edges; lengths for n = 11..14, the middle four grow by one per +4 in n
_PRISM = ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5))
_PRISM_BASE = {
    11: (1, 1, 2, 1, 1, 2, 2, 2, 2),
    12: (1, 1, 1, 1, 2, 3, 2, 2, 2),
    13: (1, 1, 1, 1, 2, 3, 3, 2, 2),
    14: (1, 1, 3, 1, 3, 3, 1, 3, 1),
}
_PRISM_STEP = (0, 0, 0, 0, 1, 1, 1, 1, 0)


def subdivide(skeleton, order: int, lengths) -> Graph:
    """Replace skeleton edge i by a path of ``lengths[i]`` edges; new vertices are appended."""
    edges = []
    nxt = order
    for (a, b), length in zip(skeleton, lengths):
        if length < 1:
            raise GraphError("path lengths must be positive")
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return Graph.from_edges(nxt, edges)


def ap_cubic_base(n: int) -> Graph:
    """AP graph of order n with maximum degree 3.

    Orders 7..10 come from search fixtures; from 11 on, a subdivided
    triangular prism whose path lengths depend on n mod 4.
    """
    if n < 7:
        raise GraphError(f"no AP graph with maximum degree 3 below order 7 (got {n})")
    if n <= 10:
        return load_fixture(f"ap_deg3_{n}")
    n0 = 11 + (n - 11) % 4
    t = (n - n0) // 4
    lengths = [a + t * s for a, s in zip(_PRISM_BASE[n0], _PRISM_STEP)]
    return subdivide(_PRISM, 6, lengths)


def duplication_vertex(g: Graph) -> int | None:
    """Lowest-indexed degree-2, non-central neighbour of a top vertex."""
    degs = g.degrees()
    top = max(degs)
    ecc = eccentricities(g)
    rad = min(ecc)
    near_top = 0
    for v, d in enumerate(degs):
        if d == top:
            near_top |= g.adj[v]
    for u in _bits(near_top):
        if degs[u] == 2 and ecc[u] != rad:
            return u
    return None


def ap_degree_chain(n: int, delta: int) -> list[Graph]:
    """Every graph of the duplication chain ending at order n and max degree delta."""
    _check_ap_degree(n, delta)
    g = ap_cubic_base(n - delta + 3)
    chain = [g]
    for _ in range(delta - 3):
        u = duplication_vertex(g)
        if u is None:
            raise GraphError(f"no duplicable vertex in chain graph of order {g.n}")
        g = duplicate_vertex(g, u)
        chain.append(g)
    return chain


def _check_ap_degree(n: int, delta: int) -> None:
    if n < 7:
        raise GraphError(f"ap_with_max_degree needs n >= 7, got {n}")
    if delta in (n - 3, n - 2):
        raise GraphError(f"no AP graph of order {n} has maximum degree {delta} (n-3 and n-2 are impossible)")
    if not 3 <= delta <= n - 4:
        raise GraphError(f"maximum degree of an AP graph of order {n} lies in 3..{n - 4} or is {n - 1}; got {delta}")


def ap_with_max_degree(n: int, delta: int) -> Graph:
    if n >= 7 and delta == n - 1:
        return star(n)
    return ap_degree_chain(n, delta)[-1]


TOP_BASE_VERTEX = 4  # non-central degree-3 vertex of the order-7 base


def ap_top_extremal(n: int) -> Graph:
    """Blow up a non-central degree-3 vertex of the order-7 base into K_{n-6}."""
    if n < 8:
        raise GraphError(f"ap_top_extremal needs n >= 8, got {n}")
    return blow_up(load_fixture("ap_deg3_7"), TOP_BASE_VERTEX, n - 6)


# catalogue -------------------------------------------------------------------------


_BASIC = {
    FamilyId.cycle: cycle,
    FamilyId.path: path,
    FamilyId.complete: complete,
    FamilyId.star: star,
    FamilyId.kn_minus_edge: kn_minus_edge,
}

BUILDERS = {
    **_BASIC,
    FamilyId.theta: theta,
    FamilyId.cycle_pendant: cycle_pendant,
    FamilyId.girth_extremal: girth_extremal_asc,
    FamilyId.Z: Z,
    FamilyId.regular_asc: regular_asc,
    FamilyId.ap_max_size: ap_max_size,
    FamilyId.ap_degree: ap_with_max_degree,
    FamilyId.ap_top_extremal: ap_top_extremal,
}

SIGNATURES = {
    FamilyId.cycle: ("n",),
    FamilyId.path: ("n",),
    FamilyId.complete: ("n",),
    FamilyId.star: ("n",),
    FamilyId.kn_minus_edge: ("n",),
    FamilyId.theta: ("a", "b", "c"),
    FamilyId.cycle_pendant: ("n",),
    FamilyId.girth_extremal: ("n",),
    FamilyId.Z: ("n", "r"),
    FamilyId.regular_asc: ("k",),
    FamilyId.ap_max_size: ("n",),
    FamilyId.ap_degree: ("n", "delta"),
    FamilyId.ap_top_extremal: ("n",),
}


def basic(family: FamilyId | str, n: int) -> Graph:
    fam = FamilyId(family)
    if fam not in _BASIC:
        raise GraphError(f"{fam.value} is not a basic family")
    return _BASIC[fam](n)


def build(family: FamilyId | str, *params: int) -> Graph:
    try:
        fam = FamilyId(family)
    except ValueError:
        raise GraphError(f"unknown family {family!r}") from None
    want = SIGNATURES[fam]
    if len(params) != len(want):
        raise GraphError(f"{fam.value} takes parameters ({', '.join(want)}), got {len(params)}")
    return BUILDERS[fam](*params)
