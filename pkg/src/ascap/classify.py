"""Recognizers for the graph classes studied here.

ASC (almost self-centered): connected, exactly ``n - 2`` central vertices.
AP (almost peripheral): connected, exactly ``n - 1`` peripheral vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, _bits
from .metrics import DisconnectedGraphError, blocks, ecc_profile, eccentricities, is_connected


@dataclass(frozen=True, order=True)
class ThetaSpec:
    """Path lengths ``a <= b <= c`` of a theta graph."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.c:
            raise GraphError(f"theta lengths must satisfy 1 <= a <= b <= c, got {self.as_tuple()}")
        if self.b == 1:
            raise GraphError("at most one theta path may have length 1")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "ThetaSpec":
        x, y, z = sorted((a, b, c))
        return cls(x, y, z)

    @property
    def order(self) -> int:
        return self.a + self.b + self.c - 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class BinocleWitness:
    """Cycles ``cycle_c`` (through ``path[0]``) and ``cycle_d`` (through ``path[-1]``).

    Each cycle is listed starting from its attachment vertex.
    """

    cycle_c: tuple[int, ...]
    cycle_d: tuple[int, ...]
    path: tuple[int, ...]

    @property
    def path_length(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class Classification:
    self_centered: bool
    almost_self_centered: bool
    almost_peripheral: bool
    unicyclic: bool
    theta: ThetaSpec | None
    binocle: BinocleWitness | None
    central_count: int
    peripheral_count: int
    top_count: int
    radius: int
    diameter: int


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")


def is_self_centered(g: Graph) -> bool:
    ecc = eccentricities(g)
    return min(ecc) == max(ecc)


def is_asc(g: Graph) -> bool:
    ecc = eccentricities(g)
    if g.n < 3:
        return False
    rad = min(ecc)
    return ecc.count(rad) == g.n - 2


def is_ap(g: Graph) -> bool:
    ecc = eccentricities(g)
    if g.n < 2:
        return False
    return ecc.count(max(ecc)) == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    _require_connected(g)
    return g.m == g.n


def top_vertex_count(g: Graph) -> int:
    degs = g.degrees()
    return degs.count(max(degs)) if degs else 0


def _walk(g: Graph, start: int, first: int) -> list[int]:
    """Follow degree-2 vertices from ``start`` via ``first`` until a branch."""
    walk = [start, first]
    prev, cur = start, first
    while g.degree(cur) == 2:
        nxt = g.adj[cur] & ~(1 << prev)
        prev, cur = cur, nxt.bit_length() - 1
        walk.append(cur)
        if cur == start:
            break
    return walk


def recognize_theta(g: Graph) -> ThetaSpec | None:
    _require_connected(g)
    if g.m != g.n + 1:
        return None
    degs = g.degrees()
    branch = [v for v, d in enumerate(degs) if d != 2]
    if len(branch) != 2 or any(degs[v] != 3 for v in branch):
        return None
    x, y = branch
    lengths = []
    for w in _bits(g.adj[x]):
        walk = _walk(g, x, w)
        if walk[-1] != y:
            return None
        lengths.append(len(walk) - 1)
    return ThetaSpec.of(*lengths)


def _cycle_from(g: Graph, u: int, first: int) -> tuple[int, ...]:
    walk = _walk(g, u, first)
    return tuple(walk[:-1]) if walk[-1] == u else ()


def recognize_binocle(g: Graph) -> BinocleWitness | None:
    """Whole-graph binocle recognition with a deterministic witness.

    A binocle is two cycles joined by a path meeting each cycle in one
    vertex (the path may be a single shared vertex); two cycles sharing two
    or more vertices form a theta, not a binocle.
    """
    _require_connected(g)
    if g.m != g.n + 1:
        return None
    degs = g.degrees()
    if min(degs) < 2:
        return None
    branch = [v for v, d in enumerate(degs) if d != 2]
    if len(branch) == 1 and degs[branch[0]] == 4:
        u = branch[0]
        cycles = []
        for w in sorted(_bits(g.adj[u])):
            cyc = _cycle_from(g, u, w)
            if not cyc:
                return None
            if set(cyc) not in [set(c) for c in cycles]:
                cycles.append(cyc)
        if len(cycles) != 2:
            return None
        c, d = sorted(cycles, key=lambda cyc: min(cyc[1:]))
        return BinocleWitness(c, d, (u,))
    if len(branch) == 2 and all(degs[v] == 3 for v in branch):
        u, v = branch
        cyc_u = path = None
        for w in sorted(_bits(g.adj[u])):
            walk = _walk(g, u, w)
            if walk[-1] == u:
                if cyc_u is None:
                    cyc_u = tuple(walk[:-1])
            elif walk[-1] == v:
                if path is not None:
                    return None
                path = tuple(walk)
        if cyc_u is None or path is None:
            return None
        cyc_v = None
        for w in sorted(_bits(g.adj[v])):
            walk = _walk(g, v, w)
            if walk[-1] == v:
                cyc_v = tuple(walk[:-1])
                break
        if cyc_v is None:
            return None
        return BinocleWitness(cyc_u, cyc_v, path)
    return None


def classify(g: Graph) -> Classification:
    prof = ecc_profile(g)
    n = g.n
    n_central = len(prof.center)
    n_peripheral = len(prof.periphery)
    return Classification(
        self_centered=prof.radius == prof.diameter,
        almost_self_centered=n >= 3 and n_central == n - 2,
        almost_peripheral=n >= 2 and n_peripheral == n - 1,
        unicyclic=g.m == n,
        theta=recognize_theta(g),
        binocle=recognize_binocle(g),
        central_count=n_central,
        peripheral_count=n_peripheral,
        top_count=top_vertex_count(g),
        radius=prof.radius,
        diameter=prof.diameter,
    )


def center_in_one_block(g: Graph) -> bool:
    prof = ecc_profile(g)
    return blocks(g).block_containing(prof.center) is not None
