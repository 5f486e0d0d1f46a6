"""Exact distance-based and combinatorial invariants on bit-mask graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet, _bits

UNREACHABLE = None
ACYCLIC = None


class DisconnectedGraphError(ValueError):
    """Raised where an invariant is only defined for connected graphs."""


@dataclass(frozen=True)
class EccProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: VertexSet
    periphery: VertexSet


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet

    def block_containing(self, vs: VertexSet) -> VertexSet | None:
        for b in self.blocks:
            if vs <= b:
                return b
        return None


@dataclass(frozen=True)
class DegreeStats:
    sequence: tuple[int, ...]
    min_degree: int
    max_degree: int
    top_vertices: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop counts from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise GraphError(f"vertex {source} out of range for n={g.n}")
    adj = g.adj
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _eccentricity(adj, full: int, s: int) -> int:
    seen = frontier = 1 << s
    d = 0
    while seen != full:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            raise DisconnectedGraphError("eccentricity undefined on a disconnected graph")
        seen |= nxt
        frontier = nxt
        d += 1
    return d


def eccentricities(g: Graph) -> tuple[int, ...]:
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no eccentricities")
    full = (1 << g.n) - 1
    adj = g.adj
    return tuple(_eccentricity(adj, full, s) for s in range(g.n))


def ecc_profile(g: Graph) -> EccProfile:
    ecc = eccentricities(g)
    rad = min(ecc)
    diam = max(ecc)
    center = periphery = 0
    for v, e in enumerate(ecc):
        if e == rad:
            center |= 1 << v
        if e == diam:
            periphery |= 1 << v
    return EccProfile(ecc, rad, diam, VertexSet(g.n, center), VertexSet(g.n, periphery))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    seen = frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests.

    BFS from every vertex; a non-tree edge ``uw`` met from root ``s``
    closes a walk of length ``dist[u] + dist[w] + 1`` through ``s``, and the
    minimum over all roots is the girth.
    """
    n = g.n
    if g.m == 0 or g.m < n and _is_forest(g):
        return ACYCLIC
    adj = g.adj
    best = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] >= best:
                break
            for w in _bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _is_forest(g: Graph) -> bool:
    # a graph is a forest iff m = n - (number of components)
    comps = 0
    rest = (1 << g.n) - 1
    while rest:
        comps += 1
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        rest &= ~seen
    return g.m == g.n - comps


def _clique_cover_bound(adj, cand: int) -> int:
    cliques = 0
    while cand:
        low = cand & -cand
        clique = low
        pool = cand & adj[low.bit_length() - 1]
        while pool:
            u = pool & -pool
            clique |= u
            pool &= adj[u.bit_length() - 1]
        cand &= ~clique
        cliques += 1
    return cliques


def _mis(adj, cand: int, chosen: int, size: int, best: list) -> None:
    # vertices with at most one candidate neighbour can always be taken
    while True:
        forced = 0
        f = cand
        while f:
            low = f & -f
            v = low.bit_length() - 1
            if (adj[v] & cand).bit_count() <= 1:
                forced = low
                break
            f ^= low
        if not forced:
            break
        v = forced.bit_length() - 1
        chosen |= forced
        size += 1
        cand &= ~forced & ~adj[v]
    if not cand:
        if size > best[0]:
            best[0] = size
            best[1] = chosen
        return
    if size + _clique_cover_bound(adj, cand) <= best[0]:
        return
    # branch on a vertex of maximum degree inside the candidate set
    pick = -1
    pick_deg = -1
    f = cand
    while f:
        low = f & -f
        v = low.bit_length() - 1
        d = (adj[v] & cand).bit_count()
        if d > pick_deg:
            pick, pick_deg = v, d
        f ^= low
    bit = 1 << pick
    _mis(adj, cand & ~bit & ~adj[pick], chosen | bit, size + 1, best)
    _mis(adj, cand & ~bit, chosen, size, best)


def maximum_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set, found by branch and bound.

    The bound is a greedy clique cover of the remaining candidates.
    """
    best = [0, 0]
    _mis(g.adj, (1 << g.n) - 1, 0, 0, best)
    return VertexSet(g.n, best[1])


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected blocks and cut vertices (iterative Hopcroft-Tarjan)."""
    n = g.n
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition requires a connected graph")
    if n == 1:
        return BlockDecomposition((VertexSet(1, 1),), VertexSet(1, 0))
    nbrs = [list(_bits(row)) for row in g.adj]
    disc = [-1] * n
    low = [0] * n
    found: list[int] = []
    cut = 0
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    stack = [(0, -1, iter(nbrs[0]))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(nbrs[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != 0:
                    cut |= 1 << parent
                mask = 0
                while True:
                    a, b = edge_stack.pop()
                    mask |= 1 << a | 1 << b
                    if (a, b) == (parent, v):
                        break
                found.append(mask)
    if root_children > 1:
        cut |= 1
    ordered = sorted(found, key=lambda m: (m & -m, m))
    return BlockDecomposition(tuple(VertexSet(n, m) for m in ordered), VertexSet(n, cut))


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    if not degs:
        return DegreeStats((), 0, 0, ())
    top = max(degs)
    return DegreeStats(
        tuple(sorted(degs, reverse=True)),
        min(degs),
        top,
        tuple(v for v, d in enumerate(degs) if d == top),
    )


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def antipodal_pairs(g: Graph) -> list[tuple[int, int]]:
    """Unordered pairs at distance floor(n/2) on a graph that is a cycle."""
    n = g.n
    if n < 3 or any(d != 2 for d in g.degrees()) or not is_connected(g):
        raise GraphError("antipodal pairs are defined on a cycle")
    half = n // 2
    pairs = []
    for u in range(n):
        dist = bfs_distances(g, u)
        pairs += [(u, v) for v in range(u + 1, n) if dist[v] == half]
    return pairs
