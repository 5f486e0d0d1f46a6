"""Isomorph-free generation of graphs by canonical vertex augmentation.

Graphs grow one vertex at a time.  A child ``P + v`` (``v`` joined to a
subset ``S`` of the parent ``P``) is kept only if ``v`` lies in the orbit of
the child's canonical deletion vertex, and subsets are reduced modulo
``Aut(P)``.  The deletion vertex is chosen among non-cut vertices in
connected mode, so every intermediate graph is connected and size bounds
prune early.  Preference order for the deletion vertex: smallest degree,
then smallest neighbour-degree sum, then largest canonical position.

Most candidates are accepted or rejected by the two cheap invariants,
evaluated for all subsets of a parent at once with numpy; canonical
labelling is only needed for ties and for the accepted children.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .canon import _Search, orbit_partition, refine
from .graph import Graph, from_graph6, to_graph6

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 16
_POP = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


class SpecError(ValueError):
    """Inconsistent or unsupported generation constraints."""


@dataclass(frozen=True)
class GenSpec:
    """Constraints on the generated isomorphism classes.

    ``min_girth`` is a hereditary pruning floor: graphs containing a cycle
    shorter than it are never generated (acyclic graphs still are).
    """

    order: int
    regular: int | None = None
    min_size: int | None = None
    max_size: int | None = None
    min_degree: int | None = None
    max_degree: int | None = None
    min_girth: int | None = None
    connected: bool = True

    def validate(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ENUM_ORDER:
            raise SpecError(f"order must be in 1..{MAX_ENUM_ORDER}, got {n}")
        if self.regular is not None:
            k = self.regular
            if not 0 <= k < max(n, 1):
                raise SpecError(f"degree {k} impossible at order {n}")
            if n * k % 2:
                raise SpecError(f"no {k}-regular graph of odd order {n}")
        if self.min_size is not None and self.max_size is not None and self.min_size > self.max_size:
            raise SpecError("empty size range")
        if (self.min_degree is not None and self.max_degree is not None
                and self.min_degree > self.max_degree):
            raise SpecError("min_degree exceeds max_degree")

    # effective bounds --------------------------------------------------

    @property
    def degree_cap(self) -> int:
        caps = [self.order - 1]
        if self.regular is not None:
            caps.append(self.regular)
        if self.max_degree is not None:
            caps.append(self.max_degree)
        return min(caps)

    @property
    def degree_floor(self) -> int:
        floors = [0]
        if self.regular is not None:
            floors.append(self.regular)
        if self.min_degree is not None:
            floors.append(self.min_degree)
        return max(floors)

    @property
    def size_cap(self) -> int:
        caps = [self.order * self.degree_cap // 2]
        if self.max_size is not None:
            caps.append(self.max_size)
        return min(caps)

    @property
    def size_floor(self) -> int:
        floors = [(self.order * self.degree_floor + 1) // 2]
        if self.connected:
            floors.append(self.order - 1)
        if self.min_size is not None:
            floors.append(self.min_size)
        return max(floors)

    def admits(self, g: Graph) -> bool:
        """Whether ``g`` satisfies every constraint (used in debug checks)."""
        from .metrics import girth, is_connected

        if g.n != self.order or not self.size_floor <= g.m <= self.size_cap:
            return False
        degs = g.degrees()
        if degs and not self.degree_floor <= min(degs) <= max(degs) <= self.degree_cap:
            return False
        if self.regular is not None and any(d != self.regular for d in degs):
            return False
        if self.connected and not is_connected(g):
            return False
        if self.min_girth is not None:
            gi = girth(g)
            if gi is not None and gi < self.min_girth:
                return False
        return True


# ---------------------------------------------------------------------------
# per-parent machinery


def _components_without(adj, k: int, u: int) -> list[int]:
    rest = ((1 << k) - 1) & ~(1 << u)
    comps = []
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def _near_masks(adj, k: int, radius: int) -> list[int]:
    """For each vertex, the other vertices at distance < ``radius``."""
    out = []
    for s in range(k):
        seen = 1 << s
        frontier = seen
        for _ in range(radius - 1):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        out.append(seen & ~(1 << s))
    return out


def _subset_masks(k: int, allowed: int, required: int, smax: int, smin: int,
                  near: list[int] | None) -> np.ndarray:
    if smax >= k and near is None and allowed == (1 << k) - 1:
        arr = np.arange(1 << k, dtype=np.int64)
        return arr
    pool = [u for u in range(k) if allowed >> u & 1]
    out: list[int] = []

    def grow(start: int, mask: int, size: int, blocked: int) -> None:
        if size >= smin and mask & required == required:
            out.append(mask)
        if size == smax:
            return
        for i in range(start, len(pool)):
            u = pool[i]
            if blocked >> u & 1:
                continue
            grow(i + 1, mask | 1 << u, size + 1,
                 blocked | (near[u] if near is not None else 0))

    grow(0, 0, 0, 0)
    return np.array(out, dtype=np.int64)


def _orbit_reps(masks: np.ndarray, gens, k: int) -> np.ndarray:
    """Keep the smallest mask of each orbit under the generators."""
    if len(masks) == 0 or not gens:
        return masks
    order = np.argsort(masks)
    masks = masks[order]
    bits = [(masks >> i) & 1 for i in range(k)]
    index_of_image = []
    for g in gens:
        img = np.zeros_like(masks)
        for i in range(k):
            img |= bits[i] << g[i]
        index_of_image.append(np.searchsorted(masks, img))
    label = masks.copy()
    while True:
        before = label
        for idx in index_of_image:
            label = np.minimum(label, label[idx])
        if np.array_equal(before, label):
            break
    return masks[label == masks]


@dataclass
class _Node:
    adj: tuple[int, ...]
    gens: list[tuple[int, ...]]


def _label(adj: tuple[int, ...]) -> tuple[list[int], list[tuple[int, ...]], tuple[int, ...]]:
    n = len(adj)
    search = _Search(adj, n)
    start = refine(adj, [list(range(n))], [(1 << n) - 1], n)
    search.node(start, [])
    return search.best_lab, search.gens, search.best_code


class _Generator:
    def __init__(self, spec: GenSpec):
        spec.validate()
        self.spec = spec
        self.n = spec.order
        self.cap = spec.degree_cap
        self.floor = spec.degree_floor
        self.size_cap = spec.size_cap
        self.size_floor = spec.size_floor
        self.connected = spec.connected
        g = spec.min_girth
        self.near_radius = g - 2 if g is not None and g >= 4 else None
        self.visited = 0

    def root(self) -> _Node:
        return _Node((0,), [])

    def children(self, node: _Node) -> list[_Node]:
        adj = node.adj
        k = len(adj)
        n = self.n
        r = n - k - 1
        final = r == 0
        m = sum(row.bit_count() for row in adj) // 2
        deg = [row.bit_count() for row in adj]
        if any(d > self.cap for d in deg):
            return []

        # subset bounds from size and degree budgets
        future_min_edges = r if self.connected else 0
        smax = min(self.cap, k, self.size_cap - m - future_min_edges)
        smin = 1 if self.connected else 0
        smin = max(smin, self.floor - r)
        if final:
            smin = max(smin, self.size_floor - m)
        if smax < smin:
            return []
        allowed = 0
        required = 0
        for u in range(k):
            if deg[u] < self.cap:
                allowed |= 1 << u
            need = self.floor - r - deg[u]
            if need > 1:
                return []
            if need == 1:
                required |= 1 << u
        if required & ~allowed:
            return []
        near = _near_masks(adj, k, self.near_radius) if self.near_radius else None
        masks = _subset_masks(k, allowed, required, smax, smin, near)
        if len(masks) == 0:
            return []
        pop = _POP[masks]
        keep = (pop >= smin) & (pop <= smax) & ((masks & ~allowed) == 0) & ((masks & required) == required)
        if near is not None:
            for u in range(k):
                if near[u]:
                    keep &= ~((((masks >> u) & 1) == 1) & ((masks & near[u]) != 0))
        masks = masks[keep]
        if len(masks) == 0:
            return []

        # cheap deletion-vertex invariants, vectorised over subsets
        d = _POP[masks]
        bit = [(masks >> u) & 1 for u in range(k)]
        degc = [deg[u] + bit[u] for u in range(k)]
        if self.connected:
            noncut = []
            for u in range(k):
                comps = _components_without(adj, k, u)
                ok = np.ones(len(masks), dtype=bool)
                for c in comps:
                    ok &= (masks & c) != 0
                noncut.append(ok)
        else:
            noncut = [np.ones(len(masks), dtype=bool)] * k
        reject = np.zeros(len(masks), dtype=bool)
        tie = []
        for u in range(k):
            reject |= noncut[u] & (degc[u] < d)
            tie.append(noncut[u] & (degc[u] == d))
        anytie = np.zeros(len(masks), dtype=bool)
        for t in tie:
            anytie |= t
        s_new = np.zeros(len(masks), dtype=np.int64)
        for u in range(k):
            s_new += bit[u] * degc[u]
        slow = np.zeros(len(masks), dtype=bool)
        tie2 = []
        nbrs = [[w for w in range(k) if adj[u] >> w & 1] for u in range(k)]
        for u in range(k):
            s_u = bit[u] * d
            for w in nbrs[u]:
                s_u = s_u + degc[w]
            t = tie[u]
            reject |= t & (s_u < s_new)
            t2 = t & (s_u == s_new)
            tie2.append(t2)
            slow |= t2
        keep = ~reject
        masks = masks[keep]
        slow = slow[keep]
        tie2 = [t[keep] for t in tie2]
        if len(masks) == 0:
            return []
        if node.gens:
            reps = _orbit_reps(masks, node.gens, k)
            sel = np.isin(masks, reps)
            masks = masks[sel]
            slow = slow[sel]
            tie2 = [t[sel] for t in tie2]

        out = []
        base = list(adj)
        newbit = 1 << k
        for i in range(len(masks)):
            s = int(masks[i])
            rows = base[:]
            f = s
            while f:
                low = f & -f
                rows[low.bit_length() - 1] |= newbit
                f ^= low
            rows.append(s)
            rows = tuple(rows)
            lab, gens, code = _label(rows)
            if slow[i]:
                cands = [u for u in range(k) if tie2[u][i]]
                cands.append(k)
                pos = [0] * (k + 1)
                for j, v in enumerate(lab):
                    pos[v] = j
                target = max(cands, key=pos.__getitem__)
                if target != k:
                    orb = orbit_partition(k + 1, gens)
                    if orb[target] != orb[k]:
                        continue
            if final:
                out.append(_Node(code, []))
            else:
                pos = [0] * (k + 1)
                for j, v in enumerate(lab):
                    pos[v] = j
                cgens = [tuple(pos[g[lab[j]]] for j in range(k + 1)) for g in gens]
                out.append(_Node(code, cgens))
        return out

    def walk(self, node: _Node) -> Iterator[tuple[int, ...]]:
        if len(node.adj) == self.n:
            yield node.adj
            return
        for child in self.children(node):
            yield from self.walk(child)

    def frontier(self, depth: int) -> list[_Node]:
        """All nodes at order ``depth`` (or the leaves, if shallower)."""
        level = [self.root()]
        while level and len(level[0].adj) < min(depth, self.n):
            level = [c for node in level for c in self.children(node)]
        return level


def _final_ok(spec: GenSpec, adj: tuple[int, ...]) -> bool:
    m = sum(row.bit_count() for row in adj) // 2
    return spec.size_floor <= m <= spec.size_cap


def _generate_adj(spec: GenSpec) -> Iterator[tuple[int, ...]]:
    spec.validate()
    gen = _Generator(spec)
    for adj in gen.walk(gen.root()):
        if _final_ok(spec, adj):
            yield adj


def _worker(args) -> list[str]:
    spec, depth, jobs, index = args
    gen = _Generator(spec)
    out = []
    for i, node in enumerate(gen.frontier(depth)):
        if i % jobs != index:
            continue
        for adj in gen.walk(node):
            if _final_ok(spec, adj):
                out.append(to_graph6(Graph(len(adj), adj, check=False)))
    return out


def _split_depth(n: int) -> int:
    return max(1, min(n, n - 3))


def generate_graph6(spec: GenSpec, jobs: int = 1) -> list[str]:
    """Canonical graph6 strings of all classes, sorted.

    With ``jobs > 1`` the search tree is cut at a fixed depth and subtrees
    are dealt round-robin to worker processes; the merged output is sorted,
    so the result never depends on ``jobs``.
    """
    spec.validate()
    if jobs <= 1:
        out = [to_graph6(Graph(len(a), a, check=False)) for a in _generate_adj(spec)]
    else:
        depth = _split_depth(spec.order)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_worker, [(spec, depth, jobs, i) for i in range(jobs)])
            out = [s for part in parts for s in part]
    out.sort()
    return out


_CACHE: dict[GenSpec, tuple[Graph, ...]] = {}
_CACHE_LIMIT_ORDER = 9


def graphs(spec: GenSpec, jobs: int = 1) -> tuple[Graph, ...]:
    """Materialised, sorted class representatives (memoised for small orders)."""
    hit = _CACHE.get(spec)
    if hit is not None:
        return hit
    if jobs <= 1:
        keyed = []
        for a in _generate_adj(spec):
            g = Graph(len(a), a, check=False)
            keyed.append((to_graph6(g), g))
        keyed.sort(key=lambda kg: kg[0])
        result = tuple(g for _, g in keyed)
    else:
        result = tuple(from_graph6(s) for s in generate_graph6(spec, jobs))
    if spec.order <= _CACHE_LIMIT_ORDER:
        _CACHE[spec] = result
    return result


class EnumerationStream:
    """Restartable, deterministic stream of canonical class representatives."""

    def __init__(self, spec: GenSpec, jobs: int = 1):
        spec.validate()
        self.spec = spec
        self.jobs = jobs

    def __iter__(self) -> Iterator[Graph]:
        return iter(graphs(self.spec, self.jobs))

    def graph6_lines(self) -> Iterator[str]:
        for g in self:
            yield to_graph6(g)

    def __len__(self) -> int:
        return len(graphs(self.spec, self.jobs))


def enumerate_graphs(spec: GenSpec, jobs: int = 1) -> EnumerationStream:
    return EnumerationStream(spec, jobs)


def count_classes(spec: GenSpec, jobs: int = 1) -> int:
    spec.validate()
    if spec in _CACHE:
        return len(_CACHE[spec])
    if jobs <= 1:
        return sum(1 for _ in _generate_adj(spec))
    return len(generate_graph6(spec, jobs))


# ---------------------------------------------------------------------------
# extremal scans


@dataclass
class ScanResult:
    statistic: str
    objective: str
    value: object | None
    count: int
    certificates: list[str]
    truncated: bool
    visited: int
    passed_filter: int

    @property
    def has_witness(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "objective": self.objective,
            "value": self.value,
            "count": self.count,
            "certificates": list(self.certificates),
            "truncated": self.truncated,
            "visited": self.visited,
            "passed_filter": self.passed_filter,
        }


def _scan_stream(stream: Iterable[Graph], flt, stat, objective: str):
    best = None
    hits: list[Graph] = []
    visited = passed = 0
    better = (lambda a, b: a > b) if objective == "max" else (lambda a, b: a < b)
    for g in stream:
        visited += 1
        if flt is not None and not flt(g):
            continue
        passed += 1
        value = stat(g)
        if value is None:
            continue
        if best is None or better(value, best):
            best = value
            hits = [g]
        elif value == best:
            hits.append(g)
    return best, hits, visited, passed


def _scan_worker(args):
    spec, depth, jobs, index, flt, stat, objective = args
    gen = _Generator(spec)

    def stream():
        for i, node in enumerate(gen.frontier(depth)):
            if i % jobs != index:
                continue
            for adj in gen.walk(node):
                if _final_ok(spec, adj):
                    yield Graph(len(adj), adj, check=False)

    best, hits, visited, passed = _scan_stream(stream(), flt, stat, objective)
    return best, [to_graph6(g) for g in hits], visited, passed


def scan(spec: GenSpec, flt: Callable[[Graph], bool] | None, stat: Callable[[Graph], object],
         objective: str = "max", *, name: str | None = None, cert_cap: int = 1000,
         jobs: int = 1, stream: Iterable[Graph] | None = None) -> ScanResult:
    """Exact extremum of ``stat`` over the classes of ``spec`` passing ``flt``.

    Graphs on which ``stat`` returns ``None`` (e.g. girth of a forest) are
    skipped.  An empty filtered set gives ``value=None`` (no witness).
    """
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    spec.validate()
    if stream is None and (jobs <= 1 or spec in _CACHE):
        stream = graphs(spec) if spec.order <= _CACHE_LIMIT_ORDER else (
            Graph(len(a), a, check=False) for a in _generate_adj(spec))
    if stream is not None:
        best, hits, visited, passed = _scan_stream(stream, flt, stat, objective)
        certs = [to_graph6(g) for g in hits]
    else:
        depth = _split_depth(spec.order)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_worker, [(spec, depth, jobs, i, flt, stat, objective)
                                                 for i in range(jobs)]))
        better = (lambda a, b: a > b) if objective == "max" else (lambda a, b: a < b)
        best = None
        certs = []
        visited = passed = 0
        for b, c, v, p in parts:
            visited += v
            passed += p
            if b is None:
                continue
            if best is None or better(b, best):
                best, certs = b, list(c)
            elif b == best:
                certs += c
    certs = sorted(set(certs))
    return ScanResult(
        statistic=name or getattr(stat, "__name__", "statistic"),
        objective=objective,
        value=best,
        count=len(certs),
        certificates=certs[:cert_cap],
        truncated=len(certs) > cert_cap,
        visited=visited,
        passed_filter=passed,
    )
