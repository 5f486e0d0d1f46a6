"""Canonical labelling by equitable partition refinement and a search tree.

The search individualises a vertex of the first non-singleton cell, refines
to the coarsest equitable partition, and recurses.  Leaves are discrete
partitions; the canonical leaf is the one whose relabelled adjacency rows
are lexicographically smallest.  Subtrees are pruned only through
automorphisms already discovered, so the generators returned always
generate the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, to_graph6


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def refine(adj, cells: list[list[int]], queue: list[int], n: int) -> list[list[int]]:
    """Refine ``cells`` to an equitable partition, splitting on ``queue`` masks.

    Fragments of a split cell are ordered by their neighbour count into the
    splitter, so the result depends only on the graph structure.
    """
    n_cells = len(cells)
    qi = 0
    while qi < len(queue) and n_cells < n:
        w = queue[qi]
        qi += 1
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            c0 = counts[0]
            if counts.count(c0) == len(counts):
                out.append(cell)
                continue
            changed = True
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                if c in groups:
                    groups[c].append(v)
                else:
                    groups[c] = [v]
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                fm = 0
                for v in frag:
                    fm |= 1 << v
                queue.append(fm)
        if changed:
            cells = out
            n_cells = len(cells)
    return cells


def _leaf_code(nbrs, lab: list[int]) -> tuple[int, ...]:
    bit = [0] * len(lab)
    for i, v in enumerate(lab):
        bit[v] = 1 << i
    return tuple([sum([bit[u] for u in nbrs[v]]) for v in lab])


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_partition(n: int, generators) -> list[int]:
    """Orbit representative (smallest vertex) of every vertex."""
    parent = list(range(n))
    for g in generators:
        for v in range(n):
            a, b = _find(parent, v), _find(parent, g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [_find(parent, v) for v in range(n)]


@dataclass(frozen=True)
class Labelling:
    """Result of canonical labelling.

    ``lab[i]`` is the original vertex placed at canonical position ``i``;
    ``generators`` are automorphisms of the *original* graph as image lists.
    """

    lab: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    graph: Graph

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def orbits(self) -> list[int]:
        return orbit_partition(len(self.lab), self.generators)

    def canonical_generators(self) -> list[tuple[int, ...]]:
        """Generators re-expressed in the canonical labelling."""
        pos = self.position
        lab = self.lab
        return [tuple(pos[g[lab[i]]] for i in range(len(lab))) for g in self.generators]


class _Search:
    __slots__ = ("adj", "nbrs", "n", "first_code", "first_lab", "first_path",
                 "best_code", "best_lab", "best_path", "gens")

    def __init__(self, adj, n):
        self.adj = adj
        self.nbrs = [list(_bits(row)) for row in adj]
        self.n = n
        self.first_code = None
        self.first_lab = None
        self.first_path = None
        self.best_code = None
        self.best_lab = None
        self.best_path = None
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, lab_a, lab_b) -> tuple[int, ...]:
        perm = [0] * self.n
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        return tuple(perm)

    def leaf(self, cells, path) -> int:
        lab = [c[0] for c in cells]
        code = _leaf_code(self.nbrs, lab)
        depth = len(path)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_lab = self.best_lab = lab
            self.first_path = self.best_path = list(path)
            return depth
        if code == self.first_code:
            self.gens.append(self._automorphism(self.first_lab, lab))
            return _common_prefix(path, self.first_path)
        if code == self.best_code:
            self.gens.append(self._automorphism(self.best_lab, lab))
            return _common_prefix(path, self.best_path)
        if code < self.best_code:
            self.best_code = code
            self.best_lab = lab
            self.best_path = list(path)
        return depth

    def node(self, cells, path) -> int:
        if len(cells) == self.n:
            return self.leaf(cells, path)
        depth = len(path)
        idx = 0
        while len(cells[idx]) == 1:
            idx += 1
        cell = cells[idx]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and self._equivalent(v, tried, path):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            child = refine(self.adj, child, [1 << v], self.n)
            path.append(v)
            back = self.node(child, path)
            path.pop()
            if back < depth:
                return back
        return depth

    def _equivalent(self, v: int, tried: list[int], path: list[int]) -> bool:
        gens = [g for g in self.gens if all(g[p] == p for p in path)]
        if not gens:
            return False
        orb = orbit_partition(self.n, gens)
        rv = orb[v]
        return any(orb[t] == rv for t in tried)


def _common_prefix(a, b) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labelling(g: Graph) -> Labelling:
    n = g.n
    if n == 0:
        return Labelling((), (), g)
    search = _Search(g.adj, n)
    start = refine(g.adj, [list(range(n))], [(1 << n) - 1], n)
    search.node(start, [])
    lab = tuple(search.best_lab)
    rows = search.best_code
    canon = Graph(n, rows, check=False)
    return Labelling(lab, tuple(search.gens), canon)


def canonical_graph(g: Graph) -> Graph:
    return canonical_labelling(g).graph


def canonical_form(g: Graph) -> str:
    """graph6 of the canonical relabelling; equal iff the graphs are isomorphic."""
    return to_graph6(canonical_labelling(g).graph)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labelling(g).graph == canonical_labelling(h).graph
