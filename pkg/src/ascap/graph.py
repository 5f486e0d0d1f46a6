"""Immutable simple graphs on vertices ``0..n-1`` stored as bit-mask rows.

Row ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  Every operation
returns a new :class:`Graph`; nothing mutates in place.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A set of vertices of a fixed graph order, held as a bit mask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask >> n:
            raise GraphError(f"vertex mask {mask:#x} has bits >= n={n}")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return cls(n, mask)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


class Graph:
    """Simple undirected graph with bit-mask adjacency rows.

    Build one with :meth:`from_edges` or :meth:`empty`; the constructor
    trusts (and checks) a ready-made row tuple.
    """

    __slots__ = ("n", "adj", "m", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} rows, got {len(adj)}")
        if check:
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {v} references vertices >= {n}")
                if row >> v & 1:
                    raise GraphError(f"loop at vertex {v}")
                for u in _bits(row):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self.m = sum(row.bit_count() for row in adj) // 2
        self._hash = None

    # construction ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n, check=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    # basic queries -----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})" if 0 < self.n <= 62 \
            else f"Graph(n={self.n}, m={self.m})"

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in _bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, rows, check=False)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, new vertex ``i`` being ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            new = 0
            for u in _bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    new |= 1 << j
            rows.append(new)
        return Graph(len(vertices), rows, check=False)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced([u for u in range(self.n) if u != v])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + list(edges))


# operations ------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], check=False)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"union order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, list(g.adj) + [row << g.n for row in h.adj], check=False)


def attach_pendant(g: Graph, v: int) -> Graph:
    """Add a new vertex ``n`` joined only to ``v``."""
    g._check_vertex(v)
    if g.n + 1 > MAX_ORDER:
        raise GraphError("order limit reached")
    rows = list(g.adj)
    rows[v] |= 1 << g.n
    rows.append(1 << v)
    return Graph(g.n + 1, rows, check=False)


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a new vertex ``n`` with the same open neighbourhood as ``v``."""
    g._check_vertex(v)
    if g.n + 1 > MAX_ORDER:
        raise GraphError("order limit reached")
    x = g.n
    rows = list(g.adj)
    for u in _bits(g.adj[v]):
        rows[u] |= 1 << x
    rows.append(g.adj[v])
    return Graph(g.n + 1, rows, check=False)


def blow_up(g: Graph, v: int, t: int) -> Graph:
    """Replace ``v`` by a clique on ``t`` vertices, each joined to all of N(v).

    ``v`` keeps its index; the other ``t - 1`` clique vertices are appended.
    """
    g._check_vertex(v)
    if t < 1:
        raise GraphError(f"blow-up size must be positive, got {t}")
    if g.n - 1 + t > MAX_ORDER:
        raise GraphError("order limit reached")
    g2 = g
    for _ in range(t - 1):
        g2 = duplicate_vertex(g2, v)
    clique = [v] + list(range(g.n, g.n + t - 1))
    return g2.add_edges((a, b) for i, a in enumerate(clique) for b in clique[i + 1:])


# named graphs used throughout ------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return complement(Graph.empty(n))


def star(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to 1..n-1."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def kn_minus_edge(n: int) -> Graph:
    """K_n with the edge 0-1 removed."""
    if n < 3:
        raise GraphError(f"K_n minus an edge needs n >= 3, got {n}")
    full = complete(n)
    rows = list(full.adj)
    rows[0] &= ~2
    rows[1] &= ~1
    return Graph(n, rows, check=False)


# serialization -----------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Header-less short-form graph6 (1 <= n <= 62)."""
    n = g.n
    if not 1 <= n <= GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 short form needs 1 <= n <= 62, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Parse short-form graph6.  Trailing newline is tolerated, nothing else."""
    s = text[:-1] if text.endswith("\n") else text
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) < 1 + nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes for n={n}", len(s))
    if len(s) > 1 + nbytes:
        raise Graph6Error("trailing garbage after graph6 data", 1 + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - nbits
    if pad and (ord(s[nbytes]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", nbytes)
    return Graph(n, rows, check=False)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
