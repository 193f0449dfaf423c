"""Immutable small graphs over a fixed vertex universe.

A :class:`Graph` keeps one adjacency row per universe slot plus an
``active`` bitmask. Taking induced subgraphs only shrinks ``active`` and
re-masks the rows, so vertex labels survive localization, vertex deletion
and edge localization unchanged.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is
a member).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import CapacityError, InvalidArgument

MAX_UNIVERSE = 62

VertexSet = int


def vset(*vertices: int) -> VertexSet:
    """Bitmask with the given vertices set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    universe_size: int
    active: VertexSet
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.universe_size <= MAX_UNIVERSE:
            raise CapacityError(f"universe of {self.universe_size} slots exceeds {MAX_UNIVERSE}")
        if len(self.adj) != self.universe_size:
            raise InvalidArgument("adjacency must have one row per universe slot")

    # construction ---------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        if n > MAX_UNIVERSE:
            raise CapacityError(f"{n} vertices exceeds the {MAX_UNIVERSE}-vertex universe")
        if n < 0:
            raise InvalidArgument("vertex count must be non-negative")
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidArgument(f"edge {a}{b} has an endpoint outside 0..{n - 1}")
            if a == b:
                raise InvalidArgument(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, (1 << n) - 1, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        """Edgeless graph on ``n`` vertices."""
        return cls.from_edges(n)

    # basic queries --------------------------------------------------------

    @property
    def n(self) -> int:
        return popcount(self.active)

    def vertices(self) -> list[int]:
        return members(self.active)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(a, b)`` with ``a < b``, in lexicographic order."""
        out = []
        for a in iter_bits(self.active):
            for b in iter_bits(self.adj[a] >> (a + 1) << (a + 1)):
                out.append((a, b))
        return out

    @property
    def m(self) -> int:
        return sum(popcount(self.adj[v]) for v in iter_bits(self.active)) // 2

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.adj[v])

    def min_degree(self) -> int:
        return min((popcount(self.adj[v]) for v in iter_bits(self.active)), default=0)

    def has_edge(self, a: int, b: int) -> bool:
        return self.is_active(a) and self.is_active(b) and bool(self.adj[a] >> b & 1)

    def is_active(self, v: int) -> bool:
        return 0 <= v < self.universe_size and bool(self.active >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not self.is_active(v):
            raise InvalidArgument(f"vertex {v} is not active")

    def check_subset(self, mask: VertexSet) -> None:
        if mask < 0 or mask & ~self.active:
            raise InvalidArgument(f"set {members(mask & ~self.active)} contains inactive vertices")

    def check_edge(self, a: int, b: int) -> None:
        if not self.has_edge(a, b):
            raise InvalidArgument(f"{a}{b} is not an edge")

    def isolated_vertices(self) -> VertexSet:
        return vset(*(v for v in iter_bits(self.active) if not self.adj[v]))

    def is_complete(self) -> bool:
        return all(self.adj[v] | (1 << v) == self.active for v in iter_bits(self.active))

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def induced(self, keep: VertexSet) -> Graph:
        """Masked subgraph induced by ``keep`` (which must be active)."""
        self.check_subset(keep)
        return self._restrict(keep)

    def _restrict(self, keep: VertexSet) -> Graph:
        rows = tuple(row & keep if keep >> v & 1 else 0 for v, row in enumerate(self.adj))
        return Graph(self.universe_size, keep, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, active={members(self.active)}, edges={self.edges()})"


def neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    """Open neighborhood N(S): vertices outside S adjacent to some member."""
    G.check_subset(S)
    out = 0
    for u in iter_bits(S):
        out |= G.adj[u]
    return out & ~S


def closed_neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    return neighborhood(G, S) | S


def localize(G: Graph, S: VertexSet) -> Graph:
    """G minus the closed neighborhood of S, labels preserved."""
    return G._restrict(G.active & ~closed_neighborhood(G, S))


def delete_vertices(G: Graph, A: VertexSet) -> Graph:
    G.check_subset(A)
    return G._restrict(G.active & ~A)


def delete_edge(G: Graph, a: int, b: int) -> Graph:
    G.check_edge(a, b)
    rows = list(G.adj)
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    return Graph(G.universe_size, G.active, tuple(rows))


def edge_localize(G: Graph, a: int, b: int) -> Graph:
    """G minus N(a) | N(b); a and b go too since each neighbors the other."""
    G.check_edge(a, b)
    return G._restrict(G.active & ~(G.adj[a] | G.adj[b]))


def components(G: Graph) -> list[Graph]:
    """Connected components, ordered by smallest vertex label."""
    out = []
    left = G.active
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= G.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(G._restrict(comp))
        left &= ~comp
    return out


def compact(G: Graph) -> Graph:
    """Relabel the active vertices to 0..n-1 preserving their order."""
    verts = G.vertices()
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        rows.append(vset(*(index[u] for u in iter_bits(G.adj[v]))))
    return Graph(len(verts), (1 << len(verts)) - 1, tuple(rows))


def relabel(G: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Move vertex ``v`` to slot ``perm[v]``; ``perm`` permutes the universe."""
    if sorted(perm) != list(range(G.universe_size)):
        raise InvalidArgument("perm must be a permutation of the universe slots")
    rows = [0] * G.universe_size
    for v in range(G.universe_size):
        rows[perm[v]] = vset(*(perm[u] for u in iter_bits(G.adj[v])))
    active = vset(*(perm[v] for v in iter_bits(G.active)))
    return Graph(G.universe_size, active, tuple(rows))


# constructors ---------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument("complete graph needs n >= 1")
    return Graph.from_edges(n, ((a, b) for a in range(n) for b in range(a + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidArgument("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(m + n, ((a, m + b) for a in range(m) for b in range(n)))


def _shifted_rows(H: Graph, offset: int) -> list[int]:
    return [row << offset for row in H.adj]


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G on its own slots, H shifted past G's universe."""
    size = G.universe_size + H.universe_size
    if size > MAX_UNIVERSE:
        raise CapacityError(f"union needs {size} slots, more than {MAX_UNIVERSE}")
    off = G.universe_size
    return Graph(size, G.active | H.active << off, tuple(list(G.adj) + _shifted_rows(H, off)))


def join(G: Graph, H: Graph) -> Graph:
    U = disjoint_union(G, H)
    off = G.universe_size
    g_side, h_side = G.active, H.active << off
    rows = list(U.adj)
    for v in iter_bits(g_side):
        rows[v] |= h_side
    for v in iter_bits(h_side):
        rows[v] |= g_side
    return Graph(U.universe_size, U.active, tuple(rows))


def corona_complete(G: Graph, p: int) -> Graph:
    """Attach a private K_p to every active vertex and join the vertex to it."""
    if p < 1:
        raise InvalidArgument("corona needs p >= 1")
    verts = G.vertices()
    size = G.universe_size + p * len(verts)
    if size > MAX_UNIVERSE:
        raise CapacityError(f"corona needs {size} slots, more than {MAX_UNIVERSE}")
    rows = list(G.adj) + [0] * (p * len(verts))
    active = G.active
    for i, v in enumerate(verts):
        start = G.universe_size + i * p
        block = ((1 << p) - 1) << start
        active |= block
        rows[v] |= block
        for u in range(start, start + p):
            rows[u] = (block & ~(1 << u)) | (1 << v)
    return Graph(size, active, tuple(rows))


def complement(G: Graph) -> Graph:
    rows = tuple(
        (G.active & ~row & ~(1 << v)) if G.active >> v & 1 else 0 for v, row in enumerate(G.adj)
    )
    return Graph(G.universe_size, G.active, rows)


def join_cliques(left: Iterable[int], right: Iterable[int]) -> Graph:
    """(K_a ∪ K_b ∪ ...) + (K_c ∪ K_d ∪ ...)."""
    sides = []
    for sizes in (list(left), list(right)):
        if not sizes:
            raise InvalidArgument("each side needs at least one clique")
        side = complete(sizes[0])
        for s in sizes[1:]:
            side = disjoint_union(side, complete(s))
        sides.append(side)
    return join(*sides)


# triangles ------------------------------------------------------------------


def is_triangle_free(G: Graph) -> bool:
    for a in iter_bits(G.active):
        row = G.adj[a]
        for b in iter_bits(row >> (a + 1) << (a + 1)):
            if row & G.adj[b]:
                return False
    return True


def is_locally_triangle_free(G: Graph) -> bool:
    return all(is_triangle_free(localize(G, 1 << x)) for x in iter_bits(G.active))
