"""Canonical forms for small graphs.

The canonical form is the lexicographically smallest graph6 string over all
vertex orders that list vertices by increasing refined color. Colors come
from iterated degree refinement, which is label independent, so the set of
admissible orders (and hence the minimum) is an isomorphism invariant.

The minimum is found by a depth-first search that fixes one position at a
time. Because graph6 writes column ``k`` as soon as the first ``k + 1``
vertices are placed, every partial order has a fixed encoding prefix; only
candidates that tie for the smallest next column are expanded, and a
subtree is dropped once its prefix exceeds the best complete order. Twin
vertices (equal neighborhoods up to each other) give identical subtrees,
so only one of each twin class is expanded.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapacityError
from .graph import Graph, compact, iter_bits
from .graph6 import encode_rows

CANON_CAP = 10


def refine_colors(rows, n: int) -> list[int]:
    colors = [bin(rows[v]).count("1") for v in range(n)]
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(rows[v])))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def canonical_order(rows, n: int) -> list[int]:
    """Vertex order (position -> old label) giving the canonical encoding."""
    if n == 0:
        return []
    colors = refine_colors(rows, n)
    cell_color = sorted(colors)
    best: list[int] | None = None
    best_order: list[int] = []
    cur: list[int] = []
    order: list[int] = []

    def dfs(k: int, remaining: int, seg: list[int]) -> None:
        nonlocal best, best_order
        if k == n:
            if best is None or cur < best:
                best = cur[:]
                best_order = order[:]
            return
        color = cell_color[k]
        cands = [v for v in iter_bits(remaining) if colors[v] == color]
        low = min(seg[v] for v in cands)
        if best is not None and low > best[k] and cur == best[:k]:
            return
        reps: list[int] = []
        for u in cands:
            if seg[u] != low:
                continue
            if any((rows[u] & ~(1 << w)) == (rows[w] & ~(1 << u)) for w in reps):
                continue
            reps.append(u)
        for u in reps:
            row = rows[u]
            rest = remaining & ~(1 << u)
            nseg = seg[:]
            for w in iter_bits(rest):
                nseg[w] = seg[w] << 1 | (row >> w & 1)
            cur.append(low)
            order.append(u)
            dfs(k + 1, rest, nseg)
            cur.pop()
            order.pop()

    dfs(0, (1 << n) - 1, [0] * n)
    return best_order


def canonical_rows(rows, n: int) -> list[int]:
    order = canonical_order(rows, n)
    pos = [0] * n
    for k, v in enumerate(order):
        pos[v] = k
    out = [0] * n
    for v in range(n):
        r = 0
        for u in iter_bits(rows[v]):
            r |= 1 << pos[u]
        out[pos[v]] = r
    return out


@lru_cache(maxsize=1 << 17)
def _canonical_form(G: Graph) -> bytes:
    H = compact(G)
    return encode_rows(H.n, canonical_rows(H.adj, H.n))


def canonical_form(G: Graph, cap: int = CANON_CAP) -> bytes:
    """Canonical graph6 bytes; equal for two graphs iff they are isomorphic."""
    if G.n > cap:
        raise CapacityError(f"canonical form is capped at {cap} vertices, graph has {G.n}")
    return _canonical_form(G)


def is_isomorphic(G: Graph, H: Graph, cap: int = CANON_CAP) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G, cap) == canonical_form(H, cap)
