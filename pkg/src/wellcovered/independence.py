"""Exact independence machinery on masked bitset graphs."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import CapacityError, InvalidArgument
from .graph import Graph, VertexSet, iter_bits, neighborhood, popcount

ENUMERATION_CAP = 30


@dataclass(frozen=True)
class IndependentSetFamily:
    sets: tuple[VertexSet, ...]
    kind: Literal["all", "maximal", "maximum"]

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, S):
        return S in self.sets


def is_independent(G: Graph, S: VertexSet) -> bool:
    G.check_subset(S)
    return all(not (G.adj[u] & S) for u in iter_bits(S))


# independence number ---------------------------------------------------------


def _clique_cover_bound(adj, cand: int) -> int:
    """Greedy clique cover size of G[cand]; an upper bound on alpha."""
    count = 0
    while cand:
        v = cand & -cand
        clique_cand = cand & adj[v.bit_length() - 1]
        cand ^= v
        while clique_cand:
            u = clique_cand & -clique_cand
            cand ^= u
            clique_cand &= adj[u.bit_length() - 1]
        count += 1
    return count


def _alpha_bb(adj, cand: int, size: int, best: int) -> int:
    while True:
        if not cand:
            return max(best, size)
        # free picks: isolated and degree-1 vertices always lie in some maximum set
        picked = False
        for v in iter_bits(cand):
            nb = adj[v] & cand
            if nb & (nb - 1) == 0:
                cand &= ~(nb | 1 << v)
                size += 1
                picked = True
                break
        if not picked:
            break
    if size + _clique_cover_bound(adj, cand) <= best:
        return best
    pivot, pdeg = -1, -1
    for v in iter_bits(cand):
        d = popcount(adj[v] & cand)
        if d > pdeg:
            pivot, pdeg = v, d
    best = _alpha_bb(adj, cand & ~(adj[pivot] | 1 << pivot), size + 1, best)
    return _alpha_bb(adj, cand & ~(1 << pivot), size, best)


@lru_cache(maxsize=1 << 18)
def alpha(G: Graph) -> int:
    """Independence number; 0 for the empty graph.

    Branch and bound on a maximum-degree vertex, pruned by a greedy clique
    cover bound.
    """
    return _alpha_bb(G.adj, G.active, 0, 0)


# enumeration -----------------------------------------------------------------


def iter_maximal_independent_sets(G: Graph) -> Iterator[VertexSet]:
    """Maximal independent sets via pivoted Bron-Kerbosch on the complement.

    Yields in search order, not sorted.
    """
    adj = G.adj
    active = G.active
    non = {v: active & ~adj[v] & ~(1 << v) for v in iter_bits(active)}
    stack = [(0, active, 0)]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                yield R
            continue
        pivot = max(iter_bits(P | X), key=lambda u: popcount(P & non[u]))
        for v in iter_bits(P & ~non[pivot]):
            bit = 1 << v
            stack.append((R | bit, P & non[v], X & non[v]))
            P &= ~bit
            X |= bit


def maximal_independent_sets(G: Graph) -> IndependentSetFamily:
    return IndependentSetFamily(tuple(sorted(iter_maximal_independent_sets(G))), "maximal")


@lru_cache(maxsize=1 << 16)
def _maximum_sets(G: Graph) -> tuple[VertexSet, ...]:
    a = alpha(G)
    return tuple(sorted(S for S in iter_maximal_independent_sets(G) if popcount(S) == a))


def maximum_independent_sets(G: Graph) -> IndependentSetFamily:
    return IndependentSetFamily(_maximum_sets(G), "maximum")


def iter_independent_sets(G: Graph, within: VertexSet | None = None) -> Iterator[VertexSet]:
    """Every independent subset of ``within`` (default: all active), unsorted."""
    cand0 = G.active if within is None else within
    adj = G.adj
    stack = [(0, cand0)]
    while stack:
        S, cand = stack.pop()
        yield S
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append((S | low, cand & ~adj[v]))


def all_independent_sets(G: Graph, cap: int = ENUMERATION_CAP) -> IndependentSetFamily:
    if G.n > cap:
        raise CapacityError(f"enumerating Ind(G) is capped at {cap} vertices, graph has {G.n}")
    return IndependentSetFamily(tuple(sorted(iter_independent_sets(G))), "all")


def differential(G: Graph, S: VertexSet) -> int:
    """|N(S) - S| - |S|."""
    return popcount(neighborhood(G, S)) - popcount(S)
