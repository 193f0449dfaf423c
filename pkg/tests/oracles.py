"""Brute-force reference computations, independent of the package's search code.

Graphs here are plain (n, frozenset of edges) pairs so nothing is shared
with the bitset implementation except at the comparison boundary.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial


def edge_set(G):
    return frozenset(frozenset(e) for e in G.edges())


def independent(edges, S) -> bool:
    return not any(frozenset(pair) in edges for pair in combinations(S, 2))


def brute_alpha(vertices, edges) -> int:
    vertices = list(vertices)
    for k in range(len(vertices), -1, -1):
        for S in combinations(vertices, k):
            if independent(edges, S):
                return k
    return 0


def brute_independent_sets(vertices, edges):
    vertices = list(vertices)
    out = []
    for k in range(len(vertices) + 1):
        for S in combinations(vertices, k):
            if independent(edges, S):
                out.append(frozenset(S))
    return out


def brute_maximal_sets(vertices, edges):
    ind = brute_independent_sets(vertices, edges)
    vertices = list(vertices)
    return [S for S in ind if all(v in S or not independent(edges, S | {v}) for v in vertices)]


def to_mask(S) -> int:
    m = 0
    for v in S:
        m |= 1 << v
    return m


def graph6_of_edges(n: int, edges) -> str:
    """Direct transcription of the graph6 layout, written independently."""
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if frozenset((i, j)) in edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        chars.append(chr(int("".join(map(str, bits[k:k + 6])), 2) + 63))
    return "".join(chars)


def brute_canonical(n: int, edges) -> str:
    """Minimum graph6 string over every vertex permutation."""
    best = None
    for perm in permutations(range(n)):
        mapped = frozenset(frozenset(perm[v] for v in e) for e in edges)
        code = graph6_of_edges(n, mapped)
        if best is None or code < best:
            best = code
    return best


def all_labeled_edge_sets(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield frozenset(frozenset(pairs[i]) for i in range(len(pairs)) if mask >> i & 1)


def burnside_class_count(n: int) -> int:
    """Number of unlabeled graphs on n vertices by orbit counting."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for i, (a, b) in enumerate(pairs):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                x, y = pairs[j]
                x, y = perm[x], perm[y]
                j = index[(min(x, y), max(x, y))]
        total += 2 ** cycles
    return total // factorial(n)


def labeled_class_count(n: int) -> int:
    """Classes of labeled graphs on n vertices, found by sweeping every edge
    mask and marking its whole permutation orbit the first time it is met."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    images = []
    for perm in permutations(range(n)):
        images.append([index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs])
    seen = bytearray(1 << len(pairs))
    classes = 0
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        classes += 1
        bits = [i for i in range(len(pairs)) if mask >> i & 1]
        for img in images:
            m = 0
            for i in bits:
                m |= 1 << img[i]
            seen[m] = 1
    return classes
