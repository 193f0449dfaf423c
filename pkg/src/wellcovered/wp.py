"""Well-coveredness, shedding vertices and W_p membership.

Three independent W_p deciders are provided:

* ``is_wp_definitional`` searches the defining quantifier directly: every
  family of p pairwise disjoint independent sets must extend to p pairwise
  disjoint maximum independent sets.
* ``is_wp_deletion`` checks that deleting any p - 1 vertices leaves a
  well-covered graph with unchanged independence number.
* ``is_wp_recursive`` recurses on vertex localizations G_x, memoized on
  canonical form.

They share only the independence primitives, never each other's verdicts.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Literal

from .canon import CANON_CAP, canonical_form
from .errors import CapacityError, InvalidArgument
from .graph import (
    Graph,
    VertexSet,
    compact,
    delete_vertices,
    iter_bits,
    localize,
    members,
    neighborhood,
    popcount,
    vset,
)
from .graph6 import graph6_encode
from .independence import (
    ENUMERATION_CAP,
    alpha,
    differential,
    is_independent,
    iter_independent_sets,
    iter_maximal_independent_sets,
    maximum_independent_sets,
)

Decider = Literal["definitional", "deletion", "recursive"]


@dataclass(frozen=True)
class WpVerdict:
    """Outcome of a W_p membership query.

    ``witness`` depends on the decider. Definitional: on failure the family
    (A_1, ..., A_p) that does not extend, on success a packing of p disjoint
    maximum independent sets. Deletion: the deleted set A. Recursive: the
    vertex x whose localization fails. The string ``"order"`` means n(G) < p.
    """

    graph_id: str
    p: int
    member: bool
    decider: Decider
    witness: Any = None


@dataclass(frozen=True)
class SheddingReport:
    vertex: int
    shedding: bool
    blocking_set: VertexSet | None = None


def memo_key(G: Graph) -> bytes:
    """Isomorphism-invariant key when canonicalization is in reach."""
    if G.n <= CANON_CAP:
        return canonical_form(G)
    return b"L" + graph6_encode(compact(G))


def graph_id(G: Graph) -> str:
    return memo_key(G).decode("ascii")


class _Memo:
    """Dict cache safe under threads; duplicate inserts are harmless."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


_WC_RECURSIVE = _Memo()
_WP_RECURSIVE = _Memo()
_WP_DEFINITIONAL = _Memo()


def _require_nonempty(G: Graph) -> None:
    if G.n == 0:
        raise InvalidArgument("operation needs a graph with at least one vertex")


def _require_p(p: int) -> None:
    if p < 1:
        raise InvalidArgument(f"p must be >= 1, got {p}")


# well-covered ------------------------------------------------------------------


def _all_maximal_same_size(G: Graph) -> bool:
    size = None
    for S in iter_maximal_independent_sets(G):
        k = popcount(S)
        if size is None:
            size = k
        elif k != size:
            return False
    return True


def is_well_covered(G: Graph) -> bool:
    """Every maximal independent set has size alpha(G) (membership in W_1)."""
    _require_nonempty(G)
    return _all_maximal_same_size(G)


def is_well_covered_recursive(G: Graph) -> bool:
    """Well-coveredness via localizations: each G_v well-covered with alpha one less."""
    _require_nonempty(G)
    return _wc_rec(G)


def _wc_rec(G: Graph) -> bool:
    key = memo_key(G)
    hit = _WC_RECURSIVE.get(key)
    if hit is not None:
        return hit
    a = alpha(G)
    if a == 1:
        result = True
    else:
        result = True
        for v in iter_bits(G.active):
            Gv = localize(G, 1 << v)
            if alpha(Gv) != a - 1 or not _wc_rec(Gv):
                result = False
                break
    return _WC_RECURSIVE.put(key, result)


# shedding ----------------------------------------------------------------------


def surplus_profile(G: Graph, v: int) -> tuple[int, VertexSet]:
    """min over independent S in G_v of |N(v) - N(S)|, with the first minimizer."""
    G.check_vertex(v)
    nv = G.adj[v]
    Gv = localize(G, 1 << v)
    best, arg = None, 0
    for S in sorted(iter_independent_sets(G, Gv.active)):
        s = popcount(nv & ~neighborhood(G, S))
        if best is None or s < best:
            best, arg = s, S
            if s == 0:
                break
    return best, arg


def is_shedding_definitional(G: Graph, v: int) -> tuple[bool, VertexSet | None]:
    """Every independent S of G_v extends by some neighbor of v."""
    G.check_vertex(v)
    Gv = localize(G, 1 << v)
    nbrs = members(G.adj[v])
    for S in sorted(iter_independent_sets(G, Gv.active)):
        if not any(is_independent(G, S | 1 << u) for u in nbrs):
            return False, S
    return True, None


def is_shedding(G: Graph, v: int) -> SheddingReport:
    """Shedding test by neighborhood covering, cross-checked against the definition."""
    surplus, S = surplus_profile(G, v)
    by_surplus = surplus >= 1
    by_definition, _ = is_shedding_definitional(G, v)
    if by_surplus != by_definition:
        raise RuntimeError(f"shedding routes disagree at vertex {v} of {G!r}")
    return SheddingReport(v, by_surplus, None if by_surplus else S)


def shedding_vertices(G: Graph) -> VertexSet:
    return vset(*(v for v in iter_bits(G.active) if is_shedding(G, v).shedding))


# definitional W_p --------------------------------------------------------------


def _packing(cands: list[list[VertexSet]]) -> list[VertexSet] | None:
    """Pick one set from each candidate list, all pairwise disjoint."""
    p = len(cands)
    order = sorted(range(p), key=lambda i: len(cands[i]))
    chosen: list[VertexSet] = [0] * p

    def bt(k: int, used: VertexSet) -> bool:
        if k == p:
            return True
        i = order[k]
        for S in cands[i]:
            if not S & used:
                chosen[i] = S
                if bt(k + 1, used | S):
                    return True
        return False

    return chosen if bt(0, 0) else None


def extend_family(maximum_sets, family) -> list[VertexSet] | None:
    """Disjoint maximum sets S_i containing A_i, or None."""
    union = 0
    for A in family:
        union |= A
    cands = []
    for A in family:
        others = union & ~A
        c = [S for S in maximum_sets if S & A == A and not S & others]
        if not c:
            return None
        cands.append(c)
    return _packing(cands)


def iter_maximal_families(G: Graph, p: int):
    """Inclusion-maximal families of p disjoint independent sets, up to order.

    Classes are opened in order of first use, so each unordered family is
    produced once; unused classes stay empty.
    """
    verts = G.vertices()
    adj = G.adj
    classes = [0] * p
    nv = len(verts)

    def rec(idx: int, used: int, uncolored: VertexSet):
        if idx == nv:
            for u in iter_bits(uncolored):
                if any(not adj[u] & c for c in classes):
                    return
            yield tuple(classes)
            return
        v = verts[idx]
        bit = 1 << v
        for c in range(min(used + 1, p)):
            if not adj[v] & classes[c]:
                classes[c] |= bit
                yield from rec(idx + 1, max(used, c + 1), uncolored)
                classes[c] &= ~bit
        if popcount(adj[v]) >= p:
            yield from rec(idx + 1, used, uncolored | bit)

    yield from rec(0, 0, 0)


def iter_all_families(G: Graph, p: int):
    """Every ordered p-tuple of pairwise disjoint independent sets."""
    verts = G.vertices()
    adj = G.adj
    classes = [0] * p

    def rec(idx: int):
        if idx == len(verts):
            yield tuple(classes)
            return
        v = verts[idx]
        yield from rec(idx + 1)
        for c in range(p):
            if not adj[v] & classes[c]:
                classes[c] |= 1 << v
                yield from rec(idx + 1)
                classes[c] &= ~(1 << v)

    yield from rec(0)


def _definitional(G: Graph, p: int, full_tuples: bool) -> tuple[bool, Any]:
    if G.n < p:
        return False, "order"
    M = maximum_independent_sets(G).sets
    a = alpha(G)
    # cheap failing instances first: a lone maximal non-maximum set
    for S in sorted(iter_maximal_independent_sets(G)):
        if popcount(S) != a:
            return False, (S,) + (0,) * (p - 1)
    packing = extend_family(M, (0,) * p)
    if packing is None:
        return False, (0,) * p
    families = iter_all_families(G, p) if full_tuples else iter_maximal_families(G, p)
    for fam in families:
        if extend_family(M, fam) is None:
            return False, fam
    return True, tuple(packing)


def is_wp_definitional(G: Graph, p: int, *, full_tuples: bool = False) -> WpVerdict:
    """Decide W_p straight from the definition.

    By default only inclusion-maximal families are searched: a family that
    fails to extend stays failing when its sets grow, so some maximal family
    fails whenever any does. ``full_tuples=True`` checks every ordered tuple.
    """
    _require_p(p)
    if G.n > ENUMERATION_CAP:
        raise CapacityError(f"definitional decider is capped at {ENUMERATION_CAP} vertices")
    member, witness = _definitional(G, p, full_tuples)
    return WpVerdict(graph_id(G), p, member, "definitional", witness)


def wp_member(G: Graph, p: int) -> bool:
    """Cached definitional membership, keyed by isomorphism class."""
    _require_p(p)
    key = (memo_key(G), p)
    hit = _WP_DEFINITIONAL.get(key)
    if hit is None:
        hit = _WP_DEFINITIONAL.put(key, _definitional(G, p, False)[0])
    return hit


# deletion W_p ------------------------------------------------------------------


def is_wp_deletion(G: Graph, p: int) -> WpVerdict:
    """G - A well-covered with the same alpha for every (p-1)-set A."""
    _require_p(p)
    gid = graph_id(G)
    if G.n < p:
        return WpVerdict(gid, p, False, "deletion", "order")
    if p == 1:
        return WpVerdict(gid, p, is_well_covered(G), "deletion", None if is_well_covered(G) else 0)
    a = alpha(G)
    for A in combinations(G.vertices(), p - 1):
        mask = vset(*A)
        H = delete_vertices(G, mask)
        if alpha(H) != a or not is_well_covered(H):
            return WpVerdict(gid, p, False, "deletion", mask)
    return WpVerdict(gid, p, True, "deletion")


# recursive W_p -----------------------------------------------------------------


def _wp_rec(G: Graph, p: int) -> bool:
    key = (memo_key(G), p)
    hit = _WP_RECURSIVE.get(key)
    if hit is not None:
        return hit
    return _WP_RECURSIVE.put(key, _wp_rec_step(G, p)[0])


def _wp_rec_step(G: Graph, p: int) -> tuple[bool, Any]:
    a = alpha(G)
    if a == 1:
        return (True, None) if G.n >= p else (False, "order")
    for x in iter_bits(G.active):
        Gx = localize(G, 1 << x)
        if alpha(Gx) != a - 1 or not _wp_rec(Gx, p):
            return False, x
    return True, None


def is_wp_recursive(G: Graph, p: int) -> WpVerdict:
    """W_p by localization: complete base case, else every G_x in W_p with alpha one less."""
    _require_p(p)
    _require_nonempty(G)
    member, witness = _wp_rec_step(G, p)
    _WP_RECURSIVE.put((memo_key(G), p), member)
    return WpVerdict(graph_id(G), p, member, "recursive", witness)


_DECIDERS = {
    "definitional": is_wp_definitional,
    "deletion": is_wp_deletion,
    "recursive": is_wp_recursive,
}


def is_wp(G: Graph, p: int, decider: Decider = "recursive") -> WpVerdict:
    try:
        fn = _DECIDERS[decider]
    except KeyError:
        raise InvalidArgument(f"unknown decider {decider!r}") from None
    return fn(G, p)


def verify_witness(G: Graph, verdict: WpVerdict) -> bool:
    """Replay a verdict's witness against G."""
    p, w = verdict.p, verdict.witness
    if w == "order":
        return not verdict.member and G.n < p
    if verdict.decider == "definitional":
        sets = list(w)
        if len(sets) != p or any(not is_independent(G, S) for S in sets):
            return False
        if any(sets[i] & sets[j] for i in range(p) for j in range(i + 1, p)):
            return False
        M = maximum_independent_sets(G).sets
        if verdict.member:
            return all(S in M for S in sets)
        return extend_family(M, sets) is None
    if verdict.member:
        return True
    if verdict.decider == "deletion":
        if p == 1:
            return not is_well_covered(G)
        H = delete_vertices(G, w)
        return popcount(w) == p - 1 and (alpha(H) != alpha(G) or not is_well_covered(H))
    if verdict.decider == "recursive":
        Gx = localize(G, 1 << w)
        return alpha(Gx) != alpha(G) - 1 or not _wp_rec(Gx, p)
    return False


def wp_order(G: Graph, decider: Decider = "recursive") -> int:
    """Largest p with G in W_p, or 0 when G is not well-covered."""
    _require_nonempty(G)
    bound = G.n // alpha(G)
    p = 0
    while p < bound and is_wp(G, p + 1, decider).member:
        p += 1
    return p


# W_2 characterizations ---------------------------------------------------------


@dataclass(frozen=True)
class W2Flags:
    in_w2: bool
    differential_monotone: bool
    all_shedding: bool
    no_isolating_set: bool
    localizations_in_w2: bool

    def all_equal(self) -> bool:
        return len({self.in_w2, self.differential_monotone, self.all_shedding,
                    self.no_isolating_set, self.localizations_in_w2}) == 1


def w2_characterizations(G: Graph) -> W2Flags:
    """Five W_2 conditions for a well-covered graph without isolated vertices,
    each evaluated on its own."""
    if G.n == 0 or G.isolated_vertices() or not is_well_covered(G):
        raise InvalidArgument("needs a well-covered graph without isolated vertices")
    ind = list(iter_independent_sets(G))
    in_w2 = is_wp_definitional(G, 2).member
    monotone = True
    for A in ind:
        dA = differential(G, A)
        # single-vertex growth steps suffice: every A <= B is a chain of them
        cand = G.active & ~A & ~neighborhood(G, A)
        if any(differential(G, A | 1 << v) < dA for v in iter_bits(cand)):
            monotone = False
            break
    all_shed = all(is_shedding_definitional(G, v)[0] for v in iter_bits(G.active))
    no_isolating = all(not localize(G, S).isolated_vertices() for S in ind)
    a = alpha(G)
    if a == 1:
        # localization base: a complete graph on at least two vertices
        local = G.is_complete() and G.n >= 2
    else:
        local = True
        for v in iter_bits(G.active):
            Gv = localize(G, 1 << v)
            if alpha(Gv) != a - 1 or not is_wp_definitional(Gv, 2).member:
                local = False
                break
    return W2Flags(in_w2, monotone, all_shed, no_isolating, local)


# vertex deletion inside W_p ----------------------------------------------------


@dataclass(frozen=True)
class VertexDeletionReport:
    in_wp: bool
    min_surplus: int
    surplus_condition: bool
    localized_degree_condition: bool


def vertex_deletion_stays_wp(G: Graph, v: int, p: int) -> VertexDeletionReport:
    """Whether G - v stays in W_p, next to the two neighborhood conditions
    that should predict it."""
    _require_p(p)
    G.check_vertex(v)
    if not G.adj[v]:
        raise InvalidArgument(f"vertex {v} is isolated")
    if not wp_member(G, p):
        raise InvalidArgument(f"graph is not in W_{p}")
    in_wp = is_wp_definitional(delete_vertices(G, 1 << v), p).member
    surplus, _ = surplus_profile(G, v)
    Gv = localize(G, 1 << v)
    small_degree = any(
        popcount(G.adj[v] & localize(G, S).active) <= p - 1
        for S in iter_independent_sets(G, Gv.active)
    )
    return VertexDeletionReport(in_wp, surplus, surplus >= p, not small_degree)


# extension property ------------------------------------------------------------

EXTENSION_READING = "B_i pairwise disjoint, each disjoint from A, with A | B_i maximum independent"


@dataclass(frozen=True)
class ExtensionReport:
    part_a: bool
    part_b: bool | None
    reading: str = EXTENSION_READING


def extension_property(G: Graph, A: VertexSet, p: int) -> ExtensionReport:
    _require_p(p)
    if not is_independent(G, A):
        raise InvalidArgument("A must be independent")
    if popcount(A) >= alpha(G):
        raise InvalidArgument("A must be non-maximum")
    if G.isolated_vertices():
        raise InvalidArgument("graph has isolated vertices")
    if not wp_member(G, p):
        raise InvalidArgument(f"graph is not in W_{p}")
    M = maximum_independent_sets(G).sets
    tails = [S & ~A for S in M if S & A == A]
    part_a = _packing([tails] * p) is not None
    part_b = None
    if p >= 2:
        avoid = [S for S in M if not S & A]
        part_b = _packing([avoid] * (p - 1)) is not None
    return ExtensionReport(part_a, part_b)


def localization_closure_check(G: Graph, p: int) -> bool:
    """Every G_S with S independent and |S| < alpha(G) is in W_p, and has no
    isolated vertices when p > 1."""
    _require_p(p)
    if not wp_member(G, p):
        raise InvalidArgument(f"graph is not in W_{p}")
    a = alpha(G)
    for S in sorted(iter_independent_sets(G)):
        if popcount(S) >= a:
            continue
        GS = localize(G, S)
        if not wp_member(GS, p):
            return False
        if p > 1 and GS.isolated_vertices():
            return False
    return True


def clear_caches() -> None:
    """Drop every memo, including alpha and canonical-form caches."""
    from . import canon, independence

    for memo in (_WC_RECURSIVE, _WP_RECURSIVE, _WP_DEFINITIONAL):
        memo.clear()
    independence.alpha.cache_clear()
    independence._maximum_sets.cache_clear()
    canon._canonical_form.cache_clear()
