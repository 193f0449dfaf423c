"""Alpha-criticality and edge-localization conditions."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, components, delete_edge, edge_localize, is_locally_triangle_free, is_triangle_free
from .independence import alpha
from .errors import InvalidArgument
from .wp import _all_maximal_same_size, wp_member

Edge = tuple[int, int]


@dataclass(frozen=True)
class CriticalityReport:
    alpha: int
    alpha_critical: bool
    non_critical_edges: tuple[Edge, ...]
    gab_failures: tuple[Edge, ...]


def is_critical_edge(G: Graph, a: int, b: int) -> bool:
    """Deleting ab raises the independence number."""
    return alpha(delete_edge(G, a, b)) > alpha(G)


def is_alpha_critical(G: Graph) -> CriticalityReport:
    """Both edge lists are computed directly; edgeless graphs are vacuously critical."""
    a = alpha(G)
    non_critical = []
    gab_bad = []
    for x, y in G.edges():
        if not is_critical_edge(G, x, y):
            non_critical.append((x, y))
        if alpha(edge_localize(G, x, y)) != a - 1:
            gab_bad.append((x, y))
    return CriticalityReport(a, not non_critical, tuple(non_critical), tuple(gab_bad))


def _gab_alpha_condition(G: Graph) -> bool:
    a = alpha(G)
    return all(alpha(edge_localize(G, x, y)) == a - 1 for x, y in G.edges())


def _deletion_critical(G: Graph) -> bool:
    return all(is_critical_edge(G, x, y) for x, y in G.edges())


def gab_equivalence(G: Graph) -> bool:
    """Agreement of edge-deletion criticality with alpha(G_ab) = alpha(G) - 1 on all edges."""
    return _deletion_critical(G) == _gab_alpha_condition(G)


def _gab_wp_condition(G: Graph, q: int) -> bool:
    """Every G_ab is in W_q with alpha one less than alpha(G)."""
    a = alpha(G)
    for x, y in G.edges():
        H = edge_localize(G, x, y)
        if alpha(H) != a - 1 or not wp_member(H, q):
            return False
    return True


@dataclass(frozen=True)
class Implication:
    hypothesis: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.hypothesis or self.conclusion


@dataclass(frozen=True)
class Biconditional:
    lhs: bool
    rhs: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _check_gab_pre(G: Graph, p: int) -> None:
    if p < 2:
        raise InvalidArgument("needs p >= 2")
    if alpha(G) <= 1:
        raise InvalidArgument("needs alpha(G) > 1")


def edge_localization_sufficient(G: Graph, p: int) -> Implication:
    """Hypothesis: every G_ab in W_{p-1} with alpha(G_ab) = alpha(G) - 1.
    Conclusion: G in W_p and alpha-critical."""
    _check_gab_pre(G, p)
    hyp = _gab_wp_condition(G, p - 1)
    concl = wp_member(G, p) and _deletion_critical(G)
    return Implication(hyp, concl)


def locally_triangle_free_equivalence(G: Graph, p: int) -> Biconditional:
    _check_gab_pre(G, p)
    if not is_locally_triangle_free(G):
        raise InvalidArgument("graph is not locally triangle-free")
    return Biconditional(_gab_wp_condition(G, p - 1), wp_member(G, p) and _deletion_critical(G))


def triangle_free_equivalence(G: Graph, p: int) -> Biconditional:
    _check_gab_pre(G, p)
    if not is_triangle_free(G):
        raise InvalidArgument("graph has a triangle")
    return Biconditional(_gab_wp_condition(G, p - 1), wp_member(G, p))


def edge_localization_well_covered(G: Graph) -> bool:
    """If every G_ab is well-covered with alpha(G_ab) = alpha(G) - 1 then G is
    well-covered; returns whether that implication holds for G.

    An empty G_ab counts as well-covered here (its only maximal independent
    set is the empty one).
    """
    edges = G.edges()
    if not edges:
        raise InvalidArgument("graph has no edges")
    a = alpha(G)
    hyp = all(
        alpha(H) == a - 1 and _all_maximal_same_size(H)
        for H in (edge_localize(G, x, y) for x, y in edges)
    )
    return not hyp or _all_maximal_same_size(G)


def component_criticality_check(G: Graph) -> bool:
    whole = is_alpha_critical(G).alpha_critical
    parts = all(is_alpha_critical(C).alpha_critical for C in components(G))
    return whole == parts
