from __future__ import annotations

from dataclasses import asdict, dataclass

from .criticality import is_alpha_critical
from .graph import Graph, is_locally_triangle_free, is_triangle_free, popcount
from .graph6 import to_graph6
from .independence import alpha
from .wp import is_well_covered, shedding_vertices, wp_order


@dataclass(frozen=True)
class ClassProfile:
    graph6: str
    n: int
    alpha: int
    well_covered: bool
    wp_order: int
    shed_count: int
    alpha_critical: bool
    triangle_free: bool
    locally_triangle_free: bool

    def to_json(self) -> dict:
        return asdict(self)


def profile(G: Graph) -> ClassProfile:
    """Summary of every predicate for a nonempty graph."""
    return ClassProfile(
        graph6=to_graph6(G),
        n=G.n,
        alpha=alpha(G),
        well_covered=is_well_covered(G),
        wp_order=wp_order(G),
        shed_count=popcount(shedding_vertices(G)),
        alpha_critical=is_alpha_critical(G).alpha_critical,
        triangle_free=is_triangle_free(G),
        locally_triangle_free=is_locally_triangle_free(G),
    )
