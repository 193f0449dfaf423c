"""Exact laboratory for well-covered graphs, the W_p hierarchy and alpha-criticality."""

from .canon import canonical_form, is_isomorphic
from .corpus import enumerate_graphs, read_graph6_file
from .criticality import (
    CriticalityReport,
    component_criticality_check,
    edge_localization_sufficient,
    edge_localization_well_covered,
    gab_equivalence,
    is_alpha_critical,
    is_critical_edge,
    locally_triangle_free_equivalence,
    triangle_free_equivalence,
)
from .errors import CapacityError, Graph6ParseError, InvalidArgument
from .graph import (
    Graph,
    closed_neighborhood,
    compact,
    complement,
    complete,
    complete_bipartite,
    components,
    corona_complete,
    cycle,
    delete_edge,
    delete_vertices,
    disjoint_union,
    edge_localize,
    is_locally_triangle_free,
    is_triangle_free,
    join,
    join_cliques,
    localize,
    members,
    neighborhood,
    path,
    relabel,
    vset,
)
from .graph6 import graph6_decode, graph6_encode, to_graph6
from .independence import (
    all_independent_sets,
    alpha,
    differential,
    is_independent,
    maximal_independent_sets,
    maximum_independent_sets,
)
from .profile import ClassProfile, profile
from .wp import (
    WpVerdict,
    extension_property,
    is_shedding,
    is_well_covered,
    is_well_covered_recursive,
    is_wp,
    is_wp_definitional,
    is_wp_deletion,
    is_wp_recursive,
    localization_closure_check,
    vertex_deletion_stays_wp,
    w2_characterizations,
    wp_order,
)

__version__ = "0.1.0"
