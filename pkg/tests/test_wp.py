import pytest

from wellcovered.errors import InvalidArgument
from wellcovered.graph import (
    Graph,
    complete,
    complete_bipartite,
    components,
    cycle,
    delete_vertices,
    localize,
    path,
    popcount,
    vset,
)
from wellcovered.independence import alpha, is_independent, maximum_independent_sets
from wellcovered.wp import (
    EXTENSION_READING,
    extension_property,
    is_shedding,
    is_shedding_definitional,
    is_well_covered,
    is_well_covered_recursive,
    is_wp_definitional,
    is_wp_deletion,
    is_wp_recursive,
    localization_closure_check,
    surplus_profile,
    verify_witness,
    vertex_deletion_stays_wp,
    w2_characterizations,
    wp_member,
    wp_order,
)

TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
DECIDERS = [is_wp_definitional, is_wp_deletion, is_wp_recursive]


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_well_covered(n):
    assert is_well_covered(cycle(n)) == (n in {3, 4, 5, 7})
    assert is_well_covered_recursive(cycle(n)) == (n in {3, 4, 5, 7})


def test_well_covered_examples():
    assert all(is_well_covered(complete(n)) for n in range(1, 6))
    assert all(is_well_covered(complete_bipartite(n, n)) for n in range(1, 5))
    assert not is_well_covered(path(3))
    assert is_well_covered_recursive(complete(1))
    with pytest.raises(InvalidArgument):
        is_well_covered(Graph.empty(0))
    with pytest.raises(InvalidArgument):
        is_well_covered_recursive(Graph.empty(0))


def test_well_covered_recursive_agrees(corpus7):
    for G in corpus7:
        assert is_well_covered_recursive(G) == is_well_covered(G)


def test_shedding_examples():
    K4 = complete(4)
    assert all(is_shedding(K4, v).shedding for v in range(4))
    star = complete_bipartite(1, 3)
    assert is_shedding(star, 0).shedding
    for v in range(4):
        rep = is_shedding(cycle(4), v)
        assert not rep.shedding and rep.blocking_set == vset((v + 2) % 4)
    assert all(is_shedding(cycle(5), v).shedding for v in range(5))
    iso = Graph.from_edges(3, [(0, 1)])
    rep = is_shedding(iso, 2)
    assert not rep.shedding and rep.blocking_set == 0
    with pytest.raises(InvalidArgument):
        is_shedding(localize(cycle(5), vset(0)), 0)


def test_shedding_routes_agree(corpus6):
    for G in corpus6:
        for v in G.vertices():
            surplus, S = surplus_profile(G, v)
            by_def, blocker = is_shedding_definitional(G, v)
            assert (surplus >= 1) == by_def
            if not by_def:
                # a blocking set leaves every neighbor of v dominated
                assert G.adj[v] & ~_nbhd(G, blocker) == 0
            rep = is_shedding(G, v)
            if not rep.shedding:
                assert popcount(G.adj[v] & ~_nbhd(G, rep.blocking_set)) == 0


def _nbhd(G, S):
    out = 0
    for u in range(G.universe_size):
        if S >> u & 1:
            out |= G.adj[u]
    return out


# deciders -------------------------------------------------------------------------


@pytest.mark.parametrize("decider", DECIDERS)
def test_cycles_in_w2(decider):
    for n in range(3, 11):
        assert decider(cycle(n), 2).member == (n in {3, 5})


@pytest.mark.parametrize("decider", DECIDERS)
def test_complete_and_bipartite(decider):
    for n in range(1, 6):
        for p in range(1, 7):
            assert decider(complete(n), p).member == (p <= n)
    assert decider(complete_bipartite(1, 1), 2).member
    for n in range(2, 5):
        assert not decider(complete_bipartite(n, n), 2).member


def test_decider_examples():
    assert is_wp_deletion(TWO_K2, 2).member
    assert not is_wp_deletion(cycle(7), 2).member
    assert is_wp_deletion(complete(3), 3).member
    assert is_wp_recursive(cycle(5), 2).member
    v = is_wp_recursive(cycle(4), 2)
    assert not v.member and v.witness == 0
    assert is_wp_recursive(complete(4), 4).member


def test_decider_errors():
    for decider in DECIDERS:
        with pytest.raises(InvalidArgument):
            decider(cycle(5), 0)
    with pytest.raises(InvalidArgument):
        is_wp_recursive(Graph.empty(0), 1)
    v = is_wp_deletion(complete(2), 3)
    assert not v.member and v.witness == "order"
    v = is_wp_definitional(complete(2), 3)
    assert not v.member and v.witness == "order"


def test_definitional_success_witness_is_packing():
    v = is_wp_definitional(cycle(5), 2)
    assert v.member and v.decider == "definitional"
    S1, S2 = v.witness
    M = maximum_independent_sets(cycle(5)).sets
    assert S1 in M and S2 in M and not S1 & S2


@pytest.mark.parametrize("p", [1, 2, 3])
def test_witnesses_replay(corpus6, p):
    for G in corpus6:
        for decider in DECIDERS:
            verdict = decider(G, p)
            if not verdict.member:
                assert verdict.witness is not None
            assert verify_witness(G, verdict)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_maximal_family_reduction_matches_full_tuples(p):
    from wellcovered.corpus import corpus

    for G in corpus(range(1, 6)):
        assert (is_wp_definitional(G, p).member
                == is_wp_definitional(G, p, full_tuples=True).member), G


def test_wp_order_examples():
    assert [wp_order(complete(n)) for n in range(1, 7)] == list(range(1, 7))
    assert wp_order(cycle(7)) == 1
    assert wp_order(cycle(6)) == 0
    for n in range(1, 5):
        assert wp_order(complete(n), "definitional") == n
    with pytest.raises(InvalidArgument):
        wp_order(Graph.empty(0))


def test_chain_and_components(corpus6):
    for G in corpus6:
        for p in (2, 3):
            if wp_member(G, p):
                assert wp_member(G, p - 1)
            assert wp_member(G, p) == all(wp_member(C, p) for C in components(G))


# characterizations ----------------------------------------------------------------


def test_w2_characterizations_examples():
    for G in (cycle(5), TWO_K2):
        flags = w2_characterizations(G)
        assert all([flags.in_w2, flags.differential_monotone, flags.all_shedding,
                    flags.no_isolating_set, flags.localizations_in_w2])
    flags = w2_characterizations(cycle(7))
    assert not any([flags.in_w2, flags.differential_monotone, flags.all_shedding,
                    flags.no_isolating_set, flags.localizations_in_w2])
    with pytest.raises(InvalidArgument):
        w2_characterizations(path(3))
    with pytest.raises(InvalidArgument):
        w2_characterizations(Graph.from_edges(3, [(0, 1)]))


def test_vertex_deletion_examples():
    # C_5 - v is P_4; S = {v + 2} leaves only v - 1 undominated in N(v)
    for v in range(5):
        r = vertex_deletion_stays_wp(cycle(5), v, 2)
        assert not r.in_wp and r.min_surplus == 1
        assert not r.surplus_condition and not r.localized_degree_condition
    for n in range(2, 6):
        r = vertex_deletion_stays_wp(complete(n), 0, n - 1)
        assert r.in_wp and r.min_surplus == n - 1
    r = vertex_deletion_stays_wp(TWO_K2, 0, 2)
    assert not r.in_wp and r.min_surplus == 1
    assert not r.surplus_condition and not r.localized_degree_condition
    with pytest.raises(InvalidArgument):
        vertex_deletion_stays_wp(Graph.from_edges(3, [(0, 1)]), 2, 1)
    with pytest.raises(InvalidArgument):
        vertex_deletion_stays_wp(cycle(7), 0, 2)


def test_c5_minus_vertex_is_p4_outside_w2():
    # computed directly: C_5 - v is a path on 4 vertices, which is not W_2
    P4 = delete_vertices(cycle(5), vset(0))
    assert not is_wp_definitional(P4, 2).member
    assert not vertex_deletion_stays_wp(cycle(5), 0, 2).in_wp


def test_extension_property_examples():
    r = extension_property(cycle(5), vset(0), 2)
    assert r.part_a and r.part_b and r.reading == EXTENSION_READING
    for p in range(2, 5):
        assert extension_property(complete(p), 0, p).part_a
    with pytest.raises(InvalidArgument):
        extension_property(complete(1), 0, 1)
    assert extension_property(TWO_K2, vset(0), 2).part_b
    with pytest.raises(InvalidArgument):
        extension_property(cycle(5), vset(0, 1), 2)
    with pytest.raises(InvalidArgument):
        extension_property(cycle(5), vset(0, 2), 2)


def test_localization_closure_examples():
    assert localization_closure_check(cycle(5), 2)
    for n in range(1, 5):
        for p in range(1, n + 1):
            assert localization_closure_check(complete(n), p)
    G_S = localize(TWO_K2, vset(0))
    assert G_S.edges() == [(2, 3)] and is_wp_definitional(G_S, 2).member
    assert localization_closure_check(TWO_K2, 2)
    with pytest.raises(InvalidArgument):
        localization_closure_check(cycle(7), 2)


def test_independent_set_helper_consistency():
    assert is_independent(cycle(5), vset(0, 2)) and alpha(cycle(5)) == 2
