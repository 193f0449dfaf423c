"""Acceptance criteria, one test (or one parametrized family) per criterion.

Every test records a PASS/FAIL line which the terminal summary prints at the
end of the run. Runtime budgets are measured with cold caches.
"""

import random
import time

import pytest

from conftest import record
from oracles import brute_alpha, edge_set, labeled_class_count
from wellcovered.corpus import corpus, enumerate_graph6
from wellcovered.criticality import is_alpha_critical
from wellcovered.graph import (
    closed_neighborhood,
    complete,
    complete_bipartite,
    corona_complete,
    cycle,
    is_locally_triangle_free,
    join_cliques,
    localize,
    path,
    relabel,
)
from wellcovered.graph6 import graph6_decode, graph6_encode
from wellcovered.independence import alpha
from wellcovered.profile import profile
from wellcovered.theorems import run_suites
from wellcovered.wp import (
    clear_caches,
    is_shedding_definitional,
    is_well_covered,
    is_wp_definitional,
    is_wp_deletion,
    is_wp_recursive,
    surplus_profile,
    wp_order,
)


@pytest.fixture(scope="module")
def graphs7():
    return list(corpus(range(1, 8)))


def timed(fn):
    clear_caches()
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_c1_cycle_facts():
    def run():
        wc = [n for n in range(3, 13) if is_well_covered(cycle(n))]
        w2 = [n for n in range(3, 13) if wp_order(cycle(n)) >= 2]
        return wc, w2

    (wc, w2), secs = timed(run)
    ok = wc == [3, 4, 5, 7] and w2 == [3, 5] and secs < 1
    record("1 cycle facts", ok, f"well-covered {wc}, W_2 {w2}, {secs:.3f} s")
    assert wc == [3, 4, 5, 7] and w2 == [3, 5]
    assert secs < 1


def test_c2_complete_bipartite_facts():
    def run():
        bad = []
        for n in range(1, 7):
            for p in range(1, 9):
                if is_wp_recursive(complete(n), p).member != (p <= n):
                    bad.append(("K", n, p))
        for n in range(1, 5):
            if not is_well_covered(complete_bipartite(n, n)):
                bad.append(("wc K_nn", n))
        for n in range(2, 5):
            if is_wp_recursive(complete_bipartite(n, n), 2).member:
                bad.append(("W2 K_nn", n))
        if not is_wp_recursive(complete_bipartite(1, 1), 2).member:
            bad.append(("W2 K_11",))
        return bad

    bad, secs = timed(run)
    record("2 complete/bipartite facts", not bad and secs < 1, f"{len(bad)} mismatches, {secs:.3f} s")
    assert not bad
    assert secs < 1


def test_c3_decider_agreement(graphs7):
    def run():
        disagreements = []
        for G in graphs7:
            for p in (1, 2, 3):
                verdicts = {is_wp_definitional(G, p).member, is_wp_deletion(G, p).member,
                            is_wp_recursive(G, p).member}
                if len(verdicts) > 1:
                    disagreements.append((graph6_encode(G), p))
        return disagreements

    bad, secs = timed(run)
    ok = not bad and secs <= 300
    record("3 decider agreement", ok, f"{len(graphs7)} classes x 3 p, {len(bad)} disagreements, {secs:.1f} s")
    assert not bad
    assert secs <= 300


CRITERION4 = ["T2.4", "T2.5", "T2.6a", "L2.7a", "L2.7b", "T2.8", "L2.9", "L3.1", "T3.3",
              "L4.1", "L4.2", "L4.3", "T4.4", "C4.5", "C4.6", "chain", "staples_tf"]


@pytest.fixture(scope="module")
def suite_run(graphs7):
    reports, secs = timed(lambda: run_suites(graphs7, CRITERION4, [2, 3], workers=1))
    return {r.theorem_id: r for r in reports}, secs


@pytest.mark.parametrize("theorem_id", CRITERION4)
def test_c4_theorem_suite(suite_run, theorem_id):
    reports, _ = suite_run
    rep = reports[theorem_id]
    first = rep.failures[0].graph6 if rep.failures else "-"
    record(f"4 {theorem_id}", rep.passed,
           f"{rep.graphs_checked} graphs checked, {len(rep.failures)} failures, first {first}")
    assert rep.graphs_checked > 0
    assert rep.passed, [(f.graph6, f.p, f.witness) for f in rep.failures[:5]]


def test_c4_combined_budget(suite_run):
    _, secs = suite_run
    record("4 combined budget", secs <= 900, f"{secs:.1f} s single-thread")
    assert secs <= 900


def _commuting_triples(graphs, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        G = rng.choice(graphs)
        S = rng.getrandbits(G.n) & G.active
        T = rng.getrandbits(G.n) & G.active
        if closed_neighborhood(G, S) & T or closed_neighborhood(G, T) & S:
            continue
        out.append((G, S, T))
    return out


def test_c5_localization_commutes(graphs7):
    triples = _commuting_triples(graphs7, 200, seed=5)

    def run():
        return [
            (G, S, T) for G, S, T in triples
            if not (localize(localize(G, S), T) == localize(G, S | T) == localize(localize(G, T), S))
        ]

    bad, secs = timed(run)
    nontrivial = sum(1 for _, S, T in triples if S and T)
    record("5 localization commutes", not bad and secs < 1,
           f"200 triples ({nontrivial} with S, T both nonempty), {len(bad)} mismatches, {secs:.3f} s")
    assert not bad
    assert secs < 1


def test_c6_example_families():
    def run():
        bad = []
        for base in (complete(1), complete(2), path(3), cycle(3)):
            for p in (1, 2, 3):
                H = corona_complete(base, p)
                if not is_wp_recursive(H, p).member:
                    bad.append(("not W_p", base.n, p))
                if base.n > 1 and is_alpha_critical(H).alpha_critical:
                    bad.append(("critical", base.n, p))
        G = join_cliques([2, 2], [2, 2])
        if not is_wp_recursive(G, 2).member:
            bad.append(("join not W_2",))
        if is_alpha_critical(G).alpha_critical:
            bad.append(("join critical",))
        if not is_locally_triangle_free(G):
            bad.append(("join not locally triangle-free",))
        return bad

    bad, secs = timed(run)
    record("6 example families", not bad and secs < 10, f"{len(bad)} mismatches, {secs:.3f} s")
    assert not bad
    assert secs < 10


def test_c7_class_counts():
    got = [len(enumerate_graph6(n)) for n in range(1, 7)]
    want = [labeled_class_count(n) for n in range(1, 7)]
    record("7 class counts n<=6", got == want, f"generated {got}, labeled oracle {want}")
    assert got == want


def test_c7_round_trip(graphs7):
    bad = [G for G in graphs7 if graph6_decode(graph6_encode(G)) != G]
    k3 = graph6_encode(complete(3)).decode()
    ok = not bad and k3 == "Bw"
    record("7 graph6 round trip", ok, f"{len(graphs7)} graphs, {len(bad)} mismatches, K_3 -> {k3}")
    assert not bad and k3 == "Bw"


@pytest.mark.slow
def test_c7_generation_n8():
    from wellcovered import corpus as corpus_mod

    corpus_mod._LEVELS.pop(8, None)
    start = time.perf_counter()
    count = len(enumerate_graph6(8))
    secs = time.perf_counter() - start
    record("7 n=8 generation", secs < 600, f"{count} classes in {secs:.1f} s")
    assert secs < 600


def test_c8_alpha_oracle():
    graphs = list(corpus(range(1, 7)))
    clear_caches()
    bad = [G for G in graphs if alpha(G) != brute_alpha(G.vertices(), edge_set(G))]
    record("8 alpha vs brute force", not bad, f"{len(graphs)} graphs, {len(bad)} mismatches")
    assert not bad


def test_c8_shedding_routes():
    graphs = list(corpus(range(1, 7)))
    bad = []
    pairs = 0
    for G in graphs:
        for v in G.vertices():
            pairs += 1
            if (surplus_profile(G, v)[0] >= 1) != is_shedding_definitional(G, v)[0]:
                bad.append((graph6_encode(G), v))
    record("8 shedding routes", not bad, f"{pairs} (graph, vertex) pairs, {len(bad)} mismatches")
    assert not bad


def test_c8_pruned_vs_full_tuples():
    graphs = list(corpus(range(1, 6)))
    clear_caches()
    bad = [
        (graph6_encode(G), p) for G in graphs for p in (1, 2, 3)
        if is_wp_definitional(G, p).member != is_wp_definitional(G, p, full_tuples=True).member
    ]
    record("8 pruned vs full tuples", not bad, f"{len(graphs)} graphs x 3 p, {len(bad)} mismatches")
    assert not bad


def test_c9_relabel_invariance(graphs7):
    rng = random.Random(9)
    bad = 0
    for _ in range(500):
        G = rng.choice(graphs7)
        perm = list(range(G.n))
        rng.shuffle(perm)
        a = profile(G).to_json()
        b = profile(relabel(G, perm)).to_json()
        a.pop("graph6"), b.pop("graph6")
        bad += a != b
    record("9 relabel invariance", not bad, f"500 pairs, {bad} changed profiles")
    assert not bad
