"""Corpus-wide theorem suites.

Each suite is a per-graph check ``check(G, p)`` that returns ``None`` when
the graph (or p) is outside the statement's hypotheses, and otherwise a
list of witness dicts, one per violation. Biconditionals always evaluate
both sides. A recorded failure is replayed by re-running the check on the
decoded graph and finding the same witness again.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable

from .canon import canonical_form
from .criticality import (
    _deletion_critical,
    _gab_alpha_condition,
    component_criticality_check,
    edge_localization_sufficient,
    edge_localization_well_covered,
    is_alpha_critical,
    locally_triangle_free_equivalence,
    triangle_free_equivalence,
)
from .errors import InvalidArgument
from .graph import (
    Graph,
    complete,
    components,
    delete_vertices,
    disjoint_union,
    is_locally_triangle_free,
    is_triangle_free,
    iter_bits,
    localize,
    members,
    neighborhood,
    popcount,
    vset,
)
from .graph6 import graph6_decode, to_graph6
from .independence import alpha, iter_independent_sets
from .wp import (
    EXTENSION_READING,
    extension_property,
    is_shedding_definitional,
    is_well_covered,
    is_wp_definitional,
    is_wp_deletion,
    is_wp_recursive,
    localization_closure_check,
    surplus_profile,
    vertex_deletion_stays_wp,
    w2_characterizations,
    wp_member,
)

SCHEMA_VERSION = 1
WORKERS_ENV = "WELLCOVERED_WORKERS"

Witness = dict
Check = Callable[[Graph, "int | None"], "list[Witness] | None"]


@dataclass
class Failure:
    graph6: str
    p: int | None
    witness: str
    detail: dict = field(default_factory=dict)


@dataclass
class TheoremReport:
    theorem_id: str
    graphs_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    note: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Suite:
    theorem_id: str
    summary: str
    check: Check
    min_p: int | None = None  # None: p plays no role
    note: str | None = None


def _w(description: str, **detail) -> Witness:
    return {"description": description, **detail}


def _wc(G: Graph) -> bool:
    return G.n > 0 and is_well_covered(G)


def _small_subsets(mask: int, k: int):
    verts = members(mask)
    for r in range(k + 1):
        for combo in combinations(verts, r):
            yield vset(*combo)


# suites --------------------------------------------------------------------------


def check_L21(G: Graph, p):
    a = alpha(G)
    if a <= 1:
        return None
    lhs = is_well_covered(G)
    rhs = True
    for v in iter_bits(G.active):
        Gv = localize(G, 1 << v)
        if alpha(Gv) != a - 1 or not _wc(Gv):
            rhs = False
            break
    return [] if lhs == rhs else [_w("well-covered disagrees with the localization test",
                                     well_covered=lhs, localizations=rhs)]


def check_L22(G: Graph, p):
    if not _wc(G):
        return None
    a = alpha(G)
    out = []
    for S in sorted(iter_independent_sets(G)):
        if popcount(S) >= a:
            continue
        GS = localize(G, S)
        if alpha(GS) + popcount(S) != a or not _wc(GS):
            out.append(_w("G_S not well-covered or alpha(G_S) + |S| != alpha(G)", S=members(S)))
    return out


def check_L23(G: Graph, p):
    out = []
    subsets = list(_small_subsets(G.active, 2))
    closed = {S: neighborhood(G, S) | S for S in subsets}
    for S in subsets:
        for T in subsets:
            if closed[S] & T or closed[T] & S:
                continue
            st = localize(localize(G, S), T)
            ts = localize(localize(G, T), S)
            if not (st == localize(G, S | T) == ts):
                out.append(_w("localization orders differ", S=members(S), T=members(T)))
    return out


def check_T24(G: Graph, p):
    if not _wc(G):
        return None
    out = []
    for v in iter_bits(G.active):
        if not G.adj[v]:
            continue
        a = is_well_covered(delete_vertices(G, 1 << v))
        surplus, _ = surplus_profile(G, v)
        Gv = localize(G, 1 << v)
        c = not any(
            not G.adj[v] & localize(G, S).active for S in iter_independent_sets(G, Gv.active)
        )
        d, _ = is_shedding_definitional(G, v)
        flags = {"minus_v_well_covered": a, "surplus_at_least_1": surplus >= 1,
                 "no_isolating_set": c, "shedding": d}
        if len(set(flags.values())) != 1:
            out.append(_w("conditions disagree at v", v=v, **flags))
    return out


def check_T25(G: Graph, p):
    if not _wc(G) or G.isolated_vertices():
        return None
    flags = w2_characterizations(G)
    return [] if flags.all_equal() else [_w("W_2 conditions disagree", **asdict(flags))]


def check_T26a(G: Graph, p):
    lhs = wp_member(G, p)
    a = alpha(G)
    rhs = all(
        alpha(H) == a and wp_member(H, p - 1)
        for H in (delete_vertices(G, 1 << v) for v in iter_bits(G.active))
    )
    return [] if lhs == rhs else [_w("W_p disagrees with vertex-deletion test", lhs=lhs, rhs=rhs)]


def check_T26b(G: Graph, p):
    a = is_wp_definitional(G, p).member
    b = is_wp_deletion(G, p).member
    return [] if a == b else [_w("definitional and deletion deciders disagree",
                                 definitional=a, deletion=b)]


def check_L27a(G: Graph, p):
    if not wp_member(G, p):
        return None
    a = alpha(G)
    out = []
    if G.n < p * a:
        out.append(_w("n(G) < p * alpha(G)", n=G.n, alpha=a))
    packed = complete(p)
    for _ in range(a - 1):
        packed = disjoint_union(packed, complete(p))
    tight = G.n == p * a
    iso = packed.n == G.n and canonical_form(packed) == canonical_form(G)
    if tight != iso:
        out.append(_w("equality case does not match alpha * K_p", tight=tight, isomorphic=iso))
    return out


def check_L27b(G: Graph, p):
    if not wp_member(G, p) or not G.is_connected() or G.is_complete():
        return None
    d = G.min_degree()
    return [] if d >= p else [_w("vertex of degree < p", min_degree=d)]


def check_T28(G: Graph, p):
    if not wp_member(G, p) or G.isolated_vertices():
        return None
    a = alpha(G)
    out = []
    for A in sorted(iter_independent_sets(G)):
        if popcount(A) >= a:
            continue
        rep = extension_property(G, A, p)
        if not rep.part_a or rep.part_b is False:
            out.append(_w("extension fails", A=members(A), part_a=rep.part_a, part_b=rep.part_b))
    return out


def check_L29(G: Graph, p):
    if not wp_member(G, p):
        return None
    return [] if localization_closure_check(G, p) else [_w("some G_S leaves W_p or has an isolated vertex")]


def check_L31(G: Graph, p):
    whole = wp_member(G, p)
    parts = all(wp_member(C, p) for C in components(G))
    return [] if whole == parts else [_w("graph and components disagree", graph=whole, components=parts)]


def check_T32(G: Graph, p):
    a = is_wp_definitional(G, p).member
    b = is_wp_recursive(G, p).member
    return [] if a == b else [_w("definitional and recursive deciders disagree",
                                 definitional=a, recursive=b)]


def check_T33(G: Graph, p):
    if not wp_member(G, p):
        return None
    out = []
    for v in iter_bits(G.active):
        if not G.adj[v]:
            continue
        r = vertex_deletion_stays_wp(G, v, p)
        if not (r.in_wp == r.surplus_condition == r.localized_degree_condition):
            out.append(_w("vertex-deletion conditions disagree", v=v, in_wp=r.in_wp,
                          min_surplus=r.min_surplus,
                          localized_degree_condition=r.localized_degree_condition))
    return out


def check_L41(G: Graph, p):
    return [] if component_criticality_check(G) else [_w("criticality of graph and components differ")]


def check_L42(G: Graph, p):
    if not G.m:
        return None
    return [] if edge_localization_well_covered(G) else [_w("hypothesis holds but G not well-covered")]


def check_L43(G: Graph, p):
    rep = is_alpha_critical(G)
    out = []
    if _deletion_critical(G) != _gab_alpha_condition(G):
        out.append(_w("criticality and alpha(G_ab) test disagree"))
    if rep.non_critical_edges != rep.gab_failures:
        out.append(_w("edge lists differ", non_critical=[list(e) for e in rep.non_critical_edges],
                      gab_failures=[list(e) for e in rep.gab_failures]))
    return out


def check_T44(G: Graph, p):
    if alpha(G) <= 1:
        return None
    r = edge_localization_sufficient(G, p)
    return [] if r.holds else [_w("hypothesis holds but conclusion fails")]


def check_C45(G: Graph, p):
    if alpha(G) <= 1 or not is_locally_triangle_free(G):
        return None
    r = locally_triangle_free_equivalence(G, p)
    return [] if r.holds else [_w("sides disagree", lhs=r.lhs, rhs=r.rhs)]


def check_C46(G: Graph, p):
    if alpha(G) <= 1 or not is_triangle_free(G):
        return None
    r = triangle_free_equivalence(G, p)
    return [] if r.holds else [_w("sides disagree", lhs=r.lhs, rhs=r.rhs)]


def check_chain(G: Graph, p):
    if wp_member(G, p) and not wp_member(G, p - 1):
        return [_w("in W_p but not in W_(p-1)")]
    return []


def check_triangle_free_w2_critical(G: Graph, p):
    if not is_triangle_free(G) or not wp_member(G, 2):
        return None
    return [] if is_alpha_critical(G).alpha_critical else [_w("triangle-free W_2 graph not alpha-critical")]


SUITES: dict[str, Suite] = {
    s.theorem_id: s
    for s in [
        Suite("L2.1", "alpha > 1: well-covered iff every G_v well-covered with alpha one less", check_L21),
        Suite("L2.2", "well-covered, S independent, |S| < alpha: G_S well-covered, alpha adds up", check_L22),
        Suite("L2.3", "localizations at S and T commute when closed neighborhoods miss the other set", check_L23),
        Suite("T2.4", "well-covered, v non-isolated: G - v well-covered iff surplus >= 1 iff no isolating set iff shedding", check_T24),
        Suite("T2.5", "well-covered without isolated vertices: five W_2 conditions agree", check_T25),
        Suite("T2.6a", "W_p iff every G - v in W_(p-1) with the same alpha", check_T26a, min_p=2),
        Suite("T2.6b", "W_p iff deleting any p - 1 vertices keeps well-covered and alpha", check_T26b, min_p=1),
        Suite("L2.7a", "W_p: n >= p * alpha, with equality exactly for alpha * K_p", check_L27a, min_p=2),
        Suite("L2.7b", "connected non-complete W_p: minimum degree >= p", check_L27b, min_p=2),
        Suite("T2.8", "W_p without isolated vertices: extension of non-maximum independent sets", check_T28, min_p=1,
              note=f"checked reading: {EXTENSION_READING}"),
        Suite("L2.9", "W_p closed under localization at small independent sets", check_L29, min_p=1),
        Suite("L3.1", "W_p iff every component is W_p", check_L31, min_p=1),
        Suite("T3.2", "W_p iff every G_x in W_p with alpha one less (definitional vs recursive)", check_T32, min_p=1),
        Suite("T3.3", "W_p, v non-isolated: G - v in W_p iff surplus >= p iff no small localized degree", check_T33, min_p=1),
        Suite("L4.1", "alpha-critical iff every component is", check_L41),
        Suite("L4.2", "every G_ab well-covered with alpha one less implies well-covered", check_L42),
        Suite("L4.3", "alpha-critical iff alpha(G_ab) = alpha - 1 on every edge", check_L43),
        Suite("T4.4", "alpha > 1, every G_ab in W_(p-1) with alpha one less implies W_p and alpha-critical", check_T44, min_p=2),
        Suite("C4.5", "locally triangle-free, alpha > 1: G_ab condition iff W_p and alpha-critical", check_C45, min_p=2),
        Suite("C4.6", "triangle-free, alpha > 1: G_ab condition iff W_p", check_C46, min_p=2),
        Suite("chain", "W_p is contained in W_(p-1)", check_chain, min_p=2),
        Suite("staples_tf", "triangle-free W_2 graphs are alpha-critical", check_triangle_free_w2_critical),
    ]
}


def resolve_ids(selection: str | list[str]) -> list[str]:
    ids = list(SUITES) if selection in ("all", ["all"]) else list(selection)
    unknown = [t for t in ids if t not in SUITES]
    if unknown:
        raise InvalidArgument(f"unknown theorem ids: {', '.join(unknown)}")
    return ids


def _suite_ps(suite: Suite, p_values) -> list[int | None]:
    if suite.min_p is None:
        return [None]
    return [p for p in p_values if p >= suite.min_p]


def _run_graph(args):
    code, ids, p_values = args
    G = graph6_decode(code)
    g6 = code.decode("ascii") if isinstance(code, bytes) else code
    out = {}
    for tid in ids:
        suite = SUITES[tid]
        start = time.perf_counter()
        checked = False
        fails = []
        for p in _suite_ps(suite, p_values):
            res = suite.check(G, p)
            if res is None:
                continue
            checked = True
            for w in res:
                fails.append(Failure(g6, p, w["description"], {k: v for k, v in w.items() if k != "description"}))
        out[tid] = (checked, fails, (time.perf_counter() - start) * 1000)
    return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        raise InvalidArgument(f"{WORKERS_ENV} must be an integer") from None


def run_suites(graphs, ids, p_values, workers: int | None = None) -> list[TheoremReport]:
    """Run the chosen suites over ``graphs`` (Graph objects or graph6 codes).

    Results aggregate in input order whatever the worker count.
    """
    ids = resolve_ids(ids)
    codes = [g if isinstance(g, (bytes, str)) else to_graph6(g) for g in graphs]
    p_values = sorted(set(p_values))
    reports = {tid: TheoremReport(tid, note=SUITES[tid].note) for tid in ids}
    jobs = [(c, ids, p_values) for c in codes]
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_graph, jobs, chunksize=max(1, len(jobs) // (workers * 8))))
    else:
        results = [_run_graph(j) for j in jobs]
    for res in results:
        for tid, (checked, fails, ms) in res.items():
            rep = reports[tid]
            rep.graphs_checked += checked
            rep.failures.extend(fails)
            rep.elapsed_ms += ms
    return [reports[t] for t in ids]


def replay(theorem_id: str, failure: Failure) -> bool:
    """True when re-running the check reproduces the recorded witness."""
    G = graph6_decode(failure.graph6)
    res = SUITES[theorem_id].check(G, failure.p)
    if not res:
        return False
    want = {"description": failure.witness, **failure.detail}
    return any(w == want for w in res)
