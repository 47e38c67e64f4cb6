"""Co-criticality decisions and the structural property suite.

A non-complete graph is co-critical for a clique vector when it admits a
critical coloring but gains an unavoidable monochromatic clique upon the
addition of any single non-edge.  The checkers here test, on real critical
colorings, the structural facts that every co-critical graph must satisfy:
the chromatic lower bound, the per-vertex neighborhood clique structure,
and the minimum-degree bounds.  A failed finding on a genuinely co-critical
input is a build-breaking bug, not a discovery to report quietly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .arrowing import (
    CliqueVector,
    EdgeColoring,
    arrows,
    extremal_critical_coloring,
)
from .constructions import (
    hanson_toft_edge_count,
    known_ramsey,
    sharp_mindeg_bound,
)
from .graphs import (
    Edge,
    Graph,
    add_edge,
    bits,
    chromatic_number,
    degree_stats,
    delete_vertex,
    is_complete_multipartite,
    mask_has_clique,
    CHROMATIC_MAX_VERTICES,
)

MAXIMIZE_LAST = "maximize-last"
MINIMIZE_FIRST = "minimize-first"


@dataclass(frozen=True)
class CocriticalReport:
    """Per-graph verdict bundle; is_cocritical None means budget ran out."""

    spec: CliqueVector
    is_cocritical: bool | None
    failing_edge: Edge | None
    base_witness: EdgeColoring | None
    delta: int
    big_delta: int
    chi: int | None
    edge_count: int
    ht_bound: int | None
    meets_ht: bool | None
    is_minimal: bool | None
    nodes: int


@dataclass(frozen=True)
class LemmaFinding:
    """Outcome of one structural check; holds must be True on valid input."""

    clause: str
    holds: bool
    vacuous: bool = False
    context: dict | None = None


def _arrow_job(args):
    g, spec, node_limit = args
    verdict = arrows(g, spec, workers=1, node_limit=node_limit)
    return verdict.arrows, verdict.stats.nodes


def is_cocritical(
    g: Graph,
    spec: CliqueVector,
    *,
    workers: int = 1,
    node_limit: int | None = None,
    r: int | None = None,
) -> CocriticalReport:
    """Definitional co-criticality check.

    The base graph must admit a critical coloring and every single-non-edge
    extension must not.  failing_edge is the least refuting non-edge.  The
    non-edge checks run in lexicographic order and stop at the first failure;
    with workers > 1 they run concurrently but the verdict, failing edge, and
    node statistics are aggregated as if sequential.
    """
    if g.is_complete():
        raise ValueError("co-criticality is defined for non-complete graphs")
    delta, big_delta, _ = degree_stats(g)
    chi = chromatic_number(g) if g.n <= CHROMATIC_MAX_VERTICES else None
    known = known_ramsey(spec, r)
    ht_bound = hanson_toft_edge_count(known[0], g.n) if known else None
    meets_ht = (g.edge_count >= ht_bound) if ht_bound is not None else None

    base = arrows(g, spec, node_limit=node_limit, split_depth=0)
    nodes = base.stats.nodes
    if base.arrows is None:
        return CocriticalReport(
            spec, None, None, None, delta, big_delta, chi,
            g.edge_count, ht_bound, meets_ht, None, nodes,
        )
    if base.arrows:
        return CocriticalReport(
            spec, False, None, None, delta, big_delta, chi,
            g.edge_count, ht_bound, meets_ht, None, nodes,
        )

    non_edges = g.non_edges()
    results: list[tuple[bool | None, int]] = []
    if workers > 1 and len(non_edges) > 1:
        jobs = [(add_edge(g, e), spec, node_limit) for e in non_edges]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_arrow_job, jobs))
    else:
        for e in non_edges:
            verdict = arrows(add_edge(g, e), spec, node_limit=node_limit)
            results.append((verdict.arrows, verdict.stats.nodes))
            if verdict.arrows is not True:
                break

    verdict_value: bool | None = True
    failing: Edge | None = None
    for e, (arrowed, n_nodes) in zip(non_edges, results):
        nodes += n_nodes
        if arrowed is None:
            verdict_value = None
            break
        if arrowed is False:
            verdict_value = False
            failing = e
            break

    return CocriticalReport(
        spec,
        verdict_value,
        failing,
        base.witness if verdict_value else None,
        delta,
        big_delta,
        chi,
        g.edge_count,
        ht_bound,
        meets_ht,
        None,
        nodes,
    )


def is_minimal_cocritical(
    g: Graph,
    spec: CliqueVector,
    *,
    report: CocriticalReport | None = None,
    workers: int = 1,
) -> bool:
    """True iff deleting any single vertex destroys co-criticality."""
    if report is None:
        report = is_cocritical(g, spec, workers=workers)
    if report.is_cocritical is not True:
        raise ValueError("minimality is only defined for co-critical graphs")
    for v in range(g.n):
        sub = delete_vertex(g, v)
        if sub.is_complete():
            continue  # complete graphs are never co-critical
        if is_cocritical(sub, spec, workers=workers).is_cocritical:
            return False
    return True


def check_lemma_1_2(g: Graph, spec: CliqueVector, r: int) -> LemmaFinding:
    """Chromatic bound: chi >= r-1, with equality only for complete
    (r-1)-partite graphs."""
    chi = chromatic_number(g)
    context: dict = {"chi": chi, "r": r}
    if chi < r - 1:
        return LemmaFinding("1.2", False, context=context)
    if chi == r - 1:
        multi, parts = is_complete_multipartite(g)
        context["complete_multipartite"] = multi
        context["parts"] = parts
        return LemmaFinding("1.2", multi and parts == r - 1, context=context)
    return LemmaFinding("1.2", True, context=context)


def _clique_masks(adj, within: int, size: int) -> list[int]:
    verts = list(bits(within))
    out = []
    for combo in combinations(verts, size):
        if all(adj[u] >> v & 1 for u, v in combinations(combo, 2)):
            mask = 0
            for v in combo:
                mask |= 1 << v
            out.append(mask)
    return out


def max_disjoint_cliques(adj, within: int, size: int) -> int:
    """Exact maximum number of vertex-disjoint size-cliques inside the mask."""
    if size <= 0:
        raise ValueError("clique size must be positive")
    if size == 1:
        return within.bit_count()
    cliques = _clique_masks(adj, within, size)

    def pack(start: int, used: int, count: int, best: int) -> int:
        if count > best:
            best = count
        if count + len(cliques) - start <= best:
            return best
        for j in range(start, len(cliques)):
            if cliques[j] & used == 0:
                best = pack(j + 1, used | cliques[j], count + 1, best)
        return best

    return pack(0, 0, 0, 0)


def _masked_clique_number(adj, within: int) -> int:
    best = 0
    cand = within

    def grow(cand: int, size: int, best: int) -> int:
        while cand:
            if size + cand.bit_count() <= best:
                return best
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            if size + 1 > best:
                best = size + 1
            best = grow(cand & adj[v], size + 1, best)
        return best

    return grow(cand, 0, best)


def _is_color_complete(adj_ell, from_mask: int, to_mask: int) -> bool:
    for v in bits(from_mask):
        if adj_ell[v] & to_mask != to_mask:
            return False
    return True


def check_lemma_1_5(
    g: Graph,
    spec: CliqueVector,
    coloring_policy: str = MAXIMIZE_LAST,
    *,
    coloring: EdgeColoring | None = None,
    include_d: bool = False,
    workers: int = 1,
) -> list[LemmaFinding]:
    """Structural checks on an extremal critical coloring of a co-critical graph.

    Policy "maximize-last" selects the coloring with the largest last color
    class and enables the clique-packing clauses; "minimize-first" selects
    the smallest first class and (for k >= 3, include_d) the reduction check
    that dropping the first color class leaves a co-critical graph.  Clauses
    quantify over vertices x of degree at most n-2.  The clique vector must
    be sorted ascending with every entry >= 3.
    """
    if coloring_policy not in (MAXIMIZE_LAST, MINIMIZE_FIRST):
        raise ValueError(f"unknown coloring policy {coloring_policy!r}")
    if spec.k < 2:
        raise ValueError("the structural checks need at least two colors")
    if not spec.is_ascending() or any(t < 3 for t in spec.sizes):
        raise ValueError("clique sizes must be ascending and at least 3")
    if coloring is None:
        if coloring_policy == MAXIMIZE_LAST:
            coloring = extremal_critical_coloring(g, spec, spec.k, "max")
        else:
            coloring = extremal_critical_coloring(g, spec, 1, "min")
        if coloring is None:
            raise ValueError("graph admits no critical coloring; not co-critical")

    n = g.n
    k = spec.k
    class_adj = [None] + [coloring.class_adj(ell) for ell in range(1, k + 1)]
    findings: list[LemmaFinding] = []

    max_class_degree = [0] * (k + 1)
    for ell in range(1, k + 1):
        max_class_degree[ell] = max(m.bit_count() for m in class_adj[ell])

    for x in range(n):
        if g.degree(x) > n - 2:
            continue
        neighborhoods = [0] + [class_adj[ell][x] for ell in range(1, k + 1)]
        outside = g.full_mask & ~g.adj[x] & ~(1 << x)

        for ell in range(1, k + 1):
            t = spec.sizes[ell - 1]
            a_ell = neighborhoods[ell]
            ctx = {"x": x, "ell": ell}

            omega = _masked_clique_number(class_adj[ell], a_ell)
            holds_a = max_class_degree[ell] <= n - 2 and omega <= t - 2
            findings.append(
                LemmaFinding(
                    "1.5a",
                    holds_a,
                    context=dict(ctx, omega=omega, max_degree=max_class_degree[ell]),
                )
            )

            holds_b = omega == t - 2
            for u in bits(outside):
                reach = class_adj[ell][u] & a_ell
                if not mask_has_clique(class_adj[ell], reach, t - 2):
                    holds_b = False
                    findings.append(
                        LemmaFinding("1.5b", False, context=dict(ctx, u=u))
                    )
                    break
            else:
                findings.append(
                    LemmaFinding("1.5b", holds_b, context=dict(ctx, omega=omega))
                )

        if coloring_policy == MAXIMIZE_LAST:
            a_k = neighborhoods[k]
            t_k = spec.sizes[k - 1]
            for ell in range(1, k):
                t_ell = spec.sizes[ell - 1]
                ctx = {"x": x, "ell": ell}
                if _is_color_complete(class_adj[k], neighborhoods[ell], a_k):
                    packs_ell = max_disjoint_cliques(class_adj[ell], a_k, t_ell - 1)
                    packs_k = max_disjoint_cliques(class_adj[k], a_k, t_k - 2)
                    holds = (
                        packs_ell >= t_k - 2
                        and packs_k >= t_ell - 1
                        and a_k.bit_count() >= (t_ell - 1) * (t_k - 2)
                    )
                    findings.append(
                        LemmaFinding(
                            "1.5c1",
                            holds,
                            context=dict(
                                ctx,
                                disjoint_in_ell=packs_ell,
                                disjoint_in_last=packs_k,
                                last_neighborhood=a_k.bit_count(),
                            ),
                        )
                    )

            if k == 2:
                t1, t2 = spec.sizes
                a1 = neighborhoods[1]
                ctx = {"x": x, "ell": 1}
                if a1.bit_count() == t1 - 2:
                    blue_complete = _is_color_complete(class_adj[2], a1, a_k)
                    big_enough = a_k.bit_count() >= (t1 - 1) * (t2 - 2) + 1
                    findings.append(
                        LemmaFinding(
                            "1.5c2",
                            blue_complete and big_enough,
                            context=dict(
                                ctx,
                                blue_complete=blue_complete,
                                last_neighborhood=a_k.bit_count(),
                            ),
                        )
                    )
                else:
                    findings.append(
                        LemmaFinding(
                            "1.5c2",
                            True,
                            vacuous=True,
                            context=dict(ctx, first_neighborhood=a1.bit_count()),
                        )
                    )

    if coloring_policy == MINIMIZE_FIRST and include_d and k >= 3:
        findings.append(check_lemma_1_5d(g, spec, coloring, workers=workers))

    return findings


def check_lemma_1_5d(
    g: Graph, spec: CliqueVector, coloring: EdgeColoring, *, workers: int = 1
) -> LemmaFinding:
    """Dropping a minimum first color class must leave a co-critical graph."""
    if spec.k < 3:
        raise ValueError("the reduction check needs at least three colors")
    adj = list(g.adj)
    for (u, v), c in zip(g.edges(), coloring.colors):
        if c == 1:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    reduced = Graph(g.n, tuple(adj))
    sub_report = is_cocritical(reduced, spec.drop_first(), workers=workers)
    return LemmaFinding(
        "1.5d",
        sub_report.is_cocritical is True,
        context={"reduced_edges": reduced.edge_count},
    )


def mindeg_assert(g: Graph, spec: CliqueVector) -> LemmaFinding:
    """Minimum degree of a co-critical graph against the sharp known bound."""
    bound = sharp_mindeg_bound(spec)
    delta = degree_stats(g)[0]
    return LemmaFinding(
        "thm1.6-degree", delta >= bound, context={"delta": delta, "bound": bound}
    )


def lemma_suite(
    g: Graph,
    spec: CliqueVector,
    *,
    r: int | None = None,
    include_d: bool = False,
    workers: int = 1,
) -> list[LemmaFinding]:
    """All applicable structural checks for one co-critical graph.

    The chromatic bound runs when the Ramsey number for the clique vector is
    known (or supplied); the degree and neighborhood checks run whenever the
    sizes are ascending with all entries >= 3.
    """
    findings: list[LemmaFinding] = []
    if not spec.is_ascending() or any(t < 3 for t in spec.sizes):
        return findings
    known = known_ramsey(spec, r)
    if known is not None:
        findings.append(check_lemma_1_2(g, spec, known[0]))
    findings.append(mindeg_assert(g, spec))
    findings.extend(check_lemma_1_5(g, spec, MAXIMIZE_LAST, workers=workers))
    if include_d and spec.k >= 3:
        findings.extend(
            check_lemma_1_5(g, spec, MINIMIZE_FIRST, include_d=True, workers=workers)
        )
    return findings
