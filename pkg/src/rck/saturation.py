"""Clique freeness, K_t-saturation, and the saturated-graph degree dichotomy."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph, add_edge, degree_stats, has_clique


@dataclass(frozen=True)
class SaturationReport:
    """Verdict bundle for one (graph, t) saturation query.

    violating_non_edge is the least non-edge whose addition keeps the graph
    K_t-free; it is present exactly when the graph is free but unsaturated.
    Complete inputs have no non-edges and are flagged vacuously saturated
    when K_t-free.  hajnal_holds records the dichotomy "max degree n-1 or
    min degree >= 2(t-2)" and is vacuously true for unsaturated graphs.
    """

    t: int
    is_free: bool
    is_saturated: bool
    violating_non_edge: Edge | None
    hajnal_holds: bool
    vacuously_complete: bool = False


def is_saturated(g: Graph, t: int) -> SaturationReport:
    """Definitional saturation check: test every non-edge of g."""
    if t < 2:
        raise ValueError("clique target must be at least 2")
    free = not has_clique(g, t)
    non_edges = g.non_edges()
    if not non_edges:
        saturated = free
        return SaturationReport(
            t, free, saturated, None, _hajnal(g, t, saturated), vacuously_complete=True
        )
    if not free:
        return SaturationReport(t, False, False, None, True)
    violating = None
    for e in non_edges:
        if not has_clique(add_edge(g, e), t):
            violating = e
            break
    saturated = violating is None
    return SaturationReport(t, True, saturated, violating, _hajnal(g, t, saturated))


def _hajnal(g: Graph, t: int, saturated: bool) -> bool:
    if not saturated:
        return True
    delta, big_delta, _ = degree_stats(g)
    return big_delta == g.n - 1 or delta >= 2 * (t - 2)


def check_hajnal(g: Graph, t: int) -> bool:
    """Degree dichotomy for a K_t-saturated graph.

    A False return on a genuinely saturated input signals a bug somewhere:
    the dichotomy is a theorem about saturated graphs.
    """
    report = is_saturated(g, t)
    if not report.is_saturated:
        raise ValueError("check_hajnal requires a K_t-saturated graph")
    delta, big_delta, _ = degree_stats(g)
    return big_delta == g.n - 1 or delta >= 2 * (t - 2)
