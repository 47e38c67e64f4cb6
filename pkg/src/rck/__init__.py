"""Exact arrowing, clique saturation, and co-criticality toolkit for small graphs."""

from .arrowing import (
    ArrowVerdict,
    CliqueVector,
    EdgeColoring,
    NodeLimitExceeded,
    SearchStats,
    arrows,
    enumerate_critical_colorings,
    extremal_critical_coloring,
    is_critical,
    parse_coloring,
    serialize_coloring,
    symmetry_breaking_seed,
)
from .canonical import canonical_form, canonical_permutation
from .cocritical import (
    CocriticalReport,
    LemmaFinding,
    check_lemma_1_2,
    check_lemma_1_5,
    is_cocritical,
    is_minimal_cocritical,
    lemma_suite,
    mindeg_assert,
)
from .constructions import (
    RamseyFact,
    construction_by_name,
    hanson_toft,
    hanson_toft_edge_count,
    k6_minus,
    known_ramsey,
    mindeg_bound,
    ramsey_fact,
    ramsey_lower_bound,
    sharp_mindeg_bound,
)
from .enumerate_graphs import all_graphs, graphs_up_to
from .graph6 import iter_graph6, parse_graph6, to_graph6
from .graphs import (
    Edge,
    Graph,
    VertexSet,
    add_edge,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    degree_stats,
    delete_vertex,
    empty_graph,
    from_edges,
    has_clique,
    induced_subgraph,
    is_complete_multipartite,
    join,
    path_graph,
    relabel,
    remove_edge,
)
from .saturation import SaturationReport, check_hajnal, is_saturated

__all__ = [
    "ArrowVerdict",
    "CliqueVector",
    "CocriticalReport",
    "Edge",
    "EdgeColoring",
    "Graph",
    "LemmaFinding",
    "NodeLimitExceeded",
    "RamseyFact",
    "SaturationReport",
    "SearchStats",
    "VertexSet",
    "add_edge",
    "all_graphs",
    "arrows",
    "canonical_form",
    "canonical_permutation",
    "check_hajnal",
    "check_lemma_1_2",
    "check_lemma_1_5",
    "chromatic_number",
    "clique_number",
    "complement",
    "complete_graph",
    "complete_multipartite_graph",
    "construction_by_name",
    "cycle_graph",
    "degree_stats",
    "delete_vertex",
    "empty_graph",
    "enumerate_critical_colorings",
    "extremal_critical_coloring",
    "from_edges",
    "graphs_up_to",
    "hanson_toft",
    "hanson_toft_edge_count",
    "has_clique",
    "induced_subgraph",
    "is_cocritical",
    "is_complete_multipartite",
    "is_critical",
    "is_minimal_cocritical",
    "is_saturated",
    "iter_graph6",
    "join",
    "k6_minus",
    "known_ramsey",
    "lemma_suite",
    "mindeg_assert",
    "mindeg_bound",
    "parse_coloring",
    "parse_graph6",
    "path_graph",
    "ramsey_fact",
    "ramsey_lower_bound",
    "relabel",
    "remove_edge",
    "serialize_coloring",
    "sharp_mindeg_bound",
    "symmetry_breaking_seed",
    "to_graph6",
]
