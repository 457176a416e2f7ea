"""Approximate distance oracles: Thorup-Zwick and spanner-based composites."""

from ._core import (
    INF_DIST,
    AuditReport,
    Graph,
    Oracle,
    audit,
    build_near_linear,
    build_small_k,
    build_tz,
    build_warmup,
    exact_distances,
    generate,
    load_graph,
    load_oracle,
    spanner_edges,
)

__all__ = [
    "INF_DIST",
    "AuditReport",
    "Graph",
    "Oracle",
    "audit",
    "build_near_linear",
    "build_small_k",
    "build_tz",
    "build_warmup",
    "exact_distances",
    "generate",
    "load_graph",
    "load_oracle",
    "spanner_edges",
]
