"""Commuting graphs of generalized dihedral groups D(G).

Closed-form invariants of the commuting graph, each paired with an exact
brute-force oracle. Reports are plain dicts with the same schema as the
``commgraph report --json`` output.
"""

import json

from ._core import (
    AbelianGroup,
    CommgraphError,
    CommutingGraph,
    chromatic_number_formula,
    chromatic_number_oracle,
    commuting_graph,
    degree_formula,
    detour_ecc_formula,
    detour_profile,
    detour_radius_diameter_formula,
    edge_count_formula,
    metric_dimension_formula,
    metric_dimension_oracle,
    mutation_targets,
    parse_group,
    resolving_polynomial_formula,
    resolving_polynomial_oracle,
    resolving_set_total_formula,
    structural_graph,
)
from . import _core

__all__ = [
    "AbelianGroup",
    "CommgraphError",
    "CommutingGraph",
    "chromatic_number_formula",
    "chromatic_number_oracle",
    "commuting_graph",
    "degree_formula",
    "detour_ecc_formula",
    "detour_profile",
    "detour_radius_diameter_formula",
    "edge_count_formula",
    "metric_dimension_formula",
    "metric_dimension_oracle",
    "mutation_targets",
    "parse_group",
    "report",
    "resolving_polynomial_formula",
    "resolving_polynomial_oracle",
    "resolving_set_total_formula",
    "structural_graph",
    "sweep",
]


def report(spec, *, skip_oracles=False, max_detour_vertices=20, max_resolving_vertices=16,
           max_chromatic_vertices=24, max_graph_vertices=4096, inject=""):
    """Formula-vs-oracle report for D(G), G given as e.g. ``"Z2xZ4"``."""
    return json.loads(_core.report_json(
        spec, skip_oracles, max_detour_vertices, max_resolving_vertices,
        max_chromatic_vertices, max_graph_vertices, inject))


def sweep(family, max_order=None, *, skip_oracles=False, inject="", threads=0):
    """One report per group. ``family`` is ``"all-abelian"`` or ``"Z3,Z4,Z6"``."""
    return json.loads(_core.sweep_json(family, max_order, skip_oracles, inject, threads))
