"""Graph potentials: periods, polytopes and verification.

Numbers that can grow large (periods, coefficients) are returned as Python ints;
reports are plain dicts with the same layout as the command-line JSON output.
"""

import json

from . import _core
from ._core import (
    Graph,
    GraphpotError,
    PreconditionError,
    RangeError,
    StructuralError,
    enumerate_graphs,
    graph_from_json,
    named_graph,
)

__all__ = [
    "Graph",
    "GraphpotError",
    "PreconditionError",
    "RangeError",
    "StructuralError",
    "canonical_id",
    "conifold_value",
    "enumerate_graphs",
    "export_text",
    "graph_from_json",
    "is_terminal",
    "lattice_points",
    "manon",
    "mutate",
    "named_graph",
    "period",
    "periods",
    "polytope",
    "potential",
    "triangulate",
    "verify",
]


def canonical_id(graph, coloring=None, parity=1):
    return _core.canonical_id(graph, coloring, parity).hex()


def mutate(graph, edge, coloring=None, parity=1):
    """Elementary transformation along `edge`; returns (graph, coloring)."""
    return _core.mutate(graph, edge, coloring, parity)


def potential(graph, coloring=None, parity=1):
    return json.loads(_core.potential_json(graph, coloring, parity))


def conifold_value(graph, coloring=None, parity=1):
    return int(_core.conifold_value(graph, coloring, parity))


def period(graph, n, coloring=None, parity=1, engine="contract"):
    """Constant term of W^n."""
    return int(_core.period(graph, n, coloring, parity, engine))


def periods(graph, max_n, coloring=None, parity=1, engine="contract"):
    """pi_0..pi_max_n as ints."""
    seq = json.loads(_core.periods_json(graph, max_n, coloring, parity, engine))
    return [int(x) for x in seq["pi"]]


def polytope(graph, coloring=None, parity=1):
    return json.loads(_core.polytope_json(graph, coloring, parity))


def lattice_points(graph, coloring=None, parity=1):
    return json.loads(_core.lattice_points_json(graph, coloring, parity))


def is_terminal(graph, coloring=None, parity=1):
    return json.loads(_core.terminal_json(graph, coloring, parity))


def triangulate(graph, coloring=None, parity=1, seed=1, **budget):
    return json.loads(_core.triangulation_json(graph, coloring, parity, seed, **budget))


def manon(graph):
    return json.loads(_core.manon_json(graph))


def export_text(graph, coloring=None, parity=1):
    return _core.export_text(graph, coloring, parity)


def verify(scope="quick", jobs=1):
    return json.loads(_core.verify_json(scope, jobs))
