"""Exact (co)homology of hypergraphs under exterior-algebra operators.

Rationals are returned as fractions.Fraction; inputs may be Fraction, int or
strings such as "-2/3". Paths are dicts from vertex-index tuples to
coefficients.
"""

from ._hyperdiff import (
    CodiffForm,
    DiffForm,
    HyperdiffError,
    Hypergraph,
    VertexSet,
    adjoint,
    apply_codiff,
    apply_diff,
    betti,
    boundary_matrix,
    cobetti,
    coboundary_matrix,
    complement,
    complete,
    complete_uniform,
    cosimplicial_closure,
    degree_decompose,
    induced_comap,
    induced_map,
    load_complex,
    load_operator,
    project_sorted,
    run_cli,
    simplicial_closure,
)

__all__ = [
    "CodiffForm",
    "DiffForm",
    "HyperdiffError",
    "Hypergraph",
    "VertexSet",
    "adjoint",
    "apply_codiff",
    "apply_diff",
    "betti",
    "boundary_matrix",
    "cobetti",
    "coboundary_matrix",
    "complement",
    "complete",
    "complete_uniform",
    "cosimplicial_closure",
    "degree_decompose",
    "induced_comap",
    "induced_map",
    "load_complex",
    "load_operator",
    "project_sorted",
    "run_cli",
    "simplicial_closure",
]
