import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import hyperdiff as hd

FIXTURES = Path(os.environ.get("HYPERDIFF_FIXTURES_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def triangle_boundary():
    vs = hd.VertexSet(["v0", "v1", "v2"])
    return hd.Hypergraph(vs, [["v0"], ["v1"], ["v2"], ["v0", "v1"], ["v0", "v2"], ["v1", "v2"]])


def test_hypergraph_basics():
    K = triangle_boundary()
    assert K.is_simplicial()
    assert not K.is_cosimplicial()
    assert K.counts_by_dimension == [3, 3]
    L = hd.complement(hd.complete(K.vertex_set), K)
    assert L.edges == [["v0", "v1", "v2"]]
    assert L.is_cosimplicial()
    assert len(hd.simplicial_closure(L)) == 7


def test_errors_carry_their_kind():
    vs = hd.VertexSet(["a", "b"])
    with pytest.raises(hd.HyperdiffError) as info:
        hd.Hypergraph(vs, [["a", "c"]])
    assert info.value.kind == "UnknownVertex"
    with pytest.raises(ValueError):
        hd.Hypergraph(vs, [["a", "a"]])


def test_weighted_boundary_homology():
    K = triangle_boundary()
    alpha = hd.DiffForm.weighted([1, Fraction(1, 2), "-3"])
    assert [hd.betti(K, alpha, d)["dimension"] for d in (0, 1)] == [1, 1]
    zero = hd.DiffForm.weighted([0, 0, 0])
    assert [hd.betti(K, zero, d)["dimension"] for d in (0, 1)] == [3, 3]
    b = hd.boundary_matrix(K, alpha, 1)
    assert len(b) == 3 and len(b[0]) == 3
    assert all(isinstance(x, Fraction) for row in b for x in row)


def test_operators_on_paths():
    partial0 = hd.DiffForm.generator(0)
    assert hd.apply_diff(partial0, {(0, 1): 1}) == {(1,): Fraction(1)}
    d2 = hd.CodiffForm.generator(2)
    assert hd.project_sorted(hd.apply_codiff(d2, {(0, 1): 1})) == {(0, 1, 2): Fraction(1)}
    alpha = hd.DiffForm(3)
    alpha.add_monomial([0, 1, 2], Fraction(2, 3))
    omega = hd.adjoint(alpha)
    assert omega.terms == {(0, 1, 2): Fraction(-2, 3)}
    assert hd.adjoint(omega) == alpha


def test_full_simplex_grade_three():
    delta = hd.load_complex(str(FIXTURES / "full_simplex_4.json"))
    alpha = hd.load_operator(str(FIXTURES / "alpha_grade3_ones.json"), delta.vertex_set)
    assert isinstance(alpha, hd.DiffForm)
    assert [hd.betti(delta, alpha, d)["dimension"] for d in range(4)] == [3, 6, 4, 0]
    omega = hd.adjoint(alpha)
    assert [hd.cobetti(delta, omega, d)["dimension"] for d in range(4)] == [3, 6, 4, 0]


def test_induced_maps():
    K = triangle_boundary()
    alpha = hd.DiffForm.weighted([1, 1, 1])
    beta = hd.DiffForm(2)
    beta.add_monomial([0, 1], 1)
    assert hd.induced_map(K, alpha, beta, 1)["rank"] == 0
    ident = hd.induced_map(K, alpha, hd.DiffForm.scalar(1), 1)
    assert ident["matrix"] == [[Fraction(1)]]


def test_cli_round_trip():
    code, out, err = hd.run_cli(["betti", str(FIXTURES / "triangle_boundary.json"),
                                 str(FIXTURES / "alpha_weighted_ones.json")])
    assert code == 0, err
    report = json.loads(out)
    assert [d["betti"] for d in report["degrees"]] == [1, 1]
    code, _, _ = hd.run_cli(["validate", str(FIXTURES / "triangle_boundary_as_cosimplicial.json")])
    assert code == 2
