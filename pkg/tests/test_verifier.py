import io
import math

import numpy as np
import pytest

from equilines.designs import Eigenspace, project_srg
from equilines.srg import SrgParams as P
from equilines.srg import spectrum
from equilines.verifier import (
    AdjacencyParseError,
    AsymmetryError,
    NonBinaryEntryError,
    NonzeroDiagonalError,
    AdjacencyMatrix,
    builtin_graph,
    check_two_design,
    complement_graph,
    gram_by_projection,
    gram_by_seidel,
    gram_from_vectors,
    infer_srg,
    ingest_adjacency,
    projection_vectors,
)

BUILTINS = {
    "Cycle5": P(5, 2, 0, 1),
    "Petersen": P(10, 3, 0, 1),
    "Paley(9)": P(9, 4, 1, 2),
    "Paley(13)": P(13, 6, 2, 3),
    "Paley(17)": P(17, 8, 3, 4),
    "Triangular(5)": P(10, 6, 3, 4),
    "Lattice(3)": P(9, 4, 1, 2),
    "Complement(Petersen)": P(10, 6, 3, 4),
    "Triangular(7)": P(21, 10, 5, 4),
    "Lattice(4)": P(16, 6, 2, 2),
}


@pytest.mark.parametrize("name, params", BUILTINS.items())
def test_builtin_parameters(name, params):
    assert infer_srg(builtin_graph(name)) == params


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("which", list(Eigenspace))
def test_projection_oracle_equivalence(name, which):
    a = builtin_graph(name)
    p = infer_srg(a)
    exact = project_srg(p, which)
    report = gram_by_projection(a, which)
    sp = spectrum(p)
    assert report.numeric_rank == (sp.f if which is Eigenspace.R else sp.g)
    values = sorted(v for v, _ in report.distinct_offdiag)
    expected = sorted({float(exact.inner_a), float(exact.inner_b)})
    assert len(values) == len(expected)
    assert all(abs(x - y) <= 1e-9 for x, y in zip(values, expected))
    assert report.verdicts["psd"] and report.verdicts["tight_frame"] and report.verdicts["two_design"]


def test_projection_vectors_unit_rows():
    X = projection_vectors(builtin_graph("Petersen"), Eigenspace.R)
    assert X.shape == (10, 5)
    assert np.allclose(np.linalg.norm(X, axis=1), 1)


def test_seidel_cycle5_gives_etf_3_6():
    g = gram_by_seidel(builtin_graph("Cycle5"), 1 / math.sqrt(5))
    assert g.verdicts["psd"] and g.numeric_rank == 3 and g.verdicts["tight_frame"]
    assert g.verdicts["equiangular"]
    assert abs(g.frame_potential - 36 / 3) <= 1e-9
    # observed: this ETF is not centred, so it is not a 2-design
    assert g.centroid_norm > 0.1 and not g.verdicts["two_design"]


def test_seidel_paley9():
    g = gram_by_seidel(builtin_graph("Paley(9)"), 1 / 3)
    assert g.verdicts["psd"] and g.numeric_rank == 5 and g.verdicts["tight_frame"]
    assert abs(g.frame_potential - 100 / 5) <= 1e-9


def test_seidel_petersen_not_tight():
    g = gram_by_seidel(builtin_graph("Petersen"), 1 / 3)
    assert g.verdicts["psd"] and not g.verdicts["tight_frame"]


def test_seidel_uncone():
    g = gram_by_seidel(builtin_graph("Petersen"), 1 / 3, cone=False)
    assert g.size == 10


def test_not_strongly_regular():
    c6 = AdjacencyMatrix(np.roll(np.eye(6, dtype=int), 1, axis=1) + np.roll(np.eye(6, dtype=int), -1, axis=1))
    res = infer_srg(c6)
    assert not res and res.witness is not None


def test_ingest_fixtures(fixtures):
    a = ingest_adjacency((fixtures / "petersen.txt").read_bytes())
    assert a.order == 10 and set(a.entries.sum(axis=1)) == {3}
    assert infer_srg(ingest_adjacency(open(fixtures / "cycle5.txt"))) == P(5, 2, 0, 1)


def test_ingest_errors(fixtures):
    with pytest.raises(NonBinaryEntryError, match=r"\(1, 2\)"):
        ingest_adjacency((fixtures / "bad_entry.txt").read_text())
    with pytest.raises(AsymmetryError):
        ingest_adjacency((fixtures / "asymmetric.txt").read_text())
    with pytest.raises(NonzeroDiagonalError):
        ingest_adjacency("2\n1 1\n1 0\n")
    with pytest.raises(AdjacencyParseError):
        ingest_adjacency("3\n0 1\n1 0\n")
    with pytest.raises(AdjacencyParseError):
        ingest_adjacency(io.StringIO(""))


def test_builtin_errors():
    with pytest.raises(ValueError):
        builtin_graph("Paley(7)")
    with pytest.raises(ValueError):
        builtin_graph("Paley(25x)")
    with pytest.raises(ValueError):
        builtin_graph("Dodecahedron")


def test_complement_graph_round_trip():
    a = builtin_graph("Petersen")
    assert np.array_equal(complement_graph(complement_graph(a)).entries, a.entries)


def test_gram_from_vectors_and_design_check():
    # regular simplex in R^2: a tight frame centred at the origin
    X = np.array([[math.cos(t), math.sin(t)] for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)])
    g = gram_from_vectors(X)
    assert check_two_design(g)
    bad = gram_from_vectors(np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
    assert not bad.verdicts["tight_frame"]
