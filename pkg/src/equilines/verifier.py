"""Floating-point checks of explicit constructions built from adjacency matrices.

Results here are numerical evidence only and are never mixed into exact
certificates.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import asdict, dataclass, field
from typing import IO, Union

import numpy as np

from .designs import Eigenspace
from .srg import SrgParams, spectrum

__all__ = [
    "AdjacencyError",
    "AdjacencyParseError",
    "AsymmetryError",
    "NonzeroDiagonalError",
    "NonBinaryEntryError",
    "AdjacencyMatrix",
    "NotStronglyRegular",
    "GramReport",
    "ingest_adjacency",
    "builtin_graph",
    "cycle5",
    "petersen",
    "paley",
    "triangular",
    "lattice",
    "complement_graph",
    "infer_srg",
    "projection_vectors",
    "gram_by_projection",
    "gram_by_seidel",
    "gram_from_vectors",
    "check_two_design",
]

RANK_TOL = 1e-8
GAP_TOL = 1e-6
PSD_TOL = 1e-8
TIGHT_TOL = 1e-9
CENTROID_TOL = 1e-9


class AdjacencyError(ValueError):
    pass


class AdjacencyParseError(AdjacencyError):
    pass


class AsymmetryError(AdjacencyError):
    pass


class NonzeroDiagonalError(AdjacencyError):
    pass


class NonBinaryEntryError(AdjacencyError):
    pass


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    entries: np.ndarray
    name: str = ""

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise AdjacencyParseError(f"adjacency must be a nonempty square array, got shape {a.shape}")
        bad = np.argwhere((a != 0) & (a != 1))
        if len(bad):
            i, j = bad[0]
            raise NonBinaryEntryError(f"entry ({i}, {j}) is {a[i, j]}, expected 0 or 1")
        diag = np.flatnonzero(np.diag(a))
        if len(diag):
            i = diag[0]
            raise NonzeroDiagonalError(f"diagonal entry ({i}, {i}) is nonzero")
        asym = np.argwhere(a != a.T)
        if len(asym):
            i, j = asym[0]
            raise AsymmetryError(f"entry ({i}, {j}) differs from entry ({j}, {i})")
        object.__setattr__(self, "entries", a.astype(np.int64))

    @property
    def order(self) -> int:
        return self.entries.shape[0]


def ingest_adjacency(source: Union[bytes, str, IO]) -> AdjacencyMatrix:
    """Read ``v`` then ``v`` rows of ``v`` 0/1 tokens; ``#`` lines are comments."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows = []
    for raw in io.StringIO(text):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise AdjacencyParseError("empty adjacency file")
    if len(rows[0]) != 1:
        raise AdjacencyParseError("first line must hold the vertex count")
    try:
        v = int(rows[0][0])
    except ValueError:
        raise AdjacencyParseError(f"bad vertex count {rows[0][0]!r}") from None
    body = rows[1:]
    if v < 1 or len(body) != v:
        raise AdjacencyParseError(f"expected {v} matrix rows, found {len(body)}")
    values = np.zeros((v, v), dtype=np.int64)
    for i, row in enumerate(body):
        if len(row) != v:
            raise AdjacencyParseError(f"row {i} has {len(row)} entries, expected {v}")
        for j, tok in enumerate(row):
            try:
                values[i, j] = int(tok)
            except ValueError:
                raise AdjacencyParseError(f"entry ({i}, {j}) is not an integer: {tok!r}") from None
    return AdjacencyMatrix(values)


# --- builtin graphs -----------------------------------------------------------


def _from_edges(v: int, edges, name: str) -> AdjacencyMatrix:
    a = np.zeros((v, v), dtype=np.int64)
    for i, j in edges:
        a[i, j] = a[j, i] = 1
    return AdjacencyMatrix(a, name)


def cycle5() -> AdjacencyMatrix:
    return _from_edges(5, [(i, (i + 1) % 5) for i in range(5)], "Cycle5")


def petersen() -> AdjacencyMatrix:
    # Kneser graph K(5,2): 2-subsets adjacent when disjoint
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return _from_edges(10, edges, "Petersen")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def _field_elements(q: int):
    """Elements, subtraction, and squaring for GF(p) or GF(p**2), p odd."""
    if _is_prime(q):
        return list(range(q)), lambda x, y: (x - y) % q, lambda x: x * x % q
    p = int(round(q**0.5))
    if p * p != q or not _is_prime(p) or p == 2:
        raise ValueError(f"Paley graph needs an odd prime or odd prime square, got {q}")
    # GF(p^2) = GF(p)[w] / (w^2 - g) with g a nonresidue
    g = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)
    elems = [(a, b) for a in range(p) for b in range(p)]

    def sub(x, y):
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def sq(x):
        a, b = x
        return ((a * a + g * b * b) % p, (2 * a * b) % p)

    return elems, sub, sq


def paley(q: int) -> AdjacencyMatrix:
    if q % 4 != 1:
        raise ValueError(f"Paley graph needs q = 1 mod 4, got {q}")
    elems, sub, sq = _field_elements(q)
    zero = elems[0]
    squares = {sq(x) for x in elems if x != zero}
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(q), 2)
        if sub(elems[i], elems[j]) in squares
    ]
    return _from_edges(q, edges, f"Paley({q})")


def triangular(m: int) -> AdjacencyMatrix:
    if m < 4:
        raise ValueError("triangular graph needs m >= 4")
    pairs = list(itertools.combinations(range(m), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if set(pairs[i]) & set(pairs[j])
    ]
    return _from_edges(len(pairs), edges, f"Triangular({m})")


def lattice(m: int) -> AdjacencyMatrix:
    if m < 2:
        raise ValueError("lattice graph needs m >= 2")
    cells = [(i, j) for i in range(m) for j in range(m)]
    edges = [
        (x, y)
        for x, y in itertools.combinations(range(len(cells)), 2)
        if (cells[x][0] == cells[y][0]) != (cells[x][1] == cells[y][1])
    ]
    return _from_edges(m * m, edges, f"Lattice({m})")


def complement_graph(a: AdjacencyMatrix) -> AdjacencyMatrix:
    v = a.order
    return AdjacencyMatrix(1 - np.eye(v, dtype=np.int64) - a.entries, f"Complement({a.name})")


def builtin_graph(name: str) -> AdjacencyMatrix:
    """Build a fixture graph from a name such as ``"Paley(13)"`` or ``"Complement(Petersen)"``."""
    text = name.strip()
    head, _, rest = text.partition("(")
    head = head.strip().lower()
    arg = rest[:-1].strip() if rest.endswith(")") else rest.strip()
    if head == "cycle5":
        return cycle5()
    if head == "petersen":
        return petersen()
    if head == "complement":
        return complement_graph(builtin_graph(arg))
    makers = {"paley": paley, "triangular": triangular, "lattice": lattice}
    if head in makers and arg:
        try:
            value = int(arg)
        except ValueError:
            raise ValueError(f"bad graph parameter in {name!r}") from None
        return makers[head](value)
    raise ValueError(f"unknown builtin graph {name!r}")


# --- SRG inference ------------------------------------------------------------


@dataclass(frozen=True)
class NotStronglyRegular:
    reason: str
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return False


def infer_srg(a: AdjacencyMatrix) -> SrgParams | NotStronglyRegular:
    A = a.entries
    v = a.order
    degrees = A.sum(axis=1)
    if np.any(degrees != degrees[0]):
        i = int(np.flatnonzero(degrees != degrees[0])[0])
        return NotStronglyRegular("not regular", (0, i))
    k = int(degrees[0])
    A2 = A @ A
    lam = mu = None
    for i in range(v):
        for j in range(i + 1, v):
            common = int(A2[i, j])
            if A[i, j]:
                if lam is None:
                    lam = common
                elif common != lam:
                    return NotStronglyRegular("adjacent pairs disagree on common neighbours", (i, j))
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return NotStronglyRegular("non-adjacent pairs disagree on common neighbours", (i, j))
    if lam is None or mu is None:
        return NotStronglyRegular("complete or empty graph")
    return SrgParams(v, k, lam, mu)


# --- Gram reports -------------------------------------------------------------


@dataclass
class GramReport:
    size: int
    ambient: int
    numeric_rank: int
    min_eigenvalue: float
    distinct_offdiag: list[tuple[float, int]]
    frame_potential: float
    centroid_norm: float
    verdicts: dict[str, bool] = field(default_factory=dict)
    label: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        d["distinct_offdiag"] = [{"value": v, "count": c} for v, c in self.distinct_offdiag]
        return d


def _value_classes(values: np.ndarray) -> list[tuple[float, int]]:
    if values.size == 0:
        return []
    ordered = np.sort(values)
    breaks = np.flatnonzero(np.diff(ordered) > GAP_TOL) + 1
    return [(float(chunk.mean()), int(chunk.size)) for chunk in np.split(ordered, breaks)]


def _report(gram: np.ndarray, ambient: int | None = None, label: str = "") -> GramReport:
    M = gram.shape[0]
    eig = np.linalg.eigvalsh(gram)
    top = max(float(eig[-1]), 0.0)
    rank = int(np.sum(eig > RANK_TOL * top)) if top > 0 else 0
    iu = np.triu_indices(M, 1)
    classes = _value_classes(gram[iu])
    fp = float(np.sum(gram * gram))
    centroid = float(gram.sum()) / (M * M)
    mags = [abs(v) for v, _ in classes]
    verdicts = {
        "psd": bool(eig[0] >= -PSD_TOL * top),
        "two_distance": len(classes) == 2,
        "equiangular": bool(classes) and max(mags) - min(mags) <= GAP_TOL,
        "tight_frame": rank > 0 and abs(fp - M * M / rank) <= TIGHT_TOL * max(1.0, M * M / rank),
    }
    verdicts["two_design"] = verdicts["tight_frame"] and abs(centroid) <= CENTROID_TOL
    return GramReport(
        size=M,
        ambient=rank if ambient is None else ambient,
        numeric_rank=rank,
        min_eigenvalue=float(eig[0]),
        distinct_offdiag=classes,
        frame_potential=fp,
        centroid_norm=centroid,
        verdicts=verdicts,
        label=label,
    )


def projection_vectors(a: AdjacencyMatrix, which: Eigenspace) -> np.ndarray:
    """Rows are the unit-normalized eigenspace projections of the vertices."""
    p = infer_srg(a)
    if not p:
        raise ValueError(f"input is not strongly regular: {p.reason}")
    sp = spectrum(p)
    theta = float(sp.r if which is Eigenspace.R else sp.s)
    mult = sp.f if which is Eigenspace.R else sp.g
    eigvals, eigvecs = np.linalg.eigh(a.entries.astype(float))
    scale = max(1.0, float(p.k))
    sel = np.abs(eigvals - theta) <= 1e-6 * scale
    if int(sel.sum()) != mult:
        raise ValueError(
            f"eigenvalue {theta:.6g} found {int(sel.sum())} times, expected multiplicity {mult}"
        )
    X = eigvecs[:, sel]
    return X / np.linalg.norm(X, axis=1, keepdims=True)


def gram_by_projection(a: AdjacencyMatrix, which: Eigenspace) -> GramReport:
    X = projection_vectors(a, which)
    p = infer_srg(a)
    sp = spectrum(p)
    dim = sp.f if which is Eigenspace.R else sp.g
    return _report(X @ X.T, ambient=dim, label=f"projection {which.value} of {p}")


def gram_by_seidel(a: AdjacencyMatrix, c: float, cone: bool = True) -> GramReport:
    """Gram matrix ``I + c*(J - I - 2A)`` of an equiangular system.

    With ``cone`` the graph first gains an isolated vertex, so a graph on M-1
    vertices yields M vectors (the SRG-to-ETF direction of the Waldron
    correspondence).
    """
    c = float(c)
    if not 0 < c < 1:
        raise ValueError(f"angle must lie in (0, 1), got {c}")
    A = a.entries.astype(float)
    if cone:
        A = np.pad(A, ((1, 0), (1, 0)))
    M = A.shape[0]
    S = np.ones((M, M)) - np.eye(M) - 2 * A
    G = np.eye(M) + c * S
    return _report(G, label=f"seidel c={c:.12g}{' coned' if cone else ''}")


def gram_from_vectors(X) -> GramReport:
    X = np.asarray(X, dtype=float)
    X = X / np.linalg.norm(X, axis=1, keepdims=True)
    return _report(X @ X.T, label="vectors")


def check_two_design(g: GramReport) -> bool:
    if not g.verdicts.get("psd", False):
        raise ValueError("two-design check needs a positive semidefinite Gram matrix")
    return g.verdicts["tight_frame"] and abs(g.centroid_norm) <= CENTROID_TOL
