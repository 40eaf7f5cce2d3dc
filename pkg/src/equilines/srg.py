"""Strongly regular graph parameter algebra and the known-status database."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple

from .exact import Exact, QuadraticSurd, integer_sqrt, simplify, sqrt_of_rational
from .frames import EtfSpec

__all__ = [
    "SrgParams",
    "SrgSpectrum",
    "SpectrumError",
    "Status",
    "SrgRecord",
    "SrgDatabase",
    "WaldronPair",
    "NonIntegral",
    "spectrum",
    "feasible",
    "complement",
    "waldron_srg_of_etf",
    "is_regular_two_graph",
    "fjg_descent",
    "fjg_ascend",
    "db_lookup",
    "default_database",
]


@dataclass(frozen=True, order=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        for name in ("v", "k", "lam", "mu"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"srg parameter {name} must be an integer")

    def range_failures(self) -> list[str]:
        v, k, lam, mu = self.astuple()
        bad = []
        if v < 1:
            bad.append("v >= 1")
        if not 0 <= k <= v - 1:
            bad.append("0 <= k <= v-1")
        if k >= 1 and not 0 <= lam <= k - 1:
            bad.append("0 <= lambda <= k-1")
        if not 0 <= mu <= k:
            bad.append("0 <= mu <= k")
        return bad

    @property
    def primitive(self) -> bool:
        """Connected and not complete multipartite."""
        return 0 < self.mu < self.k

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    @classmethod
    def parse(cls, text: str) -> SrgParams:
        body = text.strip()
        if body.startswith("srg"):
            body = body[3:]
        parts = body.strip("() ").replace(",", " ").split()
        if len(parts) != 4:
            raise ValueError(f"expected four srg parameters, got {text!r}")
        return cls(*(int(x) for x in parts))

    def __str__(self):
        return f"srg({self.v},{self.k},{self.lam},{self.mu})"


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class SrgSpectrum:
    r: Exact
    s: Exact
    f: int
    g: int
    discriminant: int


class _Eigen(NamedTuple):
    r: Exact
    s: Exact
    f: Exact
    g: Exact
    discriminant: int
    conference: bool


def _eigen(p: SrgParams) -> _Eigen:
    # multiplicities may come out non-integral or irrational here; callers decide
    v, k, lam, mu = p.astuple()
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = sqrt_of_rational(disc)
    r = simplify((lam - mu + root) / 2)
    s = simplify((lam - mu - root) / 2)
    numer = 2 * k + (v - 1) * (lam - mu)
    if numer == 0:
        half = Fraction(v - 1, 2)
        return _Eigen(r, s, half, half, disc, True)
    shift = QuadraticSurd(numer) / root
    f = simplify((v - 1 - shift) / 2)
    g = simplify((v - 1 + shift) / 2)
    return _Eigen(r, s, f, g, disc, False)


def _as_positive_int(x) -> int | None:
    x = simplify(x)
    if isinstance(x, Fraction) and x.denominator == 1 and x > 0:
        return int(x)
    return None


def spectrum(p: SrgParams) -> SrgSpectrum:
    """Nontrivial eigenvalues r > 0 > s with multiplicities f (of r) and g (of s)."""
    if p.range_failures():
        raise SpectrumError(f"{p} is out of range: {p.range_failures()}")
    if p.mu >= p.k:
        raise SpectrumError(f"{p} is complete multipartite (mu >= k)")
    if p.mu == 0:
        raise SpectrumError(f"{p} is disconnected (mu = 0)")
    e = _eigen(p)
    f, g = _as_positive_int(e.f), _as_positive_int(e.g)
    if f is None or g is None:
        raise SpectrumError(f"{p} has multiplicities f={e.f}, g={e.g}, not positive integers")
    return SrgSpectrum(e.r, e.s, f, g, e.discriminant)


def feasible(p: SrgParams) -> tuple[bool, list[str]]:
    """Run the standard necessary conditions in order.

    Later conditions presuppose earlier ones, so the battery stops at the
    first structural failure (range, counting identity, integrality).
    """
    bad = p.range_failures()
    if bad:
        return False, ["range: " + "; ".join(bad)]
    v, k, lam, mu = p.astuple()
    if k * (k - lam - 1) != (v - k - 1) * mu:
        return False, ["counting identity"]
    if mu == 0:
        # disjoint union of cliques K_{k+1}
        ok = lam == k - 1 and v % (k + 1) == 0
        return ok, [] if ok else ["imprimitive structure"]
    if mu == k:
        # complete multipartite: the complement is a union of cliques
        return feasible(complement(p))

    e = _eigen(p)
    if e.conference:
        if v % 2 == 0:
            return False, ["multiplicity integrality"]
    elif _as_positive_int(e.f) is None or _as_positive_int(e.g) is None:
        return False, ["multiplicity integrality"]

    failures = []
    r, s, f, g = e.r, e.s, simplify(e.f), simplify(e.g)
    krein1 = (r + 1) * (k + r + 2 * r * s) <= (k + r) * (s + 1) * (s + 1)
    krein2 = (s + 1) * (k + s + 2 * r * s) <= (k + s) * (r + 1) * (r + 1)
    if not krein1:
        failures.append("Krein condition 1")
    if not krein2:
        failures.append("Krein condition 2")
    if v > f * (f + 3) / 2:
        failures.append("absolute bound (f)")
    if v > g * (g + 3) / 2:
        failures.append("absolute bound (g)")
    return not failures, failures


def complement(p: SrgParams) -> SrgParams:
    v, k, lam, mu = p.astuple()
    q = SrgParams(v, v - k - 1, v - 2 - 2 * k + mu, v - 2 * k + lam)
    if q.range_failures():
        raise ValueError(f"complement of {p} is out of range: {q}")
    return q


class WaldronPair(NamedTuple):
    primary: SrgParams
    complementary: SrgParams


@dataclass(frozen=True)
class NonIntegral:
    """No graph can match: the Waldron degree or its derived parameters fail."""

    k: Exact
    reason: str

    def __str__(self):
        return f"NonIntegral(k={self.k}: {self.reason})"


def waldron_srg_of_etf(e: EtfSpec) -> WaldronPair | NonIntegral:
    """Graph on M-1 vertices equivalent to ETF(n, M) when M > n+1."""
    n, M = e.dimension, e.count
    if M <= n + 1:
        raise ValueError(f"Waldron correspondence needs M > n+1, got ({n}, {M})")
    ratio = Fraction(n * (M - 1), M - n)
    coeff = 1 - Fraction(M, 2 * n)
    k = simplify(Fraction(M, 2) - 1 + coeff * sqrt_of_rational(ratio))
    if not isinstance(k, Fraction):
        return NonIntegral(k, "degree is irrational")
    if k.denominator != 1 or k < 0:
        return NonIntegral(k, "degree is not a nonnegative integer")
    k = int(k)
    if (3 * k - M) % 2 or k % 2:
        return NonIntegral(Fraction(k), "lambda or mu is not an integer")
    if 3 * k - M < 0:
        return NonIntegral(Fraction(k), "lambda is negative")
    primary = SrgParams(M - 1, k, (3 * k - M) // 2, k // 2)
    if primary.range_failures():
        return NonIntegral(Fraction(k), f"{primary} is out of range")
    try:
        other = complement(primary)
    except ValueError:
        return NonIntegral(Fraction(k), f"complement of {primary} is out of range")
    return WaldronPair(primary, other)


def is_regular_two_graph(p: SrgParams) -> bool:
    return p.v == 4 * p.k - 2 * p.lam - 2 * p.mu


def _integral(x: Fraction) -> int | None:
    return int(x) if x.denominator == 1 else None


def fjg_descent(p: SrgParams) -> SrgParams:
    """Parameters on v-1 vertices forced by a graph with v = 4k - 2*lambda - 2*mu."""
    v, k, lam, mu = p.astuple()
    if not is_regular_two_graph(p):
        raise ValueError(f"{p} fails v = 4k - 2*lambda - 2*mu")
    d = v - 2 * k
    if d - 1 == 0:
        raise ValueError(f"{p} has v - 2k - 1 = 0")
    ratio = Fraction(d, d - 1)
    k2 = k * ratio
    lam2 = Fraction(3 * k - v, 2) + Fraction(3 * k, 2 * (d - 1))
    mu2 = Fraction(k, 2) * ratio
    vals = [_integral(x) for x in (k2, lam2, mu2)]
    if None in vals:
        raise ValueError(f"descent of {p} is not integral: ({v - 1}, {k2}, {lam2}, {mu2})")
    q = SrgParams(v - 1, *vals)
    if q.range_failures():
        raise ValueError(f"descent of {p} is out of range: {q}")
    return q


def fjg_ascend(target: SrgParams) -> list[SrgParams]:
    """All integral sources on target.v + 1 vertices that descend to target."""
    v, k1 = target.v + 1, target.k
    b = v - 2 * k1
    disc = b * b + 8 * k1
    root, exact = integer_sqrt(disc) if disc >= 0 else (0, False)
    if not exact:
        return []
    found = []
    for twice_d in sorted({b + root, b - root}, reverse=True):
        if twice_d % 2:
            continue
        d = twice_d // 2
        if (v - d) % 2 or d == 1:
            continue
        k = (v - d) // 2
        mu = Fraction(k * (d - 2), 2 * (d - 1))
        lam = 2 * k - Fraction(v, 2) - mu
        if mu.denominator != 1 or lam.denominator != 1:
            continue
        source = SrgParams(v, k, int(lam), int(mu))
        if source.range_failures():
            continue
        try:
            if fjg_descent(source) == target:
                found.append(source)
        except ValueError:
            continue
    return found


# --- database ---------------------------------------------------------------


class Status(enum.Enum):
    EXISTS = "E"
    NOT_EXISTS = "N"
    OPEN = "O"


@dataclass(frozen=True)
class SrgRecord:
    params: SrgParams
    status: Status
    source: str = ""
    via_complement: bool = False

    def __post_init__(self):
        if self.status is not Status.OPEN and not self.source:
            raise ValueError(f"record for {self.params} needs a source")


class SrgDatabase:
    """Immutable table of externally sourced existence facts."""

    def __init__(self, records: Iterable[SrgRecord] = ()):
        self._records: dict[SrgParams, SrgRecord] = {}
        for rec in records:
            if rec.params in self._records:
                raise ValueError(f"duplicate database entry for {rec.params}")
            self._records[rec.params] = rec

    @classmethod
    def from_text(cls, text: str) -> SrgDatabase:
        records = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split(None, 5)
            if len(fields) < 5:
                raise ValueError(f"database line {lineno}: expected 'v k lambda mu status source'")
            try:
                params = SrgParams(*(int(x) for x in fields[:4]))
                status = Status(fields[4])
            except ValueError as exc:
                raise ValueError(f"database line {lineno}: {exc}") from None
            source = fields[5].strip() if len(fields) > 5 else ""
            records.append(SrgRecord(params, status, source))
        return cls(records)

    @classmethod
    def load(cls, path: str | Path) -> SrgDatabase:
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self._records.values())

    def lookup(self, p: SrgParams) -> SrgRecord:
        rec = self._records.get(p)
        if rec is not None:
            return rec
        try:
            comp = complement(p)
        except ValueError:
            comp = None
        rec = self._records.get(comp) if comp is not None else None
        if rec is not None:
            return SrgRecord(p, rec.status, rec.source, via_complement=True)
        return SrgRecord(p, Status.OPEN)


@functools.lru_cache(maxsize=1)
def default_database() -> SrgDatabase:
    text = resources.files("equilines").joinpath("data/srg_seed.txt").read_text("utf-8")
    return SrgDatabase.from_text(text)


def db_lookup(p: SrgParams, db: SrgDatabase | None = None) -> SrgRecord:
    return (db or default_database()).lookup(p)
