"""Two-distance sets from SRG eigenspaces, the shifted lift, and tight-design families."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .bounds import dgs_design_bound
from .exact import Exact, QuadraticSurd, simplify, sqrt_of_rational
from .frames import EtfSpec
from .srg import (
    NonIntegral,
    SrgParams,
    complement,
    feasible,
    fjg_ascend,
    spectrum,
    waldron_srg_of_etf,
)

__all__ = [
    "Eigenspace",
    "TwoDistanceSpec",
    "Lift",
    "Tight5Family",
    "REPORTED_FAMILIES",
    "project_srg",
    "shifted_lift",
    "tight5_params",
    "tight4_params",
    "c2_zeros",
    "tight5_srg_family",
]


class Eigenspace(enum.Enum):
    R = "r"
    S = "s"


@dataclass(frozen=True)
class TwoDistanceSpec:
    dimension: int
    size: int
    inner_a: Exact
    inner_b: Exact
    design_strength: int = 0
    tight_frame: bool = False

    def __post_init__(self):
        a, b = simplify(self.inner_a), simplify(self.inner_b)
        if not -1 <= b < a < 1:
            raise ValueError(f"need -1 <= b < a < 1, got a={a}, b={b}")
        object.__setattr__(self, "inner_a", a)
        object.__setattr__(self, "inner_b", b)

    @property
    def equiangular(self) -> bool:
        return self.inner_a == -self.inner_b


def project_srg(p: SrgParams, which: Eigenspace) -> TwoDistanceSpec:
    """Unit-normalized projection of the vertex set onto one nontrivial eigenspace.

    Inner products come from the idempotent ``A - t'I - ((k - t')/v) J``
    rescaled to unit diagonal, where t' is the other nontrivial eigenvalue.
    """
    sp = spectrum(p)
    v, k = p.v, p.k
    if which is Eigenspace.R:
        other, dim = sp.s, sp.f
    else:
        other, dim = sp.r, sp.g
    other = QuadraticSurd(other) if isinstance(other, Fraction) else other
    adjacent = simplify((v - k + other) / (other * (1 - v) - k))
    nonadjacent = simplify((k - other) / (other * (v - 1) + k))
    a, b = max(adjacent, nonadjacent), min(adjacent, nonadjacent)
    return TwoDistanceSpec(dim, v, a, b, design_strength=2, tight_frame=True)


class Lift(NamedTuple):
    lifted: TwoDistanceSpec
    scale: Fraction
    height: Fraction

    @property
    def angle(self) -> Exact:
        return self.lifted.inner_a


def shifted_lift(t: TwoDistanceSpec) -> Lift:
    """Append a constant coordinate so the two inner products become +-c.

    Returns squared scale s2 and squared height h2 with s2 + h2 = 1.
    """
    if t.design_strength < 2:
        raise ValueError("shifted lift needs a 2-design")
    total = simplify(t.inner_a + t.inner_b)
    denom = 2 - total
    s2 = simplify(2 / denom)
    h2 = simplify(-total / denom)
    if h2 < 0:
        raise ValueError(f"lift height squared {h2} is negative (a + b > 0)")
    c = simplify((t.inner_a - t.inner_b) / denom)
    # 2-design in, so the lift is tight iff its frame operator is scalar: s2/d == h2
    tight = simplify(s2 / t.dimension) == h2
    lifted = TwoDistanceSpec(t.dimension + 1, t.size, c, -c, 0, tight)
    return Lift(lifted, s2, h2)


def tight5_params(m: int) -> tuple[int, int, Fraction]:
    """(n, line count, angle) of ETF(n, n(n+1)/2, 1/sqrt(n+2)) with n+2 = (2m+1)**2."""
    if m < 1:
        raise ValueError("m must be positive")
    n = (2 * m + 1) ** 2 - 2
    return n, n * (n + 1) // 2, Fraction(1, 2 * m + 1)


def c2_zeros(n: int) -> tuple[Exact, Exact]:
    # 1 + (n+2)(n x^2 - 1)/2 = 0
    x2 = (1 - Fraction(2, n + 2)) / n
    root = simplify(sqrt_of_rational(x2))
    return root, simplify(-root)


def tight4_params(m: int) -> tuple[int, int, Exact, Exact]:
    if m < 1:
        raise ValueError("m must be positive")
    n = (2 * m + 1) ** 2 - 3
    size = dgs_design_bound(n, 4)
    root = sqrt_of_rational(n + 3)
    hi = simplify((-1 + root) / (n + 2))
    lo = simplify((-1 - root) / (n + 2))
    return n, size, hi, lo


# Parameter sets as printed alongside the m = 3, 4 nonexistence results.
REPORTED_FAMILIES: dict[int, tuple[SrgParams, ...]] = {
    3: (
        SrgParams(1127, 640, 396, 320),
        SrgParams(1128, 644, 400, 324),
        SrgParams(1128, 560, 316, 240),
    ),
    4: (
        SrgParams(3159, 1408, 1064, 702),
        SrgParams(3160, 1575, 870, 700),
        SrgParams(3160, 1755, 1050, 880),
    ),
}


@dataclass(frozen=True)
class Tight5Family:
    m: int
    etf: EtfSpec
    members: tuple[SrgParams, ...]
    notes: tuple[str, ...] = field(default=())

    def __contains__(self, p):
        return p in self.members

    def __iter__(self):
        return iter(self.members)


def _closure(params) -> set[SrgParams]:
    out = set()
    for p in params:
        out.add(p)
        try:
            out.add(complement(p))
        except ValueError:
            pass
    return out


def tight5_srg_family(m: int) -> Tight5Family:
    n, lines, angle = tight5_params(m)
    etf = EtfSpec(n, lines, angle)
    pair = waldron_srg_of_etf(etf)
    notes = []
    if isinstance(pair, NonIntegral):
        notes.append(f"no graph on {lines - 1} vertices: {pair}")
        return Tight5Family(m, etf, (), tuple(notes))
    sources = [s for p in pair for s in fjg_ascend(p)]
    members = tuple(sorted(_closure([*pair, *sources])))
    for printed in REPORTED_FAMILIES.get(m, ()):
        if printed in members:
            continue
        ok, failures = feasible(printed)
        same = [q for q in members if (q.v, q.k) == (printed.v, printed.k)]
        msg = f"reported {printed} is not derived from {etf}"
        if not ok:
            msg += f"; it fails {', '.join(failures)}"
        if "counting identity" in failures:
            v, k, lam, mu = printed.astuple()
            msg += f" (k(k-lambda-1) = {k * (k - lam - 1)} but (v-k-1)mu = {(v - k - 1) * mu})"
        if same:
            msg += f"; derived set with the same v, k is {same[0]}"
        notes.append(msg)
    return Tight5Family(m, etf, members, tuple(notes))

