"""Symbolic tight-frame algebra: Welch angle, frame potential, complementation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exact import Exact, simplify, sqrt_of_rational

__all__ = [
    "EtfSpec",
    "LineSystemQuery",
    "FramePotential",
    "FrameOutcome",
    "welch_angle",
    "frame_potential_equiangular",
    "complementary_etf",
    "etf_from_lines",
]


def welch_angle(n: int, M: int) -> Exact:
    if not M > n >= 1:
        raise ValueError(f"welch_angle needs M > n >= 1, got n={n}, M={M}")
    return simplify(sqrt_of_rational(Fraction(M - n, n * (M - 1))))


@dataclass(frozen=True)
class EtfSpec:
    """A putative ETF(n, M, c). The angle is always derived from (n, M)."""

    dimension: int
    count: int
    angle: Exact | None = None

    def __post_init__(self):
        if not self.count > self.dimension >= 1:
            raise ValueError(
                f"ETF needs count > dimension >= 1, got ({self.dimension}, {self.count})"
            )
        derived = welch_angle(self.dimension, self.count)
        if self.angle is not None and simplify(self.angle) != derived:
            raise ValueError(
                f"angle {self.angle} contradicts the Welch angle {derived} "
                f"for ETF({self.dimension}, {self.count})"
            )
        object.__setattr__(self, "angle", derived)

    def __str__(self):
        return f"ETF({self.dimension},{self.count},{self.angle})"


@dataclass(frozen=True)
class LineSystemQuery:
    dimension: int
    count: int
    angle: Exact | None = None

    def __post_init__(self):
        if self.angle is not None:
            a = simplify(self.angle)
            if not 0 < a < 1:
                raise ValueError(f"angle must lie in (0, 1), got {a}")
            object.__setattr__(self, "angle", a)


class FramePotential(NamedTuple):
    fp: Exact
    tight: bool
    violated: bool


def frame_potential_equiangular(n: int, M: int, c) -> FramePotential:
    """Frame potential of M unit vectors with all pairwise |<x,y>| = c.

    ``violated`` means the potential falls below the M**2/n floor, so no
    such system exists in R^n.
    """
    c = simplify(c)
    c2 = simplify(c * c)
    fp = simplify(M + M * (M - 1) * c2)
    floor = Fraction(M * M, n)
    return FramePotential(fp, fp == floor, fp < floor)


def complementary_etf(e: EtfSpec) -> EtfSpec:
    return EtfSpec(e.count - e.dimension, e.count)


class FrameOutcome(enum.Enum):
    INDETERMINATE = "indeterminate"
    REFUTED = "refuted"


def etf_from_lines(q: LineSystemQuery) -> EtfSpec | FrameOutcome:
    """Promote an equiangular line system to an ETF when its potential is minimal.

    A potential strictly above the floor decides nothing; the argument only
    runs one way.
    """
    if q.angle is None:
        return FrameOutcome.INDETERMINATE
    fp = frame_potential_equiangular(q.dimension, q.count, q.angle)
    if fp.violated:
        return FrameOutcome.REFUTED
    if fp.tight:
        return EtfSpec(q.dimension, q.count, q.angle)
    return FrameOutcome.INDETERMINATE
