"""Closed-form bounds and angle constraints for equiangular lines and designs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import Exact, QuadraticSurd, binomial, simplify, sqrt_of_rational

__all__ = [
    "AngleRule",
    "Threshold",
    "AngleCandidateSet",
    "is_odd_reciprocal",
    "neumann_angles",
    "lrs_angles",
    "lemmens_seidel_third",
    "relative_bound",
    "gerzon_bound",
    "dgs_design_bound",
]


class AngleRule(enum.Enum):
    NEUMANN = "Neumann"
    LRS = "LRS"
    UNCONSTRAINED = "Unconstrained"


class Threshold(enum.Enum):
    STRICT_2N3 = "Strict2n3"
    NEUMAIER_2N1 = "Neumaier2n1"

    def fires(self, n: int, count: int) -> bool:
        slack = 3 if self is Threshold.STRICT_2N3 else 1
        return count > 2 * n + slack


def is_odd_reciprocal(c) -> bool:
    """True iff ``c == 1/(2k-1)`` for some integer ``k >= 2``."""
    c = simplify(c)
    if not isinstance(c, Fraction):
        return False
    return c.numerator == 1 and c.denominator % 2 == 1 and c.denominator >= 3


@dataclass(frozen=True)
class AngleCandidateSet:
    """Admissible common angles for ``count`` equiangular lines in R^dimension.

    For the Neumann rule the family is infinite; ``candidates`` only holds the
    prefix up to the requested cutoff and :meth:`admits` is the real test.
    """

    dimension: int
    count: int
    candidates: tuple[Fraction, ...]
    rule: AngleRule

    def admits(self, c) -> bool:
        if self.rule is AngleRule.UNCONSTRAINED:
            return True
        if self.rule is AngleRule.NEUMANN:
            return is_odd_reciprocal(c)
        return simplify(c) in self.candidates


def neumann_angles(n: int, M: int, cutoff: int = 4) -> AngleCandidateSet:
    if M > 2 * n:
        prefix = tuple(Fraction(1, 2 * k - 1) for k in range(2, cutoff + 2))
        return AngleCandidateSet(n, M, prefix, AngleRule.NEUMANN)
    return AngleCandidateSet(n, M, (), AngleRule.UNCONSTRAINED)


def lrs_angles(
    n: int, M: int, threshold: Threshold = Threshold.STRICT_2N3
) -> AngleCandidateSet:
    """Angles allowed by the Larman-Rogers-Seidel bound on the integer k.

    k qualifies iff ``2 <= k <= (1 + sqrt(2n))/2``, decided exactly as
    ``(2k-1)**2 <= 2n``.
    """
    if n < 2:
        raise ValueError("lrs_angles needs n >= 2")
    if not threshold.fires(n, M):
        return AngleCandidateSet(n, M, (), AngleRule.UNCONSTRAINED)
    angles = []
    k = 2
    while (2 * k - 1) ** 2 <= 2 * n:
        angles.append(Fraction(1, 2 * k - 1))
        k += 1
    return AngleCandidateSet(n, M, tuple(angles), AngleRule.LRS)


def lemmens_seidel_third(n: int) -> int | None:
    """Maximum line count at angle 1/3, stated for n >= 15 only."""
    return 2 * n - 2 if n >= 15 else None


def relative_bound(n: int, c) -> Exact | None:
    c = simplify(c)
    if not 0 < c < 1:
        raise ValueError(f"angle must lie in (0, 1), got {c}")
    c2 = simplify(c * c)
    if n * c2 >= 1:
        return None
    return simplify(n * (1 - c2) / (1 - n * c2))


def gerzon_bound(n: int) -> tuple[int, Exact]:
    if n < 2:
        raise ValueError("gerzon_bound needs n >= 2")
    angle: QuadraticSurd = sqrt_of_rational(Fraction(1, n + 2))
    return n * (n + 1) // 2, simplify(angle)


def dgs_design_bound(n: int, t: int) -> int:
    """Delsarte-Goethals-Seidel lower bound on the size of a t-design in R^n."""
    if n < 2 or t < 1:
        raise ValueError("dgs_design_bound needs n >= 2 and t >= 1")
    e, odd = divmod(t, 2)
    if odd:
        return 2 * binomial(n + e - 1, n - 1)
    return binomial(n + e - 1, n - 1) + binomial(n + e - 2, n - 1)
