import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equilines.exact import simplify
from equilines.frames import (
    EtfSpec,
    FrameOutcome,
    LineSystemQuery,
    complementary_etf,
    etf_from_lines,
    frame_potential_equiangular,
    welch_angle,
)


def test_welch_values():
    assert welch_angle(19, 76) == Fraction(1, 5)
    assert welch_angle(57, 76) == Fraction(1, 15)
    assert welch_angle(42, 288) == Fraction(1, 7)
    c = welch_angle(3, 6)
    assert simplify(c * c) == Fraction(1, 5)
    with pytest.raises(ValueError):
        welch_angle(5, 5)


def test_frame_potential_dim19():
    fp = frame_potential_equiangular(19, 76, Fraction(1, 5))
    assert fp.fp == 304 and fp.tight and not fp.violated
    fp = frame_potential_equiangular(19, 75, Fraction(1, 5))
    assert fp.fp == 297 and not fp.tight and not fp.violated
    assert frame_potential_equiangular(20, 96, Fraction(1, 5)).fp == Fraction(2304, 5)


def test_etf_spec_rejects_wrong_angle():
    assert EtfSpec(19, 76).angle == Fraction(1, 5)
    with pytest.raises(ValueError):
        EtfSpec(19, 76, Fraction(1, 3))


def test_etf_from_lines():
    assert etf_from_lines(LineSystemQuery(19, 76, Fraction(1, 5))) == EtfSpec(19, 76)
    assert etf_from_lines(LineSystemQuery(19, 75, Fraction(1, 5))) is FrameOutcome.INDETERMINATE
    assert etf_from_lines(LineSystemQuery(2, 5, Fraction(1, 10))) is FrameOutcome.REFUTED
    assert etf_from_lines(LineSystemQuery(19, 76)) is FrameOutcome.INDETERMINATE


@given(st.integers(1, 250), st.integers(2, 500))
def test_frames_sweep(n, M):
    if M <= n:
        return
    c = welch_angle(n, M)
    assert math.isclose(float(c), math.sqrt((M - n) / (n * (M - 1))), rel_tol=1e-12)
    fp = frame_potential_equiangular(n, M, c)
    assert fp.tight and fp.fp == Fraction(M * M, n)
    comp = complementary_etf(EtfSpec(n, M))
    assert comp.dimension == M - n
    assert complementary_etf(comp) == EtfSpec(n, M)


def test_frames_exhaustive_sweep():
    # every Welch angle minimizes the potential exactly, and nothing smaller does
    for M in range(3, 120):
        for n in range(1, M):
            c = welch_angle(n, M)
            assert frame_potential_equiangular(n, M, c).tight
            if isinstance(c, Fraction) and c.numerator == 1 and c.denominator > 2:
                smaller = Fraction(1, c.denominator + 2)
                assert frame_potential_equiangular(n, M, smaller).violated
