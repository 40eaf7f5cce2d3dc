from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equilines.designs import (
    REPORTED_FAMILIES,
    Eigenspace,
    TwoDistanceSpec,
    c2_zeros,
    project_srg,
    shifted_lift,
    tight4_params,
    tight5_params,
    tight5_srg_family,
)
from equilines.exact import QuadraticSurd, simplify
from equilines.frames import welch_angle
from equilines.srg import SrgParams as P
from equilines.srg import feasible, spectrum

F = Fraction


@pytest.mark.parametrize(
    "p, which, dim, a, b",
    [
        (P(76, 35, 18, 14), Eigenspace.R, 19, F(1, 5), F(-1, 5)),
        (P(76, 35, 18, 14), Eigenspace.S, 56, F(1, 20), F(-3, 35)),
        (P(76, 30, 8, 14), Eigenspace.R, 57, F(1, 15), F(-1, 15)),
        (P(76, 30, 8, 14), Eigenspace.S, 18, F(7, 45), F(-4, 15)),
        (P(10, 3, 0, 1), Eigenspace.R, 5, F(1, 3), F(-1, 3)),
    ],
)
def test_projection_values(p, which, dim, a, b):
    t = project_srg(p, which)
    assert (t.dimension, t.size, t.inner_a, t.inner_b) == (dim, p.v, a, b)
    assert t.design_strength == 2 and t.tight_frame


def test_projection_conference_graph_is_surd():
    t = project_srg(P(13, 6, 2, 3), Eigenspace.R)
    assert isinstance(t.inner_a, QuadraticSurd) and t.inner_a.radicand == 13


def _gram_row_sum(p, which):
    # for a 2-design the Gram rows sum to 0: 1 + k*a_adj + (v-k-1)*a_non = 0
    t = project_srg(p, which)
    sp = spectrum(p)
    other = sp.s if which is Eigenspace.R else sp.r
    adj = simplify((p.v - p.k + other) / (other * (1 - p.v) - p.k))
    non = t.inner_b if adj == t.inner_a else t.inner_a
    return simplify(1 + p.k * adj + (p.v - p.k - 1) * non)


@pytest.mark.parametrize("p", [P(76, 35, 18, 14), P(275, 112, 30, 56), P(10, 3, 0, 1), P(16, 5, 0, 2)])
def test_projection_centroid_zero(p):
    for which in Eigenspace:
        assert _gram_row_sum(p, which) == 0


def test_shifted_lift_dim56():
    lift = shifted_lift(TwoDistanceSpec(56, 76, F(1, 20), F(-3, 35), 2, True))
    assert lift.angle == F(1, 15)
    assert (lift.scale, lift.height) == (F(56, 57), F(1, 57))
    assert lift.lifted.dimension == 57 and lift.lifted.tight_frame
    assert welch_angle(57, 76) == lift.angle


def test_shifted_lift_dim18():
    lift = shifted_lift(project_srg(P(76, 30, 8, 14), Eigenspace.S))
    assert lift.lifted.dimension == 19 and lift.angle == F(1, 5)


def test_shifted_lift_rejects():
    with pytest.raises(ValueError):
        shifted_lift(TwoDistanceSpec(5, 10, F(1, 2), F(1, 4), 2, True))
    with pytest.raises(ValueError):
        shifted_lift(TwoDistanceSpec(5, 10, F(1, 3), F(-1, 3), 0, False))


@given(st.fractions(min_value=-1, max_value=F(49, 50), max_denominator=50), st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_lift_is_unit_and_equiangular(b, gap):
    a = b + gap
    if not (-1 <= b < a < 1) or a + b > 0:
        return
    lift = shifted_lift(TwoDistanceSpec(10, 20, a, b, 2, True))
    assert lift.scale + lift.height == 1
    assert lift.scale * a + lift.height == lift.angle
    assert lift.scale * b + lift.height == -lift.angle


def test_tight5_params():
    assert tight5_params(2) == (23, 276, F(1, 5))
    assert tight5_params(3) == (47, 1128, F(1, 7))
    assert tight5_params(4) == (79, 3160, F(1, 9))


def test_c2_zeros_are_welch_angle():
    for m in range(1, 6):
        n, lines, angle = tight5_params(m)
        assert c2_zeros(n) == (angle, -angle)
        assert welch_angle(n, lines) == angle


def test_tight4_params():
    assert tight4_params(3) == (46, 1127, F(1, 8), F(-1, 6))
    assert tight4_params(2) == (22, 275, F(1, 6), F(-1, 4))


def test_tight5_family_m3():
    fam = tight5_srg_family(3)
    for p in REPORTED_FAMILIES[3]:
        assert p in fam
    assert not fam.notes
    assert all(feasible(p)[0] or p.v == 1128 for p in fam)


def test_tight5_family_m4_misprint():
    fam = tight5_srg_family(4)
    assert P(3160, 1575, 870, 700) in fam and P(3160, 1755, 1050, 880) in fam
    assert P(3159, 1408, 532, 704) in fam
    assert P(3159, 1408, 1064, 702) not in fam
    (note,) = fam.notes
    assert "counting identity" in note and "482944" in note and "1228500" in note
    assert "srg(3159,1408,532,704)" in note


def test_tight5_family_m2_contains_mclaughlin():
    assert P(275, 112, 30, 56) in tight5_srg_family(2)
