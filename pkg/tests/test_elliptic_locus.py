# type: ignore
# pylint: disable=missing-function-docstring
import random
from fractions import Fraction

import pytest

from cognite.g2locus import tables
from cognite.g2locus.elliptic_locus import (
    JPair,
    UVPoint,
    d8_locus,
    d12_locus,
    delta,
    eq_d4_factors,
    eq_d6_factors,
    equal_j_family,
    igusa_from_uv,
    inversion_cubic,
    jpair_discriminant,
    jpair_from_uv,
    l2_equation,
    l2_factored,
    l2_printed_diff,
    m1_embedding,
    phi3_constant,
    phi3_identity_check,
    quintic_normal_form,
    reconstructed_l2,
    sextic_from_s,
    uv_from_ab,
    uv_from_igusa,
    uv_from_s,
)
from cognite.g2locus.exceptions import (
    DegenerateError,
    DomainError,
    InversionSingularError,
    NotOnLocusError,
)
from cognite.g2locus.igusa import IgusaInvariants, absolute_invariants, igusa_invariants


def _random_points(seed, count, bound=40):
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        u, v = Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), Fraction(rng.randint(-bound, bound))
        if delta(u, v) != 0:
            points.append(UVPoint(u, v))
    return points


def test_uv_point_degenerate():
    # Delta(0, -27/4) = 0
    with pytest.raises(DegenerateError):
        UVPoint.of(0, Fraction(-27, 4))
    assert UVPoint.of(1, 1).delta == 1 - 4 + 18 - 27


@pytest.mark.parametrize(
    "s, expected_result",
    [((0, 0), (0, 0)), ((1, 2), (2, 9)), ((2, 1, 2), (1, Fraction(17, 4)))],
)
def test_uv_from_s(s, expected_result):
    p = uv_from_s(*s)
    assert (p.u, p.v) == expected_result


def test_uv_from_s_exception():
    with pytest.raises(DomainError):
        uv_from_s(1, 1, 0)


def test_family_identity():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        s1, s2 = Fraction(rng.randint(-12, 12), rng.randint(1, 4)), Fraction(rng.randint(-12, 12), rng.randint(1, 4))
        try:
            p = uv_from_s(s1, s2)
        except DegenerateError:
            continue
        assert igusa_invariants(sextic_from_s(s1, s2)) == igusa_from_uv(p)
        checked += 1


def test_igusa_from_uv_special_points(x6_minus_1, x5_minus_x, gl2_3_point):
    assert igusa_from_uv(UVPoint.of(0, 0)) == igusa_invariants(x6_minus_1)
    assert igusa_from_uv(gl2_3_point) == igusa_invariants(x5_minus_x).scaled(-16)


@pytest.mark.parametrize(
    "uv, e1, e2, split",
    [
        ((25, -250), 16000, 64000000, (8000, 8000)),
        ((225, 6750), 108000, 54000**2, (54000, 54000)),
        ((0, 0), 0, 0, (0, 0)),
    ],
)
def test_jpair_from_uv(uv, e1, e2, split):
    pair = jpair_from_uv(UVPoint.of(*uv))
    assert (pair.e1, pair.e2, pair.split) == (e1, e2, split)


def test_jpair_irrational_split():
    assert JPair.from_symmetric(0, -2).split is None
    assert JPair.from_symmetric(5, 6).split == (2, 3)


def test_jpair_discriminant():
    for p in _random_points(12, 40):
        pair = jpair_from_uv(p)
        assert pair.e1**2 - 4 * pair.e2 == jpair_discriminant(p)
        n1 = p.v**2 - 2 * p.u**3 + 54 * p.u**2 - 9 * p.u * p.v - 27 * p.v
        n2 = p.u**2 + 9 * p.u - 3 * p.v
        assert n1**2 - 4 * n2**3 == (p.v**2 - 4 * p.u**3) * (p.v - 9 * p.u + 27) ** 2


@pytest.mark.parametrize("j", [1728, -32768, 8000, Fraction(-5, 3), 54000])
def test_equal_j_family(j):
    p = equal_j_family(j)
    pair = jpair_from_uv(p)
    assert pair.split == (j, j)
    assert p.delta == (p.u - 9) ** 2
    assert igusa_from_uv(p) == m1_embedding(j)


def test_equal_j_family_exception():
    with pytest.raises(DegenerateError):
        equal_j_family(0)
    with pytest.raises(DomainError):
        m1_embedding(0)


def test_equal_j_dihedral_points():
    assert d8_locus(equal_j_family(1728)) == 0
    assert d12_locus(equal_j_family(-32768)) == 0
    assert equal_j_family(-32768).u == 137


def test_dihedral_factor_identities():
    rng = random.Random(13)
    d6_ratios, checked = set(), 0
    while checked < 20:
        a, b = Fraction(rng.randint(2, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, -2), rng.randint(1, 4))
        try:
            p = uv_from_ab(a, b)
        except DomainError:
            continue
        assert d8_locus(p) * (a * b) ** 12 == eq_d4_factors(a, b)
        if eq_d6_factors(a, b) != 0:
            d6_ratios.add(d12_locus(p) * (a * b) ** 8 / eq_d6_factors(a, b))
        checked += 1
    assert len(d6_ratios) == 1


def test_uv_from_ab_exception():
    with pytest.raises(DomainError):
        uv_from_ab(0, 1)


def test_reconstructed_l2():
    table = reconstructed_l2()
    assert table.weighted_degrees((1, 2, 3, 5)) == [15]
    assert table.coefficient((7, 4, 0, 0)) == -1


def test_l2_printed_diff_is_small():
    printed = tables.load_table(tables.L2_PRINTED)
    mismatches = l2_printed_diff()
    assert len(mismatches) < len(printed) // 2
    for exps, reconstructed, value in mismatches:
        assert reconstructed == reconstructed_l2().coefficient(exps)
        assert value == printed.coefficient(exps)


def test_l2_vanishes_on_locus():
    rng = random.Random(14)
    for p in _random_points(14, 30):
        inv = igusa_from_uv(p)
        assert l2_equation(inv) == 0
        assert l2_equation(inv.scaled(Fraction(rng.randint(1, 9), rng.randint(1, 9)))) == 0


def test_l2_off_locus(x6_minus_x):
    assert l2_equation(igusa_invariants(x6_minus_x)) != 0


@pytest.mark.parametrize(
    "a, expected_on_locus",
    [
        # z -> -4/z pairs {0, inf}, {1, -4} and {4, -1}
        ((4, -1, -4), True),
        ((2, 3, 5), False),
    ],
)
def test_l2_factored(a, expected_on_locus):
    on_locus = l2_equation(igusa_invariants(quintic_normal_form(*a))) == 0
    assert on_locus == expected_on_locus
    assert (l2_factored(*a) == 0) == expected_on_locus


def test_uv_from_igusa_round_trip():
    for p in _random_points(15, 15):
        if p.u == -15:
            continue
        preimages = uv_from_igusa(igusa_from_uv(p))
        assert p in preimages
        assert preimages == sorted(preimages, key=lambda q: (q.u, q.v))


def test_uv_from_igusa_scaled_input():
    p = UVPoint.of(3, 7)
    assert p in uv_from_igusa(igusa_from_uv(p).scaled(5))


def test_uv_from_igusa_two_preimages(x6_minus_1):
    assert uv_from_igusa(igusa_invariants(x6_minus_1)) == [UVPoint.of(0, 0), UVPoint.of(225, 6750)]


def test_inversion_cubic_has_the_u_root():
    p = UVPoint.of(3, 7)
    absolute = absolute_invariants(igusa_from_uv(p))
    assert inversion_cubic(absolute.i1, absolute.i2)(p.u) == 0


def test_uv_from_igusa_exceptions():
    with pytest.raises(DomainError):
        uv_from_igusa(IgusaInvariants(1, 1, 1, 0))
    with pytest.raises(InversionSingularError):
        uv_from_igusa(igusa_from_uv(UVPoint.of(-15, 1)))
    with pytest.raises(NotOnLocusError):
        uv_from_igusa(igusa_invariants(quintic_normal_form(2, 3, 5)))


def test_phi3_identity():
    constant = phi3_constant()
    assert constant != 0
    for p in _random_points(16, 15, bound=25):
        lhs, rhs, ratio = phi3_identity_check(p)
        assert lhs == constant * rhs
        assert ratio in (None, constant)


@pytest.mark.parametrize("uv", [(25, -250), (225, 6750)])
def test_phi3_vanishes_at_equal_isogenous_points(uv):
    lhs, rhs, _ = phi3_identity_check(UVPoint.of(*uv))
    assert lhs == 0
    assert rhs == 0
