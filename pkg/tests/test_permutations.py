# type: ignore
# pylint: disable=missing-function-docstring
import math
import random

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from cognite.g2locus.exceptions import DomainError
from cognite.g2locus.permutations import (
    CycleType,
    GenerationResult,
    Perm,
    canonical_label,
    canonical_perm,
    centralizer_generators,
    conjugation_orbit,
    generation_test,
    group_order,
    is_primitive,
    is_transitive,
)


def _sympy_group(gens):
    return PermutationGroup([Permutation(list(g.images)) for g in gens])


def test_perm_parse_and_str():
    p = Perm.parse(5, "(1 2)(3 4 5)")
    assert p.images == (1, 0, 3, 4, 2)
    assert str(p) == "(1 2)(3 4 5)"
    assert str(p.cycle_type()) == "3+2"
    assert p.order == 6
    assert not p.is_even
    assert str(Perm.parse(4, "()")) == "()"
    assert Perm.from_one_line([2, 1, 4, 5, 3]) == p


def test_perm_product_applies_left_factor_first():
    product = Perm.parse(3, "(1 2)") * Perm.parse(3, "(2 3)")
    assert str(product) == "(1 3 2)"
    assert product.images == tuple((Permutation([1, 0, 2]) * Permutation([0, 2, 1])).array_form)


def test_perm_conjugate():
    x, c = Perm.parse(4, "(1 2)"), Perm.parse(4, "(2 3)")
    assert str(x.conjugate(c)) == "(1 3)"
    assert x.conjugate(c) == c.inverse() * x * c


def test_perm_power_and_inverse():
    rng = random.Random(4)
    for _ in range(20):
        p = Perm.random(8, rng)
        assert p * p.inverse() == Perm.identity(8)
        assert (p**p.order).is_identity()
        assert p**-2 == (p * p).inverse()


def test_perm_involution():
    assert Perm.parse(6, "(1 2)(5 6)").is_involution()
    assert not Perm.identity(6).is_involution()
    assert Perm.parse(6, "(1 2)").fixed_points == [2, 3, 4, 5]


@pytest.mark.parametrize(
    "test_input",
    [
        lambda: Perm((0, 0, 1)),
        lambda: Perm.from_cycles(4, [(1, 2), (2, 3)]),
        lambda: Perm.from_cycles(4, [(1, 5)]),
        lambda: Perm.parse(3, "(1 2)") * Perm.parse(4, "(1 2)"),
        lambda: CycleType.of(3, 0),
    ],
)
def test_perm_exception(test_input):
    with pytest.raises(DomainError):
        test_input()


@pytest.mark.parametrize(
    "parts, expected_centralizer, expected_class_size",
    [
        ((2, 1, 1, 1, 1, 1), 2 * 120, 21),
        ((3, 2, 2), 24, 210),
        ((7,), 7, 720),
        ((2, 2, 2, 1), 48, 105),
    ],
)
def test_cycle_type_counts(parts, expected_centralizer, expected_class_size):
    cycle_type = CycleType.of(*parts)
    assert cycle_type.centralizer_order == expected_centralizer
    assert cycle_type.class_size == expected_class_size
    assert cycle_type.class_size * cycle_type.centralizer_order == math.factorial(cycle_type.n)


def test_cycle_type_parts():
    cycle_type = CycleType.from_counts({2: 2, 3: 1})
    assert cycle_type.parts == (3, 2, 2)
    assert cycle_type.index == 4
    assert cycle_type.is_even
    assert cycle_type.count(2) == 2


def test_canonical_perm():
    p = canonical_perm(CycleType.of(2, 3, 2))
    assert str(p) == "(1 2 3)(4 5)(6 7)"
    assert p.cycle_type() == CycleType.of(3, 2, 2)


@pytest.mark.parametrize("parts", [(3, 2, 2), (2, 2, 2, 1), (4, 4, 1), (5, 2)])
def test_centralizer_generators(parts):
    cycle_type = CycleType.of(*parts)
    p = canonical_perm(cycle_type)
    gens = centralizer_generators(p)
    assert all(p.conjugate(c) == p for c in gens)
    assert group_order(gens, p.n) == cycle_type.centralizer_order
    assert group_order(gens, p.n) == _sympy_group(gens).order()


def test_conjugation_orbit_is_the_class():
    x = Perm.parse(5, "(1 2 3)")
    gens = [Perm.parse(5, "(1 2)"), Perm.parse(5, "(1 2 3 4 5)")]
    orbit = conjugation_orbit(x, gens)
    assert len(orbit) == CycleType.of(3, 1, 1).class_size
    assert all(y.cycle_type() == x.cycle_type() for y in orbit)


def test_canonical_label_is_a_conjugacy_invariant():
    rng = random.Random(6)
    checked = 0
    while checked < 10:
        gens = [Perm.random(8, rng), Perm.random(8, rng)]
        if not is_transitive(gens, 8):
            continue
        checked += 1
        c = Perm.random(8, rng)
        assert canonical_label([g.conjugate(c) for g in gens]) == canonical_label(gens)
    x, y = Perm.parse(4, "(1 2 3 4)"), Perm.parse(4, "(1 2)")
    assert canonical_label([x, y]) != canonical_label([x, Perm.parse(4, "(1 3)")])


def test_canonical_label_exception():
    with pytest.raises(DomainError):
        canonical_label([Perm.parse(5, "(1 2)"), Perm.parse(5, "(3 4 5)")])


def test_group_order_against_sympy():
    rng = random.Random(5)
    for n in (5, 6, 7, 8):
        for _ in range(3):
            gens = [Perm.random(n, rng) for _ in range(rng.randint(1, 2))]
            assert group_order(gens, n) == _sympy_group(gens).order()


@pytest.mark.parametrize(
    "gens, n, expected_result",
    [
        (["(1 2)", "(1 2 3 4 5 6 7)"], 7, GenerationResult.SN),
        (["(1 2 3)", "(1 2 3 4 5)"], 5, GenerationResult.AN),
        (["(1 2 3 4 5)", "(2 5)(3 4)"], 5, GenerationResult.OTHER),
        (["(1 2 3 4)", "(1 3)"], 4, GenerationResult.OTHER),
        (["(1 2)(3 4)"], 4, GenerationResult.OTHER),
        (["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 7, GenerationResult.OTHER),
    ],
)
def test_generation_test(gens, n, expected_result):
    perms = [Perm.parse(n, g) for g in gens]
    assert generation_test(perms, n) is expected_result


def test_generation_test_against_sympy():
    rng = random.Random(6)
    for n in (5, 6, 7, 9):
        for _ in range(4):
            gens = [Perm.random(n, rng), Perm.random(n, rng)]
            group = _sympy_group(gens)
            if group.is_symmetric:
                expected = GenerationResult.SN
            elif group.is_alternating:
                expected = GenerationResult.AN
            else:
                expected = GenerationResult.OTHER
            assert generation_test(gens, n) is expected


def test_generation_test_exception():
    with pytest.raises(DomainError):
        generation_test([], 4)
    with pytest.raises(DomainError):
        generation_test([Perm.identity(3)], 4)


def test_transitivity_and_primitivity():
    dihedral = [Perm.parse(4, "(1 2 3 4)"), Perm.parse(4, "(1 3)")]
    assert is_transitive(dihedral, 4)
    assert not is_primitive(dihedral, 4)
    full = [Perm.parse(4, "(1 2)"), Perm.parse(4, "(1 2 3 4)")]
    assert is_primitive(full, 4)
    assert not is_transitive([Perm.parse(4, "(1 2)")], 4)
    assert is_primitive(dihedral, 4) == _sympy_group(dihedral).is_primitive()
