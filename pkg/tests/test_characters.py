# type: ignore
# pylint: disable=missing-function-docstring
import math
from itertools import permutations

import pytest

from cognite.g2locus.characters import MAX_DEGREE, character, dimension, partitions, structure_constant
from cognite.g2locus.exceptions import DomainError
from cognite.g2locus.permutations import CycleType, Perm, canonical_perm


def test_partitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", [3, 5, 8, 13])
def test_dimensions_square_sum(n):
    assert sum(dimension(shape) ** 2 for shape in partitions(n)) == math.factorial(n)


@pytest.mark.parametrize("n", [4, 6, 9])
def test_trivial_and_sign_characters(n):
    for cycle_type in (CycleType(shape) for shape in partitions(n)):
        assert character((n,), cycle_type) == 1
        assert character((1,) * n, cycle_type) == (1 if cycle_type.is_even else -1)
        assert character(partitions(n)[1], CycleType((1,) * n)) == n - 1


@pytest.mark.parametrize(
    "shape, parts, expected_result",
    [
        ((2, 1), (1, 1, 1), 2),
        ((2, 1), (2, 1), 0),
        ((2, 1), (3,), -1),
        ((3, 2), (5,), 0),
        ((3, 1, 1), (5,), 1),
        ((2, 2), (2, 2), 2),
    ],
)
def test_character_values(shape, parts, expected_result):
    assert character(shape, CycleType(parts)) == expected_result


def test_column_orthogonality():
    n = 6
    for cycle_type in (CycleType(shape) for shape in partitions(n)):
        assert sum(character(shape, cycle_type) ** 2 for shape in partitions(n)) == cycle_type.centralizer_order


def _brute_force(type_a, type_b, type_c, n):
    target = canonical_perm(type_c)
    elements = [Perm(images) for images in permutations(range(n))]
    first = [x for x in elements if x.cycle_type() == type_a]
    second = {y for y in elements if y.cycle_type() == type_b}
    return sum(1 for x in first if x.inverse() * target in second)


@pytest.mark.parametrize(
    "types, n",
    [
        (((2, 1, 1), (2, 1, 1), (3, 1)), 4),
        (((2, 2), (2, 1, 1), (4,)), 4),
        (((3, 1), (3, 1), (3, 1)), 4),
        (((2, 1, 1, 1), (4, 1), (5,)), 5),
        (((2, 2, 1), (3, 1, 1), (5,)), 5),
        (((3, 1, 1), (3, 1, 1), (2, 2, 1)), 5),
    ],
)
def test_structure_constant_against_brute_force(types, n):
    type_a, type_b, type_c = (CycleType(t) for t in types)
    assert structure_constant(type_a, type_b, type_c, n) == _brute_force(type_a, type_b, type_c, n)


def test_structure_constant_transpositions_and_long_cycle():
    # Only the n transpositions of neighbours along a fixed n-cycle split it into an (n-1)-cycle and a fixed point.
    for n in (6, 9, 12):
        count = structure_constant(CycleType.of(2, *([1] * (n - 2))), CycleType.of(n - 1, 1), CycleType.of(n), n)
        assert count == n


def test_structure_constant_exception():
    with pytest.raises(DomainError):
        structure_constant(CycleType.of(2, 1), CycleType.of(3, 1), CycleType.of(4), 4)
    with pytest.raises(DomainError):
        big = CycleType.of(MAX_DEGREE + 1)
        structure_constant(big, big, big, MAX_DEGREE + 1)
    with pytest.raises(DomainError):
        character((1, 2), CycleType.of(2, 1))
