"""Irreducible characters of S_n and class-multiplication structure constants."""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .exceptions import DomainError, IdentityViolation
from .permutations import CycleType

logger = logging.getLogger(__name__)

MAX_DEGREE = 21

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, largest: int = -1) -> Tuple[Partition, ...]:
    """Partitions of n in decreasing lexicographic order, parts at most ``largest`` when given."""
    if largest < 0:
        largest = n
    if n == 0:
        return ((),)
    found = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            found.append((first,) + rest)
    return tuple(found)


def _beta_set(shape: Partition) -> Tuple[int, ...]:
    k = len(shape)
    return tuple(sorted(part + k - 1 - i for i, part in enumerate(shape)))


@lru_cache(maxsize=None)
def _character_on_beta(beta: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    # Removing a rim hook of length r moves a bead from b to b - r; the sign counts beads jumped over.
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for other in beta if target < other < b)
        moved = tuple(sorted((beads - {b}) | {target}))
        total += (-1) ** jumped * _character_on_beta(moved, rest)
    return total


def character(shape: Partition, cycle_type: CycleType) -> int:
    """Value of the irreducible character indexed by ``shape`` on the class ``cycle_type`` (Murnaghan-Nakayama).

    Raises:
        DomainError: If the shape is not a partition of the same n.
    """
    if sum(shape) != cycle_type.n or any(a < b for a, b in zip(shape, shape[1:])):
        raise DomainError(f"{shape} is not a partition of {cycle_type.n}")
    return _character_on_beta(_beta_set(shape), cycle_type.parts)


def dimension(shape: Partition) -> int:
    """Degree of the irreducible character, by the hook length formula."""
    n = sum(shape)
    conjugate = [sum(1 for part in shape if part > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= part - j + conjugate[j] - i - 1
    return math.factorial(n) // hooks


def structure_constant(type_a: CycleType, type_b: CycleType, type_c: CycleType, n: int) -> int:
    """Number of pairs (x, y) with x of type A, y of type B and x*y equal to a fixed permutation of type C.

    Computed as |A| |B| / n! * sum over irreducible chi of chi(A) chi(B) chi(C) / chi(1).

    Args:
        type_a (CycleType): Class of x.
        type_b (CycleType): Class of y.
        type_c (CycleType): Class of the product.
        n (int): Degree, at most 21.

    Returns:
        int: The count.

    Raises:
        DomainError: If a type does not partition n or n is out of range.
        IdentityViolation: If the character sum is not an integer.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise DomainError(f"structure constants are supported for 1 <= n <= {MAX_DEGREE}")
    for cycle_type in (type_a, type_b, type_c):
        if cycle_type.n != n:
            raise DomainError(f"cycle type {cycle_type} does not partition {n}")
    total = Fraction(0)
    for shape in partitions(n):
        total += Fraction(
            character(shape, type_a) * character(shape, type_b) * character(shape, type_c), dimension(shape)
        )
    value = total * type_a.class_size * type_b.class_size / math.factorial(n)
    if value.denominator != 1:
        raise IdentityViolation(f"structure constant for {type_a}, {type_b}, {type_c} is not an integer: {value}")
    logger.debug("structure constant (%s, %s; %s) = %s", type_a, type_b, type_c, value)
    return int(value)
