"""Classical invariants of binary sextics and equality of moduli points."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

from . import tables
from .exact_core import (
    Exponents,
    MultiPolyTable,
    Scalar,
    UniPoly,
    discriminant,
    evaluate_terms,
    monomials,
    nullspace,
    parse_rational,
)
from .exceptions import DomainError, J2ZeroError, ReconstructionError

logger = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]

_SEXTIC_WEIGHTS = (0, 1, 2, 3, 4, 5, 6)
_J6_SEED = 6
_J6_INVARIANT_DIMENSION = 3
_J6_FAMILY_SAMPLES = 8
# Degree-0 monomials J2^a J4^b J6^c / J10^k generate the coordinate ring of the J10 != 0 chart.
_DEGREE_ZERO_EXPONENTS = [
    (a, b, c) for a, b, c in product(range(6), repeat=3) if (a + 2 * b + 3 * c) % 5 == 0 and (a, b, c) != (0, 0, 0)
]


@dataclass(frozen=True)
class BinarySextic:
    """Binary sextic f(X, Z) = a6*X^6 + a5*X^5*Z + ... + a0*Z^6.

    Attributes:
        coefficients (tuple): ``(a0, ..., a6)``; ``a_i`` multiplies ``X^i * Z^(6-i)``.
    """

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Validate and canonicalize the coefficients."""
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != 7:
            raise DomainError(f"a binary sextic has 7 coefficients, got {len(coeffs)}")
        if not any(coeffs):
            raise DomainError("the zero form is not a sextic")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coefficients: Scalar) -> "BinarySextic":
        """Build from ``a0, ..., a6``."""
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def parse(cls, text: str) -> "BinarySextic":
        """Parse seven whitespace-separated rationals ``a0 a1 ... a6``."""
        return cls(tuple(parse_rational(token) for token in text.split()))

    @classmethod
    def from_poly(cls, poly: UniPoly) -> "BinarySextic":
        """Homogenize a polynomial of degree at most 6 in X."""
        if poly.degree > 6:
            raise DomainError(f"degree {poly.degree} exceeds 6")
        return cls(tuple(poly[i] for i in range(7)))

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def poly(self) -> UniPoly:
        """Dehomogenized polynomial f(X, 1)."""
        return UniPoly(self.coefficients)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class IgusaInvariants:
    """Classical invariants (J2, J4, J6, J10), a point of weighted projective space with weights (1, 2, 3, 5)."""

    J2: Fraction
    J4: Fraction
    J6: Fraction
    J10: Fraction

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """Components in weight order."""
        return (self.J2, self.J4, self.J6, self.J10)

    def scaled(self, factor: Scalar) -> "IgusaInvariants":
        """Weighted scaling (l*J2, l^2*J4, l^3*J6, l^5*J10)."""
        return IgusaInvariants(self.J2 * factor, self.J4 * factor**2, self.J6 * factor**3, self.J10 * factor**5)


@dataclass(frozen=True)
class AbsoluteInvariants:
    """Absolute invariants i1 = J4/J2^2, i2 = (J2*J4 - 3*J6)/J2^3, i3 = J10/J2^5."""

    i1: Fraction
    i2: Fraction
    i3: Fraction


def transform(f: BinarySextic, m: Matrix2, e: Scalar = 1) -> BinarySextic:
    """Return e^2 * f(a*X + b*Z, c*X + d*Z) for m = ((a, b), (c, d)).

    Args:
        f (BinarySextic): The sextic.
        m (tuple): Invertible 2x2 matrix.
        e (Fraction): Nonzero scalar.

    Returns:
        BinarySextic: The transformed sextic.

    Raises:
        DomainError: If m is singular or e is zero.
    """
    (a, b), (c, d) = m
    if Fraction(a) * d - Fraction(b) * c == 0:
        raise DomainError("singular transformation matrix")
    if e == 0:
        raise DomainError("zero scalar in transform")
    new_x = UniPoly.of(b, a)
    new_z = UniPoly.of(d, c)
    result = UniPoly()
    for k, coefficient in enumerate(f.coefficients):
        if coefficient:
            result = result + coefficient * new_x**k * new_z ** (6 - k)
    scale = Fraction(e) ** 2
    return BinarySextic(tuple(scale * result[i] for i in range(7)))


def sextic_discriminant(f: BinarySextic) -> Fraction:
    """Discriminant of f as a binary sextic (J10).

    When a6 = 0 the substitution Z -> Z + t*X (determinant 1) for the first t = 1, 2, ... with f(1, t) != 0 moves the
    root at infinity away first.
    """
    if f[6] != 0:
        return discriminant(f.poly())
    for t in range(1, 8):
        moved = transform(f, ((1, 0), (t, 1)))
        if moved[6] != 0:
            return discriminant(moved.poly())
    raise DomainError("no unimodular substitution makes a6 nonzero")  # unreachable for a nonzero form


def _monomial_row(exponents: Sequence[Exponents], values: Sequence[Scalar]) -> List[Fraction]:
    return [evaluate_terms([(exps, Fraction(1))], values) for exps in exponents]


@lru_cache(maxsize=None)
def reconstructed_j6() -> MultiPolyTable:
    """J6 as the unique degree-6 invariant matching the (u, v) family restriction.

    The degree-6, index-weight-18 polynomials invariant under X -> X + t*Z and X <-> Z form a three dimensional space
    (spanned by J2^3, J2*J4, J6). The combination whose restriction to X^6 - s1*X^4 + s2*X^2 - 1 equals
    -20664u + 96v - 424u^2 + 24u^3 + 160uv + 119880 (u = s1*s2, v = s1^3 + s2^3) is returned.

    Raises:
        ReconstructionError: If the invariant space does not have dimension 3 or the family fit is inconsistent.
    """
    exps = monomials(_SEXTIC_WEIGHTS, 18, total_degree=6)
    rng = random.Random(_J6_SEED)
    rows = []
    while len(rows) < 2 * len(exps) + 10:
        coefficients = [rng.randint(-3, 3) for _ in range(7)]
        if not any(coefficients):
            continue
        f = BinarySextic.of(*coefficients)
        base = _monomial_row(exps, f.coefficients)
        t = rng.choice((1, 2, 3, -1, -2))
        shifted = _monomial_row(exps, transform(f, ((1, t), (0, 1))).coefficients)
        swapped = _monomial_row(exps, f.coefficients[::-1])
        rows.append([x - y for x, y in zip(shifted, base)])
        rows.append([x - y for x, y in zip(swapped, base)])
    basis = nullspace(rows, len(exps))
    logger.debug(
        "J6 reconstruction: %d monomials, %d constraints, invariant dimension %d", len(exps), len(rows), len(basis)
    )
    if len(basis) != _J6_INVARIANT_DIMENSION:
        raise ReconstructionError(f"degree-6 invariant space has dimension {len(basis)}, expected 3")

    fit_rows = []
    for _ in range(_J6_FAMILY_SAMPLES):
        s1, s2 = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
        u, v = s1 * s2, s1**3 + s2**3
        target = -20664 * u + 96 * v - 424 * u**2 + 24 * u**3 + 160 * u * v + 119880
        values = _monomial_row(exps, (-1, 0, s2, 0, -s1, 0, 1))
        fit_rows.append([sum(b * x for b, x in zip(vector, values)) for vector in basis] + [-target])
    solutions = nullspace(fit_rows, _J6_INVARIANT_DIMENSION + 1)
    if len(solutions) != 1 or solutions[0][-1] == 0:
        raise ReconstructionError("J6 family restriction is not a unique combination of degree-6 invariants")
    weights = [x / solutions[0][-1] for x in solutions[0][:-1]]
    coefficients = {e: sum(w * vector[i] for w, vector in zip(weights, basis)) for i, e in enumerate(exps)}
    return MultiPolyTable.from_mapping(coefficients, 7, ["J6 reconstructed from invariance and the (u, v) family"])


def j6_printed_diff() -> List[Tuple[Exponents, Fraction, Fraction]]:
    """Printed J6 monomials whose coefficient differs from the reconstruction, as ``(exps, reconstructed, printed)``."""
    reconstructed = reconstructed_j6()
    printed = tables.load_table(tables.J6_PRINTED)
    mismatches = [
        (exps, reconstructed.coefficient(exps), c) for exps, c in printed if reconstructed.coefficient(exps) != c
    ]
    if mismatches:
        logger.warning("%d printed J6 monomials differ from the reconstruction", len(mismatches))
    return mismatches


def igusa_invariants(f: BinarySextic) -> IgusaInvariants:
    """Classical invariants of a binary sextic.

    Args:
        f (BinarySextic): The sextic.

    Returns:
        IgusaInvariants: J2 and J4 from the stored tables, J6 from :func:`reconstructed_j6`, J10 the discriminant.
    """
    values = f.coefficients
    return IgusaInvariants(
        tables.load_table(tables.J2).evaluate(values),
        tables.load_table(tables.J4).evaluate(values),
        reconstructed_j6().evaluate(values),
        sextic_discriminant(f),
    )


def absolute_invariants(inv: IgusaInvariants) -> AbsoluteInvariants:
    """Return (J4/J2^2, (J2*J4 - 3*J6)/J2^3, J10/J2^5).

    Raises:
        J2ZeroError: If J2 = 0.
    """
    if inv.J2 == 0:
        raise J2ZeroError("absolute invariants need J2 != 0")
    return AbsoluteInvariants(
        inv.J4 / inv.J2**2,
        (inv.J2 * inv.J4 - 3 * inv.J6) / inv.J2**3,
        inv.J10 / inv.J2**5,
    )


def moduli_equal(a: IgusaInvariants, b: IgusaInvariants) -> bool:
    """Whether two invariant tuples are the same weighted-projective point.

    Compares every degree-0 ratio J2^x J4^y J6^z / J10^k (with x + 2y + 3z = 5k, exponents up to 5); this includes
    J2^5/J10, J4^5/J10^2 and J6^5/J10^3.

    Raises:
        DomainError: If either J10 vanishes.
    """
    if a.J10 == 0 or b.J10 == 0:
        raise DomainError("J10 = 0: not a genus 2 curve")
    for x, y, z in _DEGREE_ZERO_EXPONENTS:
        k = (x + 2 * y + 3 * z) // 5
        left = a.J2**x * a.J4**y * a.J6**z * b.J10**k
        right = b.J2**x * b.J4**y * b.J6**z * a.J10**k
        if left != right:
            return False
    return True
