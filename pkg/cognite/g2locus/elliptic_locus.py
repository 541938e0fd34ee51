"""The (u, v) parameterization of the locus of genus 2 curves with an elliptic involution."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from . import tables
from .exact_core import (
    Exponents,
    MultiPolyTable,
    Scalar,
    UniPoly,
    evaluate_terms,
    monomials,
    nullspace,
    quad_reduce,
    rational_roots,
    rational_sqrt,
)
from .exceptions import (
    DegenerateError,
    DomainError,
    IdentityViolation,
    InversionSingularError,
    NotOnLocusError,
    ReconstructionError,
)
from .igusa import BinarySextic, IgusaInvariants, absolute_invariants, moduli_equal

logger = logging.getLogger(__name__)

L2_WEIGHTS = (1, 2, 3, 5)
L2_WEIGHT = 15
_L2_NORMALIZING_MONOMIAL = (7, 4, 0, 0)
_L2_SEED = 15
_L2_SAMPLES = 120
_PHI3_FIT_POINTS = ((1, 1), (2, 1), (1, 2), (3, 5), (-2, 7))


def delta(u: Scalar, v: Scalar) -> Fraction:
    """Delta(u, v) = u^2 - 4v + 18u - 27; the sextic of (u, v) has discriminant 64*Delta^2."""
    u, v = Fraction(u), Fraction(v)
    return u * u - 4 * v + 18 * u - 27


@dataclass(frozen=True)
class UVPoint:
    """A point (u, v) of the parameter plane with Delta(u, v) != 0.

    Raises:
        DegenerateError: If Delta(u, v) = 0.
    """

    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        """Validate and canonicalize."""
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if delta(self.u, self.v) == 0:
            raise DegenerateError(f"degenerate sextic: Delta({self.u}, {self.v}) = 0")

    @classmethod
    def of(cls, u: Scalar, v: Scalar) -> "UVPoint":
        """Build from two scalars."""
        return cls(Fraction(u), Fraction(v))

    @property
    def delta(self) -> Fraction:
        """Delta(u, v), never zero."""
        return delta(self.u, self.v)


@dataclass(frozen=True)
class JPair:
    """The unordered pair {j1, j2} of j-invariants of the two elliptic subfields.

    Attributes:
        e1 (Fraction): j1 + j2.
        e2 (Fraction): j1 * j2.
        split (tuple): ``(j1, j2)`` in increasing order when both are rational, else None.
    """

    e1: Fraction
    e2: Fraction
    split: Optional[Tuple[Fraction, Fraction]] = None

    @classmethod
    def from_symmetric(cls, e1: Scalar, e2: Scalar) -> "JPair":
        """Build from the elementary symmetric functions, splitting when the discriminant is a rational square."""
        e1, e2 = Fraction(e1), Fraction(e2)
        root = rational_sqrt(e1 * e1 - 4 * e2)
        if root is None:
            return cls(e1, e2)
        return cls(e1, e2, ((e1 - root) / 2, (e1 + root) / 2))


def uv_from_s(s1: Scalar, s2: Scalar, s3: Scalar = 1) -> UVPoint:
    """Return u = s1*s2/s3, v = (s1^3*s3 + s2^3)/s3^2.

    Raises:
        DomainError: If s3 = 0.
        DegenerateError: If Delta of the result vanishes.
    """
    s1, s2, s3 = Fraction(s1), Fraction(s2), Fraction(s3)
    if s3 == 0:
        raise DomainError("s3 must be nonzero")
    return UVPoint(s1 * s2 / s3, (s1**3 * s3 + s2**3) / s3**2)


def sextic_from_s(s1: Scalar, s2: Scalar) -> BinarySextic:
    """The sextic X^6 - s1*X^4 + s2*X^2 - 1.

    Raises:
        DegenerateError: If the sextic has a repeated root.
    """
    uv_from_s(s1, s2)
    return BinarySextic.of(-1, 0, s2, 0, -Fraction(s1), 0, 1)


def uv_from_ab(a: Scalar, b: Scalar) -> UVPoint:
    """(u, v) of the sextic with roots +-a, +-b, +-c where c = 1/(ab).

    Raises:
        DomainError: If a or b is zero.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("a and b must be nonzero")
    c = 1 / (a * b)
    s1 = a * a + b * b + c * c
    s2 = a * a * b * b + a * a * c * c + b * b * c * c
    return uv_from_s(s1, s2)


def igusa_from_uv(p: UVPoint) -> IgusaInvariants:
    """Classical invariants of the curve parameterized by (u, v)."""
    u, v = p.u, p.v
    return IgusaInvariants(
        240 + 16 * u,
        48 * v + 4 * u**2 + 1620 - 504 * u,
        -20664 * u + 96 * v - 424 * u**2 + 24 * u**3 + 160 * u * v + 119880,
        64 * p.delta**2,
    )


def jpair_from_uv(p: UVPoint) -> JPair:
    """j-invariants of the elliptic subfields.

    e1 = 256*(v^2 - 2u^3 + 54u^2 - 9uv - 27v)/Delta and e2 = 65536*(u^2 + 9u - 3v)^3/Delta^2.
    """
    u, v, d = p.u, p.v, p.delta
    n1 = v**2 - 2 * u**3 + 54 * u**2 - 9 * u * v - 27 * v
    n2 = u**2 + 9 * u - 3 * v
    return JPair.from_symmetric(256 * n1 / d, 65536 * n2**3 / d**2)


def jpair_discriminant(p: UVPoint) -> Fraction:
    """(j1 - j2)^2 = 2^16 * (v^2 - 4u^3) * (v - 9u + 27)^2 / Delta^2."""
    u, v = p.u, p.v
    return 65536 * (v**2 - 4 * u**3) * (v - 9 * u + 27) ** 2 / p.delta**2


def equal_j_family(j: Scalar) -> UVPoint:
    """The point u = 9 - j/256, v = 9(u - 3) whose elliptic subfields both have invariant j.

    Raises:
        DegenerateError: If j = 0, where Delta = (u - 9)^2 vanishes.
    """
    j = Fraction(j)
    if j == 0:
        raise DegenerateError("j = 0 is the degenerate point of the equal-j family")
    u = 9 - j / 256
    return UVPoint(u, 9 * (u - 3))


def m1_embedding(j: Scalar) -> IgusaInvariants:
    """Invariants (384 - j/16, j^2/2^14, j^2*(53248 - 3j)/2^21, j^4/2^26) of the equal-j curve.

    Raises:
        DomainError: If j = 0.
    """
    j = Fraction(j)
    if j == 0:
        raise DomainError("the embedding is undefined at j = 0")
    return IgusaInvariants(
        384 - j / 16,
        j**2 / 2**14,
        j**2 * (-3 * j + 53248) / 2**21,
        j**4 / 2**26,
    )


def d12_locus(p: UVPoint) -> Fraction:
    """4v - u^2 + 110u - 1125, vanishing where the automorphism group contains D12."""
    return 4 * p.v - p.u**2 + 110 * p.u - 1125


def d8_locus(p: UVPoint) -> Fraction:
    """v^2 - 4u^3, vanishing where the automorphism group contains D8."""
    return p.v**2 - 4 * p.u**3


def eq_d6_factors(a: Scalar, b: Scalar) -> Fraction:
    """Product of the four factors describing the D12 condition in the root coordinates a, b."""
    a, b = Fraction(a), Fraction(b)
    core = a**4 * b**3 + b
    return (
        (core - a + a**3 * b + 6 * a**2 * b**2 + a * b**3 - b**4 * a**3)
        * (core + a - a**3 * b + 6 * a**2 * b**2 - a * b**3 + b**4 * a**3)
        * (core - a - a**3 * b - 6 * a**2 * b**2 - a * b**3 - b**4 * a**3)
        * (core + a + a**3 * b - 6 * a**2 * b**2 + a * b**3 + b**4 * a**3)
    )


def eq_d4_factors(a: Scalar, b: Scalar) -> Fraction:
    """Product of the squared factors describing the D8 condition in the root coordinates a, b."""
    a, b = Fraction(a), Fraction(b)
    factors = [b - 1, b + 1, b * b + b + 1, b * b - b + 1, a - 1, a + 1, a * a + a + 1, a * a - a + 1]
    factors += [a * b - 1, a * b + 1, a * a * b * b + a * b + 1, a * a * b * b - a * b + 1]
    result = Fraction(1)
    for factor in factors:
        result *= factor**2
    return result


def l2_factored(a1: Scalar, a2: Scalar, a3: Scalar) -> Fraction:
    """Product of the fifteen squared pairing factors for the quintic X(X - 1)(X - a1)(X - a2)(X - a3).

    It vanishes exactly when some involution pairs up {0, 1, infinity, a1, a2, a3} without fixed points.
    """
    x, y, z = Fraction(a1), Fraction(a2), Fraction(a3)
    factors = [
        x * y - y - z * y + z,
        x * y - x + z * x - z * y,
        x * y - z * x - z * y + z,
        z * x - x - z * y + z,
        x * y + x - z * x - y,
        x * y - x - z * x + z,
        z * x + y - z - z * y,
        -x + z * x + y - z,
        x * y - x - y + z,
        x * y - x + y - z * y,
        x - y + z * y - z,
        x * y - z * x - y + z * y,
        x * y - z,
        x - z * y,
        z * x - y,
    ]
    result = Fraction(1)
    for factor in factors:
        result *= factor**2
    return result


def quintic_normal_form(a1: Scalar, a2: Scalar, a3: Scalar) -> BinarySextic:
    """Binary sextic of X(X - 1)(X - a1)(X - a2)(X - a3), with its sixth root at infinity."""
    return BinarySextic.from_poly(UniPoly.from_roots([0, 1, a1, a2, a3]))


@lru_cache(maxsize=None)
def reconstructed_l2() -> MultiPolyTable:
    """Defining polynomial of the locus in (J2, J4, J6, J10), rebuilt by interpolation.

    Every weight-15 monomial is evaluated at locus points igusa_from_uv(p); the one-dimensional nullspace of that
    matrix is the equation, normalized so that J2^7*J4^4 has coefficient -1.

    Raises:
        ReconstructionError: If the nullspace is not one-dimensional.
    """
    exps = monomials(L2_WEIGHTS, L2_WEIGHT)
    rng = random.Random(_L2_SEED)
    rows = []
    while len(rows) < _L2_SAMPLES:
        u, v = rng.randint(-50, 50), rng.randint(-50, 50)
        if delta(u, v) == 0:
            continue
        values = igusa_from_uv(UVPoint.of(u, v)).as_tuple()
        rows.append([evaluate_terms([(e, Fraction(1))], values) for e in exps])
    basis = nullspace(rows, len(exps))
    logger.debug(
        "L2 reconstruction: %d monomials, %d points, nullspace dimension %d", len(exps), len(rows), len(basis)
    )
    if len(basis) != 1:
        raise ReconstructionError(f"weight-15 vanishing space has dimension {len(basis)}, expected 1")
    coefficients = dict(zip(exps, basis[0]))
    pivot = coefficients.get(_L2_NORMALIZING_MONOMIAL, Fraction(0))
    if pivot == 0:
        raise ReconstructionError("reconstructed equation has no J2^7*J4^4 term")
    scale = Fraction(-1) / pivot
    return MultiPolyTable.from_mapping(
        {e: c * scale for e, c in coefficients.items()}, 4, ["L2 equation reconstructed by interpolation"]
    )


def l2_equation(inv: IgusaInvariants) -> Fraction:
    """Value of the weight-15 defining polynomial; zero iff the moduli point lies on the locus."""
    return reconstructed_l2().evaluate(inv.as_tuple())


def l2_printed_diff() -> List[Tuple[Exponents, Fraction, Fraction]]:
    """Monomials where the printed equation differs from the reconstruction, as ``(exps, reconstructed, printed)``."""
    mismatches = reconstructed_l2().diff(tables.load_table(tables.L2_PRINTED))
    if mismatches:
        logger.warning("%d printed L2 monomials differ from the reconstruction", len(mismatches))
    return mismatches


def inversion_cubic(i1: Fraction, i2: Fraction) -> UniPoly:
    """Cubic in u whose roots include the u-coordinate of a locus point with absolute invariants (i1, i2, ...)."""
    return UniPoly.of(
        432000 * i2 - 421200 * i1 + 10935,
        86400 * i2 - 66960 * i1 - 2349,
        5760 * i2 + 117 - 3312 * i1,
        128 * i2 - 48 * i1 + 1,
    )


def uv_from_igusa(inv: IgusaInvariants) -> List[UVPoint]:
    """All rational (u, v) points whose invariants are moduli-equal to ``inv``.

    Args:
        inv (IgusaInvariants): Invariants of a curve on the locus.

    Returns:
        list: The distinct points, sorted by (u, v). Several are legitimate for curves with more than one class of
        elliptic involutions.

    Raises:
        DomainError: If J10 = 0.
        InversionSingularError: If J2 = 0, the cubic vanishes identically, or every rational root is u = -15.
        NotOnLocusError: If the invariants are off the locus or no rational candidate reproduces them.
    """
    if inv.J10 == 0:
        raise DomainError("J10 = 0: not a genus 2 curve")
    if inv.J2 == 0:
        raise InversionSingularError("inversion-singular: J2 = 0")
    if l2_equation(inv) != 0:
        raise NotOnLocusError("the invariants do not satisfy the locus equation")
    absolute = absolute_invariants(inv)
    cubic = inversion_cubic(absolute.i1, absolute.i2)
    if cubic.is_zero():
        raise InversionSingularError("inversion-singular: the inversion cubic vanishes identically")
    roots = rational_roots(cubic)
    usable = [u for u in roots if u != -15]
    if roots and not usable:
        raise InversionSingularError("inversion-singular: the only rational root is u = -15")
    found = set()
    for u in usable:
        v = (64 * absolute.i1 * (15 + u) ** 2 - u**2 - 405 + 126 * u) / 12
        if delta(u, v) == 0:
            continue
        candidate = UVPoint(u, v)
        if moduli_equal(igusa_from_uv(candidate), inv):
            found.add(candidate)
    if not found:
        raise NotOnLocusError("no rational (u, v) reproduces the invariants")
    return sorted(found, key=lambda p: (p.u, p.v))


def _phi3_value(e1: Fraction, e2: Fraction) -> Fraction:
    # Phi3(t, e1 - t) reduced modulo t^2 - e1*t + e2 is a constant because Phi3 is symmetric.
    t = UniPoly.of(0, 1)
    other = e1 - t
    total = UniPoly()
    for (a, b), coefficient in tables.load_table(tables.PHI3):
        total = total + coefficient * t**a * other**b
    reduced = quad_reduce(total, e1, e2)
    if reduced.c1 != 0:
        raise IdentityViolation("Phi3 reduction has a nonzero t-component")
    return reduced.c0


def _phi3_sides(p: UVPoint) -> Tuple[Fraction, Fraction]:
    pair = jpair_from_uv(p)
    lhs = p.delta**6 * _phi3_value(pair.e1, pair.e2)
    values = (p.u, p.v)
    rhs = d12_locus(p) * tables.load_table(tables.G1).evaluate(values) * tables.load_table(tables.G2).evaluate(values)
    return lhs, rhs


@lru_cache(maxsize=None)
def phi3_constant() -> Fraction:
    """The constant c with Delta^6 * Phi3(j1, j2) = c * (4v - u^2 + 110u - 1125) * g1 * g2.

    Raises:
        ReconstructionError: If every fitting point has a vanishing right-hand side.
    """
    for u, v in _PHI3_FIT_POINTS:
        lhs, rhs = _phi3_sides(UVPoint.of(u, v))
        if rhs != 0:
            logger.debug("Phi3 factorization constant fitted at (%s, %s): %s", u, v, lhs / rhs)
            return lhs / rhs
    raise ReconstructionError("cannot fit the Phi3 factorization constant")


def phi3_identity_check(p: UVPoint) -> Tuple[Fraction, Fraction, Optional[Fraction]]:
    """Check the modular-polynomial factorization at a point.

    Args:
        p (UVPoint): The point.

    Returns:
        tuple: ``(lhs, rhs, ratio)`` with lhs = Delta^6 * Phi3(j1, j2), rhs = (4v - u^2 + 110u - 1125) * g1 * g2 and
        ratio = lhs/rhs, or None when rhs = 0.

    Raises:
        IdentityViolation: If lhs != c * rhs for the fitted constant c.
    """
    lhs, rhs = _phi3_sides(p)
    if lhs != phi3_constant() * rhs:
        raise IdentityViolation(f"Phi3 factorization fails at ({p.u}, {p.v})")
    return lhs, rhs, (lhs / rhs if rhs != 0 else None)
