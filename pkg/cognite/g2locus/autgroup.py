"""Automorphism groups of genus 2 curves and the branch-point pairing test for elliptic involutions."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import count
from typing import Iterable, List, Sequence, Tuple, Union

from .elliptic_locus import UVPoint, d8_locus, d12_locus, l2_equation, uv_from_igusa
from .exact_core import Scalar, UniPoly, determinant, parse_rational
from .exceptions import DegenerateError, DomainError, IdentityViolation
from .igusa import BinarySextic, IgusaInvariants, igusa_invariants

logger = logging.getLogger(__name__)


class AutGroupType(str, Enum):
    """Automorphism group of the function field in characteristic 0.

    The value is the short tag used in reports; :attr:`order` is the group order.
    """

    Z2 = "Z2"
    Z10 = "Z10"
    V4 = "V4"
    D8 = "D8"
    D12 = "D12"
    Z3semiD8 = "Z3semiD8"
    GL2_3 = "GL2_3"

    @property
    def order(self) -> int:
        """Order of the group."""
        return _GROUP_ORDERS[self]


_GROUP_ORDERS = {
    AutGroupType.Z2: 2,
    AutGroupType.Z10: 10,
    AutGroupType.V4: 4,
    AutGroupType.D8: 8,
    AutGroupType.D12: 12,
    AutGroupType.Z3semiD8: 24,
    AutGroupType.GL2_3: 48,
}

_INVOLUTION_CLASSES = {
    AutGroupType.Z2: 0,
    AutGroupType.Z10: 0,
    AutGroupType.GL2_3: 1,
    AutGroupType.V4: 2,
    AutGroupType.D8: 2,
    AutGroupType.D12: 2,
    AutGroupType.Z3semiD8: 2,
}

_GL2_3_POINT = (Fraction(25), Fraction(-250))
_Z3_SEMI_D8_POINTS = ((Fraction(0), Fraction(0)), (Fraction(225), Fraction(6750)))


class PointAtInfinity(Enum):
    """The point at infinity of the projective line."""

    INF = "inf"

    def __str__(self) -> str:
        return "inf"


INF = PointAtInfinity.INF
Point = Union[Fraction, PointAtInfinity]
Pairing = Tuple[Tuple[Point, Point], Tuple[Point, Point], Tuple[Point, Point]]


def parse_point(text: str) -> Point:
    """Parse a rational or one of ``inf``, ``oo``, ``∞``."""
    if text.strip().lower() in ("inf", "oo", "∞"):
        return INF
    return parse_rational(text)


@dataclass(frozen=True)
class BranchSet:
    """Six distinct points of the projective line, the branch points of a genus 2 cover.

    Raises:
        DomainError: Unless there are exactly six pairwise distinct points.
    """

    points: Tuple[Point, ...]

    def __post_init__(self) -> None:
        """Validate and canonicalize."""
        points = tuple(p if p is INF else Fraction(p) for p in self.points)  # type: ignore[arg-type]
        if len(points) != 6:
            raise DomainError(f"a branch set has 6 points, got {len(points)}")
        if len(set(points)) != 6:
            raise DomainError("branch points must be pairwise distinct")
        object.__setattr__(self, "points", points)

    @classmethod
    def of(cls, *points: Union[int, Fraction, PointAtInfinity]) -> "BranchSet":
        """Build from six points."""
        return cls(tuple(p if p is INF else Fraction(p) for p in points))  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str) -> "BranchSet":
        """Parse six whitespace-separated points."""
        return cls(tuple(parse_point(token) for token in text.split()))

    @property
    def finite(self) -> List[Fraction]:
        """The finite points."""
        return [p for p in self.points if isinstance(p, Fraction)]


@dataclass(frozen=True)
class PairingCertificate:
    """A perfect matching of the branch points and its dependence determinant.

    Attributes:
        pairing (tuple): Three unordered pairs of the original points.
        det (Fraction): Determinant of the coefficient rows of the three pair quadratics, after moving every point to
            a finite value. Zero iff an involution swaps each pair.
    """

    pairing: Pairing
    det: Fraction

    @property
    def realized(self) -> bool:
        """Whether an involution realizes this pairing."""
        return self.det == 0


def _perfect_matchings(items: Sequence[int]) -> Iterable[List[Tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for matching in _perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + matching


def _finite_images(b: BranchSet) -> List[Fraction]:
    # z -> 1/(z - c) with c outside the branch set sends infinity to 0 and every other point to a finite value.
    taken = set(b.finite)
    c = next(Fraction(k) for k in count() if Fraction(k) not in taken)
    return [Fraction(0) if p is INF else 1 / (p - c) for p in b.points]  # type: ignore[operator]


def elliptic_pairings(b: BranchSet) -> List[PairingCertificate]:
    """Certificates for all 15 pairings of the branch points.

    A pairing {p1, q1}, {p2, q2}, {p3, q3} of finite points is realized by an involution of the projective line iff
    the quadratics (x - p_i)(x - q_i) are linearly dependent. Such an involution fixes no branch point, so it lifts to
    an elliptic involution.

    Args:
        b (BranchSet): The branch points.

    Returns:
        list: One certificate per perfect matching, in a fixed order.
    """
    images = _finite_images(b)
    certificates = []
    for matching in _perfect_matchings(list(range(6))):
        rows = [[Fraction(1), -(images[i] + images[j]), images[i] * images[j]] for i, j in matching]
        pairing = tuple((b.points[i], b.points[j]) for i, j in matching)
        certificates.append(PairingCertificate(pairing, determinant(rows)))  # type: ignore[arg-type]
    return certificates


def moebius_image(branch: BranchSet, m: Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]) -> BranchSet:
    """Image of the branch points under z -> (a*z + b) / (c*z + d) for m = ((a, b), (c, d)).

    Raises:
        DomainError: If ad - bc = 0.
    """
    (a, b), (c, d) = (tuple(Fraction(x) for x in row) for row in m)
    if a * d - b * c == 0:
        raise DomainError("Moebius map with ad - bc = 0")

    def image(p: Point) -> Point:
        if p is INF:
            return INF if c == 0 else a / c
        denominator = c * p + d  # type: ignore[operator]
        return INF if denominator == 0 else (a * p + b) / denominator  # type: ignore[operator]

    return BranchSet(tuple(image(p) for p in branch.points))


def has_elliptic_involution(b: BranchSet) -> bool:
    """Whether some involution pairs up the branch points without fixing any of them."""
    return any(certificate.realized for certificate in elliptic_pairings(b))


def sextic_from_branch_set(b: BranchSet) -> BinarySextic:
    """The binary sextic vanishing exactly on the branch points; infinity contributes the factor Z."""
    return BinarySextic.from_poly(UniPoly.from_roots(b.finite))


def involution_class_count(g: AutGroupType) -> int:
    """Number of conjugacy classes of elliptic involutions (0, 1 or 2)."""
    return _INVOLUTION_CLASSES[g]


def classify_uv(p: UVPoint) -> AutGroupType:
    """Automorphism group of the curve with parameters (u, v).

    The sporadic points (25, -250) and (0, 0), (225, 6750) are checked before the D8 and D12 loci.
    """
    point = (p.u, p.v)
    if point == _GL2_3_POINT:
        return AutGroupType.GL2_3
    if point in _Z3_SEMI_D8_POINTS:
        return AutGroupType.Z3semiD8
    if d8_locus(p) == 0:
        return AutGroupType.D8
    if d12_locus(p) == 0:
        return AutGroupType.D12
    return AutGroupType.V4


def classify_invariants(inv: IgusaInvariants) -> Tuple[AutGroupType, List[UVPoint]]:
    """Automorphism group from the classical invariants, with the (u, v) preimages when on the locus.

    Raises:
        DegenerateError: If J10 = 0.
        InversionSingularError: Propagated from the inversion.
        IdentityViolation: If the preimages classify differently.
    """
    if inv.J10 == 0:
        raise DegenerateError("J10 = 0: not a genus 2 curve")
    if l2_equation(inv) != 0:
        if inv.J2 == 0 and inv.J4 == 0 and inv.J6 == 0:
            return AutGroupType.Z10, []
        return AutGroupType.Z2, []
    preimages = uv_from_igusa(inv)
    groups = {classify_uv(p) for p in preimages}
    if len(groups) != 1:
        raise IdentityViolation(f"(u, v) preimages classify differently: {sorted(g.value for g in groups)}")
    logger.debug("classified %s from %d preimages", next(iter(groups)).value, len(preimages))
    return groups.pop(), preimages


def classify_sextic(f: BinarySextic) -> AutGroupType:
    """Automorphism group of Y^2 = f(X)."""
    group, _ = classify_invariants(igusa_invariants(f))
    return group


def classify_many(points: Sequence[UVPoint], workers: int = 1) -> List[AutGroupType]:
    """Classify a batch of points, in input order, optionally across worker processes."""
    if workers <= 1 or len(points) < 2:
        return [classify_uv(p) for p in points]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(classify_uv, points))
