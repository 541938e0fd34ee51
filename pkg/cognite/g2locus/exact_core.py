"""Exact rational arithmetic and the polynomial utilities the other modules build on."""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from .exceptions import DomainError

Rational = Fraction
Scalar = Union[int, Fraction]
Exponents = Tuple[int, ...]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse an optionally signed integer or ``p/q`` string.

    Args:
        text (str): Rational in the form ``[+-]p`` or ``[+-]p/q`` with q > 0.

    Returns:
        Fraction: The parsed value, in lowest terms.

    Raises:
        DomainError: If the text is not a rational or the denominator is zero.
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise DomainError(f"not a rational number: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)


def format_rational(value: Scalar) -> str:
    """Serialize a rational as ``p/q`` (or ``p`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Scalar) -> Optional[Fraction]:
    """Return the non-negative rational square root of ``value``, or None if it is not a rational square."""
    value = Fraction(value)
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)


def _normalize(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial with rational coefficients, lowest degree first.

    Attributes:
        coefficients (tuple): Coefficients ``c0, c1, ...``; trailing zeros are stripped so the leading one is nonzero.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        """Canonicalize the coefficient tuple."""
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def of(cls, *coefficients: Scalar) -> "UniPoly":
        """Build a polynomial from coefficients given lowest degree first."""
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        """Monic polynomial with the given roots."""
        result = cls.of(1)
        for root in roots:
            result = result * cls.of(-Fraction(root), 1)
        return result

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        """Return True for the zero polynomial."""
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        """Leading coefficient (zero for the zero polynomial)."""
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coefficients))

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UniPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise DomainError("negative polynomial power")
        result = UniPoly.of(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "UniPoly":
        """Formal derivative."""
        return UniPoly(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        while len(remainder) - 1 >= other.degree and any(remainder):
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / other.leading
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                remainder[shift + i] -= factor * c
            remainder.pop()
        return UniPoly(tuple(quotient)), UniPoly(tuple(remainder))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = [f"{format_rational(c)}*x^{i}" for i, c in enumerate(self.coefficients) if c != 0]
        return " + ".join(reversed(terms))


def _as_poly(value: Union[UniPoly, Scalar]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.of(value)


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Args:
        matrix (Sequence): Square matrix of rationals.

    Returns:
        Fraction: The determinant.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    size = len(rows)
    if size == 0:
        return Fraction(1)
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) / previous
            rows[i][k] = Fraction(0)
        previous = pivot
    return sign * rows[-1][-1]


def sylvester_matrix(f: UniPoly, g: UniPoly) -> List[List[Fraction]]:
    """Sylvester matrix with the deg(g) shifted rows of f first."""
    m, n = f.degree, g.degree
    size = m + n
    f_row = list(reversed(f.coefficients))
    g_row = list(reversed(g.coefficients))
    matrix = []
    for shift in range(n):
        matrix.append([Fraction(0)] * shift + f_row + [Fraction(0)] * (size - shift - m - 1))
    for shift in range(m):
        matrix.append([Fraction(0)] * shift + g_row + [Fraction(0)] * (size - shift - n - 1))
    return matrix


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Sylvester resultant, normalized so that Res(x - a, g) = g(a).

    Args:
        f (UniPoly): First polynomial.
        g (UniPoly): Second polynomial.

    Returns:
        Fraction: lc(f)^deg(g) times the product of g over the roots of f.

    Raises:
        DomainError: If either polynomial is zero.
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.leading**g.degree
    if g.degree == 0:
        return g.leading**f.degree
    return determinant(sylvester_matrix(f, g))


def discriminant(f: UniPoly) -> Fraction:
    """Discriminant (-1)^(d(d-1)/2) Res(f, f') / lc(f); disc(x^5 - x) = -256, disc(x^6 - 1) = 46656.

    Raises:
        DomainError: If f is constant.
    """
    if f.degree < 1:
        raise DomainError("discriminant of a constant polynomial")
    d = f.degree
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.leading


@dataclass(frozen=True)
class QuadRingElem:
    """Element c0 + c1*t of Q[t]/(t^2 - e1*t + e2).

    Attributes:
        c0 (Fraction): Constant component.
        c1 (Fraction): Component along t.
        e1 (Fraction): Sum of the two roots of the modulus.
        e2 (Fraction): Product of the two roots of the modulus.
    """

    c0: Fraction
    c1: Fraction
    e1: Fraction
    e2: Fraction

    def _check(self, other: "QuadRingElem") -> None:
        if (self.e1, self.e2) != (other.e1, other.e2):
            raise DomainError("quotient ring elements with different moduli")

    def __add__(self, other: "QuadRingElem") -> "QuadRingElem":
        self._check(other)
        return QuadRingElem(self.c0 + other.c0, self.c1 + other.c1, self.e1, self.e2)

    def __sub__(self, other: "QuadRingElem") -> "QuadRingElem":
        self._check(other)
        return QuadRingElem(self.c0 - other.c0, self.c1 - other.c1, self.e1, self.e2)

    def __mul__(self, other: "QuadRingElem") -> "QuadRingElem":
        self._check(other)
        # t^2 = e1*t - e2
        square = self.c1 * other.c1
        return QuadRingElem(
            self.c0 * other.c0 - square * self.e2,
            self.c0 * other.c1 + self.c1 * other.c0 + square * self.e1,
            self.e1,
            self.e2,
        )

    def times_t(self) -> "QuadRingElem":
        """Multiply by the generator t."""
        return QuadRingElem(-self.c1 * self.e2, self.c0 + self.c1 * self.e1, self.e1, self.e2)


def quad_reduce(p: UniPoly, e1: Scalar, e2: Scalar) -> QuadRingElem:
    """Reduce p(t) modulo t^2 - e1*t + e2.

    Args:
        p (UniPoly): Polynomial in t.
        e1 (Fraction): Linear coefficient of the modulus, negated.
        e2 (Fraction): Constant coefficient of the modulus.

    Returns:
        QuadRingElem: The remainder c0 + c1*t.
    """
    e1, e2 = Fraction(e1), Fraction(e2)
    acc = QuadRingElem(Fraction(0), Fraction(0), e1, e2)
    for coefficient in reversed(p.coefficients):
        shifted = acc.times_t()
        acc = QuadRingElem(shifted.c0 + coefficient, shifted.c1, e1, e2)
    return acc


def clear_denominators(p: UniPoly) -> List[int]:
    """Primitive integer coefficient list (lowest degree first) proportional to p."""
    lcm = 1
    for c in p.coefficients:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    integers = [int(c * lcm) for c in p.coefficients]
    content = 0
    for value in integers:
        content = math.gcd(content, value)
    return [value // content for value in integers] if content else integers


def rational_roots(p: UniPoly) -> List[Fraction]:
    """Distinct rational roots of p in increasing order.

    The coefficients are cleared to a primitive integer polynomial, which is factored over the integers; every
    rational root appears as a linear factor ``a*x + b``.

    Raises:
        DomainError: If p is the zero polynomial.
    """
    if p.is_zero():
        raise DomainError("rational roots of the zero polynomial")
    if p.degree == 0:
        return []
    x = sympy.Symbol("x")
    integer_poly = sympy.Poly(list(reversed(clear_denominators(p))), x, domain="ZZ")
    roots = set()
    for factor, _ in integer_poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = (int(c) for c in factor.all_coeffs())
            roots.add(Fraction(-b, a))
    return sorted(roots)


def nullspace(rows: Sequence[Sequence[Scalar]], columns: int) -> List[List[Fraction]]:
    """Basis of the right nullspace of a rational matrix, by reduction to row echelon form.

    Args:
        rows (Sequence): Matrix rows, each of length ``columns``.
        columns (int): Number of columns.

    Returns:
        list: One vector per free column, with a 1 in that column.
    """
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(columns):
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        matrix[rank] = [x / pivot for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    basis = []
    for free in (c for c in range(columns) if c not in pivots):
        vector = [Fraction(0)] * columns
        vector[free] = Fraction(1)
        for row, col in enumerate(pivots):
            vector[col] = -matrix[row][free]
        basis.append(vector)
    return basis


@dataclass(frozen=True)
class MultiPolyTable:
    """Sparse multivariate polynomial stored as exponent vectors with rational coefficients.

    Serialized one term per line as ``e0 e1 ... ek : p/q``; ``#`` starts a comment.

    Attributes:
        terms (tuple): Sorted ``(exponents, coefficient)`` pairs, no zero coefficients.
        nvars (int): Length of every exponent vector.
    """

    terms: Tuple[Tuple[Exponents, Fraction], ...]
    nvars: int
    comments: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def from_mapping(
        cls, terms: Mapping[Exponents, Scalar], nvars: int, comments: Sequence[str] = ()
    ) -> "MultiPolyTable":
        """Build a table from an exponent-to-coefficient mapping, dropping zero coefficients.

        Raises:
            DomainError: If an exponent vector has the wrong length or a negative entry.
        """
        cleaned = []
        for exps, coefficient in terms.items():
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps} for {nvars} variables")
            if coefficient != 0:
                cleaned.append((tuple(exps), Fraction(coefficient)))
        return cls(tuple(sorted(cleaned, reverse=True)), nvars, tuple(comments))

    @classmethod
    def from_text(cls, text: str) -> "MultiPolyTable":
        """Parse the line format.

        Raises:
            DomainError: On malformed lines, ragged exponent vectors or duplicate monomials.
        """
        terms: Dict[Exponents, Fraction] = {}
        comments = []
        nvars: Optional[int] = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line.startswith("#"):
                comments.append(line[1:].strip())
                continue
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise DomainError(f"line {number}: missing ':'")
            left, right = line.split(":", 1)
            try:
                exps = tuple(int(e) for e in left.split())
            except ValueError as exc:
                raise DomainError(f"line {number}: bad exponents {left!r}") from exc
            if nvars is None:
                nvars = len(exps)
            if len(exps) != nvars:
                raise DomainError(f"line {number}: expected {nvars} exponents")
            if exps in terms:
                raise DomainError(f"line {number}: duplicate monomial {exps}")
            terms[exps] = parse_rational(right)
        if nvars is None:
            raise DomainError("empty polynomial table")
        return cls.from_mapping(terms, nvars, comments)

    def to_text(self) -> str:
        """Serialize to the line format, comments first."""
        lines = [f"# {comment}" for comment in self.comments]
        lines += [" ".join(str(e) for e in exps) + " : " + format_rational(c) for exps, c in self.terms]
        return "\n".join(lines) + "\n"

    @cached_property
    def as_dict(self) -> Dict[Exponents, Fraction]:
        """Exponent-to-coefficient mapping."""
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self.terms)

    def coefficient(self, exps: Exponents) -> Fraction:
        """Coefficient of a monomial (zero if absent)."""
        return self.as_dict.get(tuple(exps), Fraction(0))

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        """Evaluate at a point.

        Raises:
            DomainError: If the number of values does not match.
        """
        if len(values) != self.nvars:
            raise DomainError(f"expected {self.nvars} values, got {len(values)}")
        return evaluate_terms(self.terms, values)

    def weighted_degrees(self, weights: Sequence[int]) -> List[int]:
        """Distinct weighted degrees of the stored monomials."""
        return sorted({sum(w * e for w, e in zip(weights, exps)) for exps, _ in self.terms})

    def scaled(self, factor: Scalar) -> "MultiPolyTable":
        """Multiply every coefficient by a nonzero factor."""
        return MultiPolyTable.from_mapping({e: c * factor for e, c in self.terms}, self.nvars, self.comments)

    def diff(self, other: "MultiPolyTable") -> List[Tuple[Exponents, Fraction, Fraction]]:
        """Monomials whose coefficients differ, as ``(exponents, self_coefficient, other_coefficient)``."""
        mine, theirs = self.as_dict, other.as_dict
        return [
            (exps, mine.get(exps, Fraction(0)), theirs.get(exps, Fraction(0)))
            for exps in sorted(set(mine) | set(theirs), reverse=True)
            if mine.get(exps, Fraction(0)) != theirs.get(exps, Fraction(0))
        ]


def evaluate_terms(terms: Iterable[Tuple[Exponents, Fraction]], values: Sequence[Scalar]) -> Fraction:
    """Evaluate sum(c * prod(values[i]^e_i)) over the given terms."""
    powers: Dict[Tuple[int, int], Scalar] = {}
    total = Fraction(0)
    for exps, coefficient in terms:
        product: Scalar = coefficient
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = values[i] ** e
                product = product * powers[key]
        total += product
    return total


def monomials(weights: Sequence[int], degree: int, total_degree: Optional[int] = None) -> List[Exponents]:
    """Exponent vectors of a given weighted degree, optionally with a fixed total degree, in decreasing order."""
    found: List[Exponents] = []

    def extend(prefix: Tuple[int, ...], remaining: int) -> None:
        position = len(prefix)
        if total_degree is not None and sum(prefix) > total_degree:
            return
        if position == len(weights):
            if remaining == 0 and (total_degree is None or sum(prefix) == total_degree):
                found.append(prefix)
            return
        weight = weights[position]
        if weight == 0:
            limit = total_degree - sum(prefix) if total_degree is not None else 0
            for e in range(limit, -1, -1):
                extend(prefix + (e,), remaining)
            return
        for e in range(remaining // weight, -1, -1):
            extend(prefix + (e,), remaining - e * weight)

    extend((), degree)
    return found
