"""Branch-cycle tuples of degree-n elliptic subfields, symmetric tuples and their triple description."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import CertificateError, CongruenceError, DomainError, UnsupportedCaseError
from .permutations import CycleType, GenerationResult, Perm, generation_test, is_transitive

logger = logging.getLogger(__name__)

MIN_DEGREE = 7
MAX_DEGREE = 21


class CaseId(str, Enum):
    """Ramification case of the degree-n cover; the tuple has length 5 in case 1 and 4 otherwise."""

    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"
    CASE5 = "case5"

    @classmethod
    def from_number(cls, number: int) -> "CaseId":
        """Case from its number 1..5."""
        try:
            return cls(f"case{number}")
        except ValueError as exc:
            raise DomainError(f"unknown case {number}") from exc

    @property
    def number(self) -> int:
        """The case number 1..5."""
        return int(self.value[-1])

    @property
    def length(self) -> int:
        """Number of branch cycles."""
        return 5 if self is CaseId.CASE1 else 4


SYMMETRIC_CASES = (CaseId.CASE1, CaseId.CASE2, CaseId.CASE4, CaseId.CASE5)


def _check_degree(n: int) -> None:
    if n % 2 == 0 or n < MIN_DEGREE:
        raise DomainError(f"n must be odd and at least {MIN_DEGREE}, got {n}")


def congruence_gate(case: CaseId, n: int) -> bool:
    """Whether symmetric tuples can exist for (case, n).

    Case 1 needs n != 1 mod 3, case 2 needs n != 2 mod 3, case 4 needs n = 3 mod 4 and case 5 needs n = 1 mod 4.
    Case 3 has no symmetric tuples.

    Raises:
        DomainError: If n is even or smaller than 7.
    """
    _check_degree(n)
    if case is CaseId.CASE1:
        return n % 3 != 1
    if case is CaseId.CASE2:
        return n % 3 != 2
    if case is CaseId.CASE4:
        return n % 4 == 3
    if case is CaseId.CASE5:
        return n % 4 == 1
    return False


def involution_type(n: int, fixed: int) -> CycleType:
    """Involution of S_n with the given number of fixed points."""
    if fixed > n or (n - fixed) % 2 or fixed == n:
        raise DomainError(f"no involution of S_{n} with {fixed} fixed points")
    return CycleType.from_counts({1: fixed, 2: (n - fixed) // 2})


def _with_pairs(n: int, counts: Dict[int, int]) -> CycleType:
    # Fill the remaining points with 2-cycles.
    rest = n - sum(length * times for length, times in counts.items())
    if rest < 0 or rest % 2:
        raise DomainError(f"cannot complete {counts} to a permutation of S_{n} with 2-cycles")
    merged = dict(counts)
    merged[2] = merged.get(2, 0) + rest // 2
    return CycleType.from_counts({k: v for k, v in merged.items() if v})


def position_types(case: CaseId, n: int) -> List[CycleType]:
    """Required cycle type of each branch cycle.

    Args:
        case (CaseId): Ramification case.
        n (int): Odd degree, at least 7.

    Returns:
        list: One cycle type per position.
    """
    _check_degree(n)
    one = involution_type(n, 1)
    three = involution_type(n, 3)
    if case is CaseId.CASE1:
        return [one, one, one, three, CycleType.from_counts({2: 1, 1: n - 2})]
    if case is CaseId.CASE2:
        return [one, one, one, _with_pairs(n, {1: 3, 4: 1})]
    if case is CaseId.CASE3:
        return [_with_pairs(n, {1: 1, 4: 1}), one, one, three]
    if case is CaseId.CASE4:
        return [_with_pairs(n, {3: 1}), one, one, three]
    return [one, one, one, _with_pairs(n, {1: 2, 3: 1})]


def _solve(n: int, fixed_part: int, choices: Sequence[int], period: int) -> Optional[Tuple[int, int]]:
    # n = fixed_part + choice + period * k with choice from ``choices``; the solution must be unique.
    solutions = [(c, (n - fixed_part - c) // period) for c in choices if (n - fixed_part - c) % period == 0]
    solutions = [(c, k) for c, k in solutions if k >= 0]
    if len(solutions) > 1:
        raise DomainError(f"ambiguous cycle type for n = {n}")
    return solutions[0] if solutions else None


def resolve_triple_types(case: CaseId, n: int) -> Tuple[CycleType, CycleType, CycleType]:
    """Cycle types of (sigma, tau, rho) for symmetric tuples of the given case.

    sigma is always an involution with one fixed point. The "at most one" parts are fixed by the part-sum equation:

    * case 1: rho = 2 + f*1 + 3k, tau = 3 + e*2 + 6m
    * case 2: tau = f*1 + 3k, rho = 4 + 3 + e*2 + 6m
    * case 4: rho = 1 + 2 + 4k, tau = 3 + 4m
    * case 5: rho = 2 + 3 + 4k, tau = 1 + 4m

    Raises:
        UnsupportedCaseError: For case 3.
        CongruenceError: If the part-sum equation has no solution.
    """
    _check_degree(n)
    sigma = involution_type(n, 1)
    if case is CaseId.CASE3:
        raise UnsupportedCaseError("case 3 has no symmetric tuples")
    if case is CaseId.CASE1:
        rho_solution = _solve(n, 2, (0, 1), 3)
        tau_solution = _solve(n, 3, (0, 2), 6)
        if rho_solution and tau_solution:
            rho = CycleType.from_counts({2: 1, 1: rho_solution[0], 3: rho_solution[1]})
            tau = CycleType.from_counts({3: 1, 2: tau_solution[0] // 2, 6: tau_solution[1]})
            return sigma, tau, rho
    elif case is CaseId.CASE2:
        tau_solution = _solve(n, 0, (0, 1), 3)
        rho_solution = _solve(n, 7, (0, 2), 6)
        if rho_solution and tau_solution:
            tau = CycleType.from_counts({1: tau_solution[0], 3: tau_solution[1]})
            rho = CycleType.from_counts({4: 1, 3: 1, 2: rho_solution[0] // 2, 6: rho_solution[1]})
            return sigma, tau, rho
    elif case is CaseId.CASE4:
        if (n - 3) % 4 == 0:
            k = (n - 3) // 4
            return sigma, CycleType.from_counts({3: 1, 4: k}), CycleType.from_counts({1: 1, 2: 1, 4: k})
    elif (n - 1) % 4 == 0:
        tau = CycleType.from_counts({1: 1, 4: (n - 1) // 4})
        return sigma, tau, CycleType.from_counts({2: 1, 3: 1, 4: (n - 5) // 4})
    raise CongruenceError(f"no cycle types for {case.value} with n = {n}")


@dataclass(frozen=True)
class BranchTuple:
    """Branch cycles (s1, ..., sr) of a cover in a given ramification case.

    Attributes:
        case (CaseId): Ramification case.
        perms (tuple): The branch cycles, all of the same degree.
    """

    case: CaseId
    perms: Tuple[Perm, ...]

    def __post_init__(self) -> None:
        """Check lengths and degrees."""
        perms = tuple(self.perms)
        if len(perms) != self.case.length:
            raise DomainError(f"{self.case.value} tuples have {self.case.length} entries, got {len(perms)}")
        if len({p.n for p in perms}) != 1:
            raise DomainError("branch cycles of different degrees")
        object.__setattr__(self, "perms", perms)

    @property
    def n(self) -> int:
        """Degree of the cover."""
        return self.perms[0].n

    def product(self) -> Perm:
        """s1 * s2 * ... * sr."""
        result = Perm.identity(self.n)
        for p in self.perms:
            result = result * p
        return result

    def conjugate(self, c: Perm) -> "BranchTuple":
        """Componentwise c^-1 * s_i * c."""
        return BranchTuple(self.case, tuple(p.conjugate(c) for p in self.perms))

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.perms)


@dataclass(frozen=True)
class SymTriple:
    """Generating pair (sigma, tau) with rho = sigma * tau^-1, describing a symmetric tuple.

    Attributes:
        sigma (Perm): Involution with one fixed point.
        tau (Perm): Conjugator of the symmetric tuple.
        rho (Perm): sigma * tau^-1, so that rho * tau = sigma.
        case (CaseId): Ramification case.
    """

    sigma: Perm
    tau: Perm
    rho: Perm
    case: CaseId

    @classmethod
    def from_pair(cls, sigma: Perm, tau: Perm, case: CaseId) -> "SymTriple":
        """Complete (sigma, tau) with rho = sigma * tau^-1."""
        return cls(sigma, tau, sigma * tau.inverse(), case)


def tuple_failures(t: BranchTuple) -> List[str]:
    """Names of the validity conditions the tuple violates (empty when valid)."""
    failures = []
    if not t.product().is_identity():
        failures.append("product is the identity")
    if t.n % 2 == 0 or t.n < MIN_DEGREE:
        failures.append("degree is odd and at least 7")
        return failures
    for position, (p, expected) in enumerate(zip(t.perms, position_types(t.case, t.n)), start=1):
        if p.cycle_type() != expected:
            failures.append(f"s{position} has cycle type {expected}")
    if not is_transitive(t.perms, t.n):
        failures.append("transitive")
    elif generation_test(list(t.perms), t.n) is GenerationResult.OTHER:
        failures.append("generates S_n or A_n")
    return failures


def validate_tuple(t: BranchTuple) -> bool:
    """Whether the tuple has product 1, the case's cycle types, and generates S_n or A_n."""
    return not tuple_failures(t)


def triple_failures(tr: SymTriple) -> List[str]:
    """Names of the validity conditions the triple violates (empty when valid)."""
    n = tr.sigma.n
    failures = []
    if tr.rho * tr.tau != tr.sigma:
        failures.append("rho * tau = sigma")
    sigma_type, tau_type, rho_type = resolve_triple_types(tr.case, n)
    if tr.sigma.cycle_type() != sigma_type:
        failures.append("sigma is an involution with one fixed point")
    if tr.tau.cycle_type() != tau_type:
        failures.append(f"tau has cycle type {tau_type}")
    if tr.rho.cycle_type() != rho_type:
        failures.append(f"rho has cycle type {rho_type}")
    if not failures and generation_test([tr.sigma, tr.tau], n) is GenerationResult.OTHER:
        failures.append("sigma and tau generate S_n or A_n")
    return failures


def _frame_in(perms: Sequence[Perm]) -> List[Perm]:
    s1, s2, s3, s4 = perms
    return [s2, s1.conjugate(s2), s3, s4]


def _frame_out(perms: Sequence[Perm]) -> List[Perm]:
    y1, y2, y3, y4 = perms
    return [y2.conjugate(y1.inverse()), y1, y3, y4]


def _move_four(perms: Sequence[Perm]) -> List[Perm]:
    s1, s2, s3, s4 = perms
    return [s3.conjugate(s2.inverse()), s2, s1, s4.conjugate(s1)]


def primed_tuple(t: BranchTuple) -> BranchTuple:
    """Branch cycles after the order-3 (cases 1, 2) or order-2 (cases 4, 5) rotation of the quotient line.

    * case 1: (s2, s3, s4*s1*s4^-1, s4, s1^-1*s5*s1)
    * case 2: (s2, s3, s1, s1^-1*s4*s1)
    * case 5: (s2*s3*s2^-1, s2, s1, s1^-1*s4*s1)
    * case 4: as case 5 after moving the index-3 cycle into the second position by (s1, s2) -> (s2, s2^-1*s1*s2),
      and back afterwards.

    Raises:
        UnsupportedCaseError: For case 3.
    """
    p = t.perms
    if t.case is CaseId.CASE1:
        s1, s2, s3, s4, s5 = p
        return BranchTuple(t.case, (s2, s3, s1.conjugate(s4.inverse()), s4, s5.conjugate(s1)))
    if t.case is CaseId.CASE2:
        s1, s2, s3, s4 = p
        return BranchTuple(t.case, (s2, s3, s1, s4.conjugate(s1)))
    if t.case is CaseId.CASE4:
        return BranchTuple(t.case, tuple(_frame_out(_move_four(_frame_in(p)))))
    if t.case is CaseId.CASE5:
        return BranchTuple(t.case, tuple(_move_four(p)))
    raise UnsupportedCaseError("case 3 has no primed tuple")


def find_conjugator(source: Sequence[Perm], target: Sequence[Perm]) -> Optional[Perm]:
    """A permutation c with c^-1 * source[i] * c = target[i] for all i, or None.

    The source must generate a transitive group, so c is determined by c(0); every choice is propagated.
    """
    n = source[0].n
    for start in range(n):
        images: List[Optional[int]] = [None] * n
        used = [False] * n
        images[0], used[start] = start, True
        frontier = [0]
        consistent = True
        while frontier and consistent:
            j = frontier.pop()
            cj = images[j]
            assert cj is not None
            for s, p in zip(source, target):
                k, ck = s.images[j], p.images[cj]
                if images[k] is None:
                    if used[ck]:
                        consistent = False
                        break
                    images[k], used[ck] = ck, True
                    frontier.append(k)
                elif images[k] != ck:
                    consistent = False
                    break
        if consistent and all(image is not None for image in images):
            return Perm(tuple(image for image in images if image is not None))
    return None


def is_symmetric(t: BranchTuple) -> Optional[Perm]:
    """A conjugator c with primed(t)_i = c^-1 * t_i * c for every i, or None if the tuple is not symmetric."""
    if not is_transitive(t.perms, t.n):
        return None
    return find_conjugator(t.perms, primed_tuple(t).perms)


def triple_to_tuple(tr: SymTriple) -> BranchTuple:
    """Case-1 branch cycles (sigma, sigma^tau, sigma^(tau^2), tau^3, rho^3) of a symmetric tuple.

    Raises:
        UnsupportedCaseError: Unless the triple is in case 1.
        CertificateError: If the triple or the resulting tuple fails a validity condition, or tau is not a conjugator.
    """
    if tr.case is not CaseId.CASE1:
        raise UnsupportedCaseError("the explicit translation is available for case 1 only")
    failures = triple_failures(tr)
    if failures:
        raise CertificateError(failures[0])
    sigma, tau = tr.sigma, tr.tau
    t = BranchTuple(
        CaseId.CASE1, (sigma, sigma.conjugate(tau), sigma.conjugate(tau * tau), tau**3, tr.rho**3)
    )
    failures = tuple_failures(t)
    if failures:
        raise CertificateError(failures[0])
    if primed_tuple(t) != t.conjugate(tau):
        raise CertificateError("tau conjugates the tuple to its primed tuple")
    return t
