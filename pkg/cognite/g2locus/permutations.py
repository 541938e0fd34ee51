"""Permutations of {0, ..., n-1}, cycle types and the S_n/A_n generation test.

Permutations act on the right: ``(p * q)(i) = q(p(i))``, and ``x.conjugate(c)`` is ``c^-1 * x * c``. Cycles are
displayed 1-based.
"""

import logging
import math
import random
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import DomainError

logger = logging.getLogger(__name__)

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")
_JORDAN_WORDS = 40
_JORDAN_WORD_LENGTH = 6


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included as parts equal to 1.

    Attributes:
        parts (tuple): Cycle lengths in decreasing order.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate and sort."""
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise DomainError(f"cycle type parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "CycleType":
        """Build from parts in any order."""
        return cls(tuple(parts))

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> "CycleType":
        """Build from a ``{length: multiplicity}`` mapping."""
        return cls(tuple(length for length, times in counts.items() for _ in range(times)))

    @property
    def n(self) -> int:
        """Degree of the symmetric group."""
        return sum(self.parts)

    @property
    def counts(self) -> Dict[int, int]:
        """``{length: multiplicity}``."""
        return dict(Counter(self.parts))

    def count(self, length: int) -> int:
        """Number of cycles of the given length."""
        return self.parts.count(length)

    @property
    def centralizer_order(self) -> int:
        """Order of the centralizer of any permutation of this type: prod(k^m_k * m_k!)."""
        return math.prod(k**m * math.factorial(m) for k, m in self.counts.items())

    @property
    def class_size(self) -> int:
        """Number of permutations of this type."""
        return math.factorial(self.n) // self.centralizer_order

    @property
    def index(self) -> int:
        """n minus the number of cycles."""
        return self.n - len(self.parts)

    @property
    def is_even(self) -> bool:
        """Whether permutations of this type are even."""
        return self.index % 2 == 0

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Perm:
    """A permutation of {0, ..., n-1} in one-line notation.

    Attributes:
        images (tuple): ``images[i]`` is the image of i.
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate that the images form a bijection."""
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        """The identity of S_n."""
        return cls(tuple(range(n)))

    @classmethod
    def from_one_line(cls, images: Sequence[int]) -> "Perm":
        """Build from 1-based one-line notation."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from 1-based disjoint cycles.

        Raises:
            DomainError: If the cycles overlap or leave {1, ..., n}.
        """
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for position, point in enumerate(cycle):
                if not 1 <= point <= n or point in seen:
                    raise DomainError(f"bad cycle {tuple(cycle)} in S_{n}")
                seen.add(point)
                images[point - 1] = cycle[(position + 1) % len(cycle)] - 1
        return cls(tuple(images))

    @classmethod
    def parse(cls, n: int, text: str) -> "Perm":
        """Parse 1-based cycle notation such as ``(1 2)(3 4 5)``; ``()`` is the identity."""
        cycles = [[int(token) for token in body.replace(",", " ").split()] for body in _CYCLE_PATTERN.findall(text)]
        return cls.from_cycles(n, [cycle for cycle in cycles if cycle])

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Perm":
        """Uniformly random element of S_n."""
        images = list(range(n))
        rng.shuffle(images)
        return cls(tuple(images))

    @property
    def n(self) -> int:
        """Degree."""
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Apply self first, then other."""
        if self.n != other.n:
            raise DomainError(f"cannot multiply elements of S_{self.n} and S_{other.n}")
        target = other.images
        return Perm(tuple(target[i] for i in self.images))

    def inverse(self) -> "Perm":
        """The inverse permutation."""
        inverse = [0] * self.n
        for i, image in enumerate(self.images):
            inverse[image] = i
        return Perm(tuple(inverse))

    def __pow__(self, exponent: int) -> "Perm":
        base = self if exponent >= 0 else self.inverse()
        result = Perm.identity(self.n)
        remaining = abs(exponent)
        while remaining:
            if remaining & 1:
                result = result * base
            base = base * base
            remaining >>= 1
        return result

    def conjugate(self, c: "Perm") -> "Perm":
        """Return c^-1 * self * c, which maps c(i) to c(self(i))."""
        images = [0] * self.n
        for i, image in enumerate(self.images):
            images[c.images[i]] = c.images[image]
        return Perm(tuple(images))

    @cached_property
    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles (0-based, fixed points included), each starting at its smallest point."""
        seen = [False] * self.n
        cycles = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> CycleType:
        """Cycle type of the permutation."""
        return CycleType(tuple(len(cycle) for cycle in self.cycles))

    @property
    def fixed_points(self) -> List[int]:
        """Points mapped to themselves."""
        return [i for i, image in enumerate(self.images) if i == image]

    def is_identity(self) -> bool:
        """Whether this is the identity."""
        return all(i == image for i, image in enumerate(self.images))

    def is_involution(self) -> bool:
        """Whether self^2 is the identity and self is not."""
        return not self.is_identity() and all(self.images[image] == i for i, image in enumerate(self.images))

    @property
    def order(self) -> int:
        """Order in S_n."""
        return math.lcm(*(len(cycle) for cycle in self.cycles))

    @property
    def is_even(self) -> bool:
        """Whether the permutation is even."""
        return index(self) % 2 == 0

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __str__(self) -> str:
        moved = [cycle for cycle in self.cycles if len(cycle) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in moved)


def index(p: Perm) -> int:
    """n minus the number of cycles of p, fixed points included."""
    return p.n - len(p.cycles)


def canonical_perm(cycle_type: CycleType) -> Perm:
    """Permutation of the given type whose cycles are consecutive runs of points, longest first."""
    images: List[int] = []
    start = 0
    for length in cycle_type.parts:
        images.extend(start + (k + 1) % length for k in range(length))
        start += length
    return Perm(tuple(images))


def centralizer_generators(p: Perm) -> List[Perm]:
    """Generators of the centralizer of p: the rotation of each cycle and swaps of consecutive equal-length cycles."""
    n = p.n
    gens = []
    for cycle in p.cycles:
        if len(cycle) > 1:
            images = list(range(n))
            for point in cycle:
                images[point] = p.images[point]
            gens.append(Perm(tuple(images)))
    by_length: Dict[int, List[Tuple[int, ...]]] = {}
    for cycle in p.cycles:
        by_length.setdefault(len(cycle), []).append(cycle)
    for cycles in by_length.values():
        for first, second in zip(cycles, cycles[1:]):
            images = list(range(n))
            for a, b in zip(first, second):
                images[a], images[b] = b, a
            gens.append(Perm(tuple(images)))
    return gens


def conjugation_orbit(x: Perm, gens: Sequence[Perm]) -> List[Perm]:
    """Orbit of x under conjugation by the group generated by ``gens``, in discovery order."""
    seen = {x}
    orbit = [x]
    for y in orbit:
        for c in gens:
            z = y.conjugate(c)
            if z not in seen:
                seen.add(z)
                orbit.append(z)
    return orbit


def canonical_label(gens: Sequence[Perm]) -> Tuple[Tuple[int, ...], ...]:
    """Label of a tuple of permutations that is constant on simultaneous conjugacy classes.

    Every start point relabels the points in breadth-first order along the generators; the smallest relabelled tuple
    wins. For tuples generating a transitive group, equal labels mean simultaneously conjugate tuples.

    Raises:
        DomainError: If the generated group is not transitive.
    """
    n = gens[0].n
    if not is_transitive(gens, n):
        raise DomainError("canonical labels need a transitive tuple")
    best: Optional[Tuple[Tuple[int, ...], ...]] = None
    for start in range(n):
        label = [-1] * n
        label[start] = 0
        order = [start]
        for point in order:
            for g in gens:
                image = g.images[point]
                if label[image] == -1:
                    label[image] = len(order)
                    order.append(image)
        relabelled = tuple(tuple(label[g.images[point]] for point in order) for g in gens)
        if best is None or relabelled < best:
            best = relabelled
    assert best is not None
    return best


class GenerationResult(str, Enum):
    """Outcome of :func:`generation_test`."""

    SN = "Sn"
    AN = "An"
    OTHER = "other"


def is_transitive(gens: Sequence[Perm], n: int) -> bool:
    """Whether the generated group acts transitively on {0, ..., n-1}."""
    seen = {0}
    frontier = [0]
    while frontier:
        point = frontier.pop()
        for g in gens:
            image = g.images[point]
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return len(seen) == n


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _minimal_block_size(gens: Sequence[Perm], n: int, partner: int) -> int:
    # Smallest block system in which 0 and partner share a block, by merging classes until closed under gens.
    parent = list(range(n))
    parent[partner] = 0
    pending = [(0, partner)]
    while pending:
        x, y = pending.pop()
        for g in gens:
            a, b = _find(parent, g.images[x]), _find(parent, g.images[y])
            if a != b:
                parent[max(a, b)] = min(a, b)
                pending.append((a, b))
    root = _find(parent, 0)
    return sum(1 for point in range(n) if _find(parent, point) == root)


def is_primitive(gens: Sequence[Perm], n: int) -> bool:
    """Whether a transitive group preserves no nontrivial block system."""
    return all(_minimal_block_size(gens, n, partner) == n for partner in range(1, n))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _has_jordan_power(cycle_type: CycleType, n: int) -> bool:
    # Some power is a single p-cycle with p prime and p <= n - 3.
    counts = cycle_type.counts
    for p, times in counts.items():
        if times == 1 and _is_prime(p) and p <= n - 3:
            if all(length % p for length in counts if length != p):
                return True
    return False


@dataclass
class _ChainLevel:
    base: int
    gens: List[Perm]
    transversal: Dict[int, Perm]


def _sift(levels: List[_ChainLevel], g: Perm, start: int) -> Tuple[int, Perm]:
    for depth in range(start, len(levels)):
        level = levels[depth]
        point = g.images[level.base]
        if point not in level.transversal:
            return depth, g
        g = g * level.transversal[point].inverse()
    return len(levels), g


def _strong_generators(levels: List[_ChainLevel], depth: int) -> List[Perm]:
    return [g for level in levels[depth:] for g in level.gens]


def _extend_orbit(levels: List[_ChainLevel], depth: int) -> None:
    level = levels[depth]
    gens = _strong_generators(levels, depth)
    frontier = list(level.transversal)
    while frontier:
        point = frontier.pop()
        for s in gens:
            image = s.images[point]
            if image not in level.transversal:
                level.transversal[image] = level.transversal[point] * s
                frontier.append(image)


def _place(levels: List[_ChainLevel], depth: int, g: Perm) -> None:
    if depth == len(levels):
        base = next(i for i, image in enumerate(g.images) if i != image)
        levels.append(_ChainLevel(base, [], {base: Perm.identity(g.n)}))
    levels[depth].gens.append(g)


def _schreier_generator_residue(levels: List[_ChainLevel], depth: int) -> Optional[Tuple[int, Perm]]:
    level = levels[depth]
    gens = _strong_generators(levels, depth)
    for point, u in list(level.transversal.items()):
        for s in gens:
            schreier = u * s * level.transversal[s.images[point]].inverse()
            stop, residue = _sift(levels, schreier, depth + 1)
            if not residue.is_identity():
                return stop, residue
    return None


def stabilizer_chain(gens: Sequence[Perm], n: int) -> List[Tuple[int, int]]:
    """Base points and basic orbit lengths of a deterministic Schreier-Sims stabilizer chain."""
    levels: List[_ChainLevel] = []
    for g in gens:
        if g.n != n:
            raise DomainError(f"generator of degree {g.n} in S_{n}")
        stop, residue = _sift(levels, g, 0)
        if not residue.is_identity():
            _place(levels, stop, residue)
    for depth in range(len(levels)):
        _extend_orbit(levels, depth)
    depth = len(levels) - 1
    while depth >= 0:
        found = _schreier_generator_residue(levels, depth)
        if found is None:
            depth -= 1
            continue
        stop, residue = found
        _place(levels, stop, residue)
        for deeper in range(depth + 1, stop + 1):
            _extend_orbit(levels, deeper)
        depth = stop
    return [(level.base, len(level.transversal)) for level in levels]


def group_order(gens: Sequence[Perm], n: int) -> int:
    """Order of the generated group."""
    return math.prod(length for _, length in stabilizer_chain(gens, n))


def _word_cycle_types(gens: Sequence[Perm], n: int) -> Iterable[CycleType]:
    for g in gens:
        yield g.cycle_type()
    rng = random.Random(n)
    for _ in range(_JORDAN_WORDS):
        word = Perm.identity(n)
        for _ in range(rng.randint(2, _JORDAN_WORD_LENGTH)):
            word = word * rng.choice(gens)
        yield word.cycle_type()


def generation_test(gens: Sequence[Perm], n: int) -> GenerationResult:
    """Decide whether the generators generate S_n, A_n or something smaller.

    Transitivity and primitivity are checked first. A primitive group containing a p-cycle with p prime and
    p <= n - 3 contains A_n, so a power of a short word with a suitable cycle type decides the question; otherwise
    the order is computed with a stabilizer chain. Parity of the generators separates S_n from A_n.

    Args:
        gens (list): Nonempty list of permutations of degree n.
        n (int): The degree.

    Returns:
        GenerationResult: ``SN``, ``AN`` or ``OTHER``.

    Raises:
        DomainError: If the list is empty or degrees differ.
    """
    if not gens:
        raise DomainError("generation test needs at least one generator")
    if any(g.n != n for g in gens):
        raise DomainError(f"generators must all lie in S_{n}")
    all_even = all(g.is_even for g in gens)
    full = GenerationResult.AN if all_even else GenerationResult.SN
    if n <= 2:
        return GenerationResult.SN if group_order(gens, n) == math.factorial(n) else GenerationResult.AN
    if not is_transitive(gens, n) or not is_primitive(gens, n):
        return GenerationResult.OTHER
    if any(_has_jordan_power(cycle_type, n) for cycle_type in _word_cycle_types(gens, n)):
        return full
    order = group_order(gens, n)
    logger.debug("generation test fell back to a stabilizer chain in S_%d: order %d", n, order)
    expected = math.factorial(n) // (2 if all_even else 1)
    return full if order == expected else GenerationResult.OTHER
