"""Counting classes of symmetric triples and of case-1 branch-cycle tuples."""

import logging
import math
import posixpath
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from enum import Enum
from functools import partial
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import fsspec
from pydantic import BaseModel, Field, ValidationError
from tenacity import after_log, retry, retry_if_exception_type, stop_after_attempt, wait_fixed

from .characters import structure_constant
from .coverings import (
    MAX_DEGREE,
    BranchTuple,
    CaseId,
    congruence_gate,
    is_symmetric,
    position_types,
    resolve_triple_types,
)
from .exceptions import CheckpointError, CongruenceError, DomainError, IdentityViolation
from .permutations import (
    CycleType,
    GenerationResult,
    Perm,
    canonical_label,
    canonical_perm,
    centralizer_generators,
    conjugation_orbit,
    generation_test,
    is_primitive,
    is_transitive,
)

logger = logging.getLogger(__name__)

Unit = Tuple[int, int]
WeightedUnit = Tuple[int, int, int]

RANDOM_BATCH = 50_000
# Larger centralizers are deduplicated by canonical labels instead of materialized orbits.
ORBIT_CLOSURE_LIMIT = 50_000


class SearchMode(str, Enum):
    """Exhaustive enumeration or uniform random sampling of sigma."""

    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class OrbitRecord(BaseModel):
    """Lexicographically smallest sigma of a centralizer orbit, with the group the triple generates."""

    sigma: List[int]
    group: GenerationResult


class CheckpointRecord(BaseModel):
    """Result of one completed range of work units, stored as a JSON line."""

    case: CaseId
    n: int
    range_start: int
    range_end: int
    valid: int
    candidates: int
    reps: List[OrbitRecord] = Field(default_factory=list)


class TripleCountResult(BaseModel):
    """Outcome of :func:`count_triple_classes`.

    Attributes:
        count: Number of classes found.
        complete: Whether the enumeration was exhaustive; otherwise count is a lower bound.
        orbit_sizes: Size of every orbit found (each equals centralizer_order).
        candidates: Number of sigma with the right rho type, before the generation filter.
        candidates_expected: The same number from the class-multiplication structure constant.
        valid: Number of sigma generating S_n or A_n together with tau; in random mode, counted per sample.
        certified_valid: Exact number of such sigma, the structure constant net of non-generating candidates, when
            certified. A random run never finds more than certified_valid / centralizer_order classes.
    """

    case: CaseId
    n: int
    mode: SearchMode
    count: int
    complete: bool
    orbit_sizes: List[int]
    sn_classes: int
    an_classes: int
    candidates: int
    candidates_expected: Optional[int]
    valid: int
    centralizer_order: int
    certified_valid: Optional[int] = None
    samples: Optional[int] = None
    representatives: List[str] = Field(default_factory=list)
    elapsed: float = 0.0


class Case1CensusResult(BaseModel):
    """Outcome of :func:`count_case1_tuple_classes`."""

    n: int
    count: int
    symmetric_classes: int
    sn_classes: int
    an_classes: int
    valid_with_fixed_s1: int
    elapsed: float = 0.0


class CheckpointStore:
    """Append-only JSON-lines checkpoint file behind an fsspec URL.

    Args:
        url (str): Location of the file, e.g. ``memory://run.jsonl`` or a local path.
        retries (int): Attempts per read or append.
        wait (float): Seconds between attempts.
    """

    def __init__(self, url: str, retries: int = 5, wait: float = 0.5):
        """Initialize the store."""
        self.url = url
        self.retries = retries
        self.wait = wait

    def _retrying(self):  # type: ignore[no-untyped-def]
        return retry(
            retry=retry_if_exception_type(OSError),
            stop=stop_after_attempt(self.retries),
            wait=wait_fixed(self.wait),
            after=after_log(logging.getLogger("g2locus"), logging.INFO),
            reraise=True,
        )

    def load(self, case: CaseId, n: int) -> List[CheckpointRecord]:
        """Read the records of a run, or nothing if the file does not exist yet.

        Raises:
            CheckpointError: If the file is unreadable, malformed or belongs to a different (case, n).
        """

        @self._retrying()
        def read() -> Optional[str]:
            fs, path = fsspec.core.url_to_fs(self.url)
            if not fs.exists(path):
                return None
            with fsspec.open(self.url, "r", encoding="utf-8") as handle:
                return str(handle.read())

        try:
            text = read()
        except OSError as exc:
            raise CheckpointError(f"cannot read checkpoint {self.url}") from exc
        if text is None:
            return []
        records = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = CheckpointRecord.model_validate_json(line)
            except ValidationError as exc:
                raise CheckpointError(f"{self.url}:{number}: malformed checkpoint record") from exc
            if record.case != case or record.n != n:
                raise CheckpointError(f"{self.url} belongs to {record.case.value} n={record.n}, not {case.value} n={n}")
            records.append(record)
        logger.debug("Resuming from %d checkpoint records in %s", len(records), self.url)
        return records

    def append(self, record: CheckpointRecord) -> None:
        """Append one record.

        Raises:
            CheckpointError: If the write keeps failing.
        """

        @self._retrying()
        def write() -> None:
            fs, path = fsspec.core.url_to_fs(self.url)
            if not fs.exists(path) and posixpath.dirname(path):
                fs.makedirs(posixpath.dirname(path), exist_ok=True)
            with fsspec.open(self.url, "a" if fs.exists(path) else "w", encoding="utf-8") as handle:
                handle.write(record.model_dump_json() + "\n")

        try:
            write()
        except OSError as exc:
            raise CheckpointError(f"cannot append to checkpoint {self.url}") from exc


def work_units(n: int) -> List[Unit]:
    """Work units (fixed point of sigma, partner of the smallest other point), in lexicographic order."""
    units = []
    for fixed in range(n):
        rest = [point for point in range(n) if point != fixed]
        units.extend((fixed, partner) for partner in rest[1:])
    return units


def weighted_units(tau: Perm) -> List[WeightedUnit]:
    """Work units (fixed point, partner, weight) that stand for all of :func:`work_units` up to the centralizer of tau.

    An element of the centralizer fixing a point fixes its whole tau-cycle pointwise and still permutes the other
    cycles of each length transitively. One fixed point per cycle length therefore represents every point on cycles of
    that length, and once the fixed point and the smallest other point are placed, partners outside their two cycles
    are grouped by cycle length in the same way. Weights are the sizes of the classes represented, so they sum to
    ``len(work_units(n))``.
    """
    cycles = tau.cycles
    cycle_of = {point: cycle for cycle in cycles for point in cycle}
    units = []
    for length in sorted({len(cycle) for cycle in cycles}):
        same = [cycle for cycle in cycles if len(cycle) == length]
        fixed = same[0][0]
        first = 0 if fixed != 0 else 1
        pinned = set(cycle_of[fixed]) | set(cycle_of[first])
        partners = {point: 1 for point in pinned - {fixed, first}}
        free: Dict[int, List[int]] = {}
        for cycle in cycles:
            if cycle[0] not in pinned:
                free.setdefault(len(cycle), []).extend(cycle)
        for points in free.values():
            partners[min(points)] = len(points)
        units.extend((fixed, partner, length * len(same) * weight) for partner, weight in sorted(partners.items()))
    return units


class _TripleEnumerator:
    """Involutions sigma with one fixed point such that sigma * tau^-1 has a prescribed cycle type.

    Partial assignments are pruned on the partial rho: a closed cycle must have an allowed length and multiplicity,
    and an open chain must not exceed the longest allowed cycle.
    """

    def __init__(self, tau: Perm, rho_type: CycleType):
        self.n = tau.n
        self.tau_inv = tau.inverse().images
        self.allowed = rho_type.counts
        self.longest = max(self.allowed)
        self.sigma = [-1] * self.n
        self.rho = [-1] * self.n
        self.rho_inv = [-1] * self.n
        self.closed: Dict[int, int] = {}

    def _chain(self, x: int) -> Tuple[bool, int, int]:
        # (closed, length, smallest point) of the partial rho-chain through x.
        length, y, smallest = 1, self.rho[x], x
        while y != -1 and y != x:
            length += 1
            smallest = min(smallest, y)
            y = self.rho[y]
        if y == x:
            return True, length, smallest
        y = self.rho_inv[x]
        while y != -1:
            length += 1
            y = self.rho_inv[y]
        return False, length, smallest

    def _assign(self, a: int, b: int) -> Tuple[bool, List[int]]:
        self.sigma[a], self.sigma[b] = b, a
        touched = []
        for x in {a, b}:
            y = self.tau_inv[self.sigma[x]]
            self.rho[x], self.rho_inv[y] = y, x
        ok = True
        seen_cycles = set()
        for x in {a, b}:
            closed, length, smallest = self._chain(x)
            if closed:
                if smallest in seen_cycles:
                    continue
                seen_cycles.add(smallest)
                self.closed[length] = self.closed.get(length, 0) + 1
                touched.append(length)
                if self.closed[length] > self.allowed.get(length, 0):
                    ok = False
            elif length > self.longest:
                ok = False
        return ok, touched

    def _undo(self, a: int, b: int, touched: List[int]) -> None:
        for length in touched:
            self.closed[length] -= 1
        for x in {a, b}:
            self.rho_inv[self.rho[x]] = -1
            self.rho[x] = -1
            self.sigma[x] = -1

    def _complete(self) -> Iterator[Perm]:
        try:
            first = self.sigma.index(-1)
        except ValueError:
            yield Perm(tuple(self.sigma))
            return
        for partner in range(first + 1, self.n):
            if self.sigma[partner] != -1:
                continue
            ok, touched = self._assign(first, partner)
            if ok:
                yield from self._complete()
            self._undo(first, partner, touched)

    def unit(self, fixed: int, partner: int) -> Iterator[Perm]:
        """All admissible sigma with the given fixed point whose smallest other point is paired with ``partner``."""
        first = 0 if fixed != 0 else 1
        ok, touched_fixed = self._assign(fixed, fixed)
        if ok:
            ok, touched = self._assign(first, partner)
            if ok:
                yield from self._complete()
            self._undo(first, partner, touched)
        self._undo(fixed, fixed, touched_fixed)


def _search_range(case: CaseId, n: int, start: int, end: int) -> CheckpointRecord:
    _, tau_type, rho_type = resolve_triple_types(case, n)
    tau = canonical_perm(tau_type)
    gens = centralizer_generators(tau)
    order = tau_type.centralizer_order
    enumerator = _TripleEnumerator(tau, rho_type)
    seen: Set[Perm] = set()
    reps = []
    valid = candidates = 0
    for fixed, partner in work_units(n)[start:end]:
        for sigma in enumerator.unit(fixed, partner):
            candidates += 1
            group = generation_test([sigma, tau], n)
            if group is GenerationResult.OTHER:
                continue
            valid += 1
            if sigma in seen:
                continue
            orbit = conjugation_orbit(sigma, gens)
            if len(orbit) != order:
                raise IdentityViolation(f"centralizer orbit of size {len(orbit)} != {order}: the action is not free")
            seen.update(orbit)
            reps.append(OrbitRecord(sigma=list(min(orbit).images), group=group))
    logger.debug("%s n=%d units [%d, %d): %d candidates, %d valid", case.value, n, start, end, candidates, valid)
    return CheckpointRecord(
        case=case, n=n, range_start=start, range_end=end, valid=valid, candidates=candidates, reps=reps
    )


def _pending_ranges(total: int, done: Sequence[CheckpointRecord], chunk: int) -> List[Tuple[int, int]]:
    covered = [False] * total
    for record in done:
        for unit in range(record.range_start, min(record.range_end, total)):
            covered[unit] = True
    ranges = []
    start = 0
    while start < total:
        if covered[start]:
            start += 1
            continue
        end = start
        while end < total and not covered[end] and end - start < chunk:
            end += 1
        ranges.append((start, end))
        start = end
    return ranges


def _check_cell(case: CaseId, n: int) -> None:
    if n > MAX_DEGREE:
        raise DomainError(f"n = {n} exceeds {MAX_DEGREE}")
    if not congruence_gate(case, n):
        raise CongruenceError(f"{case.value} with n = {n} is excluded by the order and congruence conditions")


def _random_involution(n: int, rng: random.Random) -> List[int]:
    # Uniform among involutions with exactly one fixed point: points[0] stays fixed.
    points = list(range(n))
    rng.shuffle(points)
    images = list(range(n))
    for a, b in zip(points[1::2], points[2::2]):
        images[a], images[b] = b, a
    return images


def _cycle_parts(images: Sequence[int]) -> Tuple[int, ...]:
    seen = [False] * len(images)
    parts = []
    for start in range(len(images)):
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = images[point]
            length += 1
        if length:
            parts.append(length)
    return tuple(sorted(parts, reverse=True))


def _sample_batch(case: CaseId, n: int, seed: int, batch: int, size: int) -> List[Tuple[int, ...]]:
    # Candidates among ``size`` uniform samples; every batch has its own generator so results ignore worker count.
    _, tau_type, rho_type = resolve_triple_types(case, n)
    tau_inv = canonical_perm(tau_type).inverse().images
    rng = random.Random(f"{seed}/{batch}")
    hits = []
    for _ in range(size):
        sigma = _random_involution(n, rng)
        if _cycle_parts([tau_inv[image] for image in sigma]) == rho_type.parts:
            hits.append(tuple(sigma))
    return hits


def _sample(case: CaseId, n: int, samples: int, seed: int, workers: int) -> List[Tuple[int, ...]]:
    sizes = [min(RANDOM_BATCH, samples - start) for start in range(0, samples, RANDOM_BATCH)]
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = list(executor.map(partial(_sample_batch, case, n, seed), range(len(sizes)), sizes))
    else:
        batches = [_sample_batch(case, n, seed, batch, size) for batch, size in enumerate(sizes)]
    return [sigma for batch in batches for sigma in batch]


def _tally_unit(case: CaseId, n: int, unit: Unit) -> Tuple[int, int]:
    # (candidates, candidates that do not generate S_n or A_n) of one work unit.
    _, tau_type, rho_type = resolve_triple_types(case, n)
    tau = canonical_perm(tau_type)
    candidates = other = 0
    for sigma in _TripleEnumerator(tau, rho_type).unit(*unit):
        candidates += 1
        if generation_test([sigma, tau], n) is GenerationResult.OTHER:
            other += 1
    return candidates, other


def certified_valid_count(case: CaseId, n: int, workers: int = 1) -> int:
    """Exact number of sigma whose triple generates S_n or A_n, without orbit closures.

    Candidates are enumerated only over :func:`weighted_units`. Their weighted number must equal the
    class-multiplication structure constant; the result is that constant net of the non-generating candidates.

    Args:
        case (CaseId): One of cases 1, 2, 4, 5.
        n (int): Odd degree between 7 and 21.
        workers (int): Worker processes.

    Returns:
        int: The certified count; divided by the centralizer order it is the number of classes.

    Raises:
        CongruenceError: If (case, n) is excluded.
        IdentityViolation: If the weighted candidate count disagrees with the structure constant.
    """
    _check_cell(case, n)
    sigma_type, tau_type, rho_type = resolve_triple_types(case, n)
    expected = structure_constant(sigma_type, rho_type, tau_type, n)
    units = weighted_units(canonical_perm(tau_type))
    keys = [(fixed, partner) for fixed, partner, _ in units]
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            tallies = list(executor.map(partial(_tally_unit, case, n), keys))
    else:
        tallies = [_tally_unit(case, n, key) for key in keys]
    candidates = sum(weight * found for (_, _, weight), (found, _) in zip(units, tallies))
    other = sum(weight * rejected for (_, _, weight), (_, rejected) in zip(units, tallies))
    if candidates != expected:
        raise IdentityViolation(f"weighted enumeration gives {candidates} candidates, structure constant {expected}")
    logger.info("%s n=%d: %d candidates, %d non-generating", case.value, n, expected, other)
    return expected - other


def count_triple_classes(
    case: CaseId,
    n: int,
    mode: SearchMode = SearchMode.EXHAUSTIVE,
    budget: Optional[int] = None,
    workers: int = 1,
    checkpoint: Optional[CheckpointStore] = None,
    seed: int = 0,
    chunk: Optional[int] = None,
    certify: bool = False,
) -> TripleCountResult:
    """Count classes of symmetric triples (sigma, tau, rho) for a ramification case and degree.

    tau is fixed to a canonical permutation of its cycle type. Involutions sigma with one fixed point are enumerated
    (or sampled), those with rho = sigma * tau^-1 of the right type that generate S_n or A_n with tau are kept, and
    orbits under conjugation by the centralizer of tau are counted.

    Args:
        case (CaseId): One of cases 1, 2, 4, 5.
        n (int): Odd degree between 7 and 21.
        mode (SearchMode): Exhaustive enumeration or random sampling.
        budget (int): Number of samples in random mode.
        workers (int): Worker processes.
        checkpoint (CheckpointStore): Optional store for resumable exhaustive runs.
        seed (int): Seed for random mode.
        chunk (int): Work units per checkpoint record.
        certify (bool): In random mode, also compute :func:`certified_valid_count`.

    Returns:
        TripleCountResult: The counts and certificates.

    Raises:
        CongruenceError: If (case, n) is excluded.
        IdentityViolation: If a run disagrees with the structure constant, the free-action count or the certified count.
    """
    started = time.perf_counter()
    _check_cell(case, n)
    sigma_type, tau_type, rho_type = resolve_triple_types(case, n)
    order = tau_type.centralizer_order
    expected = structure_constant(sigma_type, rho_type, tau_type, n)
    reps: Dict[Tuple[int, ...], GenerationResult] = {}
    valid = candidates = 0
    sizes: Dict[Tuple[int, ...], int] = {}
    samples: Optional[int] = None
    certified: Optional[int] = None

    if mode is SearchMode.EXHAUSTIVE:
        total = len(work_units(n))
        chunk = chunk or max(1, math.ceil(total / (4 * max(1, workers))))
        done = checkpoint.load(case, n) if checkpoint else []
        records = list(done)
        pending = _pending_ranges(total, done, chunk)
        if workers > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(_search_range, case, n, start, end) for start, end in pending]
                for future in as_completed(futures):
                    record = future.result()
                    if checkpoint:
                        checkpoint.append(record)
                    records.append(record)
        else:
            for start, end in pending:
                record = _search_range(case, n, start, end)
                if checkpoint:
                    checkpoint.append(record)
                records.append(record)
        for record in records:
            valid += record.valid
            candidates += record.candidates
            for rep in record.reps:
                reps[tuple(rep.sigma)] = rep.group
        if candidates != expected:
            raise IdentityViolation(f"enumerated {candidates} candidates, structure constant gives {expected}")
        if valid != len(reps) * order:
            raise IdentityViolation(f"{valid} valid sigma do not fill {len(reps)} free orbits of size {order}")
        certified = valid
    else:
        samples = budget or 0
        tau = canonical_perm(tau_type)
        closure = order <= ORBIT_CLOSURE_LIMIT
        gens = centralizer_generators(tau) if closure else []
        seen: Set[Perm] = set()
        labels: Set[Tuple[Tuple[int, ...], ...]] = set()
        for images in _sample(case, n, samples, seed, workers):
            candidates += 1
            sigma = Perm(images)
            if sigma in seen:
                valid += 1
                continue
            group = generation_test([sigma, tau], n)
            if group is GenerationResult.OTHER:
                continue
            valid += 1
            if closure:
                orbit = conjugation_orbit(sigma, gens)
                seen.update(orbit)
                reps[min(orbit).images] = group
                sizes[min(orbit).images] = len(orbit)
            else:
                # S_n and A_n have trivial centralizers, so the orbit is free and the label identifies it.
                label = canonical_label([sigma, tau])
                if label not in labels:
                    labels.add(label)
                    reps[sigma.images] = group
        if certify:
            certified = certified_valid_count(case, n, workers)
            if len(reps) * order > certified:
                raise IdentityViolation(f"found {len(reps)} classes, only {certified // order} certified")

    count = len(reps)
    an_classes = sum(1 for group in reps.values() if group is GenerationResult.AN)
    result = TripleCountResult(
        case=case,
        n=n,
        mode=mode,
        count=count,
        complete=mode is SearchMode.EXHAUSTIVE,
        orbit_sizes=[sizes.get(images, order) for images in sorted(reps)],
        sn_classes=count - an_classes,
        an_classes=an_classes,
        candidates=candidates,
        candidates_expected=expected,
        valid=valid,
        centralizer_order=order,
        certified_valid=certified,
        samples=samples,
        representatives=[str(Perm(images)) for images in sorted(reps)],
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "%s n=%d: %d classes (%s, %d Sn, %d An)", case.value, n, count, mode.value, count - an_classes, an_classes
    )
    return result


def _involutions_with_one_fixed_point(n: int) -> List[Perm]:
    found = []
    images = [-1] * n

    def pair_up() -> None:
        try:
            first = images.index(-1)
        except ValueError:
            found.append(Perm(tuple(images)))
            return
        for partner in range(first + 1, n):
            if images[partner] == -1:
                images[first], images[partner] = partner, first
                pair_up()
                images[first] = images[partner] = -1

    for fixed in range(n):
        images[fixed] = fixed
        pair_up()
        images[fixed] = -1
    return found


def _transposition_candidates(y: Perm) -> Iterator[Tuple[int, int]]:
    fixed = y.fixed_points
    for i, a in enumerate(fixed):
        for b in fixed[i + 1 :]:
            yield a, b
    for cycle in y.cycles:
        if 2 <= len(cycle) <= 4:
            for i, a in enumerate(cycle):
                for b in cycle[i + 1 :]:
                    yield a, b


def _tuple_orbit(perms: Tuple[Perm, ...], gens: Sequence[Perm]) -> List[Tuple[Perm, ...]]:
    seen = {perms}
    orbit = [perms]
    for current in orbit:
        for c in gens:
            image = tuple(p.conjugate(c) for p in current)
            if image not in seen:
                seen.add(image)
                orbit.append(image)
    return orbit


def count_case1_tuple_classes(n: int) -> Case1CensusResult:
    """Count classes of case-1 branch-cycle tuples (s1, ..., s5) of degree n.

    s1 is fixed to a canonical involution; for each (s2, s3) the transposition s5 is chosen so that
    s4 = (s1*s2*s3)^-1 * s5 is an involution with three fixed points. Tuples are kept when transitive and primitive
    (with a transposition present this means S_n) and counted up to conjugation by the centralizer of s1.

    Raises:
        DomainError: If n is even or smaller than 7.
        IdentityViolation: If the valid tuples do not fill free centralizer orbits.
    """
    started = time.perf_counter()
    one, _, _, three, _ = position_types(CaseId.CASE1, n)
    s1 = canonical_perm(one)
    gens = centralizer_generators(s1)
    order = one.centralizer_order
    involutions = _involutions_with_one_fixed_point(n)
    seen: Set[Tuple[Perm, ...]] = set()
    reps: List[Tuple[Perm, ...]] = []
    groups: Dict[Tuple[Perm, ...], GenerationResult] = {}
    valid = 0
    for s2 in involutions:
        s12 = s1 * s2
        for s3 in involutions:
            y = (s12 * s3).inverse()
            if max(len(cycle) for cycle in y.cycles) > 4:
                continue
            for a, b in _transposition_candidates(y):
                images = list(range(n))
                images[a], images[b] = b, a
                s5 = Perm(tuple(images))
                s4 = y * s5
                if s4.cycle_type() != three:
                    continue
                perms = (s1, s2, s3, s4, s5)
                if not is_transitive(perms, n) or not is_primitive(perms, n):
                    continue
                valid += 1
                if perms in seen:
                    continue
                orbit = _tuple_orbit(perms, gens)
                seen.update(orbit)
                rep = min(orbit, key=lambda t: tuple(p.images for p in t))
                reps.append(rep)
                groups[rep] = generation_test(list(rep), n)
    if valid != len(reps) * order:
        raise IdentityViolation(f"{valid} valid tuples do not fill {len(reps)} free orbits of size {order}")
    an_classes = sum(1 for group in groups.values() if group is GenerationResult.AN)
    if an_classes:
        logger.warning("%d case-1 classes of degree %d generate A_%d", an_classes, n, n)
    symmetric = sum(1 for rep in reps if is_symmetric(BranchTuple(CaseId.CASE1, rep)) is not None)
    logger.info("case1 n=%d: %d tuple classes, %d symmetric", n, len(reps), symmetric)
    return Case1CensusResult(
        n=n,
        count=len(reps),
        symmetric_classes=symmetric,
        sn_classes=len(reps) - an_classes,
        an_classes=an_classes,
        valid_with_fixed_s1=valid,
        elapsed=time.perf_counter() - started,
    )
