# type: ignore
# pylint: disable=missing-function-docstring
import random

import pytest

from cognite.g2locus.coverings import (
    BranchTuple,
    CaseId,
    SymTriple,
    congruence_gate,
    find_conjugator,
    is_symmetric,
    position_types,
    primed_tuple,
    resolve_triple_types,
    triple_failures,
    triple_to_tuple,
    tuple_failures,
    validate_tuple,
)
from cognite.g2locus.exceptions import CertificateError, CongruenceError, DomainError, UnsupportedCaseError
from cognite.g2locus.permutations import (
    GenerationResult,
    Perm,
    canonical_label,
    canonical_perm,
    generation_test,
    is_transitive,
)
from cognite.g2locus.search import (
    _involutions_with_one_fixed_point,
    _transposition_candidates,
    count_triple_classes,
)

GATED_CELLS = [(case, n) for case in CaseId for n in range(7, 22, 2) if congruence_gate(case, n)]


def _product_one_tuple(case, n, rng):
    perms = [Perm.random(n, rng) for _ in range(case.length - 1)]
    product = Perm.identity(n)
    for p in perms:
        product = product * p
    return BranchTuple(case, tuple(perms) + (product.inverse(),))


@pytest.fixture(scope="module")
def case1_triple():
    n = 9
    result = count_triple_classes(CaseId.CASE1, n)
    tau = canonical_perm(resolve_triple_types(CaseId.CASE1, n)[1])
    return SymTriple.from_pair(Perm.parse(n, result.representatives[0]), tau, CaseId.CASE1)


@pytest.mark.parametrize(
    "test_input, expected_result",
    [(1, CaseId.CASE1), (3, CaseId.CASE3), (5, CaseId.CASE5)],
)
def test_case_id_from_number(test_input, expected_result):
    case = CaseId.from_number(test_input)
    assert case is expected_result
    assert case.number == test_input
    assert case.length == (5 if test_input == 1 else 4)


def test_case_id_exception():
    with pytest.raises(DomainError):
        CaseId.from_number(6)


@pytest.mark.parametrize(
    "case, allowed",
    [
        (CaseId.CASE1, [9, 11, 15, 17, 21]),
        (CaseId.CASE2, [7, 9, 13, 15, 19, 21]),
        (CaseId.CASE3, []),
        (CaseId.CASE4, [7, 11, 15, 19]),
        (CaseId.CASE5, [9, 13, 17, 21]),
    ],
)
def test_congruence_gate(case, allowed):
    assert [n for n in range(7, 22, 2) if congruence_gate(case, n)] == allowed


@pytest.mark.parametrize("n", [6, 5, 10])
def test_congruence_gate_exception(n):
    with pytest.raises(DomainError):
        congruence_gate(CaseId.CASE1, n)


@pytest.mark.parametrize("case", list(CaseId))
def test_position_types_riemann_hurwitz(case):
    for n in range(7, 22, 2):
        types = position_types(case, n)
        assert len(types) == case.length
        assert all(t.n == n for t in types)
        assert sum(t.index for t in types) == 2 * (n - 1)


def test_position_types_case1():
    types = position_types(CaseId.CASE1, 9)
    assert [str(t) for t in types] == ["2+2+2+2+1"] * 3 + ["2+2+2+1+1+1", "2+1+1+1+1+1+1+1"]


@pytest.mark.parametrize("case, n", GATED_CELLS)
def test_resolve_triple_types(case, n):
    sigma, tau, rho = resolve_triple_types(case, n)
    assert sigma.parts == (2,) * ((n - 1) // 2) + (1,)
    assert tau.n == rho.n == n
    assert sigma.index + tau.index + rho.index == 2 * (n - 1)


@pytest.mark.parametrize(
    "case, n, expected_tau, expected_rho",
    [
        (CaseId.CASE1, 9, "6+3", "3+3+2+1"),
        (CaseId.CASE2, 7, "3+3+1", "4+3"),
        (CaseId.CASE4, 7, "4+3", "4+2+1"),
        (CaseId.CASE5, 9, "4+4+1", "4+3+2"),
    ],
)
def test_resolve_triple_types_values(case, n, expected_tau, expected_rho):
    _, tau, rho = resolve_triple_types(case, n)
    assert (str(tau), str(rho)) == (expected_tau, expected_rho)


@pytest.mark.parametrize(
    "case, n, expected_error",
    [
        (CaseId.CASE1, 7, CongruenceError),
        (CaseId.CASE2, 11, CongruenceError),
        (CaseId.CASE4, 9, CongruenceError),
        (CaseId.CASE5, 7, CongruenceError),
        (CaseId.CASE3, 7, UnsupportedCaseError),
        (CaseId.CASE1, 8, DomainError),
    ],
)
def test_resolve_triple_types_exception(case, n, expected_error):
    with pytest.raises(expected_error):
        resolve_triple_types(case, n)


def test_branch_tuple_exception():
    with pytest.raises(DomainError):
        BranchTuple(CaseId.CASE2, (Perm.identity(7),) * 5)
    with pytest.raises(DomainError):
        BranchTuple(CaseId.CASE2, (Perm.identity(7),) * 3 + (Perm.identity(9),))


def test_primed_tuple_case1_cubes_to_conjugation_by_s4():
    rng = random.Random(31)
    for _ in range(5):
        t = _product_one_tuple(CaseId.CASE1, 9, rng)
        assert primed_tuple(primed_tuple(primed_tuple(t))) == t.conjugate(t.perms[3].inverse())


def test_primed_tuple_case2_has_order_three():
    rng = random.Random(32)
    for _ in range(5):
        t = _product_one_tuple(CaseId.CASE2, 7, rng)
        assert primed_tuple(primed_tuple(primed_tuple(t))) == t


def test_primed_tuple_case5_squares_to_conjugation():
    rng = random.Random(33)
    for _ in range(5):
        t = _product_one_tuple(CaseId.CASE5, 9, rng)
        s2 = t.perms[1]
        assert primed_tuple(primed_tuple(t)) == t.conjugate(s2.inverse())


def test_primed_tuple_case4_squares_to_conjugation():
    rng = random.Random(34)
    for _ in range(5):
        t = _product_one_tuple(CaseId.CASE4, 7, rng)
        s1, s2 = t.perms[0], t.perms[1]
        g = s1.conjugate(s2)
        assert primed_tuple(primed_tuple(t)) == t.conjugate(g.inverse())


def test_primed_tuple_preserves_product():
    rng = random.Random(35)
    for case in (CaseId.CASE1, CaseId.CASE2, CaseId.CASE4, CaseId.CASE5):
        t = _product_one_tuple(case, 11, rng)
        assert primed_tuple(t).product().is_identity()


def test_primed_tuple_exception():
    with pytest.raises(UnsupportedCaseError):
        primed_tuple(BranchTuple(CaseId.CASE3, (Perm.identity(7),) * 4))


def test_find_conjugator():
    rng = random.Random(36)
    checked = 0
    while checked < 10:
        source = [Perm.random(9, rng), Perm.random(9, rng)]
        if not is_transitive(source, 9):
            continue
        checked += 1
        c = Perm.random(9, rng)
        target = [p.conjugate(c) for p in source]
        found = find_conjugator(source, target)
        assert found is not None
        assert [p.conjugate(found) for p in source] == target
    assert find_conjugator([Perm.parse(5, "(1 2 3 4 5)")], [Perm.parse(5, "(1 2)")]) is None


def test_triple_to_tuple(case1_triple):
    assert not triple_failures(case1_triple)
    t = triple_to_tuple(case1_triple)
    assert validate_tuple(t)
    assert t.perms[0] == case1_triple.sigma
    assert t.perms[3] == case1_triple.tau**3
    assert primed_tuple(t) == t.conjugate(case1_triple.tau)
    c = is_symmetric(t)
    assert c is not None
    assert primed_tuple(t) == t.conjugate(c)


def test_tuple_failures():
    t = BranchTuple(CaseId.CASE2, (Perm.parse(7, "(1 2)"),) + (Perm.identity(7),) * 3)
    failures = tuple_failures(t)
    assert "product is the identity" in failures
    assert "s1 has cycle type 2+2+2+1" in failures
    assert "transitive" in failures
    assert not validate_tuple(t)


def test_triple_to_tuple_exception(case1_triple):
    with pytest.raises(UnsupportedCaseError):
        triple_to_tuple(SymTriple.from_pair(case1_triple.sigma, case1_triple.tau, CaseId.CASE2))
    with pytest.raises(CertificateError):
        triple_to_tuple(SymTriple.from_pair(Perm.identity(9), case1_triple.tau, CaseId.CASE1))
    assert triple_failures(SymTriple(case1_triple.sigma, case1_triple.tau, case1_triple.sigma, CaseId.CASE1))


def _census_tuples(n, limit):
    one, _, _, three, _ = position_types(CaseId.CASE1, n)
    s1 = canonical_perm(one)
    involutions = _involutions_with_one_fixed_point(n)
    found = []
    for s2 in involutions:
        for s3 in involutions:
            y = (s1 * s2 * s3).inverse()
            for a, b in _transposition_candidates(y):
                images = list(range(n))
                images[a], images[b] = b, a
                s5 = Perm(tuple(images))
                t = BranchTuple(CaseId.CASE1, (s1, s2, s3, y * s5, s5))
                if t.perms[3].cycle_type() == three and validate_tuple(t):
                    found.append(t)
                    if len(found) == limit:
                        return found
    return found


def test_primed_tuple_preserves_validity():
    tuples = _census_tuples(7, 25)
    assert len(tuples) == 25
    for t in tuples:
        assert validate_tuple(primed_tuple(t))
        assert validate_tuple(primed_tuple(primed_tuple(t)))


def test_primed_tuple_preserves_validity_of_symmetric_tuples(case1_triple):
    t = triple_to_tuple(case1_triple)
    assert validate_tuple(primed_tuple(t))


@pytest.mark.parametrize("case, n", [(CaseId.CASE1, 9), (CaseId.CASE2, 7), (CaseId.CASE4, 7), (CaseId.CASE5, 9)])
def test_class_count_does_not_depend_on_tau(case, n):
    result = count_triple_classes(case, n)
    _, tau_type, rho_type = resolve_triple_types(case, n)
    tau = canonical_perm(tau_type)
    expected_labels = {canonical_label([Perm.parse(n, text), tau]) for text in result.representatives}
    other_tau = tau.conjugate(Perm.random(n, random.Random(37)))
    labels = set()
    valid = 0
    for sigma in _involutions_with_one_fixed_point(n):
        if (sigma * other_tau.inverse()).cycle_type() != rho_type:
            continue
        if generation_test([sigma, other_tau], n) is GenerationResult.OTHER:
            continue
        assert not triple_failures(SymTriple.from_pair(sigma, other_tau, case))
        valid += 1
        labels.add(canonical_label([sigma, other_tau]))
    assert valid == result.valid
    assert labels == expected_labels
    assert len(labels) == result.count


def test_validate_tuple_rejects_three_cycle_in_last_position(case1_triple):
    s1, s2, s3, _, _ = triple_to_tuple(case1_triple).perms
    s5 = Perm.parse(9, "(1 2 3)")
    t = BranchTuple(CaseId.CASE1, (s1, s2, s3, (s5 * s1 * s2 * s3).inverse(), s5))
    assert t.product().is_identity()
    assert "s5 has cycle type 2+1+1+1+1+1+1+1" in tuple_failures(t)
    assert not validate_tuple(t)
