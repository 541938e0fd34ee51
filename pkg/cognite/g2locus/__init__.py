"""Initialize the g2locus package."""

from .autgroup import AutGroupType, BranchSet, classify_sextic, classify_uv
from .coverings import BranchTuple, CaseId, SymTriple, is_symmetric, primed_tuple, triple_to_tuple, validate_tuple
from .elliptic_locus import JPair, UVPoint, igusa_from_uv, jpair_from_uv, l2_equation, uv_from_igusa, uv_from_s
from .igusa import BinarySextic, IgusaInvariants, igusa_invariants, moduli_equal
from .permutations import CycleType, Perm, generation_test
from .search import certified_valid_count, count_case1_tuple_classes, count_triple_classes

__version__ = "0.1.0"
__all__ = [
    "AutGroupType",
    "BinarySextic",
    "BranchSet",
    "BranchTuple",
    "CaseId",
    "CycleType",
    "IgusaInvariants",
    "JPair",
    "Perm",
    "SymTriple",
    "UVPoint",
    "certified_valid_count",
    "classify_sextic",
    "classify_uv",
    "count_case1_tuple_classes",
    "count_triple_classes",
    "generation_test",
    "igusa_from_uv",
    "igusa_invariants",
    "is_symmetric",
    "jpair_from_uv",
    "l2_equation",
    "moduli_equal",
    "primed_tuple",
    "triple_to_tuple",
    "uv_from_igusa",
    "uv_from_s",
    "validate_tuple",
]
