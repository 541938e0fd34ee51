"""Exceptions raised by g2locus."""


class G2LocusError(Exception):
    """Common exception for g2locus."""


class DomainError(G2LocusError, ValueError):
    """An input violates the precondition of an operation."""


class DegenerateError(DomainError):
    """The (u, v) point or sextic is degenerate, i.e. Delta(u, v) = 0 or the discriminant vanishes."""


class J2ZeroError(DomainError):
    """Absolute invariants are undefined because J2 = 0."""


class InversionSingularError(DomainError):
    """The inversion cubic cannot be used at this moduli point (J2 = 0 or every root has u = -15)."""


class NotOnLocusError(DomainError):
    """No (u, v) point reproduces the given invariants."""


class CongruenceError(DomainError):
    """The (case, n) cell is excluded by the order/congruence constraints."""


class UnsupportedCaseError(DomainError):
    """The operation has no definition for the requested case."""


class CertificateError(DomainError):
    """A constructed object fails its own validity certificate.

    Attributes:
        condition (str): Name of the failing condition.
    """

    def __init__(self, condition: str) -> None:
        """Initialize with the failing condition.

        Args:
            condition (str): Name of the failing condition.
        """
        super().__init__(f"certificate failed: {condition}")
        self.condition = condition


class IdentityViolation(G2LocusError):
    """A polynomial identity or internal consistency check failed."""


class ReconstructionError(IdentityViolation):
    """A nullspace reconstruction was ill-posed (unexpected dimension or inconsistent normalization)."""


class CheckpointError(G2LocusError):
    """A checkpoint file could not be read or does not belong to the current search."""
