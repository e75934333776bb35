"""Exception hierarchy for framelat."""


class FramelatError(Exception):
    """Base class for all framelat errors."""


class NonIntegralGram(FramelatError):
    """The scale does not divide some entry of B * B^T."""


class RankDeficient(FramelatError):
    """A basis expected to have full row rank does not."""


class NotSelfOrthogonal(FramelatError):
    """G * G^T is nonzero mod k."""


class NotSelfDual(FramelatError):
    """Code is self-orthogonal but too small to be self-dual."""


class NotUnimodular(FramelatError):
    """Construction A produced a lattice with Gram determinant != 1."""


class NotValidPrime(FramelatError):
    """Prime argument outside the required residue class."""


class ConditionViolated(FramelatError):
    """A two-block matrix precondition failed; the message names it."""


class TooLarge(FramelatError):
    """Direct enumeration would exceed the iteration guard."""


class BudgetExceeded(FramelatError):
    """Enumeration node budget exhausted before the search finished."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class LatticeIsEven(FramelatError):
    """Shadow requested for an even lattice."""


class DimensionNotDiv8(FramelatError):
    """Even neighbors need dimension divisible by 8."""


class DimensionNotDiv4(FramelatError):
    """Frame scaling needs dimension divisible by 4."""


class BadVector(FramelatError):
    """Vector fails the neighbor-construction preconditions."""


class CongruenceViolated(FramelatError):
    """Frame parameters (a, b, c, d) break the defining congruences."""


class NotInLattice(FramelatError):
    """A vector claimed to lie in a lattice does not."""


class InvalidFrame(FramelatError):
    """Vectors do not form a valid frame of the host lattice."""


class UnknownLattice(FramelatError):
    """Name missing from the frame-admissibility table."""


class UnknownName(FramelatError):
    """Name missing from the catalog."""


class UnsupportedTheorem(FramelatError):
    """No verification job registered under this id."""


class UnsupportedFrameOrder(FramelatError):
    """No admissible prime factorization yields a frame of this order."""


class DataIntegrityError(FramelatError):
    """Catalog data file missing or failing its checksum."""
