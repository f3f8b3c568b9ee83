"""Candidate parameter pairs (dimension, cardinality) and their admissible range.

A candidate is a pair ``(n, M)`` where ``n >= 3`` is the dimension of the
ambient space and ``M`` is the cardinality of a hypothetical spherical
4-distance 7-design on the unit sphere in R^n.  Cardinalities outside the
open-closed window ``(2*C(n+2,3), C(n+3,4) + C(n+2,3)]`` cannot support such
a configuration: the lower boundary is attained exactly by tight designs
(which are already classified), and values above the upper bound are ruled
out by the absolute bound on 4-distance sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class CandidateError(ValueError):
    """Raised when a (dimension, cardinality) pair is outside the admissible range."""


class TightBoundError(CandidateError):
    """Raised when the cardinality sits exactly on the tight-design boundary.

    Tight 4-distance 7-designs (attaining ``M = 2*C(n+2,3)``) exist only in
    dimensions 8 and 23 and are handled by the classical classification, not
    by this sieve.
    """


def cardinality_bounds(n: int) -> tuple[int, int]:
    """Return ``(lower, upper)`` with admissible cardinalities ``lower < M <= upper``.

    ``lower = 2*C(n+2,3)`` (tight-design boundary, excluded) and
    ``upper = C(n+3,4) + C(n+2,3)`` (absolute bound for 4-distance sets,
    included).

    >>> cardinality_bounds(7)
    (168, 294)
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise CandidateError(f"dimension must be an int, got {n!r}")
    if n < 3:
        raise CandidateError(f"dimension must be >= 3, got {n}")
    lower = 2 * comb(n + 2, 3)
    upper = comb(n + 3, 4) + comb(n + 2, 3)
    return lower, upper


@dataclass(frozen=True, slots=True)
class DesignCandidate:
    """A validated (dimension, cardinality) pair.

    Instances always satisfy ``n >= 3`` and
    ``2*C(n+2,3) < M <= C(n+3,4) + C(n+2,3)``; construction fails otherwise.
    """

    n: int
    M: int

    def __post_init__(self) -> None:
        lower, upper = cardinality_bounds(self.n)
        if not isinstance(self.M, int) or isinstance(self.M, bool):
            raise CandidateError(f"cardinality must be an int, got {self.M!r}")
        if self.M == lower:
            raise TightBoundError(
                f"M={self.M} attains the tight-design boundary 2*C(n+2,3) "
                f"for n={self.n}; tight designs are outside the sieve's scope"
            )
        if self.M < lower:
            raise CandidateError(
                f"M={self.M} is below the admissible window for n={self.n}: "
                f"need M > {lower}"
            )
        if self.M > upper:
            raise CandidateError(
                f"M={self.M} exceeds the absolute bound {upper} for n={self.n}"
            )

    @property
    def bounds(self) -> tuple[int, int]:
        return cardinality_bounds(self.n)


def iter_cardinalities(n: int) -> range:
    """All admissible cardinalities for dimension ``n`` in increasing order."""
    lower, upper = cardinality_bounds(n)
    return range(lower + 1, upper + 1)
