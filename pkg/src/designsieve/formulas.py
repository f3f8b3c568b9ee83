"""Exact closed-form quantities attached to a candidate pair (n, M).

Everything here is integer or rational arithmetic; no floating point.  The
central objects are:

* the shorthand quantities ``A = 6M - n(n+1)(n+5)`` and
  ``B = 3M - n(n+1)(n+2)``,
* the degree-4 inner-product polynomial whose roots are the four admissible
  inner products ``a < b < c < d`` of a hypothetical design,
* the degree-6 resultant-style polynomial ``R(n, M)`` that appears in the
  denominators of the two integrality invariants,
* the product invariant ``XYZT`` (product of the four distance multiplicities)
  and the multiplicity-vector product ``k_a k_b k_c k_d``, both of which must
  be integers for a design to exist.

All functions accept raw integers ``(n, M)`` so that boundary pairs that are
rejected at candidate construction (e.g. tight-design cardinalities) can
still be evaluated symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .candidates import DesignCandidate

__all__ = [
    "SingularDenominatorError",
    "DerivedQuantities",
    "shorthand_A",
    "shorthand_B",
    "quartic_coefficients",
    "r_poly_coefficients",
    "r_poly_terms",
    "r_poly_value",
    "moment",
    "xyzt_product",
    "nozaki_product",
    "quartic_discriminant",
    "discriminant_identity_check",
    "derived_quantities",
]


class SingularDenominatorError(ZeroDivisionError):
    """Raised when an invariant's denominator ``R(n, M)`` (or ``A``) vanishes."""


def shorthand_A(n: int, M: int) -> int:
    """``A = 6M - n(n+1)(n+5)``."""
    return 6 * M - n * (n + 1) * (n + 5)


def shorthand_B(n: int, M: int) -> int:
    """``B = 3M - n(n+1)(n+2)``."""
    return 3 * M - n * (n + 1) * (n + 2)


def quartic_coefficients(n: int, M: int) -> tuple[int, int, int, int, int]:
    """Coefficients ``(c4, c3, c2, c1, c0)`` of the inner-product quartic.

    f(t) = (n+2)(n+4)A t^4 + n(n-1)(n+1)(n+2)(n+4) t^3
           - 9(n+2)(4M - n(n+1)(n+3)) t^2 - 3n(n-1)(n+1)(n+2) t + 6B
    """
    A = shorthand_A(n, M)
    B = shorthand_B(n, M)
    c4 = (n + 2) * (n + 4) * A
    c3 = n * (n - 1) * (n + 1) * (n + 2) * (n + 4)
    c2 = -9 * (n + 2) * (4 * M - n * (n + 1) * (n + 3))
    c1 = -3 * n * (n - 1) * (n + 1) * (n + 2)
    c0 = 6 * B
    return c4, c3, c2, c1, c0


def r_poly_terms(n: int) -> tuple[int, int, int, int, int, int, int]:
    """Coefficients ``(r6, r5, r4, r3, r2, r1, r0)`` of ``R(n, M)`` in ``M``.

    Each entry is written term-by-term following the closed form, so this
    doubles as a transcription record:

    R(n,M) = 2^14 3^6 M^6
           - 2^13 3^7 n(n+1)(n+3) M^5
           + 2^9 3^5 n^2(n+1)(n^4+93n^3+629n^2+1339n+818) M^4
           - 2^7 3^4 n^3(n+1)^2(13n^5+436n^4+3688n^3+12782n^2+19163n+9998) M^3
           + 2^2 3^3 n^4(n+1)^3(n+2)(n+7)^2(5n^4+447n^3+3303n^2+7873n+5652) M^2
           - 2^2 3^3 n^5(n+1)^4(n+2)^2(n+5)^2(n+7)^3(3n+5) M
           + n^6(n+1)^5(n+2)^3(n+5)^3(n+7)^4
    """
    r6 = 2**14 * 3**6
    r5 = -(2**13) * 3**7 * n * (n + 1) * (n + 3)
    r4 = (
        2**9 * 3**5 * n**2 * (n + 1)
        * (n**4 + 93 * n**3 + 629 * n**2 + 1339 * n + 818)
    )
    r3 = -(
        2**7 * 3**4 * n**3 * (n + 1) ** 2
        * (13 * n**5 + 436 * n**4 + 3688 * n**3 + 12782 * n**2 + 19163 * n + 9998)
    )
    r2 = (
        2**2 * 3**3 * n**4 * (n + 1) ** 3 * (n + 2) * (n + 7) ** 2
        * (5 * n**4 + 447 * n**3 + 3303 * n**2 + 7873 * n + 5652)
    )
    r1 = -(
        2**2 * 3**3 * n**5 * (n + 1) ** 4 * (n + 2) ** 2
        * (n + 5) ** 2 * (n + 7) ** 3 * (3 * n + 5)
    )
    r0 = n**6 * (n + 1) ** 5 * (n + 2) ** 3 * (n + 5) ** 3 * (n + 7) ** 4
    return r6, r5, r4, r3, r2, r1, r0


# Kept as a separate alias so callers can ask for "the coefficients" without
# caring that the canonical source is the term-by-term transcription.
r_poly_coefficients = r_poly_terms


def r_poly_value(n: int, M: int) -> int:
    """Evaluate ``R(n, M)`` exactly (Horner's scheme in ``M``)."""
    acc = 0
    for coeff in r_poly_terms(n):
        acc = acc * M + coeff
    return acc


def moment(i: int, n: int) -> Fraction:
    """The ``i``-th moment ``f_i`` of the inner product on the unit sphere in R^n.

    Defined for ``0 <= i <= 7``: odd moments vanish and
    ``f_0 = 1``, ``f_2 = 1/n``, ``f_4 = 3/(n(n+2))``, ``f_6 = 15/(n(n+2)(n+4))``.
    """
    if not isinstance(i, int) or isinstance(i, bool) or not (0 <= i <= 7):
        raise ValueError(f"moment order must be an integer in [0, 7], got {i!r}")
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    if i % 2 == 1:
        return Fraction(0)
    if i == 0:
        return Fraction(1)
    if i == 2:
        return Fraction(1, n)
    if i == 4:
        return Fraction(3, n * (n + 2))
    return Fraction(15, n * (n + 2) * (n + 4))


def xyzt_product(n: int, M: int) -> Fraction:
    """The invariant ``XYZT = M^3 (n-1)^2 (n+4)^4 A^7 / (54 n^4 (n+1)^2 R(n,M))``.

    Exact rational value; integral for every actual design.  Raises
    :class:`SingularDenominatorError` if ``R(n, M) = 0``.
    """
    R = r_poly_value(n, M)
    if R == 0:
        raise SingularDenominatorError(
            f"R(n, M) vanishes for (n, M)=({n}, {M}); XYZT is undefined"
        )
    A = shorthand_A(n, M)
    num = M**3 * (n - 1) ** 2 * (n + 4) ** 4 * A**7
    den = 54 * n**4 * (n + 1) ** 2 * R
    return Fraction(num, den)


def nozaki_product(n: int, M: int) -> Fraction:
    """The invariant ``k_a k_b k_c k_d = 2 M^3 (n+1)(n+4)^2 (n-1)^3 A^3 / R(n,M)``.

    Exact rational value; integral for every actual design.  Raises
    :class:`SingularDenominatorError` if ``R(n, M) = 0``.
    """
    R = r_poly_value(n, M)
    if R == 0:
        raise SingularDenominatorError(
            f"R(n, M) vanishes for (n, M)=({n}, {M}); the multiplicity product "
            "is undefined"
        )
    A = shorthand_A(n, M)
    num = 2 * M**3 * (n + 1) * (n + 4) ** 2 * (n - 1) ** 3 * A**3
    return Fraction(num, R)


def quartic_discriminant(n: int, M: int) -> int:
    """Discriminant of the inner-product quartic, via the standard closed form."""
    a, b, c, d, e = quartic_coefficients(n, M)
    return (
        256 * a**3 * e**3
        - 192 * a**2 * b * d * e**2
        - 128 * a**2 * c**2 * e**2
        + 144 * a**2 * c * d**2 * e
        - 27 * a**2 * d**4
        + 144 * a * b**2 * c * e**2
        - 6 * a * b**2 * d**2 * e
        - 80 * a * b * c**2 * d * e
        + 18 * a * b * c * d**3
        + 16 * a * c**4 * e
        - 4 * a * c**3 * d**2
        - 27 * b**4 * e**2
        + 18 * b**3 * c * d * e
        - 4 * b**3 * d**3
        - 4 * b**2 * c**3 * e
        + b**2 * c**2 * d**2
    )


def discriminant_identity_check(n: int, M: int) -> bool:
    """Verify ``disc(f) = c4^6 * 108 (n+1)^2 R(n,M) / ((n+2)^3 (n+4)^5 A^6)``.

    This identity ties the independent discriminant computation to the
    transcribed ``R`` polynomial; it holds for every pair with ``A != 0`` and
    serves as a guard against transcription errors in either formula.
    """
    A = shorthand_A(n, M)
    if A == 0:
        raise SingularDenominatorError(
            f"A vanishes for (n, M)=({n}, {M}); the identity is indeterminate"
        )
    c4 = quartic_coefficients(n, M)[0]
    lhs = Fraction(quartic_discriminant(n, M))
    rhs = Fraction(
        c4**6 * 108 * (n + 1) ** 2 * r_poly_value(n, M),
        (n + 2) ** 3 * (n + 4) ** 5 * A**6,
    )
    return lhs == rhs


@dataclass(frozen=True, slots=True)
class DerivedQuantities:
    """Exact derived data for a pair (n, M): shorthands, quartic, R, invariants."""

    n: int
    M: int
    A: int
    B: int
    quartic: tuple[int, int, int, int, int]
    r_value: int
    xyzt: Fraction | None
    nozaki: Fraction | None

    @property
    def xyzt_integer(self) -> bool:
        return self.xyzt is not None and self.xyzt.denominator == 1

    @property
    def nozaki_integer(self) -> bool:
        return self.nozaki is not None and self.nozaki.denominator == 1


def derived_quantities(candidate: DesignCandidate | tuple[int, int]) -> DerivedQuantities:
    """Compute all derived quantities for a candidate (or a raw ``(n, M)`` pair).

    When ``R(n, M) = 0`` the two rational invariants are reported as ``None``
    (the pair cannot be refuted through them and must go to spectrum analysis).
    """
    if isinstance(candidate, DesignCandidate):
        n, M = candidate.n, candidate.M
    else:
        n, M = candidate
    R = r_poly_value(n, M)
    if R == 0:
        xyzt = nozaki = None
    else:
        xyzt = xyzt_product(n, M)
        nozaki = nozaki_product(n, M)
    return DerivedQuantities(
        n=n,
        M=M,
        A=shorthand_A(n, M),
        B=shorthand_B(n, M),
        quartic=quartic_coefficients(n, M),
        r_value=R,
        xyzt=xyzt,
        nozaki=nozaki,
    )
