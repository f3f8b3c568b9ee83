"""Certified spectrum analysis of candidate pairs.

Given a pair (n, M) whose invariants ``XYZT`` and ``k_a k_b k_c k_d`` are
integers, the remaining test is whether the individual distance
multiplicities X, Y, Z, T (and the multiplicity coefficients k_a..k_d) are
integers.  These are rational functions of the four inner products
``a < b < c < d``, the real roots of the degree-4 polynomial attached to the
pair.  We enclose each root in an exact rational interval (Sturm isolation +
bisection), propagate the enclosures through the rational expressions with
exact interval arithmetic, and decide integrality with certified enclosures:

* ``CERTIFIED_NON_INTEGER`` — the enclosure provably contains no integer;
* ``NUMERICALLY_INTEGER`` — the enclosure pins down exactly one integer and
  is narrower than the confirmation threshold (not a proof of integrality);
* ``UNDECIDED`` — the enclosure is too wide; callers escalate precision.

Precision escalates geometrically from ``start_bits`` to ``max_bits``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt

from .candidates import DesignCandidate
from .formulas import quartic_coefficients
from .intervals import Interval
from .roots import isolate_real_roots, refine_root

__all__ = [
    "PrecisionPolicy",
    "InnerProductSpectrum",
    "SpectrumError",
    "DegenerateSpectrumError",
    "PrecisionExhaustedError",
    "solve_quartic",
    "spectrum_invariants_verdict",
    "distance_distribution",
    "nozaki_coefficients",
    "IntegralityStatus",
    "IntegralityVerdict",
    "integrality_test",
    "nozaki_bound",
]


@dataclass(frozen=True, slots=True)
class PrecisionPolicy:
    """Working-precision schedule for root enclosures (widths 2**-bits)."""

    start_bits: int = 128
    max_bits: int = 16384
    confirmation_bits: int = 64
    growth: int = 2

    def __post_init__(self) -> None:
        if self.start_bits < 4 or self.max_bits < self.start_bits:
            raise ValueError("need 4 <= start_bits <= max_bits")
        if self.growth < 2:
            raise ValueError("growth factor must be >= 2")
        if self.confirmation_bits < 1:
            raise ValueError("confirmation_bits must be positive")

    def schedule(self):
        bits = self.start_bits
        while True:
            yield min(bits, self.max_bits)
            if bits >= self.max_bits:
                return
            bits *= self.growth


class SpectrumError(Exception):
    """Base class for spectrum-analysis failures."""


class DegenerateSpectrumError(SpectrumError):
    """The quartic does not have four distinct real roots."""


class PrecisionExhaustedError(SpectrumError):
    """No decision could be reached at the maximum working precision."""


@dataclass(frozen=True, slots=True)
class InnerProductSpectrum:
    """Certified enclosures of the four inner products a < b < c < d."""

    n: int
    M: int
    a: Interval
    b: Interval
    c: Interval
    d: Interval
    precision_bits: int

    @property
    def intervals(self) -> tuple[Interval, Interval, Interval, Interval]:
        return (self.a, self.b, self.c, self.d)

    def midpoints(self) -> tuple[float, float, float, float]:
        return tuple(float(iv.midpoint) for iv in self.intervals)


def solve_quartic(n: int, M: int, precision_bits: int = 128) -> InnerProductSpectrum:
    """Isolate and refine the four real roots of the inner-product quartic.

    Raises :class:`DegenerateSpectrumError` when the quartic degenerates
    (leading coefficient zero or fewer than four distinct real roots), which
    already refutes the candidate: a 4-distance design needs four distinct
    admissible inner products.
    """
    coeffs = quartic_coefficients(n, M)
    if coeffs[0] == 0:
        raise DegenerateSpectrumError(
            f"leading coefficient vanishes for (n, M)=({n}, {M})"
        )
    isolating = isolate_real_roots(coeffs)
    if len(isolating) != 4:
        raise DegenerateSpectrumError(
            f"expected 4 distinct real inner products for (n, M)=({n}, {M}), "
            f"found {len(isolating)}"
        )
    width = Fraction(1, 2**precision_bits)
    a, b, c, d = (refine_root(coeffs, iv, width) for iv in isolating)
    return InnerProductSpectrum(n=n, M=M, a=a, b=b, c=c, d=d, precision_bits=precision_bits)


def spectrum_invariants_verdict(spec: InnerProductSpectrum) -> str:
    """Check the structural inequalities of a valid spectrum.

    A genuine spectrum satisfies ``-1 <= a``, ``b < 0 < c``, ``d < 1`` and
    ``|a| > |d| > |b| > |c|``.  Returns ``"ok"`` when all of these are
    certified, ``"undecided"`` when some comparison cannot be certified at
    the current enclosure width, and a description of the violated
    inequality otherwise.
    """
    a, b, c, d = spec.intervals
    abs_a, abs_b, abs_c, abs_d = a.abs(), b.abs(), c.abs(), d.abs()
    undecided = False

    # Non-strict lower bound: a is an inner product of unit vectors, so a >= -1.
    if a.hi < -1:
        return "spectrum inequality violated: a >= -1"
    if a.lo < -1:
        undecided = True

    # Each entry: (description, interval that must be strictly smaller, the other).
    strict_lt = (
        ("b < 0", b, Interval.point(0)),
        ("c > 0", Interval.point(0), c),
        ("d < 1", d, Interval.point(1)),
        ("|d| < |a|", abs_d, abs_a),
        ("|b| < |d|", abs_b, abs_d),
        ("|c| < |b|", abs_c, abs_b),
    )
    for name, left, right in strict_lt:
        if left.lo >= right.hi:
            return f"spectrum inequality violated: {name}"
        if not left.certainly_lt(right):
            undecided = True
    return "undecided" if undecided else "ok"


def _distance_terms(spec: InnerProductSpectrum):
    a, b, c, d = spec.intervals
    sq = {r: iv.square() for r, iv in zip("abcd", (a, b, c, d))}
    vals = dict(zip("abcd", (a, b, c, d)))
    return vals, sq


def distance_distribution(
    spec: InnerProductSpectrum,
) -> tuple[Interval, Interval, Interval, Interval]:
    """Certified enclosures of the distance multiplicities (X, Y, Z, T).

    ``X = -(1-b^2)(1-c^2)(1-d^2) / (a (a^2-b^2)(a^2-c^2)(a^2-d^2))`` and the
    three analogues obtained by permuting the distinguished root.  Raises
    ``ZeroDivisionError`` when a denominator enclosure straddles zero, which
    signals that the root enclosures are too wide and precision must be
    escalated.
    """
    vals, sq = _distance_terms(spec)
    order = "abcd"
    out = []
    for r in order:
        others = [s for s in order if s != r]
        num = Interval.point(-1)
        for s in others:
            num = num * (1 - sq[s])
        den = vals[r]
        for s in others:
            den = den * (sq[r] - sq[s])
        out.append(num / den)
    return tuple(out)


def nozaki_coefficients(
    spec: InnerProductSpectrum,
) -> tuple[Interval, Interval, Interval, Interval]:
    """Certified enclosures of the multiplicity coefficients (k_a, k_b, k_c, k_d).

    ``k_a = (1-b)(1-c)(1-d) / ((a-b)(a-c)(a-d))`` and its analogues.  They
    are integers summing to 1 for any genuine few-distance set.  Raises
    ``ZeroDivisionError`` when enclosures are too wide.
    """
    vals, _ = _distance_terms(spec)
    order = "abcd"
    out = []
    for r in order:
        others = [s for s in order if s != r]
        num = Interval.point(1)
        den = Interval.point(1)
        for s in others:
            num = num * (1 - vals[s])
            den = den * (vals[r] - vals[s])
        out.append(num / den)
    return tuple(out)


class IntegralityStatus(str, Enum):
    CERTIFIED_NON_INTEGER = "certified_non_integer"
    NUMERICALLY_INTEGER = "numerically_integer"
    UNDECIDED = "undecided"


@dataclass(frozen=True, slots=True)
class IntegralityVerdict:
    status: IntegralityStatus
    value: int | None = None


def integrality_test(
    enclosure: Interval, confirmation_bits: int = 64
) -> IntegralityVerdict:
    """Decide integrality of a quantity from a certified enclosure.

    Non-integrality verdicts are proofs; ``NUMERICALLY_INTEGER`` only means
    the enclosure pins a single integer at width below
    ``2**-confirmation_bits``.
    """
    if not enclosure.contains_integer():
        return IntegralityVerdict(IntegralityStatus.CERTIFIED_NON_INTEGER)
    v = enclosure.unique_integer()
    if v is not None and enclosure.width <= Fraction(1, 2**confirmation_bits):
        return IntegralityVerdict(IntegralityStatus.NUMERICALLY_INTEGER, value=v)
    return IntegralityVerdict(IntegralityStatus.UNDECIDED)


def nozaki_bound(n: int) -> int:
    """Upper bound for |k_a|, ..., |k_d| in dimension n (exact integer arithmetic).

    With ``N = n(n+1)(n+5)/6``, the bound is
    ``floor(1/2 + sqrt(N^2/(2N-2) + 1/4))``, i.e. the largest integer ``k``
    with ``(2k-1)^2 (2N-2) <= 4N^2 + 2N - 2``.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    N = n * (n + 1) * (n + 5) // 6
    X = 4 * N * N + 2 * N - 2
    t = isqrt(X // (2 * N - 2))
    if t % 2 == 0:
        t -= 1
    return (t + 1) // 2
