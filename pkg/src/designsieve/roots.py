"""Certified real-root isolation for integer-coefficient polynomials.

Implements Sturm sequences with exact arithmetic (integer primitive-part
remainders, rational evaluation points), giving:

* exact counts of distinct real roots in half-open intervals (a, b],
* isolation of all real roots into disjoint rational intervals,
* bisection refinement of an isolating interval to any requested width.

Polynomials are sequences of coefficients in *descending* degree order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .intervals import Interval

__all__ = [
    "poly_eval",
    "poly_derivative",
    "sturm_sequence",
    "count_roots",
    "root_bound",
    "isolate_real_roots",
    "refine_root",
]

Poly = tuple[int, ...]


def _trim(coeffs) -> tuple:
    coeffs = tuple(coeffs)
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    return coeffs[i:]


def poly_eval(coeffs, x: Fraction) -> Fraction:
    """Evaluate at ``x`` by Horner's scheme (exact)."""
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_derivative(coeffs) -> tuple:
    coeffs = _trim(coeffs)
    n = len(coeffs) - 1
    return _trim(c * (n - i) for i, c in enumerate(coeffs[:-1]))


def _primitive(coeffs: tuple) -> Poly:
    """Scale a rational polynomial by a positive constant to primitive ints."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return ()
    fracs = [Fraction(c) for c in coeffs]
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def _poly_rem(num: Poly, den: Poly) -> tuple:
    """Remainder of polynomial division (exact, rational coefficients)."""
    num_f = [Fraction(c) for c in num]
    den_f = [Fraction(c) for c in den]
    dn, dd = len(num_f) - 1, len(den_f) - 1
    while dn >= dd and num_f:
        factor = num_f[0] / den_f[0]
        for i in range(dd + 1):
            num_f[i] -= factor * den_f[i]
        num_f = num_f[1:]
        while num_f and num_f[0] == 0:
            num_f = num_f[1:]
        dn = len(num_f) - 1
    return tuple(num_f)


def sturm_sequence(coeffs) -> list[Poly]:
    """The Sturm chain of ``coeffs`` (primitive integer representatives)."""
    p0 = _primitive(coeffs)
    if len(p0) <= 1:
        return [p0] if p0 else []
    chain = [p0, _primitive(poly_derivative(p0))]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        rem = _primitive(rem)
        if not rem:
            break
        chain.append(tuple(-c for c in rem))
    return chain


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = poly_eval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    if a >= b:
        return 0
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def root_bound(coeffs) -> Fraction:
    """Cauchy bound: every real root lies strictly inside [-bound, bound]."""
    coeffs = _trim(coeffs)
    if len(coeffs) <= 1:
        return Fraction(1)
    lead = abs(coeffs[0])
    m = max(abs(c) for c in coeffs[1:])
    return 1 + Fraction(m, lead)


def _nonroot_split(coeffs, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of ``coeffs``."""
    width = hi - lo
    for num, den in ((1, 2), (1, 3), (2, 5), (3, 7), (5, 11), (7, 13)):
        x = lo + width * Fraction(num, den)
        if poly_eval(coeffs, x) != 0:
            return x
    # A polynomial has finitely many roots, so a fine enough rational grid
    # must contain a non-root.
    k = 16
    while True:
        for j in range(1, k):
            x = lo + width * Fraction(j, k)
            if poly_eval(coeffs, x) != 0:
                return x
        k *= 2


def isolate_real_roots(coeffs) -> list[Interval]:
    """Disjoint intervals, each containing exactly one distinct real root.

    Returned intervals are half-open in spirit — the left endpoint is never
    a root; the right endpoint may be.  They are sorted increasingly.
    """
    p = _primitive(coeffs)
    if len(p) <= 1:
        if p and p[0] != 0:
            return []
        raise ValueError("cannot isolate roots of the zero polynomial")
    chain = sturm_sequence(p)
    bound = root_bound(p)
    lo, hi = -bound, bound
    total = count_roots(chain, lo, hi)
    out: list[Interval] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(Interval(a, b))
            continue
        mid = _nonroot_split(p, a, b)
        k_left = count_roots(chain, a, mid)
        stack.append((a, mid, k_left))
        stack.append((mid, b, k - k_left))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(coeffs, interval: Interval, max_width: Fraction) -> Interval:
    """Shrink an isolating interval to width <= max_width by exact bisection.

    The input must contain exactly one distinct root, with the left endpoint
    not a root.  If the root is hit exactly, a point interval is returned.
    """
    p = _primitive(coeffs)
    lo, hi = interval.lo, interval.hi
    f_lo = poly_eval(p, lo)
    if f_lo == 0:
        raise ValueError("left endpoint of an isolating interval must not be a root")
    f_hi = poly_eval(p, hi)
    if f_hi == 0:
        return Interval.point(hi)
    chain = None
    if (f_lo > 0) == (f_hi > 0):
        # Even-multiplicity root: fall back to Sturm-count bisection.
        chain = sturm_sequence(p)
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        f_mid = poly_eval(p, mid)
        if f_mid == 0:
            return Interval.point(mid)
        if chain is None:
            if (f_mid > 0) == (f_lo > 0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        else:
            if count_roots(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
    return Interval(lo, hi)
