"""Divisibility sieve on candidate pairs (n, M).

Two families of necessary conditions are implemented, both consequences of
the integrality of the product invariant ``XYZT``:

* a ten-case criterion on the prime factors of ``n`` (cases a, b1-b3, c1-c2,
  d1-d4) concluding ``n | m*M`` for a case-dependent multiplier
  ``m in {1, 2, 3, 4, 6, 12}``;
* a four-case criterion on the prime factors of ``n + 1`` (cases a-d)
  concluding divisibilities of ``M^2`` or ``M^4``.

The *coarse* sieve is the uniform weakening of both criteria
(``n | 12M`` and ``n+1 | 4M^2``), cheap enough for vectorized bulk scanning;
the *fine* sieve dispatches on the exact case.

The ten printed cases of the first criterion do not cover one corner of the
parameter space: ``6 | n`` with ``v3(n) != 1 + v3(M)`` but
``v2(n) in {2, 1 + v2(M)}``.  For such pairs we fall back to the uniform
conclusion ``n | 12M`` (which always holds) and label the verdict
``fallback``.  Where two cases overlap (b2/b3 and d3/d4, both possible when
``v2(n) = 2 = 1 + v2(M)``) we deterministically select the case with the
weaker conclusion (larger multiplier), which is always sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

__all__ = [
    "p_adic_valuation",
    "Lemma3Case",
    "Lemma5Case",
    "LemmaVerdict",
    "lemma3_verdict",
    "lemma5_verdict",
    "coarse_sieve",
    "fine_sieve",
]

_SMALL_PRIMES = {2, 3, 5, 7, 11, 13}


def _is_prime(p: int) -> bool:
    if p in _SMALL_PRIMES:
        return True
    if p < 2 or p % 2 == 0 or p % 3 == 0:
        return False
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


def p_adic_valuation(x: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``x``; requires ``x != 0`` and prime ``p``."""
    if x == 0:
        raise ValueError("the p-adic valuation of 0 is undefined (infinite)")
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class Lemma3Case(str, Enum):
    """Case labels of the n-divisibility criterion (plus the fallback)."""

    A = "a"
    B1 = "b1"
    B2 = "b2"
    B3 = "b3"
    C1 = "c1"
    C2 = "c2"
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    D4 = "d4"
    FALLBACK = "fallback"


class Lemma5Case(str, Enum):
    """Case labels of the (n+1)-divisibility criterion."""

    A = "a"
    B = "b"
    C = "c"
    D = "d"


@dataclass(frozen=True, slots=True)
class LemmaVerdict:
    """Outcome of one sieve criterion on a pair (n, M).

    ``required_divisibility`` is a human-readable statement of the exact
    condition tested (e.g. ``"7 | 2*M"``); ``passed`` records whether the
    pair satisfies it.
    """

    passed: bool
    case: str
    required_divisibility: str


def lemma3_verdict(n: int, M: int) -> LemmaVerdict:
    """Case-exact n-divisibility verdict for the pair (n, M)."""
    v2n = p_adic_valuation(n, 2) if n % 2 == 0 else 0
    v3n = p_adic_valuation(n, 3) if n % 3 == 0 else 0
    v2M = p_adic_valuation(M, 2)
    v3M = p_adic_valuation(M, 3)
    three_eq = v3n == 1 + v3M
    two_is_2 = v2n == 2
    two_eq = v2n == 1 + v2M

    if gcd(n, 6) == 1:
        case, m = Lemma3Case.A, 1
    elif n % 2 == 0 and n % 3 != 0:
        if two_is_2:
            case, m = Lemma3Case.B2, 4
        elif two_eq:
            case, m = Lemma3Case.B3, 2
        else:
            case, m = Lemma3Case.B1, 1
    elif n % 2 != 0:  # 3 | n
        if three_eq:
            case, m = Lemma3Case.C2, 3
        else:
            case, m = Lemma3Case.C1, 1
    else:  # 6 | n
        if three_eq:
            if two_is_2:
                case, m = Lemma3Case.D4, 12
            elif two_eq:
                case, m = Lemma3Case.D3, 6
            else:
                case, m = Lemma3Case.D2, 3
        else:
            if two_is_2 or two_eq:
                # Not covered by any printed case; fall back to the uniform
                # (always valid) conclusion n | 12M.
                case, m = Lemma3Case.FALLBACK, 12
            else:
                case, m = Lemma3Case.D1, 1

    passed = (m * M) % n == 0
    stmt = f"{n} | {m}*M" if m != 1 else f"{n} | M"
    return LemmaVerdict(passed=passed, case=case.value, required_divisibility=stmt)


def lemma5_verdict(n: int, M: int) -> LemmaVerdict:
    """Case-exact (n+1)-divisibility verdict for the pair (n, M)."""
    q = n + 1
    if gcd(q, 6) == 1:
        case = Lemma5Case.A
        passed = (M * M) % q == 0
        stmt = f"{q} | M^2"
    elif q % 2 == 0 and q % 3 != 0:
        case = Lemma5Case.B
        passed = (16 * M * M) % q == 0
        stmt = f"{q} | 16*M^2"
    elif q % 2 != 0:  # 3 | q
        case = Lemma5Case.C
        passed = (3 * M * M) % q == 0
        stmt = f"{q} | 3*M^2"
    else:  # 6 | q
        case = Lemma5Case.D
        passed = (48 * M**4) % (q * q) == 0
        stmt = f"{q}^2 | 48*M^4"
    return LemmaVerdict(passed=passed, case=case.value, required_divisibility=stmt)


def coarse_sieve(n: int, M: int) -> bool:
    """Uniform weakening of both criteria: ``n | 12M`` and ``n+1 | 4M^2``."""
    return (12 * M) % n == 0 and (4 * M * M) % (n + 1) == 0


def fine_sieve(n: int, M: int) -> bool:
    """Case-exact sieve: both per-case criteria must pass."""
    return lemma3_verdict(n, M).passed and lemma5_verdict(n, M).passed
