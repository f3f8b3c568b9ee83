"""Vectorized per-dimension scan kernels.

The bulk work of a scan is deciding, for every admissible cardinality M of a
dimension n, whether either integrality invariant holds:

* ``XYZT = num_x / (G * R)`` with ``num_x = M^3 (n-1)^2 (n+4)^4 A^7`` and
  ``G = 54 n^4 (n+1)^2``;
* ``k-product = num_k / R`` with ``num_k = 2 M^3 (n+1) (n+4)^2 (n-1)^3 A^3``.

Every numpy screen below is *sound*: it only discards an M when a necessary
condition for integrality provably fails.  Everything a screen cannot
certify falls through to exact big-integer verification, so the final
survivor sets are exact.

Screens used (all vectorized over blocks of M):

1. prime-power screens — for each prime power ``q`` dividing the fixed
   denominator factor ``G``, integrality requires ``num_x % q == 0``
   (computed by modular product chains with 32-bit moduli);
2. exact 2/3-adic valuation screens — ``v_2`` and ``v_3`` of the numerators
   are computed exactly from M and A, while ``v_2(R)``/``v_3(R)`` come from
   ``R mod 2^64`` (trailing zeros) and ``R mod 3^19``; integrality requires
   the numerator valuation to dominate;
3. a quotient screen — the quotient ``t = num / den`` is evaluated in
   extended-precision floating point with a *rigorous* per-block error
   bound computed in exact integer arithmetic; when the bound shows the
   enclosure pins a unique integer ``T0``, integrality requires the exact
   congruence ``num ≡ T0 * den  (mod 2^64)``.  Blocks where the bound is
   too weak are subdivided and ultimately verified exactly.

The per-block quotient bound ``|t| <= num(M_hi) / min|R|`` uses the exact
minimum of ``|R|`` over the block, obtained from certified breakpoints: the
integers adjacent to the real roots of R and R' (between consecutive
breakpoints R is monotone and of constant sign, so the block minimum is
attained at a sampled point).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math
from math import gcd

import numpy as np

from .candidates import cardinality_bounds
from .formulas import r_poly_terms, r_poly_value
from .roots import isolate_real_roots, poly_derivative, refine_root
from .sieve import p_adic_valuation

__all__ = ["DimensionScan", "scan_dimension_brute", "scan_dimension_staged"]

_BLOCK = 1 << 18
_MASK64 = (1 << 64) - 1
_POW3_19 = 3**19  # largest power of 3 below 2^31


# --------------------------------------------------------------------------
# per-dimension precomputation
# --------------------------------------------------------------------------


def _factorize(x: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= x:
        while x % d == 0:
            out[d] = out.get(d, 0) + 1
            x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def _capped_power(p: int, e: int, cap: int = 1 << 31) -> int:
    q = 1
    while e > 0 and q * p < cap:
        q *= p
        e -= 1
    return q


def _float128_coeff(c: int) -> np.longdouble:
    """Convert a big integer to longdouble with relative error ~2^-106."""
    f1 = float(c)
    r = c - int(f1)
    return np.longdouble(f1) + np.longdouble(float(r))


@dataclass
class _Plan:
    """All per-dimension constants needed by the block kernels."""

    n: int
    m0: int
    m1: int
    rc: tuple[int, ...]
    G: int
    # valuations of the fixed numerator factors
    c2x: int  # v2((n-1)^2 (n+4)^4)
    c3x: int
    c2k: int  # v2(2 (n+1)(n+4)^2 (n-1)^3)
    c3k: int
    v2G: int
    v3G: int
    # wrapped constants
    rc_w: np.ndarray  # R coefficients mod 2^64
    rc_3: np.ndarray  # R coefficients mod 3^19
    rc_f: np.ndarray  # R coefficients as longdouble (~2^-106 accurate)
    cx_w: int  # (n-1)^2 (n+4)^4 mod 2^64
    ck_w: int  # 2 (n+1)(n+4)^2 (n-1)^3 mod 2^64
    G_w: int
    cx_f: np.longdouble
    ck_f: np.longdouble
    G_f: np.longdouble
    odd_prime_powers_x: list[tuple[int, int]]  # (q, (n-1)^2 (n+4)^4 mod q)
    C15: int  # n(n+1)(n+5)
    breakpoints: list[int]
    r_integer_roots: list[int]
    abs_rc: tuple[int, ...]


def _integer_breakpoints(rc: tuple[int, ...], lo: int, hi: int) -> tuple[list[int], list[int]]:
    """Integers k with a real root of R or R' in [k, k+1], limited to [lo-1, hi+1].

    Also returns the exact integer roots of R in [lo, hi].
    """
    bps: set[int] = set()
    int_roots: list[int] = []
    for poly in (rc, poly_derivative(rc)):
        for iv in isolate_real_roots(poly):
            if iv.hi < lo - 1 or iv.lo > hi + 1:
                continue
            cur = refine_root(poly, iv, Fraction(1, 4))
            while True:
                if cur.lo == cur.hi:  # hit the root exactly
                    x = cur.lo
                    k = math.floor(x)
                    if x == k and poly is rc and lo <= k <= hi:
                        int_roots.append(k)
                    bps.add(k)
                    break
                fl, fh = math.floor(cur.lo), math.floor(cur.hi)
                if fl == fh:
                    bps.add(fl)
                    break
                # An integer j lies inside: either j is the root or refining
                # past it will separate the floors.
                j = fh
                if _poly_int_value(poly, j) == 0:
                    if poly is rc and lo <= j <= hi:
                        int_roots.append(j)
                    bps.add(j)
                    break
                cur = refine_root(poly, cur, (cur.hi - cur.lo) / 8)
    return sorted(bps), sorted(set(int_roots))


def _poly_int_value(coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def r_poly_value_at(rc: tuple[int, ...], M: int) -> int:
    acc = 0
    for c in rc:
        acc = acc * M + c
    return acc


def _make_plan(n: int) -> _Plan:
    lower, upper = cardinality_bounds(n)
    m0, m1 = lower + 1, upper
    rc = r_poly_terms(n)
    G = 54 * n**4 * (n + 1) ** 2
    cx = (n - 1) ** 2 * (n + 4) ** 4
    ck = 2 * (n + 1) * (n + 4) ** 2 * (n - 1) ** 3

    odd_pps: list[tuple[int, int]] = []
    for p, e in sorted(_factorize(G).items(), key=lambda t: -(t[0] ** t[1])):
        if p in (2, 3):
            continue
        q = _capped_power(p, e)
        if q > 1:
            odd_pps.append((q, cx % q))

    bps, int_roots = _integer_breakpoints(rc, m0, m1)
    return _Plan(
        n=n,
        m0=m0,
        m1=m1,
        rc=rc,
        G=G,
        c2x=p_adic_valuation(cx, 2),
        c3x=p_adic_valuation(cx, 3),
        c2k=p_adic_valuation(ck, 2),
        c3k=p_adic_valuation(ck, 3),
        v2G=p_adic_valuation(G, 2),
        v3G=p_adic_valuation(G, 3),
        rc_w=np.array([c & _MASK64 for c in rc], dtype=np.uint64),
        rc_3=np.array([c % _POW3_19 for c in rc], dtype=np.uint64),
        rc_f=np.array([_float128_coeff(c) for c in rc], dtype=np.longdouble),
        cx_w=cx & _MASK64,
        ck_w=ck & _MASK64,
        G_w=G & _MASK64,
        cx_f=_float128_coeff(cx),
        ck_f=_float128_coeff(ck),
        G_f=_float128_coeff(G),
        odd_prime_powers_x=odd_pps,
        C15=n * (n + 1) * (n + 5),
        breakpoints=bps,
        r_integer_roots=int_roots,
        abs_rc=tuple(abs(c) for c in rc),
    )


# --------------------------------------------------------------------------
# vectorized primitives
# --------------------------------------------------------------------------


def _v2_of(x: np.ndarray) -> np.ndarray:
    """Exact 2-adic valuation of nonzero uint64 values."""
    low = x & (~x + np.uint64(1))
    return np.log2(low.astype(np.float64)).astype(np.int64)


def _v3_of(x: np.ndarray) -> np.ndarray:
    """Exact 3-adic valuation of nonzero uint64 values (vector loop)."""
    v = np.zeros(x.shape, dtype=np.int64)
    cur = x.copy()
    idx = np.nonzero(cur % np.uint64(3) == 0)[0]
    while idx.size:
        cur[idx] //= np.uint64(3)
        v[idx] += 1
        idx = idx[cur[idx] % np.uint64(3) == 0]
    return v


def _horner_mod_q(coeffs_mod: np.ndarray, M_mod: np.ndarray, q: int) -> np.ndarray:
    """Horner evaluation mod q (q < 2^31, operands stay below 2^62)."""
    qq = np.uint64(q)
    acc = np.full(M_mod.shape, coeffs_mod[0], dtype=np.uint64)
    for c in coeffs_mod[1:]:
        acc = (acc * M_mod + c) % qq
    return acc


def _horner_wrapped(rc_w: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Horner evaluation of R mod 2^64 (two's complement wraparound)."""
    acc = np.full(M.shape, rc_w[0], dtype=np.uint64)
    with np.errstate(over="ignore"):
        for c in rc_w[1:]:
            acc = acc * M + c
    return acc


def _horner_f128(rc_f: np.ndarray, Mf: np.ndarray) -> np.ndarray:
    acc = np.full(Mf.shape, rc_f[0], dtype=np.longdouble)
    for c in rc_f[1:]:
        acc = acc * Mf + c
    return acc


def _powmul_mod_q(base_val: int, M: np.ndarray, A: np.ndarray, em: int, ea: int, q: int) -> np.ndarray:
    """``base_val * M^em * A^ea mod q`` with 32-bit modulus chains."""
    qq = np.uint64(q)
    m = M % qq
    a = A % qq
    acc = np.full(M.shape, np.uint64(base_val % q), dtype=np.uint64)
    for _ in range(em):
        acc = (acc * m) % qq
    for _ in range(ea):
        acc = (acc * a) % qq
    return acc


def _wrapped_numerator(c_w: int, M: np.ndarray, A: np.ndarray, em: int, ea: int) -> np.ndarray:
    """``c * M^em * A^ea mod 2^64`` (wraparound products)."""
    acc = np.full(M.shape, np.uint64(c_w), dtype=np.uint64)
    with np.errstate(over="ignore"):
        for _ in range(em):
            acc = acc * M
        for _ in range(ea):
            acc = acc * A
    return acc


# --------------------------------------------------------------------------
# exact verification (final arbiter for everything a screen lets through)
# --------------------------------------------------------------------------


def _exact_xyzt(plan: _Plan, M: int) -> bool:
    R = r_poly_value_at(plan.rc, M)
    if R == 0:
        return False
    A = 6 * M - plan.C15
    num = M**3 * (plan.n - 1) ** 2 * (plan.n + 4) ** 4 * A**7
    return num % (plan.G * abs(R)) == 0


def _exact_nozaki(plan: _Plan, M: int) -> bool:
    R = r_poly_value_at(plan.rc, M)
    if R == 0:
        return False
    A = 6 * M - plan.C15
    num = 2 * M**3 * (plan.n + 1) * (plan.n + 4) ** 2 * (plan.n - 1) ** 3 * A**3
    return num % abs(R) == 0


# --------------------------------------------------------------------------
# block-local rigorous quotient bounds
# --------------------------------------------------------------------------


def _rmin_block(plan: _Plan, a: int, b: int) -> int:
    """Exact ``min |R(M)|`` over integers M in [a, b] (0 if R vanishes there)."""
    samples = {a, b}
    import bisect

    bps = plan.breakpoints
    i = bisect.bisect_left(bps, a - 1)
    while i < len(bps) and bps[i] <= b + 1:
        for s in (bps[i], bps[i] + 1):
            if a <= s <= b:
                samples.add(s)
        i += 1
    best = None
    for s in samples:
        v = abs(r_poly_value_at(plan.rc, s))
        if best is None or v < best:
            best = v
    return best if best is not None else 0


def _num_max(plan: _Plan, b: int, kind: str) -> int:
    A = 6 * b - plan.C15
    if kind == "x":
        return b**3 * (plan.n - 1) ** 2 * (plan.n + 4) ** 4 * A**7
    return 2 * b**3 * (plan.n + 1) * (plan.n + 4) ** 2 * (plan.n - 1) ** 3 * A**3


def _abs_r_sum(plan: _Plan, b: int) -> int:
    acc = 0
    for c in plan.abs_rc:
        acc = acc * b + c
    return acc


# --------------------------------------------------------------------------
# the float128 quotient screen
# --------------------------------------------------------------------------


def _quotient_screen(
    plan: _Plan,
    kind: str,
    M: np.ndarray,
    A: np.ndarray,
    Rf: np.ndarray,
    Rw: np.ndarray,
    a: int,
    b: int,
) -> tuple[np.ndarray, bool]:
    """Return (mask of possible integrality, valid) for the quotient test.

    ``valid=False`` means the rigorous error bound is too weak on [a, b];
    the caller must subdivide or verify exactly.
    """
    rmin = _rmin_block(plan, a, b)
    if rmin == 0:
        return np.ones(M.shape, dtype=bool), False
    num_max = _num_max(plan, b, kind)
    if kind == "x":
        den_scale = plan.G
        c_f, c_w, em, ea = plan.cx_f, plan.cx_w, 3, 7
    else:
        den_scale = 1
        c_f, c_w, em, ea = plan.ck_f, plan.ck_w, 3, 3
    tmax = num_max // (den_scale * rmin) + 1
    if tmax >= (1 << 62):
        return np.ones(M.shape, dtype=bool), False
    # Rigorous rounding-error bound on the longdouble quotient:
    # numerator: product of <=14 exactly-representable factors (<= 2^64 each),
    # relative error <= 15u; denominator Horner: relative error <= 16u*kappa
    # with kappa = sum |c_i| b^i / rmin; coefficients carry <= u relative
    # representation error, absorbed in the kappa term.  u = 2^-64 for x86
    # 80-bit longdouble.  A paranoia factor of 4 is applied.
    kappa = _abs_r_sum(plan, b) // rmin + 1
    err_num = 4 * tmax * (32 + 32 * kappa)  # units of 2^-64
    if err_num >= (1 << 62):  # error bound >= 0.25
        return np.ones(M.shape, dtype=bool), False

    Mf = M.astype(np.longdouble)
    Af = A.astype(np.longdouble)
    num_f = np.full(M.shape, c_f, dtype=np.longdouble)
    for _ in range(em):
        num_f = num_f * Mf
    for _ in range(ea):
        num_f = num_f * Af
    den_f = Rf if den_scale == 1 else Rf * plan.G_f
    t = num_f / den_f
    T0 = np.rint(t)
    # Exact congruence check modulo 2^64.
    T0_w = T0.astype(np.int64).astype(np.uint64)
    num_w = _wrapped_numerator(c_w, M, A, em, ea)
    with np.errstate(over="ignore"):
        den_w = Rw if den_scale == 1 else Rw * np.uint64(plan.G_w)
        ok = num_w == T0_w * den_w
    return ok, True


def _quotient_pass_indices(
    plan: _Plan,
    kind: str,
    M: np.ndarray,
    A: np.ndarray,
    Rf: np.ndarray,
    Rw: np.ndarray,
    a: int,
    b: int,
    min_block: int = 512,
) -> np.ndarray:
    """Indices (into M) that may satisfy the quotient integrality.

    Subdivides adaptively where the rigorous error bound is too weak; leaf
    blocks that still fail the bound are passed through entirely (exact
    verification downstream decides them).
    """
    mask, valid = _quotient_screen(plan, kind, M, A, Rf, Rw, a, b)
    if valid or M.size <= min_block:
        return np.nonzero(mask)[0]
    mid = M.size // 2
    a2 = int(M[mid])
    left = _quotient_pass_indices(
        plan, kind, M[:mid], A[:mid], Rf[:mid], Rw[:mid], a, a2 - 1, min_block
    )
    right = _quotient_pass_indices(
        plan, kind, M[mid:], A[mid:], Rf[mid:], Rw[mid:], a2, b, min_block
    )
    return np.concatenate([left, right + mid])


# --------------------------------------------------------------------------
# per-block screening
# --------------------------------------------------------------------------


def _screen_block(
    plan: _Plan, Ms: np.ndarray, want_nozaki: bool = True
) -> tuple[list[int], list[int]]:
    """Return (XYZT-integer Ms, k-product-integer Ms) within the block, exactly.

    ``Ms`` must be strictly increasing (contiguity is not required).
    """
    A = np.uint64(6) * Ms - np.uint64(plan.C15)
    Rw = _horner_wrapped(plan.rc_w, Ms)
    v2M = _v2_of(Ms)
    v2A = _v2_of(A)
    # v2(R) from the wrapped value; a zero residue proves v2(R) >= 64, which
    # keeps the dominance rejections below sound.
    rw_zero = Rw == 0
    beta2 = np.where(rw_zero, 64, _v2_of(np.where(rw_zero, np.uint64(1), Rw)))

    xm2 = (plan.c2x + 3 * v2M + 7 * v2A) >= (plan.v2G + beta2)
    if want_nozaki:
        km2 = (plan.c2k + 3 * v2M + 3 * v2A) >= beta2
        union = np.nonzero(xm2 | km2)[0]
    else:
        union = np.nonzero(xm2)[0]
    if union.size == 0:
        return [], []

    # 3-adic screens only on 2-adic survivors.
    Mu, Au = Ms[union], A[union]
    v3M = _v3_of(Mu)
    v3A = _v3_of(Au)
    R3 = _horner_mod_q(plan.rc_3, Mu % np.uint64(_POW3_19), _POW3_19)
    r3_zero = R3 == 0
    beta3 = np.where(r3_zero, 19, _v3_of(np.where(r3_zero, np.uint64(1), R3)))

    def quotient_filter(kind: str, idx: np.ndarray) -> np.ndarray:
        if idx.size == 0:
            return idx
        Mi, Ai = Ms[idx], A[idx]
        Rfi = _horner_f128(plan.rc_f, Mi.astype(np.longdouble))
        sub = _quotient_pass_indices(
            plan, kind, Mi, Ai, Rfi, Rw[idx], int(Mi[0]), int(Mi[-1])
        )
        return idx[sub]

    # ---- XYZT pipeline ----------------------------------------------------
    xm3 = (plan.c3x + 3 * v3M + 7 * v3A) >= (plan.v3G + beta3)
    xi = union[xm2[union] & xm3]
    for q, cq in plan.odd_prime_powers_x:
        if xi.size == 0:
            break
        vals = _powmul_mod_q(cq, Ms[xi], A[xi], 3, 7, q)
        xi = xi[vals == 0]
    xi = quotient_filter("x", xi)
    xyzt_pass = [int(m) for m in Ms[xi] if _exact_xyzt(plan, int(m))]

    # ---- k-product pipeline -------------------------------------------------
    nozaki_pass: list[int] = []
    if want_nozaki:
        km3 = (plan.c3k + 3 * v3M + 3 * v3A) >= beta3
        ki = union[km2[union] & km3]
        ki = quotient_filter("k", ki)
        nozaki_pass = [int(m) for m in Ms[ki] if _exact_nozaki(plan, int(m))]

    return xyzt_pass, nozaki_pass


# --------------------------------------------------------------------------
# public per-dimension scans
# --------------------------------------------------------------------------


@dataclass(slots=True)
class DimensionScan:
    """Exact outcome of scanning one dimension."""

    n: int
    candidates_total: int
    coarse_passed: int
    fine_passed: int
    xyzt_pass: list[int]  # cardinalities with integral XYZT
    nozaki_pass: list[int]  # cardinalities with integral k-product
    degenerate: list[int] = field(default_factory=list)  # R(n, M) == 0


def scan_dimension_brute(n: int) -> DimensionScan:
    """Exact XYZT/k-product integrality for every admissible M (no sieves)."""
    plan = _make_plan(n)
    xyzt_pass: list[int] = []
    nozaki_pass: list[int] = []
    coarse_passed = 0
    fine_passed = 0
    for a in range(plan.m0, plan.m1 + 1, _BLOCK):
        b = min(a + _BLOCK - 1, plan.m1)
        Ms = np.arange(a, b + 1, dtype=np.uint64)
        cm = _coarse_sieve_mask(n, Ms)
        coarse_passed += int(cm.sum())
        # Count fine-sieve passers among the coarse lattice, matching the
        # staged kernel's accounting.
        fine_passed += int(_fine_sieve_mask(n, Ms[cm]).sum())
        xp, kp = _screen_block(plan, Ms)
        xyzt_pass.extend(xp)
        nozaki_pass.extend(kp)
    return DimensionScan(
        n=n,
        candidates_total=plan.m1 - plan.m0 + 1,
        coarse_passed=coarse_passed,
        fine_passed=fine_passed,
        xyzt_pass=xyzt_pass,
        nozaki_pass=nozaki_pass,
        degenerate=list(plan.r_integer_roots),
    )


def _lattice_step(n: int) -> int:
    """Smallest L with: coarse sieve passes iff L | M."""
    s1 = n // gcd(n, 12)
    K = 1
    for p, e in _factorize(n + 1).items():
        if p == 2:
            K <<= max(0, (e - 2 + 1) // 2)
        else:
            K *= p ** ((e + 1) // 2)
    return s1 * K


def _coarse_sieve_mask(n: int, Ms: np.ndarray) -> np.ndarray:
    """Vectorized coarse sieve: ``n | 12M`` and ``n+1 | 4M^2``."""
    l12 = (np.uint64(12) * (Ms % np.uint64(n))) % np.uint64(n) == 0
    q = np.uint64(n + 1)
    mq = Ms % q
    l4 = (np.uint64(4) * ((mq * mq) % q)) % q == 0
    return l12 & l4


def _fine_sieve_mask(n: int, Ms: np.ndarray) -> np.ndarray:
    """Vectorized case-exact sieve (both criteria) on an array of M values."""
    v2n = p_adic_valuation(n, 2) if n % 2 == 0 else 0
    v3n = p_adic_valuation(n, 3) if n % 3 == 0 else 0
    v2M = _v2_of(Ms)
    v3M = _v3_of(Ms)
    three_eq = v3M == v3n - 1
    two_is2 = v2n == 2
    two_eq = v2M == v2n - 1

    if gcd(n, 6) == 1:
        mult = np.full(Ms.shape, 1, dtype=np.uint64)
    elif n % 2 == 0 and n % 3 != 0:
        if two_is2:
            mult = np.full(Ms.shape, 4, dtype=np.uint64)
        else:
            mult = np.where(two_eq, np.uint64(2), np.uint64(1))
    elif n % 2 != 0:
        mult = np.where(three_eq, np.uint64(3), np.uint64(1))
    else:  # 6 | n; mirrors lemma3_verdict including the fallback corner
        if two_is2:
            # case d4 when the 3-condition matches, fallback (n | 12M) otherwise
            mult = np.full(Ms.shape, 12, dtype=np.uint64)
        else:
            mult = np.where(
                three_eq,
                np.where(two_eq, np.uint64(6), np.uint64(3)),  # d3 / d2
                np.where(two_eq, np.uint64(12), np.uint64(1)),  # fallback / d1
            )
    l3 = (mult * Ms) % np.uint64(n) == 0

    q = n + 1
    qq = np.uint64(q)
    mq = Ms % qq
    if gcd(q, 6) == 1:
        l5 = (mq * mq) % qq == 0
    elif q % 2 == 0 and q % 3 != 0:
        l5 = (np.uint64(16) * ((mq * mq) % qq)) % qq == 0
    elif q % 2 != 0:
        l5 = (np.uint64(3) * ((mq * mq) % qq)) % qq == 0
    else:
        q2 = np.uint64(q * q)
        m2 = Ms % q2
        sq = (m2 * m2) % q2
        l5 = (np.uint64(48) * ((sq * sq) % q2)) % q2 == 0
    return l3 & l5


def scan_dimension_staged(n: int) -> DimensionScan:
    """Sieve-accelerated scan: coarse lattice -> fine sieve -> XYZT integrality.

    The k-product integrality of the XYZT-passing pairs is decided later by
    the exact per-candidate pipeline; this kernel reports XYZT passers only.
    """
    plan = _make_plan(n)
    total = plan.m1 - plan.m0 + 1
    L = _lattice_step(n)
    j0 = (plan.m0 + L - 1) // L
    j1 = plan.m1 // L
    coarse = max(0, j1 - j0 + 1)
    xyzt_pass: list[int] = []
    fine_passed = 0
    if coarse:
        for js in range(j0, j1 + 1, _BLOCK):
            je = min(js + _BLOCK - 1, j1)
            Ms = np.arange(js, je + 1, dtype=np.uint64) * np.uint64(L)
            fm = _fine_sieve_mask(n, Ms)
            fine_passed += int(fm.sum())
            Ms = Ms[fm]
            if Ms.size == 0:
                continue
            xp, _ = _screen_block(plan, Ms, want_nozaki=False)
            xyzt_pass.extend(xp)
    return DimensionScan(
        n=n,
        candidates_total=total,
        coarse_passed=coarse,
        fine_passed=fine_passed,
        xyzt_pass=xyzt_pass,
        nozaki_pass=[],
        degenerate=[m for m in plan.r_integer_roots if (m % L) == 0],
    )
