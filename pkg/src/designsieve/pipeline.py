"""Staged analysis of a single candidate pair.

Stage order: coarse sieve -> fine (case-exact) sieve -> integrality of the
product invariant XYZT -> integrality of the multiplicity product
k_a k_b k_c k_d -> (optional) bounded-factorization feasibility of that
product -> certified spectrum analysis.  The first failing stage refutes the
candidate; a candidate that survives every stage is reported as a survivor
(and would constitute a counterexample to the nonexistence theorem, so
survivors are surfaced loudly by the scanners).

Stage attribution detail: when both sieves fail, the record is attributed to
the fine (case-exact) sieve, which carries the informative per-case verdict;
the coarse stage is only reported when the uniform test fails while every
per-case test passes (possible because the case conclusions are not uniformly
stronger than the coarse ones on arbitrary pairs).

Non-integrality of X, Y, Z, T, or of the k coefficients, is decided with
certified rational enclosures; when an enclosure is too wide the working
precision escalates geometrically before any verdict is accepted.
"""

from __future__ import annotations

from .candidates import DesignCandidate
from .formulas import derived_quantities
from .records import SieveRecord, Stage
from .sieve import coarse_sieve, lemma3_verdict, lemma5_verdict
from .spectrum import (
    DegenerateSpectrumError,
    IntegralityStatus,
    PrecisionPolicy,
    distance_distribution,
    integrality_test,
    nozaki_bound,
    nozaki_coefficients,
    solve_quartic,
    spectrum_invariants_verdict,
)

__all__ = ["full_candidate_analysis", "analyze_pair", "k_factorization_feasible"]

_QUANTITY_NAMES = ("X", "Y", "Z", "T", "k_a", "k_b", "k_c", "k_d")


def k_factorization_feasible(product: int, bound: int) -> bool:
    """Whether ``product`` splits into four integers summing to 1, each |k| <= bound.

    The multiplicity coefficients are nonzero integers with product equal to
    the invariant, sum 1, and absolute values at most the dimension-dependent
    bound; if no such factorization exists the candidate is impossible.
    """
    if product == 0:
        return True  # vacuous: the coefficients are nonzero, handled elsewhere
    p = abs(product)
    divisors = [d for d in range(1, bound + 1) if p % d == 0]
    signed = [s * d for d in divisors for s in (1, -1)]
    for k1 in signed:
        if p % abs(k1):
            continue
        p1 = product // k1
        for k2 in signed:
            if p1 % k2:
                continue
            p2 = p1 // k2
            for k3 in signed:
                if p2 % k3:
                    continue
                k4 = p2 // k3
                if k4 != 0 and abs(k4) <= bound and k1 + k2 + k3 + k4 == 1:
                    return True
    return False


def full_candidate_analysis(
    candidate: DesignCandidate,
    policy: PrecisionPolicy | None = None,
    enable_k_factorization: bool = False,
) -> SieveRecord:
    """Run every stage on one candidate and return the complete record."""
    policy = policy or PrecisionPolicy()
    n, M = candidate.n, candidate.M
    l3 = lemma3_verdict(n, M)
    l5 = lemma5_verdict(n, M)
    dq = derived_quantities(candidate)

    def record(stage: Stage, **kw) -> SieveRecord:
        return SieveRecord(
            n=n,
            M=M,
            stage=stage,
            lemma3_case=l3.case,
            lemma3_passed=l3.passed,
            lemma5_case=l5.case,
            lemma5_passed=l5.passed,
            xyzt=dq.xyzt,
            nozaki=dq.nozaki,
            **kw,
        )

    if not (l3.passed and l5.passed):
        failed = []
        if not l3.passed:
            failed.append(f"case {l3.case}: {l3.required_divisibility}")
        if not l5.passed:
            failed.append(f"case {l5.case}: {l5.required_divisibility}")
        return record(
            Stage.FINE_SIEVE,
            refutation="fine sieve failed: " + "; ".join(failed),
        )
    if not coarse_sieve(n, M):
        return record(
            Stage.COARSE_SIEVE,
            refutation="coarse sieve failed: n | 12M and n+1 | 4M^2 do not both hold",
        )

    if dq.xyzt is not None and not dq.xyzt_integer:
        return record(Stage.XYZT_INTEGRALITY, refutation="XYZT is not an integer")
    if dq.nozaki is not None and not dq.nozaki_integer:
        return record(
            Stage.NOZAKI_INTEGRALITY,
            refutation="k_a*k_b*k_c*k_d is not an integer",
        )

    bound = nozaki_bound(n)
    if enable_k_factorization and dq.nozaki is not None:
        if not k_factorization_feasible(int(dq.nozaki), bound):
            return record(
                Stage.NOZAKI_INTEGRALITY,
                refutation=(
                    f"k product {int(dq.nozaki)} admits no factorization into "
                    f"four nonzero integers summing to 1 with |k| <= {bound}"
                ),
            )

    # Spectrum analysis with precision escalation.
    last_bits = policy.start_bits
    for bits in policy.schedule():
        last_bits = bits
        try:
            spec = solve_quartic(n, M, precision_bits=bits)
        except DegenerateSpectrumError as exc:
            return record(
                Stage.SPECTRUM_ANALYSIS,
                precision_bits=bits,
                refutation=f"degenerate spectrum: {exc}",
            )
        verdict = spectrum_invariants_verdict(spec)
        if verdict == "undecided":
            continue
        roots = tuple((iv.lo, iv.hi) for iv in spec.intervals)
        if verdict != "ok":
            return record(
                Stage.SPECTRUM_ANALYSIS,
                roots=roots,
                precision_bits=bits,
                refutation=verdict,
            )
        try:
            xyzt_enclosures = distance_distribution(spec)
            k_enclosures = nozaki_coefficients(spec)
        except ZeroDivisionError:
            continue  # enclosures too wide; escalate precision

        enclosures = xyzt_enclosures + k_enclosures
        verdicts = [
            integrality_test(iv, policy.confirmation_bits) for iv in enclosures
        ]
        xyz_t = tuple((iv.lo, iv.hi) for iv in xyzt_enclosures)
        k_pairs = tuple((iv.lo, iv.hi) for iv in k_enclosures)

        for name, v in zip(_QUANTITY_NAMES, verdicts):
            if v.status is IntegralityStatus.CERTIFIED_NON_INTEGER:
                return record(
                    Stage.SPECTRUM_ANALYSIS,
                    roots=roots,
                    xyz_t=xyz_t,
                    k=k_pairs,
                    precision_bits=bits,
                    refutation=f"{name} is not an integer (certified)",
                )
        if any(v.status is IntegralityStatus.UNDECIDED for v in verdicts):
            continue

        # All eight quantities are numerically integral: apply the
        # multiplicity-size bound as a final certified refutation attempt.
        for name, iv in zip(_QUANTITY_NAMES[4:], k_enclosures):
            if iv.abs().certainly_gt(bound):
                return record(
                    Stage.SPECTRUM_ANALYSIS,
                    roots=roots,
                    xyz_t=xyz_t,
                    k=k_pairs,
                    precision_bits=bits,
                    refutation=f"|{name}| exceeds the multiplicity bound {bound}",
                )
        return record(
            Stage.SURVIVOR,
            roots=roots,
            xyz_t=xyz_t,
            k=k_pairs,
            precision_bits=bits,
        )

    # Precision exhausted without a certified decision: conservatively a survivor.
    return record(Stage.SURVIVOR, precision_bits=last_bits)


def analyze_pair(
    n: int,
    M: int,
    policy: PrecisionPolicy | None = None,
    enable_k_factorization: bool = False,
) -> SieveRecord:
    """Convenience wrapper validating the pair and running the full pipeline."""
    return full_candidate_analysis(
        DesignCandidate(n, M), policy, enable_k_factorization=enable_k_factorization
    )
