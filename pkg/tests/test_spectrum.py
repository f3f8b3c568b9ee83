from fractions import Fraction

import pytest

from designsieve.formulas import moment
from designsieve.intervals import Interval
from designsieve.spectrum import (
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


def test_solve_quartic_reference_pair():
    spec = solve_quartic(7, 196, precision_bits=128)
    approx = (-0.821721, -0.442124, 0.0508952, 0.546284)
    for got, want in zip(spec.midpoints(), approx):
        assert abs(got - want) < 1e-5
    for iv in spec.intervals:
        assert iv.width <= Fraction(1, 2**128)


def test_precision_monotonicity():
    widths = []
    for bits in (32, 64, 128, 256):
        spec = solve_quartic(7, 196, precision_bits=bits)
        widths.append(max(iv.width for iv in spec.intervals))
    assert widths == sorted(widths, reverse=True)
    assert widths[-1] < widths[0]


def test_spectrum_invariants_reference_pair():
    spec = solve_quartic(7, 196, precision_bits=128)
    assert spectrum_invariants_verdict(spec) == "ok"


def test_distance_distribution_satisfies_moment_system():
    n, M = 7, 196
    spec = solve_quartic(n, M, precision_bits=192)
    weights = distance_distribution(spec)
    roots = spec.intervals
    for i in (0, 2, 4, 6):
        total = Interval.point(0)
        for r, w in zip(roots, weights):
            power = Interval.point(1)
            for _ in range(i):
                power = power * r
            total = total + power * w
        target = moment(i, n) * M - 1
        assert total.contains(target)


def test_distance_distribution_reference_values():
    spec = solve_quartic(7, 196, precision_bits=128)
    got = sorted(float(w.midpoint) for w in distance_distribution(spec))
    want = sorted((5.63, 41.57, 93.84, 53.95))
    for g, w in zip(got, want):
        assert abs(g - w) < 1e-2


def test_nozaki_coefficients_product():
    spec = solve_quartic(7, 196, precision_bits=128)
    ks = nozaki_coefficients(spec)
    prod = Interval.point(1)
    total = Interval.point(0)
    for k in ks:
        prod = prod * k
        total = total + k
    assert prod.contains(121)
    assert total.contains(1)  # the coefficients always sum to 1


def test_admissible_quartics_have_four_distinct_real_roots():
    # Positive discriminant together with four isolated real roots means the
    # degenerate-spectrum error path is purely defensive inside the window.
    from designsieve.candidates import iter_cardinalities
    from designsieve.formulas import quartic_discriminant

    for n in (3, 7, 12, 20):
        ms = iter_cardinalities(n)
        for M in (ms[0], ms[len(ms) // 2], ms[-1]):
            assert quartic_discriminant(n, M) > 0
            spec = solve_quartic(n, M, precision_bits=64)
            assert len(spec.intervals) == 4


def test_integrality_test_statuses():
    tight = Interval(Fraction(5) - Fraction(1, 2**100), Fraction(5) + Fraction(1, 2**100))
    assert integrality_test(tight, 64).status is IntegralityStatus.NUMERICALLY_INTEGER
    off = Interval(Fraction(51, 10), Fraction(52, 10))
    assert integrality_test(off, 64).status is IntegralityStatus.CERTIFIED_NON_INTEGER
    wide = Interval(Fraction(0), Fraction(10))
    assert integrality_test(wide, 64).status is IntegralityStatus.UNDECIDED


def test_nozaki_bound_values():
    assert nozaki_bound(7) == 8
    for n in (3, 10, 100):
        N = n * (n + 1) * (n + 5) // 6
        k = nozaki_bound(n)
        assert (2 * k - 1) ** 2 * (2 * N - 2) <= 4 * N * N + 2 * N - 2
        assert (2 * (k + 1) - 1) ** 2 * (2 * N - 2) > 4 * N * N + 2 * N - 2


def test_precision_policy_schedule():
    policy = PrecisionPolicy(start_bits=128, max_bits=1024)
    assert list(policy.schedule()) == [128, 256, 512, 1024]
    with pytest.raises(ValueError):
        PrecisionPolicy(start_bits=2048, max_bits=1024)
