from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from designsieve.candidates import cardinality_bounds
from designsieve.formulas import (
    derived_quantities,
    discriminant_identity_check,
    moment,
    nozaki_product,
    quartic_coefficients,
    quartic_discriminant,
    r_poly_terms,
    r_poly_value,
    shorthand_A,
    shorthand_B,
    xyzt_product,
)


def candidate_pairs():
    return st.integers(min_value=3, max_value=200).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(
                min_value=cardinality_bounds(n)[0] + 1,
                max_value=cardinality_bounds(n)[1],
            ),
        )
    )


def test_shorthands_reference_pair():
    assert shorthand_A(7, 196) == 504
    assert shorthand_B(7, 196) == 84


def test_quartic_coefficients_reference_pair():
    assert quartic_coefficients(7, 196) == (49896, 33264, -18144, -9072, 504)


def test_quartic_coefficients_structure():
    for n, M in ((3, 70), (12, 1200), (100, 400000)):
        c4, c3, c2, c1, c0 = quartic_coefficients(n, M)
        A = shorthand_A(n, M)
        B = shorthand_B(n, M)
        assert c4 == (n + 2) * (n + 4) * A
        assert c3 == n * (n - 1) * (n + 1) * (n + 2) * (n + 4)
        assert c2 == -9 * (n + 2) * (4 * M - n * (n + 1) * (n + 3))
        assert c1 == -3 * n * (n - 1) * (n + 1) * (n + 2)
        assert c0 == 6 * B


def test_r_poly_value_matches_terms():
    for n in (3, 7, 11, 60):
        terms = r_poly_terms(n)
        lower, upper = cardinality_bounds(n)
        for M in (lower + 1, (lower + upper) // 2, upper):
            assert r_poly_value(n, M) == sum(
                c * M ** (6 - i) for i, c in enumerate(terms)
            )


def test_moments():
    for n in (3, 7, 50):
        assert moment(0, n) == 1
        assert moment(2, n) == Fraction(1, n)
        assert moment(4, n) == Fraction(3, n * (n + 2))
        assert moment(6, n) == Fraction(15, n * (n + 2) * (n + 4))
        for i in (1, 3, 5, 7):
            assert moment(i, n) == 0


def test_invariant_products_reference_pair():
    assert xyzt_product(7, 196) == Fraction(1185921)
    assert nozaki_product(7, 196) == Fraction(121)


def test_derived_quantities_flags():
    dq = derived_quantities((7, 196))
    assert dq.xyzt == 1185921 and dq.xyzt_integer
    assert dq.nozaki == 121 and dq.nozaki_integer
    dq = derived_quantities((7, 169))
    assert not dq.xyzt_integer


def test_discriminant_against_sympy_oracle():
    t = sympy.symbols("t")
    for n, M in ((7, 196), (3, 70), (26, 6591), (63, 764400), (100, 420000)):
        coeffs = quartic_coefficients(n, M)
        poly = sympy.Poly(sum(c * t ** (4 - i) for i, c in enumerate(coeffs)), t)
        assert quartic_discriminant(n, M) == int(sympy.discriminant(poly, t))


@settings(max_examples=200, deadline=None)
@given(candidate_pairs())
def test_discriminant_identity_property(pair):
    n, M = pair
    assert discriminant_identity_check(n, M)


@given(candidate_pairs())
@settings(max_examples=100, deadline=None)
def test_xyzt_closed_form_consistency(pair):
    # Both invariants share the denominator R, so cross-multiplying their
    # closed-form numerators must give an exact identity.
    n, M = pair
    R = r_poly_value(n, M)
    if R == 0:
        pytest.skip("singular denominator")
    A = shorthand_A(n, M)
    x = xyzt_product(n, M)
    k = nozaki_product(n, M)
    assert x * Fraction(
        2 * M**3 * (n + 1) * (n + 4) ** 2 * (n - 1) ** 3 * A**3, 1
    ) == k * Fraction(M**3 * (n - 1) ** 2 * (n + 4) ** 4 * A**7, 54 * n**4 * (n + 1) ** 2)
