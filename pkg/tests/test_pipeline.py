import pytest

from designsieve.candidates import CandidateError, TightBoundError
from designsieve.pipeline import analyze_pair, k_factorization_feasible
from designsieve.records import Stage


def test_reference_pair_refuted_at_spectrum_stage():
    rec = analyze_pair(7, 196)
    assert rec.stage == Stage.SPECTRUM_ANALYSIS
    assert rec.xyzt == 1185921 and rec.xyzt_integer
    assert rec.nozaki == 121 and rec.nozaki_integer
    assert rec.refutation == "X is not an integer (certified)"
    assert rec.lemma3_passed and rec.lemma5_passed


def test_fine_sieve_refutation_names_cases():
    rec = analyze_pair(5, 77)
    assert rec.stage == Stage.FINE_SIEVE
    assert rec.refutation is not None
    assert "5 | M" in rec.refutation
    assert rec.roots is None and rec.xyz_t is None and rec.k is None


def test_xyzt_integrality_refutation():
    rec = analyze_pair(7, 182)  # passes both sieves but XYZT is fractional
    assert rec.lemma3_passed and rec.lemma5_passed
    assert rec.stage == Stage.XYZT_INTEGRALITY
    assert not rec.xyzt_integer
    assert rec.refutation is not None


def test_coarse_stage_attribution_when_fine_passes():
    # 7 | 175 satisfies every case-based condition, yet 8 does not divide
    # 4 * 175^2, so the unconditional coarse requirement is what refutes it.
    rec = analyze_pair(7, 175)
    assert rec.stage == Stage.COARSE_SIEVE
    assert rec.lemma3_passed and rec.lemma5_passed


def test_invalid_candidates_raise():
    with pytest.raises(TightBoundError):
        analyze_pair(8, 240)
    with pytest.raises(CandidateError):
        analyze_pair(7, 100)


def test_k_factorization_feasibility():
    # 121 cannot be written as a product of four nonzero integers of
    # magnitude <= 8 summing to 1, so it refutes; -12 can (e.g. 1*3*(-2)*2
    # sums... use the search itself as the oracle for feasibility).
    assert not k_factorization_feasible(121, 8)
    assert k_factorization_feasible(-12, 8)


def test_k_factorization_stage_refutes_reference_pair():
    rec = analyze_pair(7, 196, enable_k_factorization=True)
    assert rec.stage == Stage.NOZAKI_INTEGRALITY
    assert "factorization" in rec.refutation


def test_all_records_carry_invariants():
    for n, M in ((7, 196), (7, 175), (5, 77)):
        rec = analyze_pair(n, M)
        assert rec.xyzt is not None
        assert rec.nozaki is not None
