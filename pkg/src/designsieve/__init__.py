"""Exact-arithmetic sieve and certifier for spherical 4-distance 7-designs.

The search walks every dimension n in a range, enumerates the admissible
cardinalities M, and refutes each candidate pair with a chain of exact
necessary conditions: divisibility sieves, integrality of two closed-form
products, and certified interval analysis of the inner-product spectrum.
"""

from .candidates import (
    CandidateError,
    DesignCandidate,
    TightBoundError,
    cardinality_bounds,
    iter_cardinalities,
)
from .formulas import (
    SingularDenominatorError,
    derived_quantities,
    discriminant_identity_check,
    moment,
    nozaki_product,
    quartic_coefficients,
    quartic_discriminant,
    r_poly_value,
    xyzt_product,
)
from .pipeline import analyze_pair, full_candidate_analysis
from .records import CSV_COLUMNS, ScanReport, SieveRecord, Stage
from .report import render_csv, render_jsonl, render_summary, write_report
from .scan import LedgerError, check, resume_ledger, scan, scan_dimension
from .sieve import (
    Lemma3Case,
    Lemma5Case,
    LemmaVerdict,
    coarse_sieve,
    fine_sieve,
    lemma3_verdict,
    lemma5_verdict,
    p_adic_valuation,
)
from .spectrum import (
    InnerProductSpectrum,
    IntegralityStatus,
    PrecisionPolicy,
    distance_distribution,
    nozaki_bound,
    nozaki_coefficients,
    solve_quartic,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_COLUMNS",
    "CandidateError",
    "DesignCandidate",
    "InnerProductSpectrum",
    "IntegralityStatus",
    "LedgerError",
    "Lemma3Case",
    "Lemma5Case",
    "LemmaVerdict",
    "PrecisionPolicy",
    "ScanReport",
    "SieveRecord",
    "SingularDenominatorError",
    "Stage",
    "TightBoundError",
    "analyze_pair",
    "cardinality_bounds",
    "check",
    "coarse_sieve",
    "derived_quantities",
    "discriminant_identity_check",
    "distance_distribution",
    "fine_sieve",
    "full_candidate_analysis",
    "iter_cardinalities",
    "lemma3_verdict",
    "lemma5_verdict",
    "moment",
    "nozaki_bound",
    "nozaki_coefficients",
    "nozaki_product",
    "p_adic_valuation",
    "quartic_coefficients",
    "quartic_discriminant",
    "r_poly_value",
    "render_csv",
    "render_jsonl",
    "render_summary",
    "resume_ledger",
    "scan",
    "scan_dimension",
    "solve_quartic",
    "write_report",
    "xyzt_product",
]
