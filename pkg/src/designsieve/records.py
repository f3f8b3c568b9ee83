"""Result records and scan-level reports.

A :class:`SieveRecord` captures everything the pipeline concluded about one
candidate pair: how far it progressed through the staged tests, the exact
values of the two integrality invariants, certified root enclosures, the
distance distribution and multiplicity data, and the refutation (if any).
Records serialize deterministically: exact rationals become ``"num/den"``
decimal strings (plain ``"v"`` when integral) and interval enclosures become
``[lo, hi]`` endpoint pairs of such strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

__all__ = ["Stage", "SieveRecord", "ScanReport", "CSV_COLUMNS", "stage_index"]

Enclosure = tuple[Fraction, Fraction]


class Stage(str, Enum):
    """Pipeline stages, in execution order."""

    COARSE_SIEVE = "coarse_sieve"
    FINE_SIEVE = "fine_sieve"
    XYZT_INTEGRALITY = "xyzt_integrality"
    NOZAKI_INTEGRALITY = "nozaki_integrality"
    SPECTRUM_ANALYSIS = "spectrum_analysis"
    SURVIVOR = "survivor"


_STAGE_ORDER = {s: i for i, s in enumerate(Stage)}


def stage_index(stage: Stage) -> int:
    return _STAGE_ORDER[stage]


def _rational_str(x: Fraction | None) -> str | None:
    if x is None:
        return None
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rational_parse(s: str | None) -> Fraction | None:
    return None if s is None else Fraction(s)


def _enclosures_parse(data) -> tuple | None:
    if data is None:
        return None
    return tuple((Fraction(lo), Fraction(hi)) for lo, hi in data)


def _enclosures_json(encs: tuple[Enclosure, ...] | None) -> list | None:
    if encs is None:
        return None
    return [[_rational_str(lo), _rational_str(hi)] for lo, hi in encs]


@dataclass(frozen=True, slots=True)
class SieveRecord:
    """Full outcome of the staged analysis of one candidate pair."""

    n: int
    M: int
    stage: Stage
    lemma3_case: str
    lemma3_passed: bool
    lemma5_case: str
    lemma5_passed: bool
    xyzt: Fraction | None = None
    nozaki: Fraction | None = None
    roots: tuple[Enclosure, Enclosure, Enclosure, Enclosure] | None = None
    xyz_t: tuple[Enclosure, Enclosure, Enclosure, Enclosure] | None = None
    k: tuple[Enclosure, Enclosure, Enclosure, Enclosure] | None = None
    refutation: str | None = None
    precision_bits: int | None = None

    @property
    def xyzt_integer(self) -> bool:
        return self.xyzt is not None and self.xyzt.denominator == 1

    @property
    def nozaki_integer(self) -> bool:
        return self.nozaki is not None and self.nozaki.denominator == 1

    def _midpoints(self, encs) -> tuple[float, ...] | None:
        if encs is None:
            return None
        return tuple(float((lo + hi) / 2) for lo, hi in encs)

    @property
    def root_midpoints(self) -> tuple[float, ...] | None:
        return self._midpoints(self.roots)

    @property
    def xyz_t_midpoints(self) -> tuple[float, ...] | None:
        return self._midpoints(self.xyz_t)

    @property
    def k_midpoints(self) -> tuple[float, ...] | None:
        return self._midpoints(self.k)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.M,
            "stage": self.stage.value,
            "lemma3": {"case": self.lemma3_case, "passed": self.lemma3_passed},
            "lemma5": {"case": self.lemma5_case, "passed": self.lemma5_passed},
            "xyzt": _rational_str(self.xyzt),
            "xyzt_integer": self.xyzt_integer,
            "nozaki": _rational_str(self.nozaki),
            "nozaki_integer": self.nozaki_integer,
            "roots": _enclosures_json(self.roots),
            "xyz_t": _enclosures_json(self.xyz_t),
            "k": _enclosures_json(self.k),
            "refutation": self.refutation,
            "precision_bits": self.precision_bits,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=False)

    @classmethod
    def from_json_dict(cls, d: dict) -> "SieveRecord":
        return cls(
            n=d["n"],
            M=d["m"],
            stage=Stage(d["stage"]),
            lemma3_case=d["lemma3"]["case"],
            lemma3_passed=d["lemma3"]["passed"],
            lemma5_case=d["lemma5"]["case"],
            lemma5_passed=d["lemma5"]["passed"],
            xyzt=_rational_parse(d["xyzt"]),
            nozaki=_rational_parse(d["nozaki"]),
            roots=_enclosures_parse(d["roots"]),
            xyz_t=_enclosures_parse(d["xyz_t"]),
            k=_enclosures_parse(d["k"]),
            refutation=d["refutation"],
            precision_bits=d["precision_bits"],
        )

    @classmethod
    def from_json_line(cls, line: str) -> "SieveRecord":
        return cls.from_json_dict(json.loads(line))

    def to_csv_row(self) -> list[str]:
        return [
            str(self.n),
            str(self.M),
            self.stage.value,
            str(self.xyzt_integer).lower(),
            str(self.nozaki_integer).lower(),
            self.refutation or "",
        ]


CSV_COLUMNS = ["n", "m", "stage", "xyzt_integer", "nozaki_integer", "refutation"]


@dataclass(slots=True)
class ScanReport:
    """Aggregate result of a scan over a range of dimensions."""

    n_min: int
    n_max: int
    mode: str
    candidates_total: int = 0
    coarse_passed: int = 0
    fine_passed: int = 0
    xyzt_passed: int = 0
    nozaki_passed: int = 0
    spectrum_refuted: int = 0
    survivors: int = 0
    records: list[SieveRecord] = field(default_factory=list)

    @property
    def xyzt_pairs(self) -> list[tuple[int, int]]:
        return [(r.n, r.M) for r in self.records if r.xyzt_integer]

    @property
    def nozaki_pairs(self) -> list[tuple[int, int]]:
        return [(r.n, r.M) for r in self.records if r.nozaki_integer]

    @property
    def survivor_records(self) -> list[SieveRecord]:
        return [r for r in self.records if r.stage is Stage.SURVIVOR]

    def dimensions_with_multiple_xyzt(self) -> dict[int, int]:
        """Dimensions contributing more than one integral-XYZT cardinality."""
        counts: dict[int, int] = {}
        for r in self.records:
            if r.xyzt_integer:
                counts[r.n] = counts.get(r.n, 0) + 1
        return {n: c for n, c in counts.items() if c > 1}
