"""Star-coloring criticality: the direct definition and the pattern characterizations.

The direct method (solve chi_s on ``g`` and on every ``g - e``) is ground
truth. The characterizations are fast paths checked against it;
``classify_critical`` records every disagreement with both certificates and,
with ``strict=True``, raises ``CharacterizationMismatch`` instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .coloring import chromatic_number, star_chromatic_number, star_colorable
from .graph import Graph, delete_edge
from .patterns import PatternKind, PatternWitness, first_witness

N1_ORDER = (PatternKind.I3, PatternKind.TWO_K2)
N2_ORDER = (PatternKind.I4, PatternKind.TWO_K2_PLUS_K1, PatternKind.P3_PLUS_P2)


class CharacterizationMismatch(AssertionError):
    """A characterization disagreed with the direct computation."""


@dataclass
class CriticalityReport:
    chi_s: int
    k: int
    per_edge: list[tuple[tuple[int, int], int]]
    is_critical: bool
    failing_edge: tuple[int, int] | None = None
    premise_holds: bool = True
    coloring: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "chi_s": self.chi_s,
            "premise_holds": self.premise_holds,
            "is_critical": self.is_critical,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
            "per_edge": [{"edge": list(e), "chi_s": v} for e, v in self.per_edge],
            "coloring": self.coloring,
        }


class Claim(enum.Enum):
    CHI_S_N_MINUS_1 = "chi_s = n-1"
    N_MINUS_1_CRITICAL = "(n-1)-critical"
    CHI_S_N_MINUS_2 = "chi_s = n-2"
    N_MINUS_2_CRITICAL = "(n-2)-critical"


@dataclass
class CharacterizationVerdict:
    """``holds`` is None when the characterization does not apply (see ``reason``)."""

    claim: Claim
    holds: bool | None
    reason: str = ""
    witness: PatternWitness | None = None
    per_edge: list[tuple[tuple[int, int], PatternWitness | None]] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.holds is not None

    def to_dict(self) -> dict:
        def w(x):
            return None if x is None else {"kind": x.kind.value, "vertices": list(x.vertices)}

        return {
            "claim": self.claim.value,
            "applicable": self.applicable,
            "holds": self.holds,
            "reason": self.reason,
            "witness": w(self.witness),
            "per_edge": [{"edge": list(e), "witness": w(x)} for e, x in self.per_edge],
        }


def is_k_critical_direct(g: Graph, k: int | None = None) -> CriticalityReport:
    """chi_s(g) == k and every single-edge deletion lowers chi_s.

    ``k`` defaults to chi_s(g). A wrong ``k`` yields ``premise_holds=False``.
    """
    if g.m < 1:
        raise ValueError("criticality needs at least one edge")
    chi, coloring = star_chromatic_number(g)
    k = chi if k is None else k
    per_edge = []
    failing = None
    for e in g.edges():
        value, _ = star_chromatic_number(delete_edge(g, e))
        per_edge.append((e, value))
        if failing is None and value >= chi:
            failing = e
    premise = chi == k
    return CriticalityReport(
        chi_s=chi,
        k=k,
        per_edge=per_edge,
        is_critical=premise and failing is None,
        failing_edge=failing,
        premise_holds=premise,
        coloring=coloring,
    )


def is_critical_fast(g: Graph) -> tuple[int, bool]:
    """(chi_s, critical?) using only a feasibility check at chi_s - 1 per edge.

    Valid because chi_s(g - e) <= chi_s(g) always holds.
    """
    chi, _ = star_chromatic_number(g)
    if g.m == 0:
        return chi, False
    critical = all(star_colorable(delete_edge(g, e), chi - 1) is not None for e in g.edges())
    return chi, critical


def is_proper_critical(g: Graph) -> tuple[int, bool]:
    """(chi, critical?) for ordinary proper coloring."""
    chi, _ = chromatic_number(g)
    if g.m == 0:
        return chi, False
    return chi, all(chromatic_number(delete_edge(g, e))[0] < chi for e in g.edges())


def _n1_inapplicable(g: Graph) -> str:
    if g.n < 5:
        return f"needs n >= 5 (n = {g.n})"
    if g.is_complete():
        return "graph is complete"
    return ""


def _n2_inapplicable(g: Graph) -> str:
    if g.n < 5:
        return f"needs n >= 5 (n = {g.n})"
    if first_witness(g, N1_ORDER) is None:
        return "graph contains neither an I3 nor an induced 2K2"
    return ""


def _freeness_verdict(g: Graph, claim: Claim, kinds, reason: str) -> CharacterizationVerdict:
    if reason:
        return CharacterizationVerdict(claim, None, reason)
    w = first_witness(g, kinds)
    return CharacterizationVerdict(claim, w is None, witness=w)


def _critical_verdict(g: Graph, claim: Claim, kinds, reason: str) -> CharacterizationVerdict:
    base = _freeness_verdict(g, claim, kinds, reason)
    if not base.applicable or not base.holds:
        return base
    per_edge = [(e, first_witness(delete_edge(g, e), kinds)) for e in g.edges()]
    holds = all(w is not None for _, w in per_edge)
    return CharacterizationVerdict(claim, holds, per_edge=per_edge)


def chi_s_equals_n_minus_1(g: Graph) -> CharacterizationVerdict:
    return _freeness_verdict(g, Claim.CHI_S_N_MINUS_1, N1_ORDER, _n1_inapplicable(g))


def is_n_minus_1_critical(g: Graph) -> CharacterizationVerdict:
    return _critical_verdict(g, Claim.N_MINUS_1_CRITICAL, N1_ORDER, _n1_inapplicable(g))


def chi_s_equals_n_minus_2(g: Graph) -> CharacterizationVerdict:
    return _freeness_verdict(g, Claim.CHI_S_N_MINUS_2, N2_ORDER, _n2_inapplicable(g))


def is_n_minus_2_critical(g: Graph) -> CharacterizationVerdict:
    return _critical_verdict(g, Claim.N_MINUS_2_CRITICAL, N2_ORDER, _n2_inapplicable(g))


@dataclass
class Classification:
    label: str
    chi_s: int
    report: CriticalityReport | None
    verdicts: list[CharacterizationVerdict] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "chi_s": self.chi_s,
            "report": None if self.report is None else self.report.to_dict(),
            "characterizations": [v.to_dict() for v in self.verdicts],
            "mismatches": self.mismatches,
        }


def classify_critical(g: Graph, strict: bool = False) -> Classification:
    """One of ``3-critical``, ``(n-1)-critical``, ``(n-2)-critical``,
    ``k-critical(k)`` or ``not-critical``, always from the direct method."""
    if g.m == 0:
        chi, _ = star_chromatic_number(g)
        return Classification("not-critical", chi, None)
    report = is_k_critical_direct(g)
    chi, n = report.chi_s, g.n
    verdicts = []
    mismatches = []
    for check, target in ((is_n_minus_1_critical, n - 1), (is_n_minus_2_critical, n - 2)):
        verdict = check(g)
        if not verdict.applicable:
            continue
        verdicts.append(verdict)
        direct = report.is_critical and chi == target
        if verdict.holds != direct:
            message = (
                f"{verdict.claim.value} characterization says {verdict.holds}, direct method says "
                f"{direct}: verdict={verdict.to_dict()} report={report.to_dict()} graph={g!r}"
            )
            if strict:
                raise CharacterizationMismatch(message)
            mismatches.append(message)
    if not report.is_critical:
        label = "not-critical"
    elif chi == 3:
        label = "3-critical"
    elif chi == n - 1:
        label = "(n-1)-critical"
    elif chi == n - 2:
        label = "(n-2)-critical"
    else:
        label = f"k-critical({chi})"
    return Classification(label, chi, report, verdicts, mismatches)

