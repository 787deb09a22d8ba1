"""Edge-bound audits and exhaustive claim verification over enumerated graphs.

Every verdict here uses integer arithmetic only. Bounds involving square
roots are decided by squaring after a sign check.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Iterable, Sequence

from . import families
from .coloring import star_chromatic_number, star_chromatic_number_oracle
from .criticality import (
    chi_s_equals_n_minus_1,
    chi_s_equals_n_minus_2,
    is_k_critical_direct,
    is_n_minus_1_critical,
    is_n_minus_2_critical,
    is_proper_critical,
)
from .enumeration import canonical_form, enumerate_connected, enumerate_connected_upto
from .graph import Graph, complement, decode_graph6, encode_graph6
from .patterns import (
    complement_is_c3c4_free,
    complement_is_k4_free,
    contains_p4_by_degree,
    contains_p4_subgraph,
    is_star_graph,
)


class BoundKind(enum.Enum):
    N1_CRITICAL = "n1"
    N2_CRITICAL = "n2"


@dataclass(frozen=True)
class Inequality:
    name: str
    bound: str
    satisfied: bool


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    kind: BoundKind
    lower: str
    upper: Fraction
    inequalities: tuple[Inequality, ...]

    @property
    def satisfied(self) -> bool:
        return all(q.satisfied for q in self.inequalities)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "kind": self.kind.value,
            "lower": self.lower,
            "upper": str(self.upper),
            "satisfied": self.satisfied,
            "inequalities": [
                {"name": q.name, "bound": q.bound, "satisfied": q.satisfied} for q in self.inequalities
            ],
        }


def n1_lower_bound_holds(n: int, m: int) -> bool:
    """m > (n^2 - n - n*sqrt(n)) / 2, decided exactly.

    Equivalent to t < n*sqrt(n) with t = n^2 - n - 2m.
    """
    t = n * n - n - 2 * m
    return t < 0 or t * t < n ** 3


def n1_lower_bound_float(n: int, m: int, digits: int = 60) -> bool:
    """High-precision decimal evaluation; a cross-check, never a verdict."""
    getcontext().prec = digits
    n_d = Decimal(n)
    return Decimal(m) > (n_d * n_d - n_d - n_d * n_d.sqrt()) / 2


def audit_bounds(g: Graph, kind: BoundKind | str) -> BoundsReport:
    kind = BoundKind(kind)
    n, m = g.n, g.m
    if kind is BoundKind.N1_CRITICAL:
        upper = Fraction((n - 1) * (n - 2), 2)
        inequalities = (
            Inequality("lower", "m > (n^2 - n - n*sqrt(n))/2", n1_lower_bound_holds(n, m)),
            Inequality("upper", "m <= (n-1)(n-2)/2", 2 * m <= (n - 1) * (n - 2)),
        )
        lower = "(n^2 - n - n*sqrt(n))/2"
    else:
        upper = Fraction(n * (n - 3), 2)
        inequalities = (
            Inequality("lower", "m >= n(n-3)/6", 6 * m >= n * (n - 3)),
            Inequality("upper", "m <= n(n-3)/2", 2 * m <= n * (n - 3)),
        )
        lower = str(Fraction(n * (n - 3), 6))
    return BoundsReport(n, m, kind, lower, upper, inequalities)


@dataclass(frozen=True)
class ComplementAudit:
    n: int
    complement_edges: int
    c3c4_free: bool
    c3c4_edge_bound: bool
    k4_free: bool
    turan_edge_bound: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "complement_edges": self.complement_edges,
            "c3c4_free": self.c3c4_free,
            "c3c4_edge_bound": self.c3c4_edge_bound,
            "k4_free": self.k4_free,
            "turan_edge_bound": self.turan_edge_bound,
        }


def audit_complement_conditions(g: Graph) -> ComplementAudit:
    """Complement (C3, C4)-freeness with |E| <= n*sqrt(n-1)/2, and
    K4-freeness with |E| <= n^2/3."""
    n = g.n
    mc = complement(g).m
    return ComplementAudit(
        n=n,
        complement_edges=mc,
        c3c4_free=complement_is_c3c4_free(g),
        c3c4_edge_bound=(2 * mc) ** 2 <= n * n * (n - 1),
        k4_free=complement_is_k4_free(g),
        turan_edge_bound=3 * mc <= n * n,
    )


# claim verification


class ClaimId(enum.Enum):
    THREE_CRITICAL = "3critical"
    LEM_FREE = "lem-free"
    N1_CRITICAL = "n1-critical"
    LEM_FREE_N2 = "lem-free-n2"
    N2_CRITICAL = "n2-critical"
    NO_PROPER_N1 = "no-proper-n1"
    LEM_P4 = "lem-p4"
    EDGE_BOUNDS_N1 = "edge-bounds-n1"
    EDGE_BOUNDS_N2 = "edge-bounds-n2"
    COMPLEMENT = "complement"
    ORACLE = "oracle"


@dataclass
class VerificationRun:
    claim: ClaimId
    n: int | None
    examined: int = 0
    applicable: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "claim": self.claim.value,
            "n": self.n,
            "examined": self.examined,
            "applicable": self.applicable,
            "counterexamples": self.counterexamples,
            "verified": self.verified,
        }


_K3 = canonical_form(families.complete(3))
_P4 = canonical_form(families.path(4))


def _three_critical(g: Graph):
    if g.m == 0:
        return True, g.n > 8 or canonical_form(g) not in (_K3, _P4)
    report = is_k_critical_direct(g)
    actual = report.is_critical and report.chi_s == 3
    expected = g.n <= 8 and canonical_form(g) in (_K3, _P4)
    return True, actual == expected


def _lem_free(g: Graph):
    verdict = chi_s_equals_n_minus_1(g)
    if not verdict.applicable:
        return False, True
    return True, verdict.holds == (star_chromatic_number(g)[0] == g.n - 1)


def _n1_critical(g: Graph):
    verdict = is_n_minus_1_critical(g)
    if not verdict.applicable:
        return False, True
    report = is_k_critical_direct(g)
    return True, verdict.holds == (report.is_critical and report.chi_s == g.n - 1)


def _lem_free_n2(g: Graph):
    verdict = chi_s_equals_n_minus_2(g)
    if not verdict.applicable:
        return False, True
    return True, verdict.holds == (star_chromatic_number(g)[0] == g.n - 2)


def _n2_critical(g: Graph):
    verdict = is_n_minus_2_critical(g)
    if not verdict.applicable:
        return False, True
    report = is_k_critical_direct(g)
    return True, verdict.holds == (report.is_critical and report.chi_s == g.n - 2)


def _no_proper_n1(g: Graph):
    chi, critical = is_proper_critical(g)
    if chi != g.n - 1:
        return False, True
    return True, not critical


def _lem_p4(g: Graph):
    if g.n < 4:
        return False, True
    scan = contains_p4_subgraph(g)
    if scan != contains_p4_by_degree(g):
        return True, False
    return True, is_star_graph(g) == (not scan)


def _edge_bounds(g: Graph, offset: int, kind: BoundKind):
    if g.n < 5 or g.m == 0:
        return False, True
    report = is_k_critical_direct(g)
    if not (report.is_critical and report.chi_s == g.n - offset):
        return False, True
    return True, audit_bounds(g, kind).satisfied


def _edge_bounds_n1(g: Graph):
    return _edge_bounds(g, 1, BoundKind.N1_CRITICAL)


def _edge_bounds_n2(g: Graph):
    return _edge_bounds(g, 2, BoundKind.N2_CRITICAL)


def _complement(g: Graph):
    if g.n < 5:
        return False, True
    chi = star_chromatic_number(g)[0]
    audit = audit_complement_conditions(g)
    if chi == g.n - 1:
        return True, audit.c3c4_free and audit.c3c4_edge_bound
    if chi == g.n - 2:
        return True, audit.k4_free and audit.turan_edge_bound
    return False, True


def _oracle(g: Graph):
    if g.n > 9:
        return False, True
    return True, star_chromatic_number(g)[0] == star_chromatic_number_oracle(g)


_CHECKS = {
    ClaimId.THREE_CRITICAL: _three_critical,
    ClaimId.LEM_FREE: _lem_free,
    ClaimId.N1_CRITICAL: _n1_critical,
    ClaimId.LEM_FREE_N2: _lem_free_n2,
    ClaimId.N2_CRITICAL: _n2_critical,
    ClaimId.NO_PROPER_N1: _no_proper_n1,
    ClaimId.LEM_P4: _lem_p4,
    ClaimId.EDGE_BOUNDS_N1: _edge_bounds_n1,
    ClaimId.EDGE_BOUNDS_N2: _edge_bounds_n2,
    ClaimId.COMPLEMENT: _complement,
    ClaimId.ORACLE: _oracle,
}


def check_graph(claim: ClaimId | str, g: Graph) -> tuple[bool, bool]:
    """(applicable, ok) for a single graph."""
    return _CHECKS[ClaimId(claim)](g)


def _check_g6(args: tuple[str, bytes]) -> tuple[bool, bool]:
    claim, g6 = args
    return check_graph(claim, decode_graph6(g6))


def default_graphs(claim: ClaimId, n: int) -> list[Graph]:
    """3critical covers every order up to n; the other claims use order exactly n."""
    if claim is ClaimId.THREE_CRITICAL:
        return list(enumerate_connected_upto(n))
    return list(enumerate_connected(n))


def verify_claim(
    claim: ClaimId | str,
    n: int | None = None,
    graphs: Iterable[Graph] | None = None,
    jobs: int = 1,
) -> VerificationRun:
    """Run ``claim`` over the connected graphs of order ``n`` (or over ``graphs``).

    Results are independent of ``jobs``: per-graph outcomes are collected in
    input order.
    """
    claim = ClaimId(claim)
    if graphs is None:
        if n is None:
            raise ValueError("give n or an explicit graph list")
        graphs = default_graphs(claim, n)
    graphs = list(graphs)
    if jobs > 1:
        payload = [(claim.value, encode_graph6(g)) for g in graphs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_g6, payload, chunksize=16))
    else:
        outcomes = [check_graph(claim, g) for g in graphs]
    run = VerificationRun(claim, n, examined=len(graphs))
    for g, (applicable, ok) in zip(graphs, outcomes):
        run.applicable += applicable
        if not ok:
            run.counterexamples.append(encode_graph6(g).decode("ascii"))
    return run


def critical_graphs(n: int, offset: int) -> list[Graph]:
    """Connected graphs of order n that are (n - offset)-critical by the direct method."""
    found = []
    for g in enumerate_connected(n):
        if g.m == 0:
            continue
        report = is_k_critical_direct(g)
        if report.is_critical and report.chi_s == n - offset:
            found.append(g)
    return found


def summarize(runs: Sequence[VerificationRun]) -> dict:
    return {"schema": 1, "runs": [r.to_dict() for r in runs], "verified": all(r.verified for r in runs)}

