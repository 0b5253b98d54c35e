"""Three independent decisions of "all roots real and distinct".

* the inequality test: ``(f^(j))^2 - f^(j-1) f^(j+1) > 0`` on the whole line
  for every ``1 <= j <= deg f - 1``;
* the extrema-sign test: every nonconstant derivative has only positive
  local maxima and negative local minima (a zero extremum counts as a
  violation);
* exact ground truth: no non-real zeros and ``gcd(f, f')`` constant.

:func:`analyze` runs all three and refuses to return if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from typing import Dict, List, Optional, Tuple

from .errors import ConstantPolynomial, InadmissibleChain, InternalDisagreement, JOutOfRange
from .fourier import (
    LOCAL_MAX,
    LOCAL_MIN,
    CountingIdentity,
    CriticalPoint,
    nonreal_count_via_fourier,
    scan_critical_points,
    verify_counting_identity,
)
from .poly import Poly, Q, derivative, derivative_chain, is_squarefree, require_nonconstant
from .realroots import is_strictly_positive_on_R, nonreal_count_exact

POSITIVE_MIN = "positive_min"
NEGATIVE_MAX = "negative_max"
ZERO_EXTREMUM = "zero_extremum"
MULTIPLE_ROOT = "multiple_root"


def inequality_expression(f: Poly, j: int) -> Poly:
    """``(f^(j))^2 - f^(j-1) * f^(j+1)`` as an exact polynomial."""
    require_nonconstant(f)
    if not 1 <= j <= f.degree - 1:
        raise JOutOfRange(f"j = {j} outside 1..{f.degree - 1}")
    lower = f.derivative(j - 1)
    mid = derivative(lower)
    upper = derivative(mid)
    return mid * mid - lower * upper


@dataclass(frozen=True)
class InequalityVerdict:
    passed: bool
    per_j: Tuple[Tuple[int, bool], ...]
    failing_j: Optional[int] = None
    witness: Optional[Q] = None

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "per_j": [{"j": j, "positive": ok} for j, ok in self.per_j],
            "failing_j": self.failing_j,
            "witness": None if self.witness is None else str(self.witness),
        }


def inequality_test(f: Poly) -> InequalityVerdict:
    """Strict positivity of every inequality expression on the real line.

    Degree one polynomials pass vacuously.
    """
    require_nonconstant(f)
    per_j = []
    failing_j = witness = None
    for j in range(1, f.degree):
        verdict = is_strictly_positive_on_R(inequality_expression(f, j))
        per_j.append((j, verdict.positive))
        if not verdict.positive and failing_j is None:
            failing_j, witness = j, verdict.witness
    return InequalityVerdict(failing_j is None, tuple(per_j), failing_j, witness)


@dataclass(frozen=True)
class FunnyEvent:
    """A non-positive local maximum, non-negative local minimum or repeated root."""

    order: int
    kind: str
    point: CriticalPoint

    def to_dict(self) -> dict:
        out = self.point.to_dict()
        out["extremum"] = out.pop("kind")
        out.update(order=self.order, kind=self.kind)
        return out


def _event_kind(cp: CriticalPoint) -> Optional[str]:
    if cp.sign_of_f == 0:
        # alpha is a root of multiplicity m + 1
        return ZERO_EXTREMUM if (cp.vanishing_order + 1) % 2 == 0 else MULTIPLE_ROOT
    if cp.kind == LOCAL_MIN and cp.sign_of_f > 0:
        return POSITIVE_MIN
    if cp.kind == LOCAL_MAX and cp.sign_of_f < 0:
        return NEGATIVE_MAX
    return None


def funny_events(g: Poly, order: int = 0) -> List[FunnyEvent]:
    if g.is_constant or g.degree < 2:
        return []
    out = []
    for cp in scan_critical_points(g):
        kind = _event_kind(cp)
        if kind is not None:
            out.append(FunnyEvent(order, kind, cp))
    return out


@dataclass(frozen=True)
class ExtremaVerdict:
    passed: bool
    violation: Optional[FunnyEvent] = None

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "violation": None if self.violation is None else self.violation.to_dict()}


def funny_ledger(f: Poly) -> Dict[int, List[FunnyEvent]]:
    """Every funny-business event of ``f^(d)`` for ``d = 0 .. deg f - 2``."""
    require_nonconstant(f)
    chain = derivative_chain(f)
    ledger = {}
    for d in range(0, f.degree - 1):
        events = funny_events(chain[d], d)
        if events:
            ledger[d] = events
    return ledger


def _first_violation(ledger) -> Optional[FunnyEvent]:
    return ledger[min(ledger)][0] if ledger else None


def extrema_sign_test(f: Poly) -> ExtremaVerdict:
    require_nonconstant(f)
    chain = derivative_chain(f)
    for d in range(0, f.degree - 1):
        events = funny_events(chain[d], d)
        if events:
            return ExtremaVerdict(False, events[0])
    return ExtremaVerdict(True)


def ground_truth(f: Poly) -> bool:
    require_nonconstant(f)
    return is_squarefree(f) and nonreal_count_exact(f) == 0


@dataclass
class HyperbolicityReport:
    degree: int
    ground_truth: bool
    squarefree: bool
    zc: int
    inequality: InequalityVerdict
    extrema: ExtremaVerdict
    funny_ledger: Dict[int, List[FunnyEvent]] = field(default_factory=dict)
    counting_identity: Optional[CountingIdentity] = None
    telescoped_nonreal: Optional[int] = None
    inadmissible_j: Optional[int] = None

    @property
    def verdicts_agree(self) -> bool:
        return self.ground_truth == self.inequality.passed == self.extrema.passed

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "ground_truth": self.ground_truth,
            "squarefree": self.squarefree,
            "zc": self.zc,
            "inequality_verdict": self.inequality.to_dict(),
            "extrema_verdict": self.extrema.to_dict(),
            "funny_ledger": {str(d): [e.to_dict() for e in evs]
                             for d, evs in sorted(self.funny_ledger.items())},
            "counting_identity": (None if self.counting_identity is None
                                  else self.counting_identity.to_dict()),
            "telescoped_nonreal": self.telescoped_nonreal,
            "inadmissible_j": self.inadmissible_j,
        }


def analyze(f: Poly) -> HyperbolicityReport:
    """Run every criterion on ``f`` and cross-check the verdicts."""
    if f.is_constant:
        raise ConstantPolynomial("analysis needs degree >= 1")
    sqf = is_squarefree(f)
    zc = nonreal_count_exact(f)
    ledger = funny_ledger(f)
    report = HyperbolicityReport(
        degree=f.degree,
        ground_truth=sqf and zc == 0,
        squarefree=sqf,
        zc=zc,
        inequality=inequality_test(f),
        extrema=ExtremaVerdict(not ledger, _first_violation(ledger)),
        funny_ledger=ledger,
    )
    if sqf:
        report.counting_identity = verify_counting_identity(f)
        try:
            report.telescoped_nonreal = nonreal_count_via_fourier(f)
        except InadmissibleChain as exc:
            report.inadmissible_j = exc.j
    consistent = report.verdicts_agree
    if report.counting_identity is not None:
        consistent = consistent and report.counting_identity.holds
    if report.telescoped_nonreal is not None:
        consistent = consistent and report.telescoped_nonreal == zc
    if not consistent:
        raise InternalDisagreement(f"criteria disagree on {f}", report.to_dict())
    return report
