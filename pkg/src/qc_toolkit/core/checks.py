"""
Helpers that turn comparisons into CheckReports.

A mismatch is a verdict, never an exception.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from ..models.schemas import CheckReport, Counterexample, Verdict
from .ring import ModularRing
from .series import Series


def _residue_view(series: Series, modulus: Optional[int]) -> Series:
    if modulus is None:
        return series
    if isinstance(series.ring, ModularRing) and series.ring.modulus == modulus:
        return series
    return series.reduce_mod(modulus)


def compare_series(check_id: str, reference: str, description: str,
                   lhs: Series, rhs: Series, *, modulus: Optional[int] = None,
                   notes: Sequence[str] = (), millis: int = 0) -> CheckReport:
    """
    Compare lhs and rhs to the shorter of their orders.

    With a modulus both sides are reduced first, so the check reads lhs = rhs (mod m).
    """
    left, right = _residue_view(lhs, modulus), _residue_view(rhs, modulus)
    order = min(left.order, right.order)
    mismatch = left.first_mismatch(right)
    counterexample = None
    if mismatch is not None:
        counterexample = Counterexample(index=mismatch, value=left.coeff(mismatch),
                                        exponent=mismatch, expected=right.coeff(mismatch))
    return CheckReport(
        id=check_id,
        reference=reference,
        description=description,
        order=order,
        instances=order if mismatch is None else mismatch,
        verdict=Verdict.VERIFIED if mismatch is None else Verdict.COUNTEREXAMPLE,
        counterexample=counterexample,
        notes=list(notes),
        millis=millis
    )


def vanishing_report(check_id: str, reference: str, description: str, series: Series,
                     *, modulus: Optional[int] = None, notes: Sequence[str] = (),
                     millis: int = 0) -> CheckReport:
    """Check that a series is zero (mod m) to its full order."""
    return compare_series(check_id, reference, description, series,
                          Series.zero(series.order, series.ring), modulus=modulus,
                          notes=notes, millis=millis)


def claim_report(check_id: str, reference: str, description: str,
                 outcomes: Iterable[Tuple[int, bool, int]], *, notes: Sequence[str] = (),
                 millis: int = 0) -> CheckReport:
    """
    Report on a finite list of claims.

    `outcomes` yields (index, holds, observed value); the first failure becomes
    the counterexample.
    """
    checked = 0
    counterexample = None
    for index, holds, value in outcomes:
        checked += 1
        if not holds and counterexample is None:
            counterexample = Counterexample(index=index, value=value)
    return CheckReport(
        id=check_id,
        reference=reference,
        description=description,
        order=0,
        instances=checked,
        verdict=Verdict.VERIFIED if counterexample is None else Verdict.COUNTEREXAMPLE,
        counterexample=counterexample,
        notes=list(notes),
        millis=millis
    )


def combine(check_id: str, reference: str, description: str,
            parts: List[CheckReport], notes: Sequence[str] = ()) -> CheckReport:
    """Fold several sub-checks into one report; the first failing part wins."""
    failing = next((p for p in parts if not p.passed), None)
    return CheckReport(
        id=check_id,
        reference=reference,
        description=description,
        order=min((p.order for p in parts if p.order), default=0),
        instances=sum(p.instances for p in parts),
        verdict=failing.verdict if failing else Verdict.VERIFIED,
        counterexample=failing.counterexample if failing else None,
        notes=list(notes) + [f"{p.id}: {p.verdict.value}" for p in parts],
        millis=sum(p.millis for p in parts)
    )
