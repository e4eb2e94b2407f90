"""
Third and sixth order mock theta functions as truncated q-hypergeometric sums,
and the three identities tying them to the b, c and d generating functions.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

from ..models.schemas import CheckReport
from ..utils.logger import LogTimer, get_logger, log_calls
from .checks import compare_series
from .qfactory import GF_B, GF_C, GF_D, GeneratingFunctionId, SeriesFactory, default_factory
from .ring import ZZ
from .series import Series

logger = get_logger(__name__)

# (sign, a, b, count(n)) stands for prod_{j < count(n)} (1 - sign*q^(a + j*b)).
Pochhammer = Tuple[int, int, int, Callable[[int], int]]


@dataclass(frozen=True)
class TermShape:
    """
    Term n of a mock theta sum: (-1)^n if alternating, times
    q^valuation(n) * prod(numerator) / prod(denominator).
    """
    valuation: Callable[[int], int]
    start: int = 0
    alternating: bool = False
    numerator: Tuple[Pochhammer, ...] = ()
    denominator: Tuple[Pochhammer, ...] = ()


class MockThetaId(Enum):
    UPSILON = "upsilon"
    UPSILON3 = "upsilon3"
    PSI6 = "Psi6"
    PSI_MINUS6 = "PsiMinus6"
    RHO6 = "rho6"
    LAMBDA6 = "lambda6"

    @property
    def shape(self) -> TermShape:
        return _SHAPES[self]

    def valuation(self, n: int) -> int:
        return self.shape.valuation(n)

    @classmethod
    def parse(cls, text: str) -> "MockThetaId":
        lowered = {member.value.lower(): member for member in cls}
        try:
            return lowered[text.strip().lower()]
        except KeyError:
            raise ValueError(f"Unknown mock theta function: {text}")


_SHAPES = {
    # q^{n(n+1)} / (-q; q^2)_{n+1}
    MockThetaId.UPSILON: TermShape(
        valuation=lambda n: n * (n + 1),
        denominator=((-1, 1, 2, lambda n: n + 1),)),
    # q^n (-q; q^2)_n
    MockThetaId.UPSILON3: TermShape(
        valuation=lambda n: n,
        numerator=((-1, 1, 2, lambda n: n),)),
    # (-1)^n q^{(n+1)^2} (q; q^2)_n / (-q; q)_{2n+1}
    MockThetaId.PSI6: TermShape(
        valuation=lambda n: (n + 1) ** 2,
        alternating=True,
        numerator=((1, 1, 2, lambda n: n),),
        denominator=((-1, 1, 1, lambda n: 2 * n + 1),)),
    # q^n (-q; q)_{2n-2} / (q; q^2)_n, from n = 1; (-q; q)_0 = 1
    MockThetaId.PSI_MINUS6: TermShape(
        valuation=lambda n: n,
        start=1,
        numerator=((-1, 1, 1, lambda n: max(2 * n - 2, 0)),),
        denominator=((1, 1, 2, lambda n: n),)),
    # q^{n(n+1)/2} (-q; q)_n / (q; q^2)_{n+1}
    MockThetaId.RHO6: TermShape(
        valuation=lambda n: n * (n + 1) // 2,
        numerator=((-1, 1, 1, lambda n: n),),
        denominator=((1, 1, 2, lambda n: n + 1),)),
    # (-1)^n q^n (q; q^2)_n / (-q; q)_n
    MockThetaId.LAMBDA6: TermShape(
        valuation=lambda n: n,
        alternating=True,
        numerator=((1, 1, 2, lambda n: n),),
        denominator=((-1, 1, 1, lambda n: n),)),
}


def _factor_exponents(spec: Pochhammer, start: int, stop: int) -> List[Tuple[int, int]]:
    """Binomials (sign, exponent) with index start <= j < stop."""
    sign, a, b, _ = spec
    return [(sign, a + j * b) for j in range(start, stop)]


def _apply(series: Series, sign: int, exponent: int, divide: bool) -> Series:
    if exponent >= series.order:
        return series
    binomial = Series.from_terms({0: 1, exponent: -sign}, series.order, series.ring)
    return series.divide(binomial) if divide else series * binomial


def _last_index(shape: TermShape, order: int) -> int:
    """One past the last n whose term reaches below `order`."""
    n = shape.start
    while shape.valuation(n) < order:
        n += 1
    return n


@log_calls()
def mock(which: MockThetaId, order: int) -> Series:
    """
    Sum of every term with valuation below `order`, in exact integers.

    The Pochhammer symbols grow one factor at a time, so each step costs a
    few binomial multiplications or divisions instead of a fresh inverse.
    """
    shape = which.shape
    total = Series.zero(order, ZZ)
    running = Series.one(order, ZZ)
    counts_num = [0] * len(shape.numerator)
    counts_den = [0] * len(shape.denominator)
    with LogTimer(logger, f"mock theta {which.value} to order {order}"):
        for n in range(shape.start, _last_index(shape, order)):
            for i, spec in enumerate(shape.numerator):
                target = spec[3](n)
                for sign, e in _factor_exponents(spec, counts_num[i], target):
                    running = _apply(running, sign, e, divide=False)
                counts_num[i] = target
            for i, spec in enumerate(shape.denominator):
                target = spec[3](n)
                for sign, e in _factor_exponents(spec, counts_den[i], target):
                    running = _apply(running, sign, e, divide=True)
                counts_den[i] = target
            term = running.shift(shape.valuation(n))
            if shape.alternating and n % 2:
                term = -term
            total = total + term
    return total


def term(which: MockThetaId, n: int, order: int) -> Series:
    """Term n alone, built directly from finite Pochhammer symbols."""
    shape = which.shape
    if n < shape.start:
        raise ValueError(f"{which.value} has no term {n}")
    factory = default_factory
    body = Series.one(order, ZZ)
    for sign, a, b, count in shape.numerator:
        body = body * factory.pochhammer_n(sign, a, b, count(n), order)
    for sign, a, b, count in shape.denominator:
        body = body * factory.pochhammer_n(sign, a, b, count(n), order).invert()
    body = body.shift(shape.valuation(n)) if shape.valuation(n) < order else Series.zero(order, ZZ)
    return -body if shape.alternating and n % 2 else body


@dataclass(frozen=True)
class ChoiKimIdentity:
    """mock combination = multiplier * generating function."""
    key: str
    combination: Tuple[Tuple[int, MockThetaId], ...]
    multiplier: int
    family: GeneratingFunctionId
    reference: str


IDENTITIES = {
    "third": ChoiKimIdentity(
        "third", ((1, MockThetaId.UPSILON), (1, MockThetaId.UPSILON3)), 2, GF_B,
        "upsilon(q) + upsilon3(q,q;q) = 2 (q^4;q^4)^3 / (q^2;q^2)^2"),
    "sixth_psi": ChoiKimIdentity(
        "sixth_psi", ((1, MockThetaId.PSI6), (2, MockThetaId.PSI_MINUS6)), 3, GF_C,
        "Psi(q) + 2 Psi_-(q) = 3 q (q^6;q^6)^3 / ((q;q)(q^2;q^2))"),
    "sixth_rho": ChoiKimIdentity(
        "sixth_rho", ((2, MockThetaId.RHO6), (1, MockThetaId.LAMBDA6)), 3, GF_D,
        "2 rho(q) + lambda(q) = 3 (q^3;q^3)^3 / ((q;q)(q^2;q^2))"),
}


def identity_sides(which: str, order: int, factory: Optional[SeriesFactory] = None) -> Tuple[Series, Series]:
    identity = IDENTITIES[which]
    factory = factory or default_factory
    lhs = Series.zero(order, ZZ)
    for weight, mock_id in identity.combination:
        lhs = lhs + mock(mock_id, order).scale(weight)
    rhs = factory.gf(identity.family, order).scale(identity.multiplier)
    return lhs, rhs


def verify_choi_kim(which: str, order: int) -> CheckReport:
    """Compare the mock theta combination with the eta-quotient side to `order`."""
    if which not in IDENTITIES:
        raise ValueError(f"Unknown mock theta identity: {which} (expected one of {sorted(IDENTITIES)})")
    identity = IDENTITIES[which]
    with LogTimer(logger, f"mock theta identity {which}") as timer:
        lhs, rhs = identity_sides(which, order)
    return compare_series(f"mock-{which}", identity.reference,
                          f"mock theta identity '{which}' in exact arithmetic", lhs, rhs,
                          millis=timer.millis)
