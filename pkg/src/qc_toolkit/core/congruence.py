"""
Ramanujan-type congruences: theorem families over (p, alpha, j), the fixed
claims, and a scanner that checks coeff(A*n + B) = 0 (mod m) on a generating
function built directly in Z/mZ.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from ..errors import OffsetError
from ..models.schemas import CheckReport, Counterexample, ProgressionCongruence, Provenance, Verdict
from ..utils.logger import LogTimer, get_logger
from .checks import combine, compare_series
from .dissect import dissected, frobenius_report, pm_sixth
from .qfactory import GF_B, GF_C, GF_D, EtaQuotient, GeneratingFunctionId, SeriesFactory, default_factory, eta_q
from .ring import ModularRing
from .series import Series

logger = get_logger(__name__)


# ----------------------------------------------------------------------
# theorem families

@dataclass(frozen=True)
class TheoremFamily:
    """coeff(multiplier*p^{2a} n + (numerator(j, p) p^{2a-1} - 1)/divisor) = 0 (mod m)."""
    family: str
    modulus: int
    multiplier: int
    numerator: Callable[[int, int], int]
    divisor: int
    min_prime: int
    statement: str
    note: Optional[str] = None


class TheoremId(Enum):
    B_MOD2 = "b-mod2"
    D_MOD2 = "d-mod2"
    D_MOD3 = "d-mod3"
    D_MOD9 = "d-mod9"

    @property
    def spec(self) -> TheoremFamily:
        return _THEOREMS[self]


_THEOREMS = {
    TheoremId.B_MOD2: TheoremFamily(
        "b", 2, 1, lambda j, p: 3 * j + p, 3, 5,
        "b(p^{2a} n + ((3j+p) p^{2a-1} - 1)/3) = 0 (mod 2), p >= 5, 1 <= j <= p-1"),
    TheoremId.D_MOD2: TheoremFamily(
        "d", 2, 2, lambda j, p: 8 * j + p, 4, 3,
        "d(2p^{2a} n + ((8j+p) p^{2a-1} - 1)/4) = 0 (mod 2), p >= 3, 1 <= j <= p-1",
        note="statement printed without n; progression read from the step "
             "d(2p^{2a-1}(pn+j) + (p^{2a}-1)/4), i.e. A = 2p^{2a}"),
    TheoremId.D_MOD3: TheoremFamily(
        "d", 3, 6, lambda j, p: 24 * j + p, 4, 5,
        "d(6p^{2a} n + ((24j+p) p^{2a-1} - 1)/4) = 0 (mod 3), p >= 5, 1 <= j <= p-1"),
    TheoremId.D_MOD9: TheoremFamily(
        "d", 9, 6, lambda j, p: 24 * j + 9 * p, 4, 5,
        "d(6p^{2a} n + ((24j+9p) p^{2a-1} - 1)/4) = 0 (mod 9), p >= 5, 1 <= j <= p-1"),
}


def instance(theorem: TheoremId, p: int, alpha: int, j: int) -> ProgressionCongruence:
    """One member of a theorem family; the offset must come out integral."""
    spec = theorem.spec
    if not isprime(p) or p < spec.min_prime:
        raise ValueError(f"{theorem.value} needs a prime p >= {spec.min_prime}, got {p}")
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    if not 1 <= j <= p - 1:
        raise ValueError(f"j must lie in 1..{p - 1}, got {j}")
    A = spec.multiplier * p ** (2 * alpha)
    top = spec.numerator(j, p) * p ** (2 * alpha - 1) - 1
    if top % spec.divisor:
        raise OffsetError(f"{theorem.value}: offset {top}/{spec.divisor} is not an integer "
                          f"(p={p}, alpha={alpha}, j={j})")
    return ProgressionCongruence(
        family=spec.family, A=A, B=top // spec.divisor, modulus=spec.modulus,
        provenance=Provenance(theorem.value, p=p, alpha=alpha, j=j, note=spec.note))


def instances(theorem: TheoremId, primes: Iterable[int], alpha_max: int) -> List[ProgressionCongruence]:
    """Every (p, alpha, j) member for the given primes, skipping primes outside the family's range."""
    out = []
    for p in primes:
        if p < theorem.spec.min_prime:
            continue
        for alpha in range(1, alpha_max + 1):
            out.extend(instance(theorem, p, alpha, j) for j in range(1, p))
    return out


# ----------------------------------------------------------------------
# fixed claims

def _fixed(family: str, A: int, B: int, m: int, source: str, conjectural: bool = False) -> ProgressionCongruence:
    return ProgressionCongruence(family, A, B, m, Provenance(source, conjectural=conjectural))


def fixed_claims() -> List[ProgressionCongruence]:
    """The proven fixed progressions followed by the open ones."""
    proven = [
        _fixed("c", 27, 24, 9, "c(27n+24) mod 9"),
        _fixed("c", 45, 9, 5, "c(45n+t) mod 5"),
        _fixed("c", 45, 18, 5, "c(45n+t) mod 5"),
        _fixed("c", 45, 9, 15, "c(45n+t) mod 15"),
        _fixed("c", 45, 18, 15, "c(45n+t) mod 15"),
        _fixed("d", 45, 17, 5, "d(45n+t) mod 5"),
        _fixed("d", 45, 35, 5, "d(45n+t) mod 5"),
        _fixed("d", 45, 17, 15, "d(45n+t) mod 15"),
        _fixed("d", 45, 35, 15, "d(45n+t) mod 15"),
        _fixed("b", 8, 6, 4, "b(8n+6) mod 4"),
        _fixed("c", 3, 0, 3, "c(3n) mod 3"),
        _fixed("d", 3, 2, 3, "d(3n+2) mod 3"),
    ]
    conjectured = [
        _fixed("c", 45, 21, 5, "open: c(45n+21) mod 5", True),
        _fixed("c", 63, 30, 7, "open: c(63n+t) mod 7", True),
        _fixed("c", 63, 48, 7, "open: c(63n+t) mod 7", True),
        _fixed("c", 63, 57, 7, "open: c(63n+t) mod 7", True),
        _fixed("d", 45, 41, 5, "open: d(45n+41) mod 5", True),
        _fixed("d", 63, 32, 7, "open: d(63n+t) mod 7", True),
        _fixed("d", 63, 50, 7, "open: d(63n+t) mod 7", True),
        _fixed("d", 63, 59, 7, "open: d(63n+t) mod 7", True),
    ]
    return proven + conjectured


# ----------------------------------------------------------------------
# scanning

def default_order(claim: ProgressionCongruence, min_instances: int = 64, min_order: int = 50000) -> int:
    """max(A * min_instances, min_order), raised if needed so min_instances values of n fit."""
    return max(claim.A * min_instances, min_order, claim.order_for(min_instances))


def scan_moduli(claims: Sequence[ProgressionCongruence]) -> Dict[str, int]:
    """Per family, one modulus every claim modulus divides, so one expansion serves all."""
    out: Dict[str, int] = {}
    for claim in claims:
        out[claim.family] = math.lcm(out.get(claim.family, 1), claim.modulus)
    return out


def check(claim: ProgressionCongruence, order: int, factory: Optional[SeriesFactory] = None,
          base_modulus: Optional[int] = None) -> CheckReport:
    """
    Scan coeff(A*n + B) mod m for every n >= 0 with A*n + B < order.

    With `base_modulus` (a multiple of m) the generating function is expanded
    mod base_modulus and shared with other claims on the same family.
    """
    factory = factory or default_factory
    modulus = base_modulus or claim.modulus
    if modulus % claim.modulus:
        raise ValueError(f"Base modulus {modulus} is not a multiple of {claim.modulus}")
    family = GeneratingFunctionId.parse(claim.family)
    with LogTimer(logger, f"scan {claim.describe()} to order {order}") as timer:
        series = factory.gf(family, order, ModularRing(modulus))
        values = series.coeffs[claim.B::claim.A] % np.uint64(claim.modulus)
        nonzero = np.flatnonzero(values)

    counterexample = None
    if len(nonzero):
        n = int(nonzero[0])
        counterexample = Counterexample(index=n, value=int(values[n]), exponent=claim.position(n))

    notes = []
    if claim.provenance.parameters:
        notes.append(claim.provenance.parameters)
    if claim.provenance.note:
        notes.append(claim.provenance.note)
    if claim.conjectural:
        notes.append("open claim: verified to order, not proved")
    residue, start = claim.normalized()
    if start:
        notes.append(f"offset exceeds A: residue {residue}, first index {start}")
    if not len(values):
        notes.append("no progression term below the order")

    return CheckReport(
        id=f"scan-{claim.id}",
        reference=claim.provenance.source,
        description=claim.describe(),
        order=order,
        instances=len(values),
        verdict=Verdict.VERIFIED if counterexample is None else Verdict.COUNTEREXAMPLE,
        counterexample=counterexample,
        conjectural=claim.conjectural,
        notes=notes,
        millis=timer.millis
    )


def scan(family: str, A: int, B: int, modulus: int, order: int,
         factory: Optional[SeriesFactory] = None) -> CheckReport:
    """An ad hoc progression check outside the registry."""
    GeneratingFunctionId.parse(family)
    claim = ProgressionCongruence(family, A, B, modulus, Provenance("ad hoc"))
    return check(claim, order, factory)


# ----------------------------------------------------------------------
# reduction steps used by the proofs

@dataclass(frozen=True)
class ModFact:
    """(sum_n gf(A n + B) q^n) * clearing = rhs (mod m)."""
    key: str
    family: GeneratingFunctionId
    A: int
    B: int
    modulus: int
    rhs: Callable[[SeriesFactory, int, ModularRing], Series]
    reference: str
    clearing: Optional[EtaQuotient] = None


def _eta_rhs(expression):
    return lambda factory, n, ring: expression.expand(n, ring, factory)


def _psi_rhs(factory: SeriesFactory, n: int, ring: ModularRing):
    return factory.psi(n, ring)


MOD_FACTS: Dict[str, ModFact] = {
    "b-mod2": ModFact("b-mod2", GF_B, 1, 0, 2, _eta_rhs(eta_q({8: 1})), "sum b(n) q^n = f8 (mod 2)"),
    "d2n-mod2": ModFact("d2n-mod2", GF_D, 2, 0, 2, _psi_rhs, "sum d(2n) q^n = psi(q) (mod 2)"),
    "d6n-mod3": ModFact("d6n-mod3", GF_D, 6, 0, 3, _eta_rhs(eta_q({1: 1})), "sum d(6n) q^n = f1 (mod 3)"),
    "d6n2-mod9": ModFact("d6n2-mod9", GF_D, 6, 2, 9, _eta_rhs(eta_q({9: 1}, coefficient=3)),
                         "sum d(6n+2) q^n = 3 f9 (mod 9)"),
    "c9n-mod5": ModFact("c9n-mod5", GF_C, 9, 0, 5, _eta_rhs(eta_q({1: 1, 30: 3}, shift=3, coefficient=3)),
                        "sum c(9n) q^n = 3q^3 f1 f30^3/(f5^2 f10) (mod 5), cleared by f5^2 f10",
                        clearing=eta_q({5: 2, 10: 1})),
    "c9n6-mod9": ModFact("c9n6-mod9", GF_C, 9, 6, 9,
                         lambda factory, n, ring: (eta_q({2: 2, 3: 24}, coefficient=3).expand(n, ring, factory)
                                                   + eta_q({2: 2, 6: 24}, shift=3, coefficient=3).expand(n, ring, factory)),
                         "sum c(9n+6) q^n = 3 (f2^2/f1)(f3^16/f6^6 + q^3 f6^18/f3^8) (mod 9), cleared by f1 f3^8 f6^6",
                         clearing=eta_q({1: 1, 3: 8, 6: 6})),
    "d9n8-mod5": ModFact("d9n8-mod5", GF_D, 9, 8, 5, _eta_rhs(eta_q({2: 1, 15: 3}, coefficient=3)),
                         "sum d(9n+8) q^n = 3 f2 f15^3/(f5 f10^2) (mod 5), cleared by f5 f10^2",
                         clearing=eta_q({5: 1, 10: 2})),
}


def verify_mod_fact(key: str, order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    if key not in MOD_FACTS:
        raise ValueError(f"Unknown reduction step: {key} (expected one of {sorted(MOD_FACTS)})")
    factory = factory or default_factory
    fact = MOD_FACTS[key]
    ring = ModularRing(fact.modulus)
    with LogTimer(logger, f"reduction step {key} to order {order}") as timer:
        lhs = dissected(fact.family, fact.A, fact.B, order, factory, ring)
        if fact.clearing is not None:
            lhs = lhs * fact.clearing.expand(order, ring, factory)
        rhs = fact.rhs(factory, order, ring)
    return compare_series(f"modfact-{key}", fact.reference, f"reduction step {key}", lhs, rhs,
                          modulus=fact.modulus, millis=timer.millis)


def intermediate_mod_facts(order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    """Every reduction step, one combined report."""
    parts = [verify_mod_fact(key, order, factory) for key in MOD_FACTS]
    report = combine("intermediate-mod-facts", "reduction steps modulo 2, 3, 5 and 9",
                     "congruences used between dissection steps", parts)
    report.order = order
    return report


def frobenius_check(ell: int, order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    """f1^ell = f_ell (mod ell) for a prime ell."""
    if not isprime(ell):
        raise ValueError(f"Frobenius congruence needs a prime, got {ell}")
    return frobenius_report(ell, order, factory=factory)


def _step_claims(p: int, alpha: int) -> List[Tuple[str, GeneratingFunctionId, int, int, int, Callable]]:
    """(key, family, A, B, m, rhs builder) for the induction step of each family at (p, alpha)."""
    low = p ** (2 * alpha - 1)
    high = p ** (2 * alpha)
    steps = []
    if p >= 5:
        sign = -1 if (alpha * pm_sixth(p)) % 2 else 1
        steps.append(("b", GF_B, low, (high - 1) // 3, 2,
                      lambda f, n, ring: f.eta(8 * p, n, ring)))
        steps.append(("d3", GF_D, 6 * low, (high - 1) // 4, 3,
                      lambda f, n, ring: f.eta(p, n, ring).scale(sign)))
        steps.append(("d9", GF_D, 6 * low, (9 * high - 1) // 4, 9,
                      lambda f, n, ring: f.eta(9 * p, n, ring).scale(3 * sign)))
    steps.append(("d2", GF_D, 2 * low, (high - 1) // 4, 2,
                  lambda f, n, ring: f.psi(n, ring).substitute_power(p, n)))
    return steps


def progression_step_facts(p: int, order: int, alpha: int = 1,
                           factory: Optional[SeriesFactory] = None) -> List[CheckReport]:
    """
    The first dissection step behind each theorem family, e.g.
    sum d(6p^{2a-1} n + (p^{2a}-1)/4) q^n = (-1)^{a(+-p-1)/6} f(-q^p) (mod 3).
    """
    if not isprime(p) or p < 3:
        raise ValueError(f"Progression steps need an odd prime, got {p}")
    factory = factory or default_factory
    reports = []
    for key, family, A, B, m, rhs in _step_claims(p, alpha):
        ring = ModularRing(m)
        with LogTimer(logger, f"progression step {key} p={p} alpha={alpha}") as timer:
            lhs = dissected(family, A, B, order, factory, ring)
            expected = rhs(factory, order, ring)
        reports.append(compare_series(
            f"step-{key}-p{p}-a{alpha}", f"sum {family}({A}n+{B}) q^n (mod {m})",
            f"dissection step for {family} mod {m} at p={p}, alpha={alpha}", lhs, expected,
            modulus=m, millis=timer.millis))
    return reports
