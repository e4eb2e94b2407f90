"""
Builders for the named q-series: Pochhammer symbols, eta products and
quotients, Ramanujan theta functions, w(q), P(q) and the partition
generating functions.

Every builder is memoized per (name, ring). A request for a shorter order is
served by truncating the longest expansion built so far.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..errors import ConsistencyError, ConvergenceError, QSeriesError, UnknownSeriesError, ZeroFactorError
from ..models.schemas import CheckReport
from ..utils.logger import LogTimer, get_logger
from .checks import combine, compare_series
from .ring import ZZ, CoefficientRing
from .series import Series

logger = get_logger(__name__)


# ----------------------------------------------------------------------
# eta quotients

@dataclass(frozen=True)
class EtaQuotient:
    """coefficient * q^shift * prod f_k^e, with f_k = (q^k; q^k)_inf."""

    factors: Tuple[Tuple[int, int], ...] = ()
    shift: int = 0
    coefficient: int = 1

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for k, e in self.factors:
            if k < 1:
                raise QSeriesError(f"Eta scale must be positive, got f{k}")
            merged[k] = merged.get(k, 0) + e
        object.__setattr__(self, "factors", tuple(sorted((k, e) for k, e in merged.items() if e)))
        if self.shift < 0:
            raise QSeriesError("Eta quotients with negative q-shift are not power series")

    @classmethod
    def of(cls, factors: Mapping[int, int], shift: int = 0, coefficient: int = 1) -> "EtaQuotient":
        return cls(tuple(factors.items()), shift, coefficient)

    def exponent(self, k: int) -> int:
        return dict(self.factors).get(k, 0)

    def numerator(self) -> Iterator[Tuple[int, int]]:
        return ((k, e) for k, e in self.factors if e > 0)

    def denominator(self) -> Iterator[Tuple[int, int]]:
        return ((k, -e) for k, e in self.factors if e < 0)

    def __mul__(self, other: Union["EtaQuotient", int]) -> "EtaQuotient":
        if isinstance(other, int):
            return EtaQuotient(self.factors, self.shift, self.coefficient * other)
        return EtaQuotient(self.factors + other.factors, self.shift + other.shift,
                           self.coefficient * other.coefficient)

    __rmul__ = __mul__

    def __truediv__(self, other: "EtaQuotient") -> "EtaQuotient":
        if other.coefficient not in (1, -1):
            raise QSeriesError("Only unit prefactors can be divided out of an eta quotient")
        if other.shift > self.shift:
            raise QSeriesError("Quotient would need a negative q-shift")
        return EtaQuotient(self.factors + tuple((k, -e) for k, e in other.factors),
                           self.shift - other.shift, self.coefficient * other.coefficient)

    def __pow__(self, e: int) -> "EtaQuotient":
        if e < 0 and (self.shift or self.coefficient not in (1, -1)):
            raise QSeriesError("Negative powers need a unit eta quotient")
        return EtaQuotient(tuple((k, x * e) for k, x in self.factors), self.shift * e, self.coefficient ** e)

    def __neg__(self) -> "EtaQuotient":
        return EtaQuotient(self.factors, self.shift, -self.coefficient)

    def scaled(self, k: int) -> "EtaQuotient":
        """The same quotient with q replaced by q^k."""
        return EtaQuotient(tuple((s * k, e) for s, e in self.factors), self.shift * k, self.coefficient)

    def expand(self, order: int, ring: CoefficientRing = ZZ,
               factory: Optional["SeriesFactory"] = None) -> Series:
        return (factory or default_factory).eta_quotient(self, order, ring)

    def __str__(self) -> str:
        def render(parts):
            return "*".join(f"f{k}" if e == 1 else f"f{k}^{e}" for k, e in parts)

        num, den = render(self.numerator()), render(self.denominator())
        head = []
        if self.coefficient != 1:
            head.append(str(self.coefficient))
        if self.shift:
            head.append("q" if self.shift == 1 else f"q^{self.shift}")
        if num:
            head.append(num)
        text = "*".join(head) or "1"
        if den:
            text += f"/({den})" if "*" in den else f"/{den}"
        return text


def eta_q(factors: Mapping[int, int], shift: int = 0, coefficient: int = 1) -> EtaQuotient:
    return EtaQuotient.of(factors, shift, coefficient)


@dataclass(frozen=True)
class EtaSum:
    """A signed integer combination of eta quotients."""

    terms: Tuple[EtaQuotient, ...] = ()

    def __add__(self, other: Union["EtaSum", EtaQuotient]) -> "EtaSum":
        extra = other.terms if isinstance(other, EtaSum) else (other,)
        return EtaSum(self.terms + extra)

    def __sub__(self, other: Union["EtaSum", EtaQuotient]) -> "EtaSum":
        extra = other.terms if isinstance(other, EtaSum) else (other,)
        return EtaSum(self.terms + tuple(-t for t in extra))

    def __mul__(self, other: Union[EtaQuotient, int]) -> "EtaSum":
        return EtaSum(tuple(t * other for t in self.terms))

    __rmul__ = __mul__

    def scaled(self, k: int) -> "EtaSum":
        return EtaSum(tuple(t.scaled(k) for t in self.terms))

    def expand(self, order: int, ring: CoefficientRing = ZZ,
               factory: Optional["SeriesFactory"] = None) -> Series:
        factory = factory or default_factory
        total = Series.zero(order, ring)
        for term in self.terms:
            total = total + factory.eta_quotient(term, order, ring)
        return total

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms).replace("+ -", "- ") or "0"


# ----------------------------------------------------------------------
# theta functions

@dataclass(frozen=True)
class ThetaSpec:
    """f(sign_a * q^alpha, sign_b * q^beta) = sum_n a^{n(n+1)/2} b^{n(n-1)/2}."""

    sign_a: int
    alpha: Fraction
    sign_b: int
    beta: Fraction

    def __post_init__(self):
        if self.sign_a not in (1, -1) or self.sign_b not in (1, -1):
            raise QSeriesError("Theta signs must be +1 or -1")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta <= 0:
            raise ConvergenceError(f"f(q^{self.alpha}, q^{self.beta}) does not converge formally")

    def exponent(self, n: int) -> int:
        value = self.alpha * (n * (n + 1) // 2) + self.beta * (n * (n - 1) // 2)
        if value.denominator != 1:
            raise QSeriesError(f"Term {n} of {self} has fractional exponent {value}")
        return int(value)

    def sign(self, n: int) -> int:
        s = 1
        if self.sign_a < 0 and (n * (n + 1) // 2) % 2:
            s = -s
        if self.sign_b < 0 and (n * (n - 1) // 2) % 2:
            s = -s
        return s

    def terms(self, order: int) -> Dict[int, int]:
        """All terms below `order`; exponents are monotone in |n| on each side."""
        out: Dict[int, int] = {}
        for step in (1, -1):
            n = 0 if step == 1 else -1
            while True:
                e = self.exponent(n)
                if e >= order:
                    break
                out[e] = out.get(e, 0) + self.sign(n)
                n += step
        return out

    def __str__(self) -> str:
        def arg(sign, power):
            return f"{'-' if sign < 0 else ''}q^{power}"

        return f"f({arg(self.sign_a, self.alpha)}, {arg(self.sign_b, self.beta)})"


PHI = ThetaSpec(1, 1, 1, 1)
PSI = ThetaSpec(1, 1, 1, 3)
PHI_NEG = ThetaSpec(-1, 1, -1, 1)
F_NEG = ThetaSpec(-1, 1, -1, 2)

PHI_ETA = eta_q({2: 5, 1: -2, 4: -2})
PSI_ETA = eta_q({2: 2, 1: -1})
PHI_NEG_ETA = eta_q({1: 2, 2: -1})
F_NEG_ETA = eta_q({1: 1})
W_ETA = eta_q({1: 1, 6: 3, 2: -1, 3: -3})


# ----------------------------------------------------------------------
# generating functions

@dataclass(frozen=True)
class GeneratingFunctionId:
    """One of the partition generating functions; `t` is only used by tcore."""

    name: str
    t: int = 0

    NAMES = ("tcore", "cubic", "b", "c", "d", "h_odd", "partition")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise UnknownSeriesError(f"Unknown generating function: {self.name}")
        if (self.name == "tcore") != (self.t > 0):
            raise UnknownSeriesError("tcore needs a positive t, other families take none")

    @classmethod
    def tcore(cls, t: int) -> "GeneratingFunctionId":
        return cls("tcore", t)

    @classmethod
    def parse(cls, text: str) -> "GeneratingFunctionId":
        """Accepts 'b', 'cubic', 'tcore(3)', 'tcore3'."""
        key = text.strip().lower().replace(" ", "")
        if key.startswith("tcore"):
            digits = key[5:].strip("()")
            if not digits.isdigit():
                raise UnknownSeriesError(f"Cannot read t from {text!r}")
            return cls.tcore(int(digits))
        return cls(key)

    @property
    def label(self) -> str:
        return f"tcore({self.t})" if self.name == "tcore" else self.name

    def eta_quotient(self) -> EtaQuotient:
        if self.name == "tcore":
            return eta_q({self.t: self.t, 1: -1})
        return _GENERATING_FUNCTIONS[self.name]

    def __str__(self) -> str:
        return self.label


_GENERATING_FUNCTIONS: Dict[str, EtaQuotient] = {
    "cubic": eta_q({1: -1, 2: -1}),
    "b": eta_q({4: 3, 2: -2}),
    "c": eta_q({6: 3, 1: -1, 2: -1}, shift=1),
    "d": eta_q({3: 3, 1: -1, 2: -1}),
    "h_odd": eta_q({2: 3, 1: -2}),
    "partition": eta_q({1: -1}),
}

GF_B = GeneratingFunctionId("b")
GF_C = GeneratingFunctionId("c")
GF_D = GeneratingFunctionId("d")
GF_CUBIC = GeneratingFunctionId("cubic")
GF_H_ODD = GeneratingFunctionId("h_odd")
GF_PARTITION = GeneratingFunctionId("partition")


# ----------------------------------------------------------------------
# factory

class SeriesFactory:
    """Memoizing builder for every named series."""

    def __init__(self):
        self._cache: Dict[Hashable, Series] = {}
        self._locks: Dict[Hashable, threading.Lock] = {}
        self._guard = threading.Lock()

    def _lookup(self, key: Hashable, order: int) -> Optional[Series]:
        with self._guard:
            cached = self._cache.get(key)
        if cached is None or cached.order < order:
            return None
        return cached if cached.order == order else cached.truncate(order)

    def _memo(self, key: Hashable, order: int, build: Callable[[int], Series]) -> Series:
        hit = self._lookup(key, order)
        if hit is not None:
            return hit
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            hit = self._lookup(key, order)
            if hit is not None:
                return hit
            with LogTimer(logger, f"expand {key} to order {order}"):
                series = build(order)
            with self._guard:
                current = self._cache.get(key)
                if current is None or current.order < series.order:
                    self._cache[key] = series
            return series

    def clear(self) -> None:
        with self._guard:
            self._cache.clear()
            self._locks.clear()

    def cache_info(self) -> Dict[str, int]:
        with self._guard:
            return {repr(key): series.order for key, series in self._cache.items()}

    # -- primitives ----------------------------------------------------

    def eta(self, k: int, order: int, ring: CoefficientRing = ZZ) -> Series:
        """f_k by the pentagonal number theorem."""
        if k < 1:
            raise QSeriesError(f"Eta scale must be positive, got {k}")

        def build(n: int) -> Series:
            return Series.from_terms({k * e: c for e, c in F_NEG.terms((n + k - 1) // k).items()}, n, ring)

        return self._memo(("eta", k, ring), order, build)

    def pochhammer_inf(self, sign: int, a: int, b: int, order: int, ring: CoefficientRing = ZZ) -> Series:
        """prod_{j>=0} (1 - sign*q^(a + j*b)); factors at exponents >= order are skipped."""
        if sign not in (1, -1) or a < 0 or b < 1:
            raise QSeriesError(f"Bad Pochhammer parameters sign={sign}, a={a}, b={b}")
        if a == 0 and sign == 1:
            raise ZeroFactorError("(1; q)_inf contains the factor 1 - 1")

        def build(n: int) -> Series:
            return _binomial_product(Series.one(n, ring), sign, range(a, n, b), ring)

        return self._memo(("pochhammer_inf", sign, a, b, ring), order, build)

    def pochhammer_n(self, sign: int, a: int, b: int, count: int, order: int,
                     ring: CoefficientRing = ZZ) -> Series:
        """prod_{j<count} (1 - sign*q^(a + j*b))."""
        if sign not in (1, -1) or a < 0 or b < 1 or count < 0:
            raise QSeriesError(f"Bad Pochhammer parameters sign={sign}, a={a}, b={b}, n={count}")
        if a == 0 and sign == 1 and count > 0:
            return Series.zero(order, ring)
        exponents = [a + j * b for j in range(count)]
        return _binomial_product(Series.one(order, ring), sign, exponents, ring)

    def theta_f(self, spec: ThetaSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self._memo(("theta", spec, ring), order, lambda n: Series.from_terms(spec.terms(n), n, ring))

    def theta_product(self, spec: ThetaSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
        """
        f(a, b) as (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.

        Only integral alpha, beta >= 1 are supported; every catalogued theta
        specification is of that shape.
        """
        if spec.alpha.denominator != 1 or spec.beta.denominator != 1 or min(spec.alpha, spec.beta) < 1:
            raise QSeriesError(f"No product form for {spec}")
        alpha, beta = int(spec.alpha), int(spec.beta)
        step = alpha + beta
        return (self.pochhammer_inf(-spec.sign_a, alpha, step, order, ring)
                * self.pochhammer_inf(-spec.sign_b, beta, step, order, ring)
                * self.pochhammer_inf(spec.sign_a * spec.sign_b, step, step, order, ring))

    def eta_quotient(self, quotient: EtaQuotient, order: int, ring: CoefficientRing = ZZ) -> Series:
        """Multiply by the numerator factors, then divide by the denominator ones."""

        def build(n: int) -> Series:
            body_order = n - quotient.shift
            if body_order <= 0:
                return Series.zero(n, ring)
            body = Series.from_terms({0: quotient.coefficient}, body_order, ring)
            for k, e in quotient.numerator():
                factor = self.eta(k, body_order, ring)
                for _ in range(e):
                    body = body * factor
            for k, e in quotient.denominator():
                factor = self.eta(k, body_order, ring)
                for _ in range(e):
                    body = body.divide(factor)
            if not quotient.shift:
                return body
            return _pad(body, n).shift(quotient.shift)

        return self._memo(("eta_quotient", quotient, ring), order, build)

    # -- named series --------------------------------------------------

    def _dual(self, spec: ThetaSpec, quotient: EtaQuotient, order: int, ring: CoefficientRing) -> Series:
        as_sum = self.theta_f(spec, order, ring)
        as_product = self.eta_quotient(quotient, order, ring)
        mismatch = as_sum.first_mismatch(as_product)
        if mismatch is not None:
            raise ConsistencyError(f"{spec} and {quotient} disagree at q^{mismatch}")
        return as_sum

    def phi(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self._dual(PHI, PHI_ETA, order, ring)

    def psi(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self._dual(PSI, PSI_ETA, order, ring)

    def phi_neg(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self._dual(PHI_NEG, PHI_NEG_ETA, order, ring)

    def f_neg(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self._dual(F_NEG, F_NEG_ETA, order, ring)

    def w_func(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self.eta_quotient(W_ETA, order, ring)

    def lambert_sum(self, weights: Mapping[Tuple[int, int], int], order: int,
                    ring: CoefficientRing = ZZ) -> Series:
        """
        sum over (r, s) -> w of w * sum_{m >= 1, m = r mod s} q^m / (1 - q^m).

        The coefficient of q^N counts the divisors of N in each class.
        """
        counts = [0] * order
        for (r, s), weight in weights.items():
            first = r % s or s
            for m in range(first, order, s):
                for multiple in range(m, order, m):
                    counts[multiple] += weight
        return Series.from_coefficients(counts, ring)

    def P_theta_form(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        """f1 * (phi^3(-q^3)/phi(-q) + 4q psi^3(q^3)/psi(q))."""
        phi_neg, psi = self.phi_neg(order, ring), self.psi(order, ring)
        cubed_phi = phi_neg.substitute_power(3, order) ** 3
        cubed_psi = psi.substitute_power(3, order) ** 3
        inner = cubed_phi.divide(phi_neg) + cubed_psi.divide(psi).shift(1).scale(4)
        return self.eta(1, order, ring) * inner

    def P_lambert_form(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        """f1 * (1 + 6 sum_n (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2})))."""
        lambert = self.lambert_sum({(1, 3): 6, (2, 3): -6}, order, ring) + Series.one(order, ring)
        return self.eta(1, order, ring) * lambert

    def P_func(self, order: int, ring: CoefficientRing = ZZ) -> Series:
        """P(q) from its theta form, checked against the Lambert series form."""

        def build(n: int) -> Series:
            theta_form = self.P_theta_form(n, ring)
            mismatch = theta_form.first_mismatch(self.P_lambert_form(n, ring))
            if mismatch is not None:
                raise ConsistencyError(f"P(q) forms disagree at q^{mismatch}")
            return theta_form

        return self._memo(("P", ring), order, build)

    def gf(self, family: GeneratingFunctionId, order: int, ring: CoefficientRing = ZZ) -> Series:
        return self.eta_quotient(family.eta_quotient(), order, ring)


def _binomial_product(start: Series, sign: int, exponents: Iterable[int], ring: CoefficientRing) -> Series:
    result = start
    for e in exponents:
        if e >= result.order:
            continue
        if e == 0:
            # sign is -1 here: the factor is the constant 2
            result = result.scale(2)
            continue
        result = result * Series.from_terms({0: 1, e: -sign}, result.order, ring)
    return result


def _pad(series: Series, order: int) -> Series:
    """Extend with zero coefficients; only valid right before a shift that drops them."""
    coeffs = series.ring.zeros(order)
    coeffs[:series.order] = series.coeffs
    return Series(series.ring, coeffs)


default_factory = SeriesFactory()


def eta(k: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.eta(k, order, ring)


def pochhammer_inf(sign: int, a: int, b: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.pochhammer_inf(sign, a, b, order, ring)


def pochhammer_n(sign: int, a: int, b: int, count: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.pochhammer_n(sign, a, b, count, order, ring)


def theta_f(spec: ThetaSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.theta_f(spec, order, ring)


def phi(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.phi(order, ring)


def psi(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.psi(order, ring)


def phi_neg(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.phi_neg(order, ring)


def f_neg(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.f_neg(order, ring)


def w_func(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.w_func(order, ring)


def P_func(order: int, ring: CoefficientRing = ZZ) -> Series:
    return default_factory.P_func(order, ring)


def gf(family: Union[GeneratingFunctionId, str], order: int, ring: CoefficientRing = ZZ) -> Series:
    if isinstance(family, str):
        family = GeneratingFunctionId.parse(family)
    return default_factory.gf(family, order, ring)


# ----------------------------------------------------------------------
# product identities checked by the identities suite

THETA_SPECS = {"phi": PHI, "psi": PSI, "phi_neg": PHI_NEG, "f_neg": F_NEG}


def verify_euler(order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    """(-q; q)_inf = f2/f1, compared both as a quotient and cleared of f1."""
    factory = factory or default_factory
    with LogTimer(logger, f"Euler product to O(q^{order})"):
        minus = factory.pochhammer_inf(-1, 1, 1, order)
        f1, f2 = factory.eta(1, order), factory.eta(2, order)
        parts = [
            compare_series("euler-quotient", "(-q;q)_inf = f2/f1",
                           "(-q;q)_inf against f2 * f1^-1", minus, f2 * f1.invert()),
            compare_series("euler-cleared", "(-q;q)_inf f1 = f2",
                           "(-q;q)_inf * f1 against f2", minus * f1, f2),
        ]
    return combine("euler-product", "(-q;q)_inf (q;q)_inf = (q^2;q^2)_inf",
                   "Euler's distinct/odd parts product identity", parts)


def verify_triple_product(name: str, order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    """A theta function's bilateral sum against its triple product form."""
    if name not in THETA_SPECS:
        raise UnknownSeriesError(f"Unknown theta function: {name}")
    factory = factory or default_factory
    spec = THETA_SPECS[name]
    with LogTimer(logger, f"Triple product for {name} to O(q^{order})"):
        return compare_series(f"triple-product-{name}", f"{spec} triple product",
                              f"{spec} as a sum against (-a;ab)(-b;ab)(ab;ab)",
                              factory.theta_f(spec, order), factory.theta_product(spec, order))
