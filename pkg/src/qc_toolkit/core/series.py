"""
Truncated formal power series over a selectable coefficient ring.

A Series stores the coefficients of q^0 .. q^(N-1); everything from q^N up is
unknown. Values are immutable: every operation returns a new Series.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import NonUnitError, QSeriesError
from .ring import ZZ, CoefficientRing, ModularRing

# A multiplicand with at most SPARSE_FACTOR * sqrt(N) terms takes the sparse path.
SPARSE_FACTOR = 4
# Below this block width the division recurrence runs as a plain Python loop.
BASE_BLOCK = 32

Term = Tuple[int, int]


@dataclass(frozen=True)
class SparseSupport:
    """Nonzero terms of a series, exponents strictly increasing."""

    terms: Tuple[Term, ...]

    def __post_init__(self):
        previous = -1
        for exponent, coefficient in self.terms:
            if exponent <= previous:
                raise ValueError(f"Sparse exponents must increase strictly: {exponent} after {previous}")
            if coefficient == 0:
                raise ValueError(f"Zero coefficient stored at exponent {exponent}")
            previous = exponent

    def __len__(self) -> int:
        return len(self.terms)

    @classmethod
    def from_mapping(cls, ring: CoefficientRing, mapping: Mapping[int, int], order: int) -> "SparseSupport":
        terms = []
        for exponent in sorted(mapping):
            if exponent >= order:
                break
            value = ring.scalar(mapping[exponent])
            if value:
                terms.append((exponent, value))
        return cls(tuple(terms))


def sparse_limit(order: int) -> int:
    return int(SPARSE_FACTOR * math.sqrt(max(order, 1)))


class Series:
    """Truncated power series with dense storage and an optional sparse view."""

    __slots__ = ("ring", "coeffs", "_support")

    def __init__(self, ring: CoefficientRing, coeffs: np.ndarray, support: Optional[SparseSupport] = None):
        if coeffs.dtype != ring.dtype:
            raise QSeriesError(f"Coefficient dtype {coeffs.dtype} does not match ring {ring.label()}")
        coeffs.setflags(write=False)
        self.ring = ring
        self.coeffs = coeffs
        self._support = support

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order: int, ring: CoefficientRing = ZZ) -> "Series":
        return cls(ring, ring.zeros(order), SparseSupport(()))

    @classmethod
    def one(cls, order: int, ring: CoefficientRing = ZZ) -> "Series":
        return cls.monomial(0, order, ring)

    @classmethod
    def monomial(cls, exponent: int, order: int, ring: CoefficientRing = ZZ, coefficient: int = 1) -> "Series":
        return cls.from_terms({exponent: coefficient}, order, ring)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int, ring: CoefficientRing = ZZ) -> "Series":
        """Build a sparse series from {exponent: coefficient}; exponents >= order are dropped."""
        if any(e < 0 for e in terms):
            raise QSeriesError("Negative exponents are not representable")
        support = SparseSupport.from_mapping(ring, terms, order)
        coeffs = ring.zeros(order)
        for exponent, value in support.terms:
            coeffs[exponent] = value
        return cls(ring, coeffs, support)

    @classmethod
    def from_coefficients(cls, values: Sequence[int], ring: CoefficientRing = ZZ,
                          order: Optional[int] = None) -> "Series":
        """Dense constructor; pads with zeros (or truncates) to `order`."""
        order = len(values) if order is None else order
        padded = list(values[:order]) + [0] * max(0, order - len(values))
        return cls(ring, ring.array(padded))

    # ------------------------------------------------------------------
    # accessors

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> int:
        if n < 0:
            raise QSeriesError(f"Negative exponent {n}")
        if n >= self.order:
            raise QSeriesError(f"Coefficient of q^{n} is unknown at order {self.order}")
        return int(self.coeffs[n])

    def __getitem__(self, n: int) -> int:
        return self.coeff(n)

    def __len__(self) -> int:
        return self.order

    def coefficients(self) -> List[int]:
        return [int(c) for c in self.coeffs.tolist()]

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def valuation(self) -> Optional[int]:
        nonzero = np.flatnonzero(self.coeffs)
        return int(nonzero[0]) if len(nonzero) else None

    def support(self) -> SparseSupport:
        if self._support is None:
            indices = np.flatnonzero(self.coeffs).tolist()
            self._support = SparseSupport(tuple((i, int(self.coeffs[i])) for i in indices))
        return self._support

    def _sparse_terms(self, order: int, limit: int) -> Optional[List[Term]]:
        """Terms below `order` if there are at most `limit` of them."""
        if self._support is None and np.count_nonzero(self.coeffs[:order]) > limit:
            return None
        terms = [t for t in self.support().terms if t[0] < order]
        return terms if len(terms) <= limit else None

    def is_sparse(self) -> bool:
        return self._sparse_terms(self.order, sparse_limit(self.order)) is not None

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "Series") -> int:
        if not isinstance(other, Series):
            raise TypeError(f"Expected Series, got {type(other).__name__}")
        self.ring.require_same(other.ring)
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        n = self._check(other)
        return Series(self.ring, self.ring.add(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other: "Series") -> "Series":
        n = self._check(other)
        return Series(self.ring, self.ring.sub(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def scale(self, c: int) -> "Series":
        return Series(self.ring, self.ring.scale(self.coeffs, c))

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        n = self._check(other)
        limit = sparse_limit(n)
        candidates = [
            (terms, dense)
            for terms, dense in ((other._sparse_terms(n, limit), self), (self._sparse_terms(n, limit), other))
            if terms is not None
        ]
        if candidates:
            terms, dense = min(candidates, key=lambda pair: len(pair[0]))
            return _sparse_mul(self.ring, dense.coeffs[:n], terms)
        return _dense_mul(self.ring, self.coeffs[:n], other.coeffs[:n])

    def __rmul__(self, other: int) -> "Series":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return NotImplemented

    def divide(self, other: "Series") -> "Series":
        """Exact quotient self / other; other must have a unit constant term."""
        n = self._check(other)
        if n == 0:
            return Series(self.ring, self.ring.zeros(0))
        c0 = int(other.coeffs[0])
        if not self.ring.is_unit(c0):
            raise NonUnitError(f"Constant term {c0} is not a unit in {self.ring.label()}")
        tail = [t for t in other.support().terms if 0 < t[0] < n]
        if c0 == 1 and len(tail) == 1 and tail[0][1] in (1, self.ring.scalar(-1)):
            coeffs = _divide_binomial(self.ring, self.coeffs[:n], *tail[0])
        else:
            coeffs = _solve_recurrence(self.ring, self.coeffs[:n], tail, self.ring.inverse(c0))
        return Series(self.ring, coeffs)

    def __truediv__(self, other: "Series") -> "Series":
        return self.divide(other)

    def invert(self) -> "Series":
        return Series.one(self.order, self.ring).divide(self)

    def __pow__(self, e: int) -> "Series":
        if e == 0:
            return Series.one(self.order, self.ring)
        base = self.invert() if e < 0 else self
        e = abs(e)
        if base.is_sparse():
            result = base
            for _ in range(e - 1):
                result = result * base
            return result
        # repeated squaring
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # exponent maps

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise QSeriesError(f"Cannot extend order {self.order} to {order}")
        support = None
        if self._support is not None:
            support = SparseSupport(tuple(t for t in self._support.terms if t[0] < order))
        return Series(self.ring, self.coeffs[:order].copy(), support)

    def shift(self, k: int) -> "Series":
        """Multiply by q^k; the order is preserved, exponents >= N are lost."""
        if k < 0:
            raise QSeriesError("Negative shifts would need Laurent series")
        n = self.order
        out = self.ring.zeros(n)
        if k < n:
            out[k:] = self.coeffs[:n - k]
        return Series(self.ring, out)

    def extract_progression(self, modulus: int, residue: int) -> "Series":
        """Sum_n coeff(modulus*n + residue) q^n, of order ceil((N - residue) / modulus)."""
        if modulus < 1 or not 0 <= residue < modulus:
            raise QSeriesError(f"Need 0 <= B < A, got A={modulus}, B={residue}")
        return Series(self.ring, self.coeffs[residue::modulus].copy())

    def substitute_power(self, k: int, order: Optional[int] = None) -> "Series":
        """q -> q^k. The result is known to order N*k, capped at `order`."""
        if k < 1:
            raise QSeriesError(f"Substitution power must be positive, got {k}")
        total = self.order * k if order is None else min(order, self.order * k)
        out = self.ring.zeros(total)
        out[::k] = self.coeffs[:len(out[::k])]
        support = None
        if self._support is not None:
            support = SparseSupport(tuple((e * k, c) for e, c in self._support.terms if e * k < total))
        return Series(self.ring, out, support)

    def reduce_mod(self, m: int) -> "Series":
        target = ModularRing(m)
        if self.ring.is_exact:
            coeffs = target.reduce_exact(self.coeffs)
        elif isinstance(self.ring, ModularRing) and self.ring.modulus % m == 0:
            coeffs = self.coeffs % np.uint64(m)
        else:
            raise QSeriesError(f"Cannot reduce a {self.ring.label()} series mod {m}")
        support = None
        if self._support is not None:
            support = SparseSupport(tuple((e, c % m) for e, c in self._support.terms if c % m))
        return Series(target, coeffs, support)

    # ------------------------------------------------------------------
    # comparison

    def first_mismatch(self, other: "Series") -> Optional[int]:
        n = self._check(other)
        diff = np.flatnonzero(self.coeffs[:n] != other.coeffs[:n])
        return int(diff[0]) if len(diff) else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    __hash__ = None

    def __repr__(self) -> str:
        shown = []
        for exponent, c in self.support().terms[:8]:
            monomial = "1" if exponent == 0 else ("q" if exponent == 1 else f"q^{exponent}")
            shown.append(f"{c}*{monomial}")
        body = " + ".join(shown) if shown else "0"
        return f"Series({self.ring.label()}, {body} + O(q^{self.order}))"


# ----------------------------------------------------------------------
# kernels

def _sparse_mul(ring: CoefficientRing, dense: np.ndarray, terms: Iterable[Term]) -> Series:
    n = len(dense)
    acc = ring.zeros(n)
    for exponent, c in terms:
        if exponent >= n:
            break
        ring.accumulate(acc[exponent:], c, dense[:n - exponent])
    return Series(ring, ring.finalize(acc))


def _dense_mul(ring: CoefficientRing, a: np.ndarray, b: np.ndarray) -> Series:
    """Schoolbook product, one output coefficient per step."""
    n = len(a)
    out = ring.zeros(n)
    if ring.is_exact:
        for k in range(n):
            out[k] = np.dot(a[:k + 1], b[k::-1]) if k else a[0] * b[0]
    else:
        m = np.uint64(ring.modulus)
        for k in range(n):
            out[k] = int(((a[:k + 1] * b[k::-1]) % m).sum() % m)
    return Series(ring, out)


def _solve_recurrence(ring: CoefficientRing, rhs: np.ndarray, tail: List[Term], inv0: int) -> np.ndarray:
    """
    Solve c0*x_t + sum_{g>0} c_g x_{t-g} = rhs_t for x.

    The range is split in halves; once the left half is known, its effect on
    the right half is added with one vectorized update per divisor term.
    Blocks of width <= BASE_BLOCK fall back to the scalar recurrence.
    """
    n = len(rhs)
    acc = rhs.copy()
    x = ring.zeros(n)
    negated = [(g, ring.scalar(-c)) for g, c in tail]
    near = [(g, c) for g, c in tail if g < BASE_BLOCK]

    def solve(lo: int, hi: int) -> None:
        if hi - lo <= BASE_BLOCK:
            values = ring.finalize(acc[lo:hi]).tolist()
            out: List[int] = []
            for i, v in enumerate(values):
                for g, c in near:
                    if g > i:
                        break
                    v -= c * out[i - g]
                out.append(ring.scalar(v * inv0))
            x[lo:hi] = out
            return
        mid = (lo + hi) // 2
        solve(lo, mid)
        width = hi - lo
        for g, c in negated:
            if g >= width:
                break
            t0, t1 = max(mid, lo + g), min(hi, mid + g)
            if t0 < t1:
                ring.accumulate(acc[t0:t1], c, x[t0 - g:t1 - g])
        solve(mid, hi)

    if n:
        solve(0, n)
    return x


def _divide_binomial(ring: CoefficientRing, rhs: np.ndarray, e: int, c: int) -> np.ndarray:
    """x = rhs / (1 + c*q^e) for c = +-1: a running sum down each residue class mod e."""
    n = len(rhs)
    rows = -(-n // e)
    grid = ring.zeros(rows * e)
    grid[:n] = rhs
    grid = grid.reshape(rows, e)
    alternate = c == 1 and c != ring.scalar(-1)
    if alternate:
        grid[1::2] = ring.scale(grid[1::2], -1)
    grid = ring.finalize(np.cumsum(grid, axis=0, dtype=ring.dtype))
    if alternate:
        grid[1::2] = ring.scale(grid[1::2], -1)
    return grid.reshape(-1)[:n].copy()


def series_sum(parts: Iterable[Series]) -> Series:
    total = None
    for part in parts:
        total = part if total is None else total + part
    if total is None:
        raise QSeriesError("Empty sum")
    return total

