"""
Coefficient rings for truncated power series.

Exact integers are stored in numpy object arrays (Python ints, unbounded).
Residues mod m are stored as uint64 words; with m <= 2**32 a product of two
residues fits in one word, so every kernel reduces after each multiply.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from ..errors import NonUnitError, RingMismatchError

MAX_MODULUS = 2 ** 32

Scalar = Union[int, np.integer]


class CoefficientRing:
    """Interface shared by the two coefficient rings."""

    dtype: np.dtype

    @property
    def is_exact(self) -> bool:
        return False

    def label(self) -> str:
        raise NotImplementedError

    def zeros(self, n: int) -> np.ndarray:
        raise NotImplementedError

    def array(self, values: Iterable[Scalar]) -> np.ndarray:
        raise NotImplementedError

    def scalar(self, value: Scalar) -> int:
        raise NotImplementedError

    def is_unit(self, value: Scalar) -> bool:
        raise NotImplementedError

    def inverse(self, value: Scalar) -> int:
        raise NotImplementedError

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def scale(self, a: np.ndarray, c: Scalar) -> np.ndarray:
        raise NotImplementedError

    def accumulate(self, target: np.ndarray, c: int, src: np.ndarray) -> None:
        """target += c * src, in place, without the final reduction."""
        raise NotImplementedError

    def finalize(self, values: np.ndarray) -> np.ndarray:
        """Bring an accumulator back into canonical form."""
        raise NotImplementedError

    def require_same(self, other: "CoefficientRing") -> None:
        if self != other:
            raise RingMismatchError(f"Ring mismatch: {self.label()} vs {other.label()}")


@dataclass(frozen=True)
class ExactIntegerRing(CoefficientRing):
    """Arbitrary precision integers."""

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(object)

    @property
    def is_exact(self) -> bool:
        return True

    def label(self) -> str:
        return "ZZ"

    def zeros(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=object)
        out.fill(0)
        return out

    def array(self, values: Iterable[Scalar]) -> np.ndarray:
        items = [int(v) for v in values]
        out = np.empty(len(items), dtype=object)
        out[:] = items
        return out

    def scalar(self, value: Scalar) -> int:
        return int(value)

    def is_unit(self, value: Scalar) -> bool:
        return int(value) in (1, -1)

    def inverse(self, value: Scalar) -> int:
        if not self.is_unit(value):
            raise NonUnitError(f"{value} is not a unit in ZZ")
        return int(value)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a + b

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a - b

    def scale(self, a: np.ndarray, c: Scalar) -> np.ndarray:
        return a * int(c)

    def accumulate(self, target: np.ndarray, c: int, src: np.ndarray) -> None:
        if c == 1:
            target += src
        elif c == -1:
            target -= src
        else:
            target += src * c

    def finalize(self, values: np.ndarray) -> np.ndarray:
        return values


@dataclass(frozen=True)
class ModularRing(CoefficientRing):
    """Integers modulo m, 2 <= m <= 2**32."""

    modulus: int

    def __post_init__(self):
        if not 2 <= self.modulus <= MAX_MODULUS:
            raise ValueError(f"Modulus must lie in [2, 2**32], got {self.modulus}")

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.uint64)

    def label(self) -> str:
        return f"ZZ/{self.modulus}"

    @property
    def _m(self) -> np.uint64:
        return np.uint64(self.modulus)

    def zeros(self, n: int) -> np.ndarray:
        return np.zeros(n, dtype=np.uint64)

    def array(self, values: Iterable[Scalar]) -> np.ndarray:
        m = self.modulus
        return np.array([int(v) % m for v in values], dtype=np.uint64)

    def reduce_exact(self, values: np.ndarray) -> np.ndarray:
        """Reduce an object array of Python ints into this ring."""
        return np.array([v % self.modulus for v in values.tolist()], dtype=np.uint64)

    def scalar(self, value: Scalar) -> int:
        return int(value) % self.modulus

    def is_unit(self, value: Scalar) -> bool:
        return math.gcd(int(value) % self.modulus, self.modulus) == 1

    def inverse(self, value: Scalar) -> int:
        if not self.is_unit(value):
            raise NonUnitError(f"{value} is not a unit mod {self.modulus}")
        return pow(int(value) % self.modulus, -1, self.modulus)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self._m

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + (self._m - b)) % self._m

    def scale(self, a: np.ndarray, c: Scalar) -> np.ndarray:
        return (a * np.uint64(self.scalar(c))) % self._m

    def accumulate(self, target: np.ndarray, c: int, src: np.ndarray) -> None:
        # Each call adds at most m to an entry; finalize() reduces.
        c = self.scalar(c)
        if c == 1:
            target += src
        elif c == self.modulus - 1:
            target += self._m - src
        elif c:
            target += (src * np.uint64(c)) % self._m

    def finalize(self, values: np.ndarray) -> np.ndarray:
        return values % self._m


ZZ = ExactIntegerRing()
