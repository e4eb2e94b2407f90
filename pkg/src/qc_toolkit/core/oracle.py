"""
Combinatorial enumerators that count partitions directly.

Nothing here touches the eta-quotient machinery: tables are built by dynamic
programming over part sizes or by walking every partition and reading hook
lengths off its Young diagram. The series engine only enters in
`cross_validate`, where the two are compared.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.utilities.iterables import partitions

from ..errors import QSeriesError
from ..models.schemas import CheckReport, PartitionTable
from ..utils.logger import LogTimer, get_logger, log_calls
from .checks import combine, compare_series
from .qfactory import GF_B, GF_H_ODD, GeneratingFunctionId, SeriesFactory, default_factory
from .series import Series

logger = get_logger(__name__)

MAX_PARTITIONS = 100_000
MAX_CUBIC = 10_000
MAX_ENUMERATION = 60


def _check_limit(limit: int, cap: int, what: str) -> None:
    if limit < 0:
        raise QSeriesError(f"{what}: limit must be nonnegative, got {limit}")
    if limit > cap:
        raise QSeriesError(f"{what}: limit {limit} exceeds {cap}")


def _allow_part(values: np.ndarray, part: int) -> np.ndarray:
    """
    Let `part` occur any number of times: v[n] += v[n - part], in increasing n.

    Rows of length `part` line up n, n + part, n + 2*part, ... in each column,
    so the sequential update is a cumulative sum down the columns.
    """
    size = len(values)
    rows = -(-size // part)
    padded = np.zeros(rows * part, dtype=object)
    padded[:size] = values
    return np.cumsum(padded.reshape(rows, part), axis=0).reshape(-1)[:size]


def _start(limit: int) -> np.ndarray:
    values = np.zeros(limit + 1, dtype=object)
    values[0] = 1
    return values


def _ints(values: np.ndarray) -> List[int]:
    return [int(v) for v in values.tolist()]


@lru_cache(maxsize=8)
def _partition_values(limit: int) -> Tuple[int, ...]:
    values = _start(limit)
    for part in range(1, limit + 1):
        values = _allow_part(values, part)
    return tuple(_ints(values))


@lru_cache(maxsize=8)
def _even_part_values(limit: int) -> Tuple[int, ...]:
    values = _start(limit)
    for part in range(2, limit + 1, 2):
        values = _allow_part(values, part)
    return tuple(_ints(values))


@log_calls()
def count_partitions(limit: int) -> PartitionTable:
    """p(n) for 0 <= n <= limit, adding one part size at a time."""
    _check_limit(limit, MAX_PARTITIONS, "count_partitions")
    with LogTimer(logger, f"partition DP to {limit}"):
        values = list(_partition_values(limit))
    return PartitionTable("partition", values, method="part-size DP")


def count_even_parts(limit: int) -> PartitionTable:
    """Partitions of n into even parts only."""
    _check_limit(limit, MAX_PARTITIONS, "count_even_parts")
    return PartitionTable("p_even", list(_even_part_values(limit)), method="part-size DP")


@log_calls()
def count_cubic(limit: int) -> PartitionTable:
    """
    Cubic partitions: two colours, where the second colour only comes in even
    sizes. Odd sizes enter the DP once, even sizes once per colour.
    """
    _check_limit(limit, MAX_CUBIC, "count_cubic")
    values = _start(limit)
    with LogTimer(logger, f"cubic partition DP to {limit}"):
        for part in range(1, limit + 1):
            values = _allow_part(values, part)
            if part % 2 == 0:
                values = _allow_part(values, part)
    return PartitionTable("cubic", _ints(values), method="two-colour DP")


def convolve(left: Sequence[int], right: Sequence[int], limit: int,
             stride: int = 1, offset: int = 0) -> List[int]:
    """
    out[n] = sum_k left[k] * right[n - offset - stride*k], for n <= limit.

    stride and offset place `left` at q^(stride*k + offset).
    """
    out = [0] * (limit + 1)
    for k, a in enumerate(left):
        base = offset + stride * k
        if base > limit:
            break
        if not a:
            continue
        for m in range(limit + 1 - base):
            out[base + m] += a * right[m]
    return out


def cubic_by_convolution(limit: int) -> PartitionTable:
    """a(n) as sum_k p(k) p_even(n - k)."""
    _check_limit(limit, MAX_CUBIC, "cubic_by_convolution")
    values = convolve(_partition_values(limit), _even_part_values(limit), limit)
    return PartitionTable("cubic", values, method="p * p_even")


# ----------------------------------------------------------------------
# Young diagrams
# ----------------------------------------------------------------------

def shape_of(multiplicities: Dict[int, int]) -> Tuple[int, ...]:
    """Row lengths, longest first, from a {part: multiplicity} mapping."""
    rows: List[int] = []
    for part in sorted(multiplicities, reverse=True):
        rows.extend([part] * multiplicities[part])
    return tuple(rows)


def conjugate(shape: Sequence[int]) -> Tuple[int, ...]:
    """Column lengths of the diagram."""
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > j) for j in range(shape[0]))


def hook_lengths(shape: Sequence[int]) -> List[int]:
    """arm + leg + 1 for every cell, row by row."""
    columns = conjugate(shape)
    return [
        (row - j - 1) + (columns[j] - i - 1) + 1
        for i, row in enumerate(shape)
        for j in range(row)
    ]


def is_core(shape: Sequence[int], t: int) -> bool:
    return all(h % t for h in hook_lengths(shape))


def count_cores(ts: Iterable[int], limit: int) -> Dict[int, PartitionTable]:
    """
    a_t(n) for several t from a single walk over all partitions of n <= limit.
    """
    ts = sorted(set(ts))
    if not ts or any(t < 1 for t in ts):
        raise QSeriesError(f"count_cores: need positive t values, got {ts}")
    _check_limit(limit, MAX_ENUMERATION, "count_tcore")
    counts = {t: [1] + [0] * limit for t in ts}
    with LogTimer(logger, f"t-core enumeration for t in {ts} to {limit}"):
        for n in range(1, limit + 1):
            for multiplicities in partitions(n):
                hooks = hook_lengths(shape_of(dict(multiplicities)))
                for t in ts:
                    if all(h % t for h in hooks):
                        counts[t][n] += 1
    return {t: PartitionTable(f"tcore({t})", values, method="hook enumeration")
            for t, values in counts.items()}


def count_tcore(t: int, limit: int) -> PartitionTable:
    """Partitions of n <= limit with no hook length divisible by t."""
    return count_cores((t,), limit)[t]


# ----------------------------------------------------------------------
# Tables per generating function
# ----------------------------------------------------------------------

def table_for(family: GeneratingFunctionId, limit: int) -> PartitionTable:
    """
    Oracle table for `family`.

    c and d have no direct enumeration; they are assembled from 3-cores:
    d = a_3 * p_even and c(n) = sum_k a_3(k) p(n - 1 - 2k).
    """
    if family.name == "tcore":
        return count_tcore(family.t, limit)
    if family.name == "cubic":
        return count_cubic(limit)
    if family.name == "partition":
        return count_partitions(limit)
    if family.name == "d":
        cores = count_tcore(3, limit).values
        return PartitionTable("d", convolve(cores, _even_part_values(limit), limit),
                              method="a_3 * p_even")
    if family.name == "c":
        cores = count_tcore(3, limit).values
        return PartitionTable("c", convolve(cores, _partition_values(limit), limit,
                                            stride=2, offset=1),
                              method="q * a_3(q^2) * p")
    raise QSeriesError(f"No combinatorial oracle for {family.label}; "
                       f"b is checked through b(2n) = h(2n+1) instead")


def cross_validate(family: GeneratingFunctionId, limit: int,
                   factory: Optional[SeriesFactory] = None) -> CheckReport:
    """Oracle table against the eta-quotient coefficients for n <= limit."""
    factory = factory or default_factory
    with LogTimer(logger, f"oracle cross-check {family.label} to {limit}") as timer:
        table = table_for(family, limit)
        expansion = factory.gf(family, limit + 1)
    report = compare_series(
        f"oracle-{family.label}", f"combinatorial meaning of {family.label}",
        f"{table.method} count of {family.label} vs generating function, n <= {limit}",
        Series.from_coefficients(table.values), expansion,
        notes=[f"method: {table.method}"])
    report.millis = timer.millis
    return report


def verify_cubic_paths(limit: int) -> CheckReport:
    """Two-colour DP against the p * p_even convolution."""
    with LogTimer(logger, f"cubic oracle paths to {limit}") as timer:
        direct = count_cubic(limit)
        convolved = cubic_by_convolution(limit)
    return compare_series(
        "oracle-cubic-paths", "a(n) as a two-colour partition count",
        f"two-colour DP vs p * p_even convolution, n <= {limit}",
        Series.from_coefficients(direct.values), Series.from_coefficients(convolved.values),
        millis=timer.millis)


def verify_b_h(order: int, factory: Optional[SeriesFactory] = None) -> CheckReport:
    """b(2n + 1) = 0 and b(2n) = h(2n + 1) for exponents below `order`."""
    factory = factory or default_factory
    with LogTimer(logger, f"b/h relation to {order}") as timer:
        b = factory.gf(GF_B, order)
        even = b.extract_progression(2, 0)
        odd = b.extract_progression(2, 1) if order > 1 else Series.zero(0)
        h = factory.gf(GF_H_ODD, even.order)
    parts = [
        compare_series("b-even-h", "b(2n) = h(2n+1)", "b(2n) against h(2n+1)", even, h),
        compare_series("b-odd-zero", "b(2n+1) = 0", "odd coefficients of b vanish",
                       odd, Series.zero(odd.order)),
    ]
    report = combine("oracle-b-h", "b(2n) = h(2n+1)",
                     f"b(2n) = h(2n+1) and b(2n+1) = 0 below q^{order}", parts)
    report.millis = timer.millis
    return report
