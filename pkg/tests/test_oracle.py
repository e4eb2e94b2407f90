"""
Tests for the combinatorial enumerators.
"""

import pytest

from qc_toolkit.core import oracle
from qc_toolkit.core.qfactory import GeneratingFunctionId
from qc_toolkit.errors import QSeriesError
from qc_toolkit.models.schemas import Verdict


def test_partition_numbers():
    table = oracle.count_partitions(10)
    assert table[4] == 5
    assert table.values == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert table.limit == 10


def test_large_partition_number():
    assert oracle.count_partitions(100)[100] == 190569292


def test_even_parts():
    assert oracle.count_even_parts(6).values == [1, 0, 1, 0, 2, 0, 3]


def test_cubic_counts():
    table = oracle.count_cubic(5)
    assert table.values == [1, 1, 3, 4, 9, 12]
    assert oracle.cubic_by_convolution(5).values == table.values


def test_two_and_three_cores():
    assert oracle.count_tcore(2, 5).values == [1, 1, 0, 1, 0, 0]
    assert oracle.count_tcore(3, 5).values == [1, 1, 2, 0, 2, 1]


def test_count_cores_shares_one_walk():
    tables = oracle.count_cores([3, 2, 3], 8)
    assert sorted(tables) == [2, 3]
    assert tables[3].family == "tcore(3)"


def test_one_core_is_empty_only():
    assert oracle.count_tcore(1, 6).values == [1, 0, 0, 0, 0, 0, 0]


def test_hook_lengths():
    assert oracle.hook_lengths((3, 1)) == [4, 2, 1, 1]
    assert oracle.conjugate((3, 1)) == (2, 1, 1)
    assert oracle.shape_of({1: 2, 3: 1}) == (3, 1, 1)
    assert oracle.is_core((3, 1), 3)
    assert not oracle.is_core((2, 2), 3)
    assert oracle.conjugate(()) == ()


def test_convolve_with_stride():
    # q * (1 + q^2) * (1 + q + q^2 + ...)
    assert oracle.convolve([1, 1], [1] * 6, 5, stride=2, offset=1) == [0, 1, 1, 2, 2, 2]


def test_limits():
    with pytest.raises(QSeriesError):
        oracle.count_tcore(3, oracle.MAX_ENUMERATION + 1)
    with pytest.raises(QSeriesError):
        oracle.count_cubic(-1)
    with pytest.raises(QSeriesError):
        oracle.count_cores([0], 5)


@pytest.mark.parametrize("family", [
    GeneratingFunctionId.tcore(2), GeneratingFunctionId.tcore(3), GeneratingFunctionId.tcore(5),
    GeneratingFunctionId.tcore(7), GeneratingFunctionId("cubic"), GeneratingFunctionId("partition"),
    GeneratingFunctionId("c"), GeneratingFunctionId("d"),
])
def test_cross_validate(factory, family):
    report = oracle.cross_validate(family, 25, factory)
    assert report.verdict is Verdict.VERIFIED, report.counterexample
    assert report.id == f"oracle-{family.label}"
    assert report.order == 26


def test_no_direct_oracle_for_b():
    with pytest.raises(QSeriesError):
        oracle.table_for(GeneratingFunctionId("b"), 10)


def test_cubic_paths():
    assert oracle.verify_cubic_paths(300).passed


def test_b_h(factory):
    report = oracle.verify_b_h(201, factory)
    assert report.passed
    assert report.id == "oracle-b-h"
