"""
Tests for the mock theta sums and their eta-quotient identities.
"""

import pytest

from qc_toolkit.core import mocktheta
from qc_toolkit.core.mocktheta import IDENTITIES, MockThetaId, mock, term, verify_choi_kim
from qc_toolkit.core.series import series_sum
from qc_toolkit.models.schemas import Verdict


def test_lambda6_leading_terms():
    assert mock(MockThetaId.LAMBDA6, 3).coefficients() == [1, -1, 3]


def test_psi_minus_starts_at_q():
    assert mock(MockThetaId.PSI_MINUS6, 10).valuation() == 1


def test_third_order_leading_terms():
    assert mock(MockThetaId.UPSILON, 3).coefficients() == [1, -1, 2]
    assert mock(MockThetaId.UPSILON3, 3).coefficients() == [1, 1, 2]


@pytest.mark.parametrize("which", list(MockThetaId))
def test_incremental_sum_matches_term_sum(which):
    order = 40
    first = which.shape.start
    last = mocktheta._last_index(which.shape, order)
    direct = series_sum(term(which, n, order) for n in range(first, last))
    assert mock(which, order) == direct


@pytest.mark.parametrize("which", sorted(IDENTITIES))
def test_identities_hold(which):
    report = verify_choi_kim(which, 120)
    assert report.verdict is Verdict.VERIFIED
    assert report.id == f"mock-{which}"
    assert report.order == 120


def test_identity_sides_small_order():
    lhs, rhs = mocktheta.identity_sides("sixth_psi", 4)
    assert lhs.coefficients() == [0, 3, 3, 9]
    assert rhs.coefficients() == [0, 3, 3, 9]


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_choi_kim("fifth", 10)


def test_parse():
    assert MockThetaId.parse("psiminus6") is MockThetaId.PSI_MINUS6
    with pytest.raises(ValueError):
        MockThetaId.parse("chi")


def test_term_before_start():
    with pytest.raises(ValueError):
        term(MockThetaId.PSI_MINUS6, 0, 10)
