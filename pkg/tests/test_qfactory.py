"""
Tests for the named series builders.
"""

from fractions import Fraction

import pytest

from qc_toolkit.core.qfactory import (F_NEG, PHI, PSI, THETA_SPECS, EtaQuotient, GeneratingFunctionId, ThetaSpec,
                                      eta_q, verify_euler, verify_triple_product)
from qc_toolkit.core.ring import ZZ, ModularRing
from qc_toolkit.core.series import Series
from qc_toolkit.errors import ConvergenceError, QSeriesError, UnknownSeriesError, ZeroFactorError


class TestGeneratingFunctions:
    def test_cubic_partitions(self, factory):
        assert factory.gf(GeneratingFunctionId("cubic"), 6).coefficients() == [1, 1, 3, 4, 9, 12]

    def test_three_cores(self, factory):
        assert factory.gf(GeneratingFunctionId.tcore(3), 6).coefficients() == [1, 1, 2, 0, 2, 1]

    def test_two_cores_are_triangular(self, factory):
        a2 = factory.gf(GeneratingFunctionId.tcore(2), 30)
        assert [n for n, c in enumerate(a2.coefficients()) if c] == [0, 1, 3, 6, 10, 15, 21, 28]
        assert set(a2.coefficients()) == {0, 1}

    def test_d(self, factory):
        assert factory.gf(GeneratingFunctionId("d"), 6).coefficients() == [1, 1, 3, 1, 6, 3]

    def test_c_starts_at_q(self, factory):
        c = factory.gf(GeneratingFunctionId("c"), 5)
        assert c.coefficients() == [0, 1, 1, 3, 4]
        assert c.valuation() == 1

    def test_b_is_even(self, factory):
        b = factory.gf(GeneratingFunctionId("b"), 40)
        assert b.extract_progression(2, 1).is_zero()
        assert b.coefficients()[:5] == [1, 0, 2, 0, 2]

    def test_modular_expansion_matches_exact(self, factory):
        gf_id = GeneratingFunctionId("d")
        exact = factory.gf(gf_id, 200)
        assert factory.gf(gf_id, 200, ModularRing(27)) == exact.reduce_mod(27)

    @pytest.mark.parametrize("text,label", [
        ("cubic", "cubic"), ("tcore(5)", "tcore(5)"), ("tcore7", "tcore(7)"), (" B ", "b"),
    ])
    def test_parse(self, text, label):
        assert GeneratingFunctionId.parse(text).label == label

    @pytest.mark.parametrize("text", ["tcore", "tcore(x)", "e", "tcore(0)"])
    def test_parse_rejects(self, text):
        with pytest.raises(UnknownSeriesError):
            GeneratingFunctionId.parse(text)


class TestMemo:
    def test_shorter_requests_truncate(self, factory):
        long = factory.gf(GeneratingFunctionId("cubic"), 100)
        short = factory.gf(GeneratingFunctionId("cubic"), 10)
        assert short.coefficients() == long.coefficients()[:10]
        assert factory.cache_info()

    def test_rings_are_separate_keys(self, factory):
        factory.eta(1, 20)
        factory.eta(1, 20, ModularRing(5))
        assert len(factory.cache_info()) == 2

    def test_clear(self, factory):
        factory.eta(2, 20)
        factory.clear()
        assert factory.cache_info() == {}


class TestThetaFunctions:
    @pytest.mark.parametrize("name", ["phi", "psi", "phi_neg", "f_neg"])
    def test_sum_and_product_forms_agree(self, factory, name):
        # each builder raises ConsistencyError on disagreement
        series = getattr(factory, name)(300)
        assert series.order == 300

    def test_phi_squares(self, factory):
        phi = factory.phi(50)
        squares = {k * k for k in range(8)}
        for n, c in enumerate(phi.coefficients()):
            assert c == (1 if n == 0 else 2 if n in squares else 0)

    def test_psi_triangular(self, factory):
        psi = factory.psi(40)
        assert [n for n, c in enumerate(psi.coefficients()) if c] == [0, 1, 3, 6, 10, 15, 21, 28, 36]

    def test_f_neg_is_f1(self, factory):
        assert factory.theta_f(F_NEG, 100) == factory.eta(1, 100)

    @pytest.mark.parametrize("name", sorted(THETA_SPECS))
    def test_triple_product(self, factory, name):
        spec = THETA_SPECS[name]
        assert factory.theta_product(spec, 300) == factory.theta_f(spec, 300)
        assert verify_triple_product(name, 300, factory).passed

    def test_psi_product_by_hand(self, factory):
        # (-q; q^4)(-q^3; q^4)(q^4; q^4) = (-q; q^2)(q^4; q^4)
        product = factory.pochhammer_inf(-1, 1, 2, 300) * factory.pochhammer_inf(1, 4, 4, 300)
        assert product == factory.theta_f(PSI, 300)

    def test_triple_product_needs_integral_arguments(self, factory):
        with pytest.raises(QSeriesError):
            factory.theta_product(ThetaSpec(1, Fraction(1, 2), 1, Fraction(3, 2)), 20)
        with pytest.raises(UnknownSeriesError):
            verify_triple_product("chi", 20, factory)

    def test_divergent_spec(self):
        with pytest.raises(ConvergenceError):
            ThetaSpec(1, 0, 1, 0)
        with pytest.raises(ConvergenceError):
            ThetaSpec(1, -1, 1, 2)

    def test_fractional_exponents(self):
        spec = ThetaSpec(1, Fraction(1, 2), 1, Fraction(1, 2))
        with pytest.raises(QSeriesError):
            spec.terms(10)

    def test_w_function(self, factory):
        w = factory.w_func(50)
        assert w.coeff(0) == 1
        assert w == factory.eta_quotient(eta_q({1: 1, 6: 3, 2: -1, 3: -3}), 50)

    def test_P_forms_agree(self, factory):
        P = factory.P_func(200)
        assert P.coeff(0) == 1
        assert P == factory.P_lambert_form(200)


class TestPochhammer:
    def test_infinite_product_is_eta(self, factory):
        assert factory.pochhammer_inf(1, 1, 1, 60) == factory.eta(1, 60)

    def test_euler_product(self, factory):
        # (-q; q)_inf f1 = f2, and (-q; q)_inf = f2 / f1
        minus = factory.pochhammer_inf(-1, 1, 1, 200)
        assert minus * factory.eta(1, 200) == factory.eta(2, 200)
        assert minus == factory.eta(2, 200) * factory.eta(1, 200).invert()

    def test_distinct_parts_start(self, factory):
        # distinct parts: 1, 1, 1, 2, 2, 3, 4, 5
        assert factory.pochhammer_inf(-1, 1, 1, 8).coefficients() == [1, 1, 1, 2, 2, 3, 4, 5]

    def test_euler_report(self, factory):
        report = verify_euler(120, factory)
        assert report.passed
        assert report.id == "euler-product"
        assert report.order == 120

    def test_finite_product(self, factory):
        # (-q; q^2)_2 = (1 + q)(1 + q^3)
        assert factory.pochhammer_n(-1, 1, 2, 2, 6).coefficients() == [1, 1, 0, 1, 1, 0]

    def test_zero_factor(self, factory):
        with pytest.raises(ZeroFactorError):
            factory.pochhammer_inf(1, 0, 1, 10)
        assert factory.pochhammer_n(1, 0, 1, 3, 10).is_zero()

    def test_constant_two_factor(self, factory):
        # (-1; q)_1 = 2
        assert factory.pochhammer_n(-1, 0, 1, 1, 4).coefficients() == [2, 0, 0, 0]


class TestEtaQuotients:
    def test_factors_merge(self):
        quotient = eta_q({1: 2}) * eta_q({1: -2, 3: 1})
        assert quotient.factors == ((3, 1),)

    def test_construction_checks(self):
        assert eta_q({1: 0, 2: 3}).factors == ((2, 3),)
        with pytest.raises(QSeriesError):
            eta_q({0: 1})
        with pytest.raises(QSeriesError):
            eta_q({-2: 1})

    def test_str(self):
        assert str(GeneratingFunctionId("d").eta_quotient()) == "f3^3/(f1*f2)"
        assert str(eta_q({6: 3, 1: -1, 2: -1}, shift=1)) == "q*f6^3/(f1*f2)"

    def test_scaled(self):
        assert eta_q({1: 1, 2: -1}).scaled(3) == eta_q({3: 1, 6: -1})

    def test_negative_shift_rejected(self):
        with pytest.raises(QSeriesError):
            EtaQuotient((), -1)
        with pytest.raises(QSeriesError):
            eta_q({1: 1}) / eta_q({}, shift=1)

    def test_expand_with_shift_and_coefficient(self, factory):
        s = factory.eta_quotient(eta_q({1: -1}, shift=2, coefficient=3), 6)
        assert s.coefficients() == [0, 0, 3, 3, 6, 9]

    def test_expansion_mod_prime(self, factory):
        ring = ModularRing(7)
        s = factory.eta_quotient(eta_q({7: 1, 1: -7}), 100, ring)
        # f7 / f1^7 = 1 (mod 7)
        assert s == Series.one(100, ring)

    def test_theta_constants(self):
        assert PHI.exponent(-1) == 1 and PSI.exponent(-1) == 3


def test_phi_in_ring(factory):
    assert factory.phi(10, ZZ).coeff(1) == 2
