"""
Tests for coefficient rings and truncated series arithmetic.
"""

import pytest

from qc_toolkit.core.ring import ZZ, ModularRing
from qc_toolkit.core.series import Series, _dense_mul, series_sum
from qc_toolkit.errors import NonUnitError, QSeriesError, RingMismatchError


def random_series(rng, order, ring=ZZ, unit=False, low=-9, high=9):
    values = [rng.randint(low, high) for _ in range(order)]
    if unit:
        values[0] = 1
    return Series.from_coefficients(values, ring)


class TestRings:
    def test_modulus_bounds(self):
        ModularRing(2)
        ModularRing(2 ** 32)
        with pytest.raises(ValueError):
            ModularRing(1)
        with pytest.raises(ValueError):
            ModularRing(2 ** 32 + 1)

    def test_units(self):
        ring = ModularRing(9)
        assert ring.is_unit(2)
        assert not ring.is_unit(3)
        assert ring.inverse(2) == 5
        with pytest.raises(NonUnitError):
            ring.inverse(6)
        assert ZZ.is_unit(-1) and not ZZ.is_unit(2)

    def test_mixing_rings_is_rejected(self):
        a = Series.one(5)
        b = Series.one(5, ModularRing(7))
        with pytest.raises(RingMismatchError):
            a + b


class TestBasics:
    def test_f1_times_f2(self, factory):
        product = factory.eta(1, 7) * factory.eta(2, 7)
        assert product.coefficients() == [1, -1, -2, 1, 0, 2, 1]

    def test_partition_numbers(self, factory):
        p = factory.eta(1, 10).invert()
        assert p.coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]

    def test_jacobi_cube(self, factory):
        assert (factory.eta(1, 7) ** 3).coefficients() == [1, -3, 0, 5, 0, 0, -7]

    def test_phi_odd_progression(self, factory):
        odd = factory.phi(30).extract_progression(2, 1)
        assert odd.order == 15
        assert {n: c for n, c in enumerate(odd.coefficients()) if c} == {0: 2, 4: 2, 12: 2}

    def test_coeff_of_psi(self, factory):
        assert factory.psi(10).coeff(3) == 1

    def test_reduce_to_zero(self, factory):
        assert factory.eta(1, 20).scale(3).reduce_mod(3).is_zero()

    def test_coefficients_are_read_only(self):
        s = Series.from_coefficients([1, 2, 3])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5

    def test_unknown_coefficient(self):
        s = Series.one(4)
        with pytest.raises(QSeriesError):
            s.coeff(4)
        with pytest.raises(QSeriesError):
            s.coeff(-1)

    def test_mixed_orders_truncate(self):
        a = Series.from_coefficients([1, 1, 1, 1, 1])
        b = Series.from_coefficients([1, 2, 3])
        assert (a + b).coefficients() == [2, 3, 4]
        assert (a * b).order == 3

    def test_shift_keeps_order(self):
        s = Series.from_coefficients([1, 2, 3, 4])
        assert s.shift(2).coefficients() == [0, 0, 1, 2]
        assert s.shift(9).is_zero()

    def test_substitute_power(self):
        s = Series.from_coefficients([1, 2, 3])
        assert s.substitute_power(3).coefficients() == [1, 0, 0, 2, 0, 0, 3, 0, 0]
        assert s.substitute_power(3, order=5).coefficients() == [1, 0, 0, 2, 0]

    def test_bad_progression(self):
        s = Series.one(10)
        with pytest.raises(QSeriesError):
            s.extract_progression(3, 3)
        with pytest.raises(QSeriesError):
            s.extract_progression(0, 0)

    def test_division_needs_unit(self):
        s = Series.from_coefficients([2, 1, 0])
        with pytest.raises(NonUnitError):
            Series.one(3).divide(s)
        ring = ModularRing(5)
        assert Series.one(3, ring).divide(Series.from_coefficients([2, 1, 0], ring)).coeff(0) == 3

    def test_reduce_needs_compatible_modulus(self):
        s = Series.from_coefficients([1, 5, 7], ModularRing(9))
        assert s.reduce_mod(3).coefficients() == [1, 2, 1]
        with pytest.raises(QSeriesError):
            s.reduce_mod(2)

    def test_negative_reduction(self):
        s = Series.from_coefficients([-1, -7, 3])
        assert s.reduce_mod(5).coefficients() == [4, 3, 3]

    def test_series_sum(self):
        parts = [Series.monomial(e, 4) for e in range(4)]
        assert series_sum(parts).coefficients() == [1, 1, 1, 1]
        with pytest.raises(QSeriesError):
            series_sum([])

    def test_equality(self):
        assert Series.from_coefficients([1, 2]) == Series.from_coefficients([1, 2])
        assert Series.from_coefficients([1, 2]) != Series.from_coefficients([1, 2, 0])
        assert Series.from_coefficients([1, 2]) != Series.from_coefficients([1, 2], ModularRing(5))


class TestDivision:
    @pytest.mark.parametrize("ring", [ZZ, ModularRing(2), ModularRing(9), ModularRing(2 ** 32)])
    @pytest.mark.parametrize("sign", [1, -1])
    @pytest.mark.parametrize("e", [1, 3, 7])
    def test_binomial_division(self, rng, ring, sign, e):
        rhs = random_series(rng, 50, ring, low=0)
        divisor = Series.from_terms({0: 1, e: sign}, 50, ring)
        assert rhs.divide(divisor) * divisor == rhs

    @pytest.mark.parametrize("ring", [ZZ, ModularRing(5), ModularRing(1 << 20)])
    def test_long_recurrence(self, rng, ring, factory):
        # wider than several base blocks so the split path runs
        order = 300
        rhs = random_series(rng, order, ring, low=0)
        divisor = factory.eta(1, order, ring) * factory.eta(3, order, ring)
        assert (rhs / divisor) * divisor == rhs


class TestProperties:
    @pytest.mark.parametrize("m", [2, 3, 25, 97])
    def test_reduction_is_a_ring_homomorphism(self, rng, m):
        for _ in range(5):
            a, b = random_series(rng, 40), random_series(rng, 40)
            assert (a * b).reduce_mod(m) == a.reduce_mod(m) * b.reduce_mod(m)
            assert (a + b).reduce_mod(m) == a.reduce_mod(m) + b.reduce_mod(m)

    @pytest.mark.parametrize("modulus", [2, 3, 5, 7])
    def test_dissection_is_complete(self, rng, modulus):
        s = random_series(rng, 41)
        parts = [s.extract_progression(modulus, b) for b in range(modulus)]
        assert sum(p.order for p in parts) == s.order
        for n in range(s.order):
            assert parts[n % modulus].coeff(n // modulus) == s.coeff(n)

    @pytest.mark.parametrize("ring", [ZZ, ModularRing(11)])
    def test_sparse_and_dense_products_agree(self, rng, ring, factory):
        order = 120
        dense = random_series(rng, order, ring, low=0)
        sparse = factory.eta(1, order, ring)
        assert sparse.is_sparse() and not dense.is_sparse()
        assert dense * sparse == _dense_mul(ring, dense.coeffs, sparse.coeffs)
        assert sparse * dense == dense * sparse

    @pytest.mark.parametrize("ring", [ZZ, ModularRing(3), ModularRing(1000003)])
    def test_inverse_is_two_sided(self, rng, ring):
        for _ in range(3):
            s = random_series(rng, 60, ring, unit=True)
            inv = s.invert()
            assert inv * s == Series.one(60, ring)
            assert s * inv == Series.one(60, ring)

    def test_powers_match_repeated_products(self, rng):
        s = random_series(rng, 30, unit=True)
        assert s ** 3 == s * s * s
        assert s ** -2 == (s * s).invert()
        assert s ** 0 == Series.one(30)
