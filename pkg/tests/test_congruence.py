"""
Tests for the congruence families, fixed claims and the progression scanner.
"""

import pytest

from qc_toolkit.core import congruence
from qc_toolkit.core.congruence import (MOD_FACTS, TheoremId, check, default_order, fixed_claims, instance,
                                        instances, progression_step_facts, scan, scan_moduli, verify_mod_fact)
from qc_toolkit.errors import UnknownSeriesError
from qc_toolkit.models.schemas import ProgressionCongruence, Provenance, Verdict


class TestTheoremFamilies:
    def test_b_mod2_instance(self):
        claim = instance(TheoremId.B_MOD2, 5, 1, 1)
        assert (claim.family, claim.A, claim.B, claim.modulus) == ("b", 25, 13, 2)
        assert claim.provenance.parameters

    def test_d_mod2_uses_even_step(self):
        claim = instance(TheoremId.D_MOD2, 3, 1, 1)
        assert (claim.A, claim.B) == (18, 8)
        assert claim.provenance.note

    def test_d_mod9_offset(self):
        claim = instance(TheoremId.D_MOD9, 5, 1, 1)
        assert (claim.A, claim.B, claim.modulus) == (150, 86, 9)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            instance(TheoremId.B_MOD2, 3, 1, 1)
        with pytest.raises(ValueError):
            instance(TheoremId.D_MOD3, 9, 1, 1)
        with pytest.raises(ValueError):
            instance(TheoremId.D_MOD3, 5, 0, 1)
        with pytest.raises(ValueError):
            instance(TheoremId.D_MOD3, 5, 1, 5)

    def test_instances_skip_small_primes(self):
        claims = instances(TheoremId.B_MOD2, [3, 5], 2)
        assert len(claims) == 8
        assert {c.provenance.p for c in claims} == {5}
        assert len(instances(TheoremId.D_MOD2, [3, 5], 1)) == 6

    @pytest.mark.parametrize("theorem", list(TheoremId))
    def test_first_instances_hold(self, factory, theorem):
        p = theorem.spec.min_prime
        for claim in instances(theorem, [p], 1):
            report = check(claim, claim.order_for(12), factory)
            assert report.verdict is Verdict.VERIFIED, claim.id
            assert report.instances == 12


class TestFixedClaims:
    def test_count_and_split(self):
        claims = fixed_claims()
        assert len(claims) == 20
        assert sum(c.conjectural for c in claims) == 8
        assert len({c.id for c in claims}) == 20

    def test_c27_mod9(self, factory):
        claim = next(c for c in fixed_claims() if c.id == "c-27n+24-mod9")
        report = check(claim, claim.order_for(60), factory)
        assert report.verdict is Verdict.VERIFIED
        assert report.id == "scan-c-27n+24-mod9"

    @pytest.mark.parametrize("claim_id", ["c-3n+0-mod3", "d-3n+2-mod3", "b-8n+6-mod4", "d-45n+17-mod15"])
    def test_proven_claims(self, factory, claim_id):
        claim = next(c for c in fixed_claims() if c.id == claim_id)
        assert check(claim, claim.order_for(40), factory).passed

    def test_open_claims_are_marked(self, factory):
        claim = next(c for c in fixed_claims() if c.conjectural)
        report = check(claim, claim.order_for(20), factory)
        assert report.conjectural
        assert any("open claim" in note for note in report.notes)


class TestScanner:
    def test_counterexample(self, factory):
        report = scan("d", 45, 1, 5, 2000, factory)
        assert report.verdict is Verdict.COUNTEREXAMPLE
        assert report.counterexample.index == 0
        assert report.counterexample.exponent == 1
        assert report.counterexample.value == 1

    def test_instances_counted(self, factory):
        report = scan("c", 3, 0, 3, 31, factory)
        assert report.instances == 11
        assert report.passed

    def test_large_offset_note(self, factory):
        report = scan("d", 3, 5, 3, 200, factory)
        assert report.passed
        assert any("first index 1" in note for note in report.notes)

    def test_nothing_below_order(self, factory):
        report = scan("d", 45, 41, 5, 30, factory)
        assert report.instances == 0
        assert report.passed

    def test_shared_modulus(self, factory):
        claim = ProgressionCongruence("c", 27, 24, 9, Provenance("ad hoc"))
        shared = check(claim, 1000, factory, base_modulus=45)
        alone = check(claim, 1000, factory)
        assert shared.verdict is alone.verdict is Verdict.VERIFIED
        with pytest.raises(ValueError):
            check(claim, 1000, factory, base_modulus=10)

    def test_unknown_family(self, factory):
        with pytest.raises(UnknownSeriesError):
            scan("e", 2, 1, 2, 100, factory)

    def test_default_order(self):
        claim = ProgressionCongruence("c", 27, 24, 9)
        assert default_order(claim, 64, 50000) == 50000
        assert default_order(claim, 64, 100) == 27 * 64

    def test_scan_moduli(self):
        claims = [c for c in fixed_claims() if c.family == "c"]
        moduli = scan_moduli(claims)
        assert moduli == {"c": 315}


class TestReductionSteps:
    @pytest.mark.parametrize("key", sorted(MOD_FACTS))
    def test_mod_facts(self, factory, key):
        report = verify_mod_fact(key, 80, factory)
        assert report.verdict is Verdict.VERIFIED, report.counterexample
        assert report.id == f"modfact-{key}"

    def test_combined_mod_facts(self, factory):
        report = congruence.intermediate_mod_facts(40, factory)
        assert report.passed
        assert len(report.notes) == len(MOD_FACTS)

    @pytest.mark.parametrize("p,count", [(3, 1), (5, 4), (7, 4)])
    def test_progression_steps(self, factory, p, count):
        reports = progression_step_facts(p, 60, factory=factory)
        assert len(reports) == count
        assert all(r.passed for r in reports), [r.id for r in reports if not r.passed]

    def test_progression_steps_second_alpha(self, factory):
        assert all(r.passed for r in progression_step_facts(5, 20, alpha=2, factory=factory))

    def test_frobenius_needs_prime(self, factory):
        with pytest.raises(ValueError):
            congruence.frobenius_check(4, 20, factory)
        assert congruence.frobenius_check(3, 50, factory).passed
