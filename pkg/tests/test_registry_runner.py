"""
Tests for suite planning and the concurrent runner.
"""

import pytest

from qc_toolkit.core.registry import CheckSpec, Registry
from qc_toolkit.core.runner import VerificationRunner
from qc_toolkit.models.schemas import CheckReport, RunConfig, Suite, Verdict
from qc_toolkit.storage.file_storage import ReportStorage
from qc_toolkit.utils.config import Config


@pytest.fixture
def small_registry(factory):
    return Registry(RunConfig(command="verify", order=16), factory=factory)


def _passing(check_id: str) -> CheckSpec:
    return CheckSpec(check_id, Suite.LEMMAS, "ref",
                     lambda: CheckReport(id="inner", reference="", order=16, instances=16))


def _raising() -> CheckReport:
    raise ArithmeticError("boom")


class TestRegistry:
    def test_suite_sizes(self, small_registry):
        assert len(small_registry.plan(Suite.LEMMAS).checks) == 35
        assert len(small_registry.plan(Suite.IDENTITIES).checks) == 31
        assert len(small_registry.plan(Suite.THEOREMS).checks) == 272
        assert len(small_registry.plan(Suite.CONJECTURES).checks) == 8
        assert len(small_registry.plan(Suite.ORACLE).checks) == 10

    def test_all_is_the_union(self, small_registry):
        ids = small_registry.plan(Suite.ALL).ids
        assert len(ids) == 35 + 31 + 272 + 8 + 10
        assert len(set(ids)) == len(ids)

    def test_conjectures_are_flagged(self, small_registry):
        plan = small_registry.plan(Suite.CONJECTURES)
        assert all(spec.conjectural for spec in plan.checks)
        assert all(spec.id.startswith("scan-") for spec in plan.checks)

    def test_warmups_per_family(self, small_registry):
        plan = small_registry.plan(Suite.THEOREMS)
        assert len(plan.warmups) == 3
        assert small_registry.plan(Suite.LEMMAS).warmups == []

    def test_lookup(self, small_registry):
        assert small_registry.lookup("H-mod5").suite is Suite.LEMMAS
        with pytest.raises(KeyError):
            small_registry.lookup("no-such-check")

    def test_order_cap(self, monkeypatch, factory):
        monkeypatch.setenv("QC_ORDER_CAP", "20")
        registry = Registry(RunConfig(command="verify"), factory=factory)
        assert registry._order("lemmas", 400) == 20
        claim, order = registry.theorem_claims()[0]
        assert order == 20

    def test_config_orders(self, tmp_path, factory):
        path = tmp_path / "qc.yaml"
        path.write_text("verification:\n  orders:\n    mock: 77\n  theorems:\n    min_instances: 3\n")
        registry = Registry(RunConfig(command="verify", primes=[5], alpha_max=1),
                            cfg=Config(str(path)), factory=factory)
        assert registry._order("mock", 1000) == 77
        claim, order = registry.theorem_claims()[0]
        assert order == claim.order_for(3)


class TestRunner:
    @pytest.mark.asyncio
    async def test_errors_become_reports(self, small_registry):
        runner = VerificationRunner(small_registry, jobs=2)
        specs = [_passing("first"), CheckSpec("second", Suite.LEMMAS, "ref", _raising), _passing("third")]
        seen = []
        reports = await runner.run_checks(specs, seen.append)
        assert [r.id for r in reports] == ["first", "second", "third"]
        assert reports[1].verdict is Verdict.ERROR
        assert "ArithmeticError" in reports[1].notes[0]
        assert reports[0].reference == "ref"
        assert len(seen) == 3

    @pytest.mark.asyncio
    async def test_conjectural_flag_is_stamped(self, small_registry):
        runner = VerificationRunner(small_registry, jobs=1)
        spec = CheckSpec("open", Suite.CONJECTURES, "ref",
                         lambda: CheckReport(id="x", reference="r", verdict=Verdict.COUNTEREXAMPLE),
                         conjectural=True)
        reports = await runner.run_checks([spec])
        assert reports[0].conjectural
        assert reports[0].id == "open"

    @pytest.mark.asyncio
    async def test_lemma_suite(self, small_registry):
        run = await VerificationRunner(small_registry, jobs=4).run_suite(Suite.LEMMAS)
        assert run.exit_code() == 0, [r.id for r in run.failures]
        assert run.summary()['total'] == 35

    @pytest.mark.asyncio
    async def test_oracle_suite(self, small_registry):
        run = await VerificationRunner(small_registry, jobs=4).run_suite(Suite.ORACLE)
        assert run.exit_code() == 0, [r.id for r in run.failures]

    @pytest.mark.asyncio
    async def test_theorem_suite_at_small_order(self, small_registry):
        run = await VerificationRunner(small_registry, jobs=4).run_suite(Suite.THEOREMS)
        assert run.exit_code() == 0, [r.id for r in run.failures]

    @pytest.mark.asyncio
    async def test_rerun_by_id(self, small_registry):
        runner = VerificationRunner(small_registry, jobs=2)
        reports = await runner.run_ids(["lemma-p_lambert", "mock-third"])
        assert [r.id for r in reports] == ["lemma-p_lambert", "mock-third"]
        assert all(r.passed for r in reports)

    @pytest.mark.asyncio
    async def test_json_report_reruns_to_same_verdicts(self, small_registry, tmp_path):
        runner = VerificationRunner(small_registry, jobs=4)
        run = await runner.run_suite(Suite.LEMMAS)
        storage = ReportStorage(base_path=str(tmp_path))
        path = await storage.write_reports(run.reports, str(tmp_path / "lemmas.json"))

        saved = await storage.read_reports(str(path))
        rerun = await runner.run_ids([r.id for r in saved])
        assert [(r.id, r.verdict) for r in rerun] == [(r.id, r.verdict) for r in saved]
        assert [r.reference for r in saved] == [r.reference for r in run.reports]

    @pytest.mark.asyncio
    async def test_product_identities_by_id(self, small_registry):
        ids = ["euler-product", "triple-product-phi", "triple-product-psi",
               "triple-product-phi_neg", "triple-product-f_neg"]
        reports = await VerificationRunner(small_registry, jobs=2).run_ids(ids)
        assert [r.id for r in reports] == ids
        assert all(r.passed for r in reports), [r.notes for r in reports]
        assert all(r.order == 16 for r in reports)
