"""
Concurrent check runner.
"""

import asyncio
import traceback
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Callable, List, Optional

from ..models.schemas import CheckReport, Suite, VerificationRun, Verdict
from ..utils.config import config
from ..utils.logger import LogTimer, get_logger
from .registry import CheckSpec, Registry, SuitePlan


class VerificationRunner:
    """Runs registered checks on a thread pool, a bounded number at a time."""

    def __init__(self, registry: Registry, jobs: Optional[int] = None):
        """
        Initialize the runner.

        Args:
            registry: Registry that builds the suites
            jobs: Parallelism degree (defaults to concurrent.max_workers)
        """
        self.registry = registry
        self.logger = get_logger(__name__)
        self.jobs = jobs or config.get('concurrent.max_workers', 4)
        self.timeout = config.get('concurrent.timeout')

    async def run_suite(self, suite: Suite,
                        progress: Optional[Callable[[CheckReport], None]] = None) -> VerificationRun:
        """
        Plan and run a whole suite.

        Args:
            suite: Suite to run
            progress: Called with each report as it completes

        Returns:
            The finished run, reports in registry order
        """
        plan = self.registry.plan(suite)
        run = VerificationRun(suite=suite.value, config=self.registry.run_config.to_dict())
        self.logger.info(f"Running suite '{suite.value}': {len(plan.checks)} checks, {self.jobs} jobs")

        with LogTimer(self.logger, f"Suite {suite.value}"):
            await self.warm(plan)
            run.reports = await self.run_checks(plan.checks, progress)

        summary = run.summary()
        self.logger.info(f"Suite '{suite.value}' finished: {summary}")
        return run

    async def warm(self, plan: SuitePlan) -> None:
        """Build shared expansions up front so later checks truncate them."""
        if not plan.warmups:
            return
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            results = await asyncio.gather(
                *(loop.run_in_executor(executor, warmup) for warmup in plan.warmups),
                return_exceptions=True)
        for result in results:
            # a failed warmup resurfaces as an error in the checks that need it
            if isinstance(result, Exception):
                self.logger.warning(f"Shared expansion failed: {result}")

    async def run_checks(self, checks: List[CheckSpec],
                         progress: Optional[Callable[[CheckReport], None]] = None) -> List[CheckReport]:
        """
        Run checks concurrently.

        Args:
            checks: Checks to run
            progress: Called with each report as it completes

        Returns:
            Reports in the order of `checks`
        """
        semaphore = asyncio.Semaphore(self.jobs)
        loop = asyncio.get_running_loop()

        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            async def run_one(spec: CheckSpec) -> CheckReport:
                async with semaphore:
                    started = datetime.now()
                    try:
                        future = loop.run_in_executor(executor, spec.run)
                        report = await asyncio.wait_for(future, self.timeout) if self.timeout else await future
                    except asyncio.TimeoutError:
                        self.logger.error(f"Check {spec.id} timed out after {self.timeout}s")
                        report = self._error_report(spec, f"timed out after {self.timeout}s", started)
                    except Exception as e:
                        self.logger.error(f"Check {spec.id} failed: {e}")
                        self.logger.debug(traceback.format_exc())
                        report = self._error_report(spec, f"{type(e).__name__}: {e}", started)
                report = self._stamp(spec, report)
                if progress:
                    progress(report)
                return report

            return list(await asyncio.gather(*(run_one(spec) for spec in checks)))

    async def run_ids(self, check_ids: List[str]) -> List[CheckReport]:
        """Re-run checks by id, e.g. from a saved report."""
        checks = [self.registry.lookup(check_id) for check_id in check_ids]
        return await self.run_checks(checks)

    @staticmethod
    def _stamp(spec: CheckSpec, report: CheckReport) -> CheckReport:
        """Registry ids and conjectural flags are authoritative."""
        report.id = spec.id
        report.conjectural = report.conjectural or spec.conjectural
        if not report.reference:
            report.reference = spec.reference
        return report

    @staticmethod
    def _error_report(spec: CheckSpec, message: str, started: datetime) -> CheckReport:
        return CheckReport(
            id=spec.id,
            reference=spec.reference,
            description="check raised instead of reporting",
            order=0,
            instances=0,
            verdict=Verdict.ERROR,
            conjectural=spec.conjectural,
            notes=[message],
            millis=int((datetime.now() - started).total_seconds() * 1000)
        )

