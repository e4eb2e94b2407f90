"""
Verification suites.

Each suite is a list of CheckSpec entries whose `run` closure produces one
CheckReport. Orders and instance targets come from the `verification`
section of the configuration; a RunConfig order overrides them and
QC_ORDER_CAP caps everything.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..models.schemas import CheckReport, ProgressionCongruence, RunConfig, Suite
from ..utils.config import Config, config
from ..utils.logger import LogTimer, get_logger
from . import congruence, dissect, mocktheta, oracle, qfactory
from .checks import combine
from .qfactory import GeneratingFunctionId, SeriesFactory, default_factory
from .ring import ModularRing

logger = get_logger(__name__)


@dataclass(frozen=True)
class CheckSpec:
    """A registered check: stable id, reference string and a thunk."""
    id: str
    suite: Suite
    reference: str
    run: Callable[[], CheckReport]
    conjectural: bool = False


@dataclass
class SuitePlan:
    """Checks to run, plus expansions worth building once before fanning out."""
    suite: Suite
    checks: List[CheckSpec] = field(default_factory=list)
    warmups: List[Callable[[], None]] = field(default_factory=list)

    @property
    def ids(self) -> List[str]:
        return [c.id for c in self.checks]


class Registry:
    """Builds suites from the configuration for one run."""

    def __init__(self, run_config: Optional[RunConfig] = None, cfg: Optional[Config] = None,
                 factory: Optional[SeriesFactory] = None):
        self.run_config = run_config or RunConfig(command="verify")
        self.cfg = cfg or config
        self.factory = factory or default_factory

    # ------------------------------------------------------------------
    # orders

    def _order(self, key: str, default: int) -> int:
        """Configured order for a check group, or the run override, capped."""
        requested = self.run_config.order or self.cfg.get_int(f'verification.orders.{key}', default)
        return self.cfg.cap_order(requested)

    def _limit(self, key: str, default: int) -> int:
        """Oracle limits follow the run order when it is smaller."""
        limit = self.cfg.get_int(f'verification.oracle.{key}', default)
        if self.run_config.order:
            limit = min(limit, self.run_config.order)
        return self.cfg.cap_order(limit)

    def _scan_order(self, claim: ProgressionCongruence, instances: int) -> int:
        requested = self.run_config.order or claim.order_for(instances)
        return self.cfg.cap_order(requested)

    # ------------------------------------------------------------------
    # suites

    def lemma_checks(self) -> List[CheckSpec]:
        order = self._order('lemmas', 400)
        factory = self.factory
        specs = []
        for name in dissect.DissectionLemmaId.FIXED:
            lemma = dissect.DissectionLemmaId(name)
            specs.append(self._spec(f"lemma-{lemma.label}", Suite.LEMMAS, dissect.LEMMAS[name][1],
                                    lambda lemma=lemma: dissect.verify_lemma(lemma, order, factory)))
        for which, name, key, default in (("psi", "psi_p_dissection", 'psi_primes', [3, 5, 7, 11, 13]),
                                          ("f", "f_p_dissection", 'f_primes', [5, 7, 11, 13])):
            for p in self.cfg.get(f'verification.lemmas.{key}', default):
                lemma = dissect.DissectionLemmaId(name, p)
                specs.append(self._spec(f"lemma-{lemma.label}", Suite.LEMMAS, dissect.LEMMAS[name][1],
                                        lambda lemma=lemma: dissect.verify_lemma(lemma, order, factory)))
                specs.append(self._spec(f"residues-{which}-{p}", Suite.LEMMAS, f"{which} {p}-dissection residues",
                                        lambda p=p, which=which: dissect.residue_claims(p, which)))
                specs.append(self._spec(f"support-{which}-{p}", Suite.LEMMAS, f"{which} {p}-dissection support",
                                        lambda p=p, which=which: dissect.support_soundness(p, which, order, factory)))
        h_order = self._order('h_mod5', 500)
        specs.append(self._spec("H-mod5", Suite.LEMMAS, "H = 3 f15^3/(f5 f10^2) (mod 5)",
                                lambda: dissect.verify_H_mod5(h_order, factory)))
        return specs

    def identity_checks(self) -> List[CheckSpec]:
        factory = self.factory
        mock_order = self._order('mock', 1000)
        order = self._order('intermediates', 400)
        specs = [
            self._spec(f"mock-{key}", Suite.IDENTITIES, identity.reference,
                       lambda key=key: mocktheta.verify_choi_kim(key, mock_order))
            for key, identity in mocktheta.IDENTITIES.items()
        ]
        for key, spec in dissect.INTERMEDIATES.items():
            specs.append(self._spec(f"intermediate-{key}", Suite.IDENTITIES, spec.reference,
                                    lambda key=key: dissect.verify_intermediate(key, order, factory)))
        for key, fact in congruence.MOD_FACTS.items():
            specs.append(self._spec(f"modfact-{key}", Suite.IDENTITIES, fact.reference,
                                    lambda key=key: congruence.verify_mod_fact(key, order, factory)))
        for ell in self.cfg.get('verification.frobenius_primes', [2, 3, 5]):
            specs.append(self._spec(f"frobenius-f1^{ell}-mod{ell}", Suite.IDENTITIES,
                                    f"f1^{ell} = f{ell} (mod {ell})",
                                    lambda ell=ell: congruence.frobenius_check(ell, order, factory)))
        product_order = self._order('products', 300)
        specs.append(self._spec("euler-product", Suite.IDENTITIES, "(-q;q)_inf (q;q)_inf = (q^2;q^2)_inf",
                                lambda: qfactory.verify_euler(product_order, factory)))
        for name in qfactory.THETA_SPECS:
            specs.append(self._spec(f"triple-product-{name}", Suite.IDENTITIES,
                                    f"{qfactory.THETA_SPECS[name]} triple product",
                                    lambda name=name: qfactory.verify_triple_product(name, product_order, factory)))
        step_order = self._order('steps', 400)
        for p in self.cfg.get('verification.steps.primes', [3, 5, 7, 11, 13]):
            specs.append(self._spec(f"steps-p{p}-a1", Suite.IDENTITIES, f"first dissection steps at p={p}",
                                    lambda p=p: self._steps(p, step_order)))
        return specs

    def _steps(self, p: int, order: int) -> CheckReport:
        parts = congruence.progression_step_facts(p, order, factory=self.factory)
        return combine(f"steps-p{p}-a1", f"first dissection steps at p={p}",
                       f"progression steps for every family at p={p}", parts)

    def theorem_claims(self) -> List[Tuple[ProgressionCongruence, int]]:
        """(claim, order) for every theorem instance and proven fixed claim."""
        targets = self.cfg.get('verification.fixed.instances', {}) or {}
        default_target = self.cfg.get_int('verification.fixed.default_instances', 200)
        min_instances = self.cfg.get_int('verification.theorems.min_instances', 10)
        alpha_max = self.run_config.alpha_max
        out = []
        for theorem in congruence.TheoremId:
            primes = sorted(set(self.run_config.primes)
                            | set(self.cfg.get(f'verification.theorems.extra_primes.{theorem.value}', [])))
            for claim in congruence.instances(theorem, primes, alpha_max):
                out.append((claim, self._scan_order(claim, min_instances)))
        for claim in congruence.fixed_claims():
            if not claim.conjectural:
                out.append((claim, self._scan_order(claim, int(targets.get(claim.id, default_target)))))
        return out

    def conjecture_claims(self) -> List[Tuple[ProgressionCongruence, int]]:
        target = self.cfg.get_int('verification.conjectures.min_instances', 1000)
        return [(claim, self._scan_order(claim, target))
                for claim in congruence.fixed_claims() if claim.conjectural]

    def _scan_checks(self, suite: Suite, claims: List[Tuple[ProgressionCongruence, int]],
                     moduli: Dict[str, int]) -> List[CheckSpec]:
        factory = self.factory
        return [
            self._spec(f"scan-{claim.id}", suite, claim.provenance.source,
                       lambda claim=claim, order=order: congruence.check(
                           claim, order, factory, base_modulus=moduli[claim.family]),
                       conjectural=claim.conjectural)
            for claim, order in claims
        ]

    def oracle_checks(self) -> List[CheckSpec]:
        factory = self.factory
        tcore_limit = self._limit('tcore_limit', 40)
        specs = [
            self._spec(f"oracle-tcore({t})", Suite.ORACLE, "t-cores: no hook length divisible by t",
                       lambda t=t: oracle.cross_validate(GeneratingFunctionId.tcore(t), tcore_limit, factory))
            for t in self.cfg.get('verification.oracle.tcore_values', [2, 3, 5, 7])
        ]
        cubic_limit = self._limit('cubic_limit', 200)
        partition_limit = self._limit('partition_limit', 1000)
        convolution_limit = self._limit('convolution_limit', 40)
        b_h_order = self._limit('b_h_order', 1001)
        specs += [
            self._spec("oracle-cubic", Suite.ORACLE, "cubic partitions",
                       lambda: oracle.cross_validate(GeneratingFunctionId("cubic"), cubic_limit, factory)),
            self._spec("oracle-cubic-paths", Suite.ORACLE, "cubic partitions as p * p_even",
                       lambda: oracle.verify_cubic_paths(cubic_limit)),
            self._spec("oracle-partition", Suite.ORACLE, "partitions",
                       lambda: oracle.cross_validate(GeneratingFunctionId("partition"), partition_limit, factory)),
            self._spec("oracle-c", Suite.ORACLE, "c = q a_3(q^2) / f1",
                       lambda: oracle.cross_validate(GeneratingFunctionId("c"), convolution_limit, factory)),
            self._spec("oracle-d", Suite.ORACLE, "d = a_3 * p_even",
                       lambda: oracle.cross_validate(GeneratingFunctionId("d"), convolution_limit, factory)),
            self._spec("oracle-b-h", Suite.ORACLE, "b(2n) = h(2n+1)",
                       lambda: oracle.verify_b_h(b_h_order, factory)),
        ]
        return specs

    @staticmethod
    def _spec(check_id: str, suite: Suite, reference: str, run: Callable[[], CheckReport],
              conjectural: bool = False) -> CheckSpec:
        return CheckSpec(check_id, suite, reference, run, conjectural)

    # ------------------------------------------------------------------
    # plans

    def plan(self, suite: Suite) -> SuitePlan:
        """Checks of `suite` (every suite for ALL) and their shared expansions."""
        wanted = list(Suite) if suite is Suite.ALL else [suite]
        theorem_claims = self.theorem_claims() if Suite.THEOREMS in wanted else []
        conjecture_claims = self.conjecture_claims() if Suite.CONJECTURES in wanted else []
        claims = theorem_claims + conjecture_claims
        moduli = congruence.scan_moduli([claim for claim, _ in claims])

        plan = SuitePlan(suite)
        if Suite.LEMMAS in wanted:
            plan.checks += self.lemma_checks()
        if Suite.IDENTITIES in wanted:
            plan.checks += self.identity_checks()
        if theorem_claims:
            plan.checks += self._scan_checks(Suite.THEOREMS, theorem_claims, moduli)
        if conjecture_claims:
            plan.checks += self._scan_checks(Suite.CONJECTURES, conjecture_claims, moduli)
        if Suite.ORACLE in wanted:
            plan.checks += self.oracle_checks()

        longest: Dict[str, int] = {}
        for claim, order in claims:
            longest[claim.family] = max(longest.get(claim.family, 0), order)
        plan.warmups = [self._warmup(family, order, moduli[family]) for family, order in sorted(longest.items())]
        logger.info(f"Planned {len(plan.checks)} checks for suite '{suite.value}'"
                    f" with {len(plan.warmups)} shared expansions")
        return plan

    def _warmup(self, family: str, order: int, modulus: int) -> Callable[[], None]:
        def build() -> None:
            with LogTimer(logger, f"shared expansion of {family} mod {modulus} to {order}"):
                self.factory.gf(GeneratingFunctionId.parse(family), order, ModularRing(modulus))
        return build

    def lookup(self, check_id: str) -> CheckSpec:
        """Find a check by id across every suite."""
        for spec in self.plan(Suite.ALL).checks:
            if spec.id == check_id:
                return spec
        raise KeyError(f"No registered check with id {check_id!r}")
