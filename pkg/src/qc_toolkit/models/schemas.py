"""
Data models and schemas for the q-congruence toolkit.
"""

import uuid
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple


class Verdict(Enum):
    """Outcome of a single check."""
    VERIFIED = "verified-to-order"
    COUNTEREXAMPLE = "counterexample"
    ERROR = "error"


class OutputFormat(Enum):
    """Report formats understood by the CLI."""
    TEXT = "text"
    JSON = "json"


class Suite(Enum):
    """Named verification suites."""
    LEMMAS = "lemmas"
    IDENTITIES = "identities"
    THEOREMS = "theorems"
    CONJECTURES = "conjectures"
    ORACLE = "oracle"
    ALL = "all"


@dataclass
class Counterexample:
    """First failing position of a check."""
    index: int
    value: int
    exponent: Optional[int] = None
    expected: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'value': self.value,
            'exponent': self.exponent,
            'expected': self.expected
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Counterexample':
        return cls(
            index=data['index'],
            value=data['value'],
            exponent=data.get('exponent'),
            expected=data.get('expected')
        )


@dataclass
class CheckReport:
    """Result of one verification: an identity, a congruence scan or a finite claim."""
    id: str
    reference: str
    description: str = ""
    order: int = 0
    instances: int = 0
    verdict: Verdict = Verdict.VERIFIED
    counterexample: Optional[Counterexample] = None
    conjectural: bool = False
    notes: List[str] = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.VERIFIED

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary."""
        return {
            'id': self.id,
            'paper_ref': self.reference,
            'description': self.description,
            'order': self.order,
            'instances': self.instances,
            'verdict': self.verdict.value,
            'counterexample': self.counterexample.to_dict() if self.counterexample else None,
            'conjectural': self.conjectural,
            'notes': list(self.notes),
            'millis': self.millis
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckReport':
        """Create report from dictionary."""
        counterexample = data.get('counterexample')
        return cls(
            id=data['id'],
            reference=data.get('paper_ref', data.get('reference', '')),
            description=data.get('description', ''),
            order=data.get('order', 0),
            instances=data.get('instances', 0),
            verdict=Verdict(data.get('verdict', Verdict.VERIFIED.value)),
            counterexample=Counterexample.from_dict(counterexample) if counterexample else None,
            conjectural=data.get('conjectural', False),
            notes=list(data.get('notes', [])),
            millis=data.get('millis', 0)
        )


@dataclass(frozen=True)
class Provenance:
    """Where a progression congruence comes from."""
    source: str
    p: Optional[int] = None
    alpha: Optional[int] = None
    j: Optional[int] = None
    conjectural: bool = False
    note: Optional[str] = None

    @property
    def parameters(self) -> str:
        if self.p is None:
            return ""
        return f"p={self.p}, alpha={self.alpha}, j={self.j}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'source': self.source,
            'p': self.p,
            'alpha': self.alpha,
            'j': self.j,
            'conjectural': self.conjectural,
            'note': self.note
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Provenance':
        return cls(**data)


@dataclass(frozen=True)
class ProgressionCongruence:
    """
    The claim coeff(A*n + B) = 0 (mod m) for all n >= 0 on one generating function.

    B may be larger than A as printed; `normalized` gives the residue of B
    together with the first index the claim covers in that residue class.
    """
    family: str
    A: int
    B: int
    modulus: int
    provenance: Provenance = field(default_factory=lambda: Provenance("ad hoc"))

    def __post_init__(self):
        if self.A < 1 or self.B < 0:
            raise ValueError(f"Need A >= 1 and B >= 0, got A={self.A}, B={self.B}")
        if self.modulus < 2:
            raise ValueError(f"Modulus must be at least 2, got {self.modulus}")

    @property
    def conjectural(self) -> bool:
        return self.provenance.conjectural

    def normalized(self) -> Tuple[int, int]:
        """(B mod A, B // A)."""
        return self.B % self.A, self.B // self.A

    def position(self, n: int) -> int:
        return self.A * n + self.B

    def instances_below(self, order: int) -> int:
        """Number of n >= 0 with A*n + B < order."""
        return max(0, -(-(order - self.B) // self.A))

    def order_for(self, instances: int) -> int:
        """Smallest order that covers `instances` values of n."""
        return self.A * (instances - 1) + self.B + 1 if instances > 0 else 0

    @property
    def id(self) -> str:
        return f"{self.family}-{self.A}n+{self.B}-mod{self.modulus}"

    def describe(self) -> str:
        return f"{self.family}({self.A}n+{self.B}) = 0 (mod {self.modulus})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'A': self.A,
            'B': self.B,
            'modulus': self.modulus,
            'provenance': self.provenance.to_dict()
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ProgressionCongruence':
        return cls(
            family=data['family'],
            A=data['A'],
            B=data['B'],
            modulus=data['modulus'],
            provenance=Provenance.from_dict(data.get('provenance', {'source': 'ad hoc'}))
        )


@dataclass
class PartitionTable:
    """Coefficient table computed by a combinatorial enumerator."""
    family: str
    values: List[int] = field(default_factory=list)
    method: str = ""

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def to_dict(self) -> Dict[str, Any]:
        return {'family': self.family, 'method': self.method, 'values': list(self.values)}


@dataclass
class RunConfig:
    """Options of one CLI invocation."""
    command: str
    order: Optional[int] = None
    modulus: Optional[int] = None
    primes: List[int] = field(default_factory=lambda: [5, 7, 11, 13])
    alpha_max: int = 2
    jobs: int = 4
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[str] = None
    report_path: Optional[str] = None

    def __post_init__(self):
        if self.order is not None and self.order < 16:
            raise ValueError(f"Order must be at least 16, got {self.order}")
        if not self.primes:
            raise ValueError("Prime set must not be empty")
        if self.alpha_max < 1:
            raise ValueError(f"alpha-max must be at least 1, got {self.alpha_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'order': self.order,
            'modulus': self.modulus,
            'primes': list(self.primes),
            'alpha_max': self.alpha_max,
            'jobs': self.jobs,
            'output_format': self.output_format.value,
            'output_path': self.output_path,
            'report_path': self.report_path
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        data = dict(data)
        data['output_format'] = OutputFormat(data.get('output_format', OutputFormat.TEXT.value))
        return cls(**data)


@dataclass
class VerificationRun:
    """A batch of reports produced by one `verify` invocation."""
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    suite: str = Suite.ALL.value
    reports: List[CheckReport] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)
    created_at: datetime = field(default_factory=datetime.now)

    @property
    def failures(self) -> List[CheckReport]:
        return [r for r in self.reports if not r.passed]

    def exit_code(self) -> int:
        """0 all proven checks pass, 2 only conjectural checks fail, 1 otherwise."""
        failures = self.failures
        if not failures:
            return 0
        if all(r.conjectural and r.verdict is Verdict.COUNTEREXAMPLE for r in failures):
            return 2
        return 1

    def summary(self) -> Dict[str, int]:
        counts = {verdict.value: 0 for verdict in Verdict}
        for report in self.reports:
            counts[report.verdict.value] += 1
        counts['total'] = len(self.reports)
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'suite': self.suite,
            'created_at': self.created_at.isoformat(),
            'config': self.config,
            'summary': self.summary(),
            'reports': [r.to_dict() for r in self.reports]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationRun':
        return cls(
            id=data.get('id', str(uuid.uuid4())),
            suite=data.get('suite', Suite.ALL.value),
            reports=[CheckReport.from_dict(r) for r in data.get('reports', [])],
            config=data.get('config', {}),
            created_at=datetime.fromisoformat(data.get('created_at', datetime.now().isoformat()))
        )
