from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Any, Callable, List, Optional, Tuple

from .exc.numbers import parse_primes
from .tht.identities import ADDITIVITY_SIGN
from .aux_funcs import run_check, PASS, FAIL, SKIPPED
from .errors import DomainError
from . import file_module

COMMANDS = ['identities', 'obstruction', 'sum', 'tower', 'all']
FORMATS = ['text', 'json']

_POSITIVE = ['max_level', 'summands', 'theta_power_max', 'precision', 'precision_cap',
             'monomial_cap', 'exhaustive_limit', 'sample_size', 'property_degree',
             'property_generators']

@dataclass
class RunConfig:
    command: str
    primes: List[int]
    max_level: int
    summands: int
    theta_power_max: int
    precision: int
    precision_cap: int
    monomial_cap: int
    format: str
    seed: int
    exhaustive_limit: int
    sample_size: int
    property_cases: int
    property_degree: int
    property_generators: int
    folder: str = ''
    filename: str = ''
    dateformat: str = '%Y%m%dT%H%M'
    flip_sign: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"Unknown command '{self.command}'. Choose from {COMMANDS}")
        self.primes = parse_primes(self.primes)
        for key in _POSITIVE:
            if int(getattr(self, key)) < 1:
                raise DomainError(f"{key} has to be positive, got {getattr(self, key)}")
        if self.property_cases < 0:
            raise DomainError(f"property_cases can't be negative, got {self.property_cases}")
        if self.format not in FORMATS:
            raise DomainError(f"Unknown format '{self.format}'. Choose from {FORMATS}")

    @classmethod
    def from_defaults(cls, command: str, defaults_file: str=None, **overrides) -> RunConfig:
        """Values given in overrides (None means not given) win over the
        command section of the defaults, which wins over RunConfig."""
        defaults = file_module.load_defaults(defaults_file)
        fallback = defaults['RunConfig']
        values = {}
        for key in fallback.keys():
            given = overrides.get(key)
            values[key] = given if given is not None else file_module.get_default_value(key, command, defaults, fallback)
        return cls(command=command, flip_sign=bool(overrides.get('flip_sign')),
                    out=overrides.get('out'), **values)

    def sign(self) -> int:
        """The additivity sign used by the checks; flipped for the negative control."""
        return -ADDITIVITY_SIGN if self.flip_sign else ADDITIVITY_SIGN

    def to_dict(self) -> dict:
        return asdict(self)

@dataclass
class CheckRecord:
    name: str
    parameters: dict
    status: str
    detail: Any
    wall_time: float

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> CheckRecord:
        return cls(name=data['name'], parameters=dict(data['parameters']), status=data['status'],
                    detail=data['detail'], wall_time=float(data['wall_time']))

    @classmethod
    def run(cls, name: str, parameters: dict, check: Callable[[], Tuple[bool, Any]]) -> CheckRecord:
        status, detail, seconds = run_check(name, parameters, check)
        return cls(name=name, parameters=parameters, status=status, detail=detail, wall_time=seconds)

@dataclass
class SuiteReport:
    command: str
    config: dict
    records: List[CheckRecord] = field(default_factory=list)

    def failed(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def skipped(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status == SKIPPED]

    def passed(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status == PASS]

    def exit_code(self) -> int:
        """0 if nothing failed, 1 otherwise. Skipped checks don't count as failures."""
        return 1 if self.failed() else 0

    def to_dict(self) -> dict:
        return {'command': self.command, 'config': self.config,
                'records': [r.to_dict() for r in self.records],
                'summary': {'pass': len(self.passed()), 'fail': len(self.failed()),
                            'skipped': len(self.skipped()), 'exit_code': self.exit_code()}}

    @classmethod
    def from_dict(cls, data: dict) -> SuiteReport:
        return cls(command=data['command'], config=dict(data['config']),
                    records=[CheckRecord.from_dict(r) for r in data['records']])
