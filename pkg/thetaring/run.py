from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Callable, List, Tuple

from .report import RunConfig, SuiteReport, CheckRecord
from .tht.identities import identity_checks
from .obs import (obstruction_report, telescoping_sum, rewriting_check, theta_sum_divisibility,
                  theta_sum_double_sum, contradiction_report, p2_quartic_search)
from .ltt import (build_tower, flatten_tower, verify_cyclotomic_iso, drinfeld_divisibility,
                  verify_level_homomorphism, p_series, MultiplicativeFormalGroup)
from . import msg

Check = Tuple[str, dict, Callable[[], Tuple[bool, Any]]]

class Suite(ABC):
    """A Suite collects the checks of one command and runs them in order.

    Checks are run sequentially and the records keep the order in which
    the checks are listed.
    """
    @abstractmethod
    def _command(self) -> str:
        pass

    @abstractmethod
    def checks(self, config: RunConfig) -> List[Check]:
        return

    def __call__(self, config: RunConfig) -> SuiteReport:
        checks = self.checks(config)
        msg.header(self, f"Running {len(checks)} checks for primes {config.primes}")
        report = SuiteReport(command=self._command(), config=config.to_dict())
        for name, parameters, check in checks:
            report.records.append(CheckRecord.run(name, parameters, check))
        msg.info(f"{len(report.passed())} passed, {len(report.failed())} failed, {len(report.skipped())} skipped")
        return report

    @abstractmethod
    def __str__(self) -> str:
        pass

class IdentitiesSuite(Suite):
    def _command(self) -> str:
        return 'identities'

    def checks(self, config: RunConfig) -> List[Check]:
        checks = []
        for p in config.primes:
            for check in identity_checks(p, config.theta_power_max, config.summands,
                                         config.property_cases, config.seed + p,
                                         config.property_generators, config.property_degree,
                                         cap=config.monomial_cap, sign=config.sign()):
                checks.append((check.name(), check.parameters(), lambda check=check: (True, check())))
        return checks

    def __str__(self) -> str:
        return 'Checking the theta-calculus identities on the free theta-ring.'

def _obstruction(p: int, k: int) -> Tuple[bool, Any]:
    report = obstruction_report(p, k)
    primitive = all(v.image_is_primitive_root for v in report.verdicts)
    if report.informational:
        # Z[zeta_2] = Z carries a theta-structure, nothing to obstruct
        return primitive, report.to_dict()
    return primitive and not report.failing(), report.to_dict()

def _sum(p: int) -> Tuple[bool, Any]:
    total = telescoping_sum(p)
    return total == -1, {'telescoping_sum': total.to_dict()}

def _rewriting(p: int) -> Tuple[bool, Any]:
    return True, {'steps': rewriting_check(p)}

def _theta_sum(p: int) -> Tuple[bool, Any]:
    poly, divisible = theta_sum_divisibility(p)
    double = theta_sum_double_sum(p)
    # p divides S(t) exactly for odd p
    passed = (divisible == (p % 2 == 1)) and double == poly
    return passed, {'S': poly.to_list(), 'double_sum': double.to_list(), 'divisible': divisible}

def _contradiction(p: int, k: int, sign: int) -> Tuple[bool, Any]:
    report = contradiction_report(p, k, sign)
    return report.established, report.to_dict()

def _p2_search(N: int, cap: int) -> Tuple[bool, Any]:
    result = p2_quartic_search(N, cap)
    passed = not result.has_solution() and result.rhs_all_even and result.lhs_real_parity == 1
    return passed, result.to_dict()

class SumSuite(Suite):
    def _command(self) -> str:
        return 'sum'

    def checks(self, config: RunConfig) -> List[Check]:
        checks = []
        for p in config.primes:
            checks.append(('TelescopingSum', {'p': p}, lambda p=p: _sum(p)))
            checks.append(('Rewriting', {'p': p}, lambda p=p: _rewriting(p)))
        return checks

    def __str__(self) -> str:
        return 'Evaluating the telescoping sum in Z[zeta_p].'

class ObstructionSuite(Suite):
    def _command(self) -> str:
        return 'obstruction'

    def checks(self, config: RunConfig) -> List[Check]:
        checks = []
        for p in config.primes:
            for k in range(1, config.max_level + 1):
                checks.append(('RootOfUnityObstruction', {'p': p, 'k': k}, lambda p=p, k=k: _obstruction(p, k)))
            checks.append(('TelescopingSum', {'p': p}, lambda p=p: _sum(p)))
            checks.append(('ThetaSum', {'p': p}, lambda p=p: _theta_sum(p)))
            if p == 2:
                for N in range(1, config.precision + 1):
                    checks.append(('QuarticSearch', {'p': 2, 'N': N},
                                   lambda N=N: _p2_search(N, config.precision_cap)))
            else:
                for k in range(1, config.max_level + 1):
                    checks.append(('Contradiction', {'p': p, 'k': k},
                                   lambda p=p, k=k: _contradiction(p, k, config.sign())))
        return checks

    def __str__(self) -> str:
        return 'Showing that zeta_{p^k} can not carry a theta-structure.'

def _tower(p: int, k: int) -> Tuple[bool, Any]:
    tower = build_tower(p, k)
    flat = flatten_tower(tower)
    return tower.degree() == flat.degree(), {'tower': tower.to_dict(), 'flattened': flat.to_list()}

def _p_series(p: int, k: int) -> Tuple[bool, Any]:
    group = MultiplicativeFormalGroup(p)
    series = p_series(p, k)
    passed = series == group.multiple(p**k) and p_series(p) == group.p_series()
    return passed, {'degree': series.degree()}

class TowerSuite(Suite):
    def _command(self) -> str:
        return 'tower'

    def checks(self, config: RunConfig) -> List[Check]:
        checks = []
        for p in config.primes:
            for k in range(1, config.max_level + 1):
                params = {'p': p, 'k': k}
                checks.append(('Tower', params, lambda p=p, k=k: _tower(p, k)))
                checks.append(('PSeries', params, lambda p=p, k=k: _p_series(p, k)))
                checks.append(('CyclotomicIso', params,
                               lambda p=p, k=k: (verify_cyclotomic_iso(p, k), {'rank': (p - 1)*p**(k-1)})))
                checks.append(('TorsionDivisor', params, lambda p=p, k=k: _divisor(p, k)))
                checks.append(('LevelHomomorphism', params,
                               lambda p=p, k=k: (verify_level_homomorphism(p, k, config.exhaustive_limit,
                                                                           config.sample_size, config.seed),
                                                 {'order': p**k})))
        return checks

    def __str__(self) -> str:
        return 'Building the Lubin-Tate tower of the multiplicative formal group.'

def _divisor(p: int, k: int) -> Tuple[bool, Any]:
    result = drinfeld_divisibility(p, k)
    return result.holds(), result.to_dict()

class AllSuite(Suite):
    """identities, obstruction and tower after each other in one report."""
    def _command(self) -> str:
        return 'all'

    def checks(self, config: RunConfig) -> List[Check]:
        checks = []
        for suite in (IdentitiesSuite(), ObstructionSuite(), TowerSuite()):
            checks += suite.checks(config)
        return checks

    def __str__(self) -> str:
        return 'Running every check.'

SUITES = {'identities': IdentitiesSuite, 'obstruction': ObstructionSuite,
          'sum': SumSuite, 'tower': TowerSuite, 'all': AllSuite}
