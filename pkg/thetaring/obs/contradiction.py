from __future__ import annotations

import numpy as np
from dataclasses import dataclass, field
from typing import Dict, List, Optional
from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring as poly_ring

# Import objects
from ..cyc.cyc_mod import CycloRing, CycloElem, zeta_power, multiplicative_order
from ..exc.exc_mod import UniPoly
from ..exc.numbers import require_prime, fermat_theta
from ..exc.padic import PadicResidue
from ..tht.tht_mod import ThetaPoly, ThetaVar, theta
from ..tht.identities import ADDITIVITY_SIGN, product_rule_rhs
from .sums import telescoping_sum, theta_sum_divisibility, rewriting_check

# Import auxiliry functions
from .. import msg
from ..errors import DomainError, InternalConsistencyError, ResourceCapExceeded, VerificationFailure

__all__ = ['ContradictionReport', 'contradiction_report', 'ProductIdentity',
            'p2_product_identity', 'SearchResult', 'p2_quartic_search']

@dataclass
class ContradictionReport:
    """theta(1 + zeta + ... + zeta^{p-1}) = theta(0) = 0 expanded with the
    summation formula gives 0 = p*u(t) + sign*T, where p*u(t) = S(theta(zeta))
    and T is the telescoping sum. T = -1 makes p invertible.
    """
    p: int
    k: int
    zeta_p: CycloElem
    zeta_p_order: Optional[int]
    phi_p_vanishes: bool
    theta_sum_poly: UniPoly
    unit_side: Optional[UniPoly]
    telescoping_sum: CycloElem
    telescoping_sum_in_level_ring: Optional[CycloElem]
    rewriting_steps: int
    sign: int
    p_times_unit: CycloElem
    established: bool
    inconsistencies: List[str] = field(default_factory=list)

    def equation(self) -> str:
        constant = self.telescoping_sum.scale(self.sign)
        return f"0 = {self.p}*({self.unit_side.pretty('t') if self.unit_side is not None else '?'}) + ({constant})"

    def to_dict(self) -> dict:
        level = self.telescoping_sum_in_level_ring
        return {'p': self.p, 'k': self.k, 'zeta_p': self.zeta_p.to_dict(),
                'zeta_p_order': self.zeta_p_order, 'phi_p_vanishes': self.phi_p_vanishes,
                'theta_sum_poly': self.theta_sum_poly.to_list(),
                'unit_side': self.unit_side.to_list() if self.unit_side is not None else None,
                'telescoping_sum': self.telescoping_sum.to_dict(),
                'telescoping_sum_in_level_ring': level.to_dict() if level is not None else None,
                'rewriting_steps': self.rewriting_steps, 'sign': self.sign,
                'equation': self.equation(), 'p_times_unit': self.p_times_unit.to_dict(),
                'established': self.established, 'inconsistencies': self.inconsistencies}

def contradiction_report(p: int, k: int=1, sign: int=ADDITIVITY_SIGN) -> ContradictionReport:
    """Assembles the contradiction for an odd prime p from recomputed pieces.

    For k > 1 the primitive p-th root zeta_p = zeta_{p^k}^{p^{k-1}} is
    extracted first; the sums are evaluated in Z[zeta_p] and again with
    zeta_p inside Z[zeta_{p^k}].
    """
    p = require_prime(p)
    if p == 2:
        msg.templates('even_prime')
        raise DomainError("The contradiction is assembled for odd primes only")
    inconsistencies = []

    level_ring = CycloRing(p, k)
    zeta_p = zeta_power(level_ring, p**(k-1))
    order = multiplicative_order(zeta_p)
    if order != p:
        inconsistencies.append(f"zeta_{p**k}^{p**(k-1)} has order {order}, not {p}")

    phi_value = level_ring.zero()
    power = level_ring.one()
    for __ in range(p):
        phi_value = phi_value + power
        power = power*zeta_p
    phi_p_vanishes = phi_value.is_zero()
    if not phi_p_vanishes:
        inconsistencies.append(f"1 + zeta_p + ... + zeta_p^{p-1} = {phi_value} is not zero")

    # sum_{i=1}^{p-1} theta(zeta^i) = S(theta(zeta))
    poly, divisible = theta_sum_divisibility(p)
    unit_side = poly.exquo_ground(p) if divisible else None
    if not divisible:
        inconsistencies.append(f"S(t) = {poly.pretty('t')} is not divisible by {p}")

    try:
        steps = len(rewriting_check(p))
    except VerificationFailure as e:
        steps = 0
        inconsistencies.append(e.description)

    tele = telescoping_sum(p)
    if not tele.is_constant():
        inconsistencies.append(f"The telescoping sum {tele} is not a constant")
    tele_level = None
    if k > 1:
        tele_level = telescoping_sum(p, zeta=zeta_p)
        if tele_level.coeffs()[0] != tele.coeffs()[0] or not tele_level.is_constant():
            inconsistencies.append(f"The telescoping sum in Z[zeta_{p**k}] is {tele_level}, not {tele}")

    # 0 = p*u + sign*T, so p*u = -sign*T
    p_times_unit = tele.scale(-sign)
    if p_times_unit.divisible_by_p():
        inconsistencies.append(f"p*u = {p_times_unit} is divisible by {p}, no contradiction")

    established = not inconsistencies and tele.is_constant() and abs(tele.coeffs()[0]) == 1
    report = ContradictionReport(p=p, k=k, zeta_p=zeta_p, zeta_p_order=order,
                                 phi_p_vanishes=phi_p_vanishes, theta_sum_poly=poly,
                                 unit_side=unit_side, telescoping_sum=tele,
                                 telescoping_sum_in_level_ring=tele_level,
                                 rewriting_steps=steps, sign=sign,
                                 p_times_unit=p_times_unit, established=established,
                                 inconsistencies=inconsistencies)
    if established:
        msg.plain(f"p={p}, k={k}: {report.equation()}, so {p} is invertible")
    else:
        for text in inconsistencies:
            msg.warning(text)
    return report


@dataclass(frozen=True)
class ProductIdentity:
    """theta(xy) at p=2 specialized to x = y = i, theta(x) = theta(y) = t."""
    theta_xy: str
    specialized: str
    expected: str
    theta_minus_one: int
    holds: bool

    def to_dict(self) -> dict:
        return {'theta_xy': self.theta_xy, 'specialized': self.specialized,
                'expected': self.expected, 'theta_minus_one': self.theta_minus_one,
                'holds': self.holds}

def p2_product_identity() -> ProductIdentity:
    """Derives theta(-1) = -2(theta(i) - theta(i)^2) from the p=2 product rule.

    The symbolic theta(xy) is evaluated in Z[t, z]/(z^2 + 1) with
    x = y = z and x1 = y1 = t.
    """
    x, y = ThetaPoly.var(2, 0), ThetaPoly.var(2, 1)
    rule = theta(x*y)
    if rule != product_rule_rhs(x, y):
        raise VerificationFailure("theta(xy) differs from the product rule at p=2", rule - product_rule_rhs(x, y))

    R, t, z = poly_ring("t,z", ZZ, lex)
    values = {ThetaVar(0, 0): z, ThetaVar(1, 0): z, ThetaVar(0, 1): t, ThetaVar(1, 1): t}
    specialized = rule.evaluate(values, R.zero).rem(z**2 + 1)
    expected = -2*(t - t**2)
    theta_minus_one = int(fermat_theta(-1, 2))
    return ProductIdentity(theta_xy=str(rule), specialized=str(specialized), expected=str(expected),
                           theta_minus_one=theta_minus_one, holds=(specialized == expected))


@dataclass(frozen=True)
class SearchResult:
    N: int
    candidates: int
    solutions: List[Dict[str, int]]
    lhs: int
    lhs_real_parity: int
    lhs_valuation: int
    rhs_all_even: bool
    product_identity: ProductIdentity

    def has_solution(self) -> bool:
        return bool(self.solutions)

    def to_dict(self) -> dict:
        return {'N': self.N, 'candidates': self.candidates, 'solutions': self.solutions,
                'lhs': self.lhs, 'lhs_real_parity': self.lhs_real_parity,
                'lhs_valuation': self.lhs_valuation,
                'rhs_all_even': self.rhs_all_even,
                'product_identity': self.product_identity.to_dict()}

def p2_quartic_search(N: int, cap: int=8) -> SearchResult:
    """Searches all t = a + bi in (Z/2^N)[i] for theta(-1) = -2(t - t^2).

    The right side always has even real and imaginary part while theta(-1)
    = -1 is odd, so no solution exists at any precision.
    """
    if N < 1:
        raise DomainError(f"Precision N must be at least 1, got {N}")
    if N > cap:
        msg.templates('cap')
        raise ResourceCapExceeded(f"Precision N={N} exceeds the search cap of {cap}")
    identity = p2_product_identity()
    if not identity.holds:
        raise VerificationFailure("theta(xy) at x = y = i does not specialize to -2(t - t^2)", identity.specialized)

    modulus = 2**N
    a, b = np.meshgrid(np.arange(modulus, dtype=np.int64), np.arange(modulus, dtype=np.int64), indexing='ij')
    # t - t^2 with i^2 = -1
    real = np.mod(-2*(a - (a*a - b*b)), modulus)
    imag = np.mod(-2*(b - 2*a*b), modulus)
    # theta(-1) read off modulo 2^N from -1 known modulo 2^(N+1)
    target = PadicResidue(2, N + 1, -1).fermat_theta()
    if target != identity.theta_minus_one:
        raise InternalConsistencyError(f"theta(-1) = {target} differs from {identity.theta_minus_one}")
    lhs = target.residue
    hits = np.logical_and(real == lhs, imag == 0)
    solutions = [{'a': int(i), 'b': int(j)} for i, j in zip(*np.nonzero(hits))]
    rhs_all_even = bool(np.all(real % 2 == 0) and np.all(imag % 2 == 0))

    result = SearchResult(N=N, candidates=int(modulus**2), solutions=solutions,
                          lhs=identity.theta_minus_one, lhs_real_parity=lhs % 2,
                          lhs_valuation=target.valuation(),
                          rhs_all_even=rhs_all_even, product_identity=identity)
    msg.plain(f"N={N}: {result.candidates} residues searched, {len(solutions)} solutions")
    return result
