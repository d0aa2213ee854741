from __future__ import annotations

from typing import List, Optional, Tuple
from sympy import ZZ

# Import objects
from ..exc.exc_mod import UniPoly
from ..exc.numbers import require_prime, binomial, divided_binomial
from ..cyc.cyc_mod import CycloRing, CycloElem, geometric_unit, zeta_power
from ..tht.tht_mod import ThetaPoly, ThetaVar, theta

# Import auxiliry functions
from .. import msg
from ..errors import InternalConsistencyError, VerificationFailure

__all__ = ['telescoping_sum', 'rewriting_check', 'theta_sum_divisibility',
            'theta_sum_double_sum']

def _geometric_units(zeta: CycloElem, count: int) -> List[CycloElem]:
    """[G_1, ..., G_count] with G_j = 1 + zeta + ... + zeta^{j-1}"""
    units, power, total = [], zeta.ring().one(), zeta.ring().zero()
    for __ in range(count):
        total = total + power
        units.append(total)
        power = power*zeta
    return units

def telescoping_sum(p: int, zeta: Optional[CycloElem]=None) -> CycloElem:
    """sum_{i=1}^{p-1} C(p,i)/p sum_{j=1}^{p-1} zeta^{j(p-i)} G_j^i.

    zeta defaults to the generator of Z[zeta_p]. Any primitive p-th root of
    unity can be passed instead, e.g. zeta_{p^k}^{p^{k-1}} in Z[zeta_{p^k}].
    """
    p = require_prime(p)
    if zeta is None:
        ring = CycloRing(p, 1)
        zeta = ring.zeta()
        units = [geometric_unit(ring, j) for j in range(1, p)]
    else:
        units = _geometric_units(zeta, p - 1)
    ring = zeta.ring()

    zeta_powers = [ring.one()]
    for __ in range(p - 1):
        zeta_powers.append(zeta_powers[-1]*zeta)

    total = ring.zero()
    for j, unit in enumerate(units, start=1):
        # Powers G_j^i built up one factor at a time
        unit_power = ring.one()
        for i in range(1, p):
            unit_power = unit_power*unit
            total = total + (zeta_powers[j*(p-i) % p]*unit_power).scale(int(divided_binomial(p, i)))
    return total

def rewriting_check(p: int) -> List[dict]:
    """Checks for j = 1, ..., p-1 in Z[zeta_p] that

    zeta^j + G_j = G_{j+1}, and
    sum_{i=1}^{p-1} C(p,i) zeta^{j(p-i)} G_j^i = G_{j+1}^p - 1 - G_j^p,

    the rewriting that turns the double sum into a telescoping one.
    """
    p = require_prime(p)
    ring = CycloRing(p, 1)
    records = []
    for j in range(1, p):
        zj, unit, next_unit = zeta_power(ring, j), geometric_unit(ring, j), geometric_unit(ring, j + 1)
        if zj + unit != next_unit:
            raise VerificationFailure(f"zeta^{j} + G_{j} != G_{j+1} at p={p}", zj + unit - next_unit)
        lhs = ring.zero()
        for i in range(1, p):
            lhs = lhs + (zeta_power(ring, j*(p-i))*unit**i).scale(int(binomial(p, i)))
        rhs = next_unit**p - 1 - unit**p
        if lhs != rhs:
            raise VerificationFailure(f"Binomial rewriting fails for j={j} at p={p}", lhs - rhs)
        records.append({'j': j, 'binomial_sum': rhs.to_dict()})
    return records

def _theta_sum_from_calculus(p: int) -> UniPoly:
    """sum_{i=1}^{p-1} theta(x^i) in the free theta-ring, with x -> 1 and
    theta(x) -> t. Every power of x in theta(x^i) is a multiple of p, so this
    is the substitution zeta^p = 1, theta(zeta) = t."""
    x = ThetaPoly.var(p, 0)
    values = {ThetaVar(0, 0): UniPoly.constant(1), ThetaVar(0, 1): UniPoly.x()}
    total = UniPoly()
    for i in range(1, p):
        total = total + theta(x**i).evaluate(values, UniPoly())
    return total

def theta_sum_divisibility(p: int) -> Tuple[UniPoly, bool]:
    """S(t) = sum_{i=1}^{p-1} ((1+pt)^i - 1)/p and whether p divides every coefficient."""
    p = require_prime(p)
    base = UniPoly([1, p])
    direct = UniPoly()
    for i in range(1, p):
        direct = direct + (base**i - 1).exquo_ground(p)
    from_calculus = _theta_sum_from_calculus(p)
    if direct != from_calculus:
        raise InternalConsistencyError(f"S(t) from theta(x^i) ({from_calculus}) differs from the closed form ({direct}) at p={p}")
    divisible = direct.divisible_by(p)
    msg.plain(f"p={p}: S(t) = {direct.pretty('t')}, divisible by {p}: {divisible}")
    return direct, divisible

def theta_sum_double_sum(p: int) -> UniPoly:
    """sum_{i=1}^{p-1} sum_{k=1}^{i} C(i,k) p^{k-1} t^k"""
    p = require_prime(p)
    coeffs = [ZZ(0)]*p
    for i in range(1, p):
        for k in range(1, i + 1):
            coeffs[k] += binomial(i, k)*ZZ(p)**(k-1)
    return UniPoly(coeffs, ZZ)
