from __future__ import annotations

import numpy as np
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple
from sympy import ZZ, Symbol
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing, PolyElement

# Import objects
from .ltt_mod import TowerPresentation, build_tower, flatten_tower, p_series
from ..cyc.cyc_mod import CycloRing, cyclotomic_polynomial
from ..exc.exc_mod import UniPoly
from ..exc.numbers import require_prime

# Import auxiliry functions
from .. import msg
from ..errors import DomainError, VerificationFailure

__all__ = ['verify_cyclotomic_iso', 'LevelStructure', 'level_pairs',
            'verify_level_homomorphism', 'DivisibilityResult', 'drinfeld_divisibility']

def verify_cyclotomic_iso(p: int, k: int, tower: TowerPresentation=None) -> bool:
    """Checks that A_k is presented by Phi_{p^k}(1+y), y = y_k.

    1) Phi_{p^k}(1+y_k) reduces to zero through the stages. Since
       Phi_{p^k}(w) = Phi_p(w^{p^{k-1}}), the power (1+y_k)^{p^{k-1}} is
       brought down one stage at a time: (1+y_m)^p = 1 + y_{m-1}.
    2) The flattened presentation equals Phi_{p^k}(1+y).
    3) The rank of the tower is deg Phi_{p^k} = p^{k-1}(p-1).
    """
    p = require_prime(p)
    if tower is None:
        tower = build_tower(p, k)

    w = 1 + tower.top()
    for m in range(k, 1, -1):
        w = tower.reduce(w**p)
        expected = tower.reduce(1 + tower.gen(m-1))
        if w != expected:
            raise VerificationFailure(f"(1+y_{m})^{p} does not reduce to 1 + y_{m-1}", w - expected)
    phi_value = tower.ring().zero
    power = tower.ring().one
    for __ in range(p):
        phi_value += power
        power = tower.reduce(power*w)
    residue = tower.reduce(phi_value)
    if residue:
        raise VerificationFailure(f"Phi_{p**k}(1+y_{k}) does not vanish in A_{k}", residue)

    flat = flatten_tower(tower)
    target = cyclotomic_polynomial(p, k).compose(UniPoly([1, 1]))
    if flat != target:
        raise VerificationFailure(f"Flattened tower differs from Phi_{p**k}(1+y)", flat - target)

    rank = CycloRing(p, k).degree()
    if not tower.degree() == flat.degree() == rank:
        raise VerificationFailure(f"Tower rank {tower.degree()} and flattened degree {flat.degree()} differ from {rank}")
    msg.plain(f"A_{k} at p={p} is Z_p[zeta_{p**k}] (rank {rank})")
    return True


class LevelStructure:
    """The level structure phi: Z/p^k -> A_k, a -> (1+y)^a - 1, y the top generator.

    Values are normal forms in the presented ring. The powers w^c of
    w = 1+y are reduced through the stages one factor at a time and cached.
    """
    def __init__(self, p: int, k: int, tower: TowerPresentation=None):
        self.p = require_prime(p)
        self.k = k
        self.tower = tower or build_tower(p, k)
        self.w = 1 + self.tower.top()
        self._powers: List[PolyElement] = [self.tower.ring().one]

    def order(self) -> int:
        return self.p**self.k

    def power(self, c: int) -> PolyElement:
        """Normal form of w^c, c >= 0."""
        if c < 0:
            raise DomainError(f"Only non-negative powers of 1+y_{self.k} are presented, got {c}")
        while len(self._powers) <= c:
            self._powers.append(self.tower.reduce(self._powers[-1]*self.w))
        return self._powers[c]

    def __call__(self, a: int) -> PolyElement:
        return self.power(a % self.order()) - 1

    def law(self, a: int, b: int) -> PolyElement:
        """F(phi(a), phi(b)) in A_k, for a, b in Z/p^k.

        1 + F(phi(a), phi(b)) = (1+phi(a))(1+phi(b)) is the class of
        w^a*w^b = w^(a+b), with a, b taken in 0, ..., p^k - 1 and no
        reduction of the exponent modulo p^k.
        """
        n = self.order()
        return self.power(a % n + b % n) - 1

    def values(self) -> List[PolyElement]:
        return [self(a) for a in range(self.order())]

    def __str__(self) -> str:
        return f"phi: Z/{self.order()} -> A_{self.k}, phi(a) = (1+y)^a - 1"

def level_pairs(n: int, exhaustive_limit: int=128, sample_size: int=400, seed: int=1729) -> Tuple[List[Tuple[int, int]], bool]:
    """All pairs a <= b in Z/n when n <= exhaustive_limit, otherwise a seeded random sample.

    Returns the pairs and whether they are exhaustive.
    """
    if n <= exhaustive_limit:
        return [(a, b) for a in range(n) for b in range(a, n)], True
    rng = np.random.default_rng(seed)
    drawn = rng.integers(0, n, size=(sample_size, 2))
    return [(int(a), int(b)) for a, b in drawn], False

def verify_level_homomorphism(p: int, k: int, exhaustive_limit: int=128, sample_size: int=400,
                              seed: int=1729, level: LevelStructure=None) -> bool:
    """phi(a+b) = F(phi(a), phi(b)) for pairs in Z/p^k, and phi(0) = phi(p^k) = 0."""
    level = level or LevelStructure(p, k)
    n = level.order()
    if level(0) or level.power(n) != level.tower.ring().one:
        msg.warning(f"phi is not well defined on Z/{n}")
        return False
    pairs, exhaustive = level_pairs(n, exhaustive_limit, sample_size, seed)
    for a, b in pairs:
        if level(a + b) != level.law(a, b):
            msg.warning(f"phi({a} + {b}) != F(phi({a}), phi({b})) at p={p}, k={k}")
            return False
    msg.plain(f"p={p}, k={k}: phi is a homomorphism on {len(pairs)} {'(all)' if exhaustive else 'sampled'} pairs")
    return True


@lru_cache(maxsize=8)
def _divisor_ring(k: int) -> PolyRing:
    # x largest so that the divisor is monic of degree p in x
    return PolyRing([Symbol('x')] + [Symbol(f"y{m}") for m in range(k, 0, -1)], ZZ, lex)

@dataclass(frozen=True)
class DivisibilityResult:
    p: int
    k: int
    product: PolyElement
    quotient: PolyElement
    remainder: PolyElement

    def holds(self) -> bool:
        return self.quotient == 1 and not self.remainder

    def to_dict(self) -> dict:
        return {'p': self.p, 'k': self.k, 'product': str(self.product),
                'quotient': str(self.quotient), 'remainder': str(self.remainder)}

def drinfeld_divisibility(p: int, k: int, tower: TowerPresentation=None) -> DivisibilityResult:
    """Divides [p](x) by prod_{a in p^{k-1}Z/p^k} (x - phi(a)).

    Coefficients live in the presented ring A_k[x], reduced through the
    stages of the tower. At height 1 the product is [p](x) itself:
    quotient 1, remainder 0.
    """
    p = require_prime(p)
    tower = tower or build_tower(p, k)
    R = _divisor_ring(tower.k)
    x = R.gens[0]

    # phi(c p^{k-1}) = u^c - 1 with u = (1+y_k)^{p^{k-1}}
    u = tower.reduce((1 + tower.top())**(p**(tower.k - 1))).set_ring(R)
    product, unit = R.one, R.one
    for __ in range(p):
        product = tower.reduce(product*(x - (unit - 1)))
        unit = tower.reduce(unit*u)
    if product.degree(x) != p or product.coeff_wrt(x, p) != 1:
        raise DomainError(f"The torsion divisor {product} is not monic of degree {p} in x")

    series = R.zero
    for e, c in enumerate(p_series(p).coeffs()):
        series += int(c)*x**e
    q, r = series.div(product)
    result = DivisibilityResult(p=p, k=tower.k, product=product, quotient=tower.reduce(q),
                                remainder=tower.reduce(r))
    msg.plain(f"p={p}, k={tower.k}: [p](x) = ({result.quotient})*(torsion divisor) + ({result.remainder})")
    return result
