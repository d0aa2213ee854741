from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Tuple
from sympy import ZZ, Symbol, sympify
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing, PolyElement

# Import objects
from ..exc.exc_mod import UniPoly, poly_divmod
from ..exc.numbers import require_prime

# Import auxiliry functions
from .. import msg
from ..errors import DomainError, InternalConsistencyError

__all__ = ['MultiplicativeFormalGroup', 'p_series', 'formal_group_multiple',
            'TowerPresentation', 'build_tower', 'flatten_tower']

@dataclass(frozen=True)
class MultiplicativeFormalGroup:
    """The formal group law F(x, y) = x + y + xy over Z_p."""
    p: int

    def __post_init__(self):
        require_prime(self.p)

    def law(self, x, y):
        """F(x, y); works for anything with + and * (UniPoly, CycloElem, ints, ...)"""
        return x + y + x*y

    def p_series(self) -> UniPoly:
        """[p](x) = (1+x)^p - 1"""
        return UniPoly([1, 1])**self.p - 1

    def multiple(self, n: int) -> UniPoly:
        """[n](x) by iterating the group law."""
        return formal_group_multiple(self.p, n)

def p_series(p: int, m: int=1) -> UniPoly:
    """[p^m](x), computed as the m-fold composition of [p]."""
    group = MultiplicativeFormalGroup(require_prime(p))
    if m < 1:
        raise DomainError(f"Number of iterations must be at least 1, got {m}")
    base = group.p_series()
    series = UniPoly.x()
    for __ in range(m):
        series = base.compose(series)
    return series

def formal_group_multiple(p: int, n: int) -> UniPoly:
    """[n](x) = F(x, F(x, ... F(x, 0))), checked against (1+x)^n - 1."""
    group = MultiplicativeFormalGroup(require_prime(p))
    if n < 0:
        raise DomainError(f"Only non-negative multiples are supported, got {n}")
    x = UniPoly.x()
    multiple = UniPoly()
    for __ in range(n):
        multiple = group.law(multiple, x)
    if multiple != UniPoly([1, 1])**n - 1:
        raise InternalConsistencyError(f"[{n}](x) from the group law differs from (1+x)^{n} - 1")
    return multiple


@lru_cache(maxsize=32)
def _tower_ring(k: int) -> PolyRing:
    # y_k first so that lex order makes the newest generator the largest
    return PolyRing([Symbol(f"y{m}") for m in range(k, 0, -1)], ZZ, lex)

@dataclass(frozen=True)
class TowerPresentation:
    """A_k = Z_p[y_1, ..., y_k]/(g_1(y_1), ..., g_k(y_k)).

    g_1(y_1) = ((1+y_1)^p - 1)/y_1 and g_m(y_m) = (1+y_m)^p - 1 - y_{m-1}
    for m >= 2, reduced modulo the earlier stages. y_m stands for
    zeta_{p^m} - 1. The leading monomials y_1^{p-1}, y_2^p, ..., y_k^p are
    powers of distinct generators, so normal forms are unique.
    """
    p: int
    k: int
    stages: Tuple[PolyElement, ...] = field(compare=False)

    def ring(self) -> PolyRing:
        return _tower_ring(self.k)

    def gen(self, m: int) -> PolyElement:
        """The generator y_m, 1 <= m <= k."""
        if not 1 <= m <= self.k:
            raise DomainError(f"Generator y_{m} does not exist in a tower of level {self.k}")
        return self.ring().gens[self.k - m]

    def top(self) -> PolyElement:
        return self.gen(self.k)

    def _tail(self, R: PolyRing, m: int) -> Tuple[int, int, List[Tuple[tuple, int]]]:
        """Position of y_m in R, d = deg g_m and the terms of y_m^d - g_m."""
        g = self.stages[m-1].set_ring(R)
        i = R.symbols.index(self.ring().symbols[self.k - m])
        d = g.degree(R.gens[i])
        if d < 1 or g.coeff_wrt(R.gens[i], d) != 1:
            raise DomainError(f"Stage g_{m} = {self.stages[m-1]} is not monic in y_{m}")
        return i, d, [(monom, -c) for monom, c in g.items() if monom[i] < d]

    def reduce(self, f: PolyElement) -> PolyElement:
        """Normal form of f modulo all stage relations.

        g_m is monic in y_m and only involves y_1, ..., y_m, so y_k, ..., y_1
        are reduced in turn, highest powers first. f may live in a larger
        ring, e.g. with x adjoined.
        """
        R = f.ring
        terms = dict(f)
        for m in range(self.k, 0, -1):
            i, d, tail = self._tail(R, m)
            top = max((monom[i] for monom in terms), default=0)
            for e in range(top, d - 1, -1):
                for monom in [monom for monom in terms if monom[i] == e]:
                    c = terms.pop(monom)
                    shift = monom[:i] + (e - d,) + monom[i+1:]
                    for tail_monom, tail_coeff in tail:
                        target = R.monomial_mul(shift, tail_monom)
                        value = terms.get(target, 0) + c*tail_coeff
                        if value:
                            terms[target] = value
                        else:
                            terms.pop(target, None)
        return R.from_dict(terms)

    def stage_degrees(self) -> List[int]:
        return [self.stages[m-1].degree(self.gen(m)) for m in range(1, self.k + 1)]

    def degree(self) -> int:
        """Rank of A_k over Z_p, the product of the stage degrees."""
        rank = 1
        for d in self.stage_degrees():
            rank *= d
        return rank

    def stage_coefficients(self, m: int) -> List[str]:
        """Coefficients of g_m in y_m (constant term first), as expressions in y_1, ..., y_{m-1}."""
        g, y = self.stages[m-1], self.gen(m)
        return [str(g.coeff_wrt(y, e)) for e in range(g.degree(y) + 1)]

    def to_dict(self) -> dict:
        return {'p': self.p, 'k': self.k,
                'stages': [self.stage_coefficients(m) for m in range(1, self.k + 1)]}

    @classmethod
    def from_dict(cls, data: dict) -> TowerPresentation:
        p, k = int(data['p']), int(data['k'])
        R = _tower_ring(k)
        stages = []
        for m, coeffs in enumerate(data['stages'], start=1):
            y = R.gens[k - m]
            stage = R.zero
            for e, text in enumerate(coeffs):
                stage += R.from_expr(sympify(text))*y**e
            stages.append(stage)
        return cls(p=p, k=k, stages=tuple(stages))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> TowerPresentation:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TowerPresentation):
            return NotImplemented
        return (self.p, self.k) == (other.p, other.k) and list(self.stages) == list(other.stages)

    def __hash__(self) -> int:
        return hash((self.p, self.k, tuple(str(g) for g in self.stages)))

    def __str__(self) -> str:
        lines = [f"Tower A_{self.k} at p={self.p}, rank {self.degree()}:"]
        lines += [f"  g_{m} = {g}" for m, g in enumerate(self.stages, start=1)]
        return '\n'.join(lines)

def build_tower(p: int, k: int) -> TowerPresentation:
    p = require_prime(p)
    if k < 1:
        raise DomainError(f"Level k must be at least 1, got {k}")
    R = _tower_ring(k)
    stages = []
    for m in range(1, k + 1):
        y = R.gens[k - m]
        if m == 1:
            q, r = poly_divmod(MultiplicativeFormalGroup(p).p_series(), UniPoly.x())
            if not r.is_zero():
                raise InternalConsistencyError(f"[{p}](y) is not divisible by y")
            stage = R.zero
            for e, c in enumerate(q.coeffs()):
                stage += int(c)*y**e
        else:
            previous = R.gens[k - m + 1]
            stage = (1 + y)**p - 1 - previous
            stage = stage.rem(stages)
        stages.append(stage)
    tower = TowerPresentation(p=p, k=k, stages=tuple(stages))
    msg.plain(str(tower))
    return tower

def flatten_tower(tower: TowerPresentation) -> UniPoly:
    """Single generator presentation f_k(y) of A_k, with y = y_k.

    The lower generators are eliminated through the stages: starting from
    h = g_k, h is replaced by its norm Res_{y_m}(g_m, h) for m = k-1, ..., 1.
    For the tower of build_tower this gives f_k(y) = f_{k-1}([p](y)).
    """
    R = tower.ring()
    h = tower.stages[-1]
    for m in range(tower.k - 1, 0, -1):
        g, y = tower.stages[m-1], tower.gen(m)
        if h.degree(y) < 1:
            h = h**g.degree(y)
            continue
        # resultants eliminate the first generator of the ring
        symbol = R.symbols[tower.k - m]
        E = PolyRing((symbol,) + tuple(s for s in R.symbols if s != symbol), ZZ, lex)
        h = g.set_ring(E).resultant(h.set_ring(E)).set_ring(R)

    coeffs = [0]*(h.degree(tower.top()) + 1)
    for monom, c in h.items():
        if any(monom[1:]):
            raise InternalConsistencyError(f"Eliminating y_1, ..., y_{tower.k - 1} left {h}")
        coeffs[monom[0]] = int(c)
    return UniPoly(coeffs)
