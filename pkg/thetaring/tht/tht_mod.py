from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Tuple
from sympy import QQ, Symbol
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing, PolyElement

from ..exc.numbers import require_prime
from ..errors import DomainError, ResourceCapExceeded, InternalConsistencyError

__all__ = ['ThetaVar', 'ThetaPoly', 'psi', 'theta', 'MONOMIAL_CAP']

MONOMIAL_CAP = 10**6

_BASE_NAMES = ['x', 'y', 'z', 'w']

@dataclass(frozen=True, order=True)
class ThetaVar:
    """The atom x_{g,i}: generator g after i applications of theta.

    Atoms are ordered by (g, i); this is the canonical term order.
    """
    g: int
    i: int = 0

    def __post_init__(self):
        if self.g < 0 or self.i < 0:
            raise DomainError(f"ThetaVar needs g >= 0 and i >= 0, got ({self.g}, {self.i})")

    def successor(self) -> ThetaVar:
        """theta(x_{g,i}) = x_{g,i+1}"""
        return ThetaVar(self.g, self.i + 1)

    def symbol(self) -> Symbol:
        return Symbol(f"x{self.g}_{self.i}")

    def __str__(self) -> str:
        base = _BASE_NAMES[self.g] if self.g < len(_BASE_NAMES) else f"u{self.g}"
        if self.i == 0:
            return base
        return f"{base}{self.i}"

@lru_cache(maxsize=256)
def _ring(atoms: Tuple[ThetaVar, ...]) -> PolyRing:
    return PolyRing([a.symbol() for a in atoms], QQ, lex)

def _lift(poly: PolyElement, old: Tuple[ThetaVar, ...], new: Tuple[ThetaVar, ...]) -> PolyElement:
    """Moves poly from the ring on the atoms old to the ring on new (old is a subset)."""
    ring = _ring(new)
    if old == new:
        return poly
    position = [new.index(a) for a in old]
    terms = {}
    for monom, coeff in poly.items():
        exps = [0]*len(new)
        for idx, e in zip(position, monom):
            exps[idx] = e
        terms[tuple(exps)] = coeff
    return ring.from_dict(terms)

def _atoms(atoms: Iterable[ThetaVar]) -> Tuple[ThetaVar, ...]:
    # x_{0,0} is always present so that constants live in a ring with a generator
    return tuple(sorted(set(atoms) | {ThetaVar(0, 0)}))

class ThetaPoly:
    """Element of the free theta-ring Q[x_{g,i}] at the prime p.

    Backed by a sympy sparse polynomial over QQ in lex order on the atoms.
    The integral elements (all denominators 1) form the free theta-ring
    Z_(p)[x_{g,i}]; theta of an integral element is again integral.
    Every operation checks the number of monomials against the cap and
    raises ResourceCapExceeded beyond it.
    """

    def __init__(self, p: int, atoms: Iterable[ThetaVar], poly: PolyElement, cap: int=MONOMIAL_CAP) -> None:
        self._p = require_prime(p)
        self._atoms = _atoms(atoms)
        self._cap = cap
        if poly.ring != _ring(self._atoms):
            raise DomainError("Polynomial does not live in the ring of the given atoms")
        self._poly = poly
        if len(poly) > cap:
            raise ResourceCapExceeded(f"ThetaPoly with {len(poly)} monomials exceeds the cap of {cap}")

    @classmethod
    def var(cls, p: int, g: int, i: int=0, cap: int=MONOMIAL_CAP) -> ThetaPoly:
        atoms = _atoms([ThetaVar(g, i)])
        ring = _ring(atoms)
        return cls(p, atoms, ring.gens[atoms.index(ThetaVar(g, i))], cap)

    @classmethod
    def constant(cls, p: int, c, cap: int=MONOMIAL_CAP) -> ThetaPoly:
        atoms = _atoms([])
        return cls(p, atoms, _ring(atoms)(QQ.convert(c)), cap)

    @classmethod
    def from_terms(cls, p: int, terms: Dict[Tuple[Tuple[ThetaVar, int], ...], Any], cap: int=MONOMIAL_CAP) -> ThetaPoly:
        """Builds a polynomial from {((atom, exponent), ...): coefficient}."""
        atoms = _atoms(a for monomial in terms for a, __ in monomial)
        ring = _ring(atoms)
        poly = ring.zero
        for monomial, coeff in terms.items():
            exps = [0]*len(atoms)
            for a, e in monomial:
                exps[atoms.index(a)] += int(e)
            poly += ring.from_dict({tuple(exps): QQ.convert(coeff)})
        return cls(p, atoms, poly, cap)

    def p(self) -> int:
        return self._p

    def cap(self) -> int:
        return self._cap

    def atoms(self) -> Tuple[ThetaVar, ...]:
        return self._atoms

    def poly(self) -> PolyElement:
        return self._poly

    def monomial_count(self) -> int:
        return len(self._poly)

    def is_zero(self) -> bool:
        return not self._poly

    def is_integral(self) -> bool:
        return all(int(c.denominator) == 1 for c in self._poly.values())

    def terms(self) -> List[Tuple[Tuple[Tuple[ThetaVar, int], ...], Any]]:
        """Sorted list of (((atom, exponent), ...), coefficient)."""
        out = []
        for monom, coeff in self._poly.items():
            monomial = tuple((a, e) for a, e in zip(self._atoms, monom) if e)
            out.append((monomial, coeff))
        return sorted(out, key=lambda term: [(a.g, a.i, e) for a, e in term[0]])

    def _new(self, atoms, poly, cap=None) -> ThetaPoly:
        return ThetaPoly(self._p, atoms, poly, cap or self._cap)

    def _unify(self, other) -> Tuple[Tuple[ThetaVar, ...], PolyElement, PolyElement, int]:
        if not isinstance(other, ThetaPoly):
            other = ThetaPoly.constant(self._p, other, self._cap)
        if other._p != self._p:
            raise DomainError(f"Cannot combine theta-rings at p={self._p} and p={other._p}")
        atoms = _atoms(self._atoms + other._atoms)
        cap = min(self._cap, other._cap)
        return atoms, _lift(self._poly, self._atoms, atoms), _lift(other._poly, other._atoms, atoms), cap

    def __add__(self, other) -> ThetaPoly:
        atoms, f, g, cap = self._unify(other)
        return self._new(atoms, f + g, cap)

    __radd__ = __add__

    def __sub__(self, other) -> ThetaPoly:
        atoms, f, g, cap = self._unify(other)
        return self._new(atoms, f - g, cap)

    def __rsub__(self, other) -> ThetaPoly:
        atoms, f, g, cap = self._unify(other)
        return self._new(atoms, g - f, cap)

    def __neg__(self) -> ThetaPoly:
        return self._new(self._atoms, -self._poly)

    def __mul__(self, other) -> ThetaPoly:
        atoms, f, g, cap = self._unify(other)
        return self._new(atoms, f*g, cap)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ThetaPoly:
        if n < 0:
            raise DomainError("Negative powers are not defined in a theta-ring")
        result = self._new(self._atoms, self._poly.ring.one)
        base = self
        while n:
            if n & 1:
                result = result*base
            n >>= 1
            if n:
                base = base*base
        return result

    def scale(self, c) -> ThetaPoly:
        return self._new(self._atoms, self._poly*QQ.convert(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ThetaPoly, int)):
            return NotImplemented
        atoms, f, g, __ = self._unify(other)
        return f == g

    def __hash__(self) -> int:
        return hash(json.dumps(self.to_list(), sort_keys=True))

    def evaluate(self, values: Dict[ThetaVar, Any], zero: Any) -> Any:
        """Substitutes values for the atoms; coefficients must be integral.

        values can live in any commutative ring with integer scaling (UniPoly,
        CycloElem, sympy PolyElement over ZZ, ...). Atoms not in values must
        not occur.
        """
        if not self.is_integral():
            raise DomainError("Only integral theta-polynomials can be evaluated")
        total = zero
        for monomial, coeff in self.terms():
            term = None
            for a, e in monomial:
                if a not in values:
                    raise DomainError(f"No value given for the atom {a}")
                factor = values[a]**e
                term = factor if term is None else term*factor
            value = int(coeff.numerator)
            total = total + (value if term is None else term*value)
        return total

    def to_list(self) -> List[dict]:
        out = []
        for monomial, coeff in self.terms():
            text = str(int(coeff.numerator))
            if int(coeff.denominator) != 1:
                text += f"/{int(coeff.denominator)}"
            out.append({'monomial': [[a.g, a.i, int(e)] for a, e in monomial], 'coeff': text})
        return out

    @classmethod
    def from_list(cls, p: int, data: List[dict], cap: int=MONOMIAL_CAP) -> ThetaPoly:
        terms = {}
        for entry in data:
            monomial = tuple((ThetaVar(g, i), e) for g, i, e in entry['monomial'])
            numerator, __, denominator = entry['coeff'].partition('/')
            terms[monomial] = QQ(int(numerator), int(denominator or 1))
        return cls.from_terms(p, terms, cap)

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, p: int, text: str, cap: int=MONOMIAL_CAP) -> ThetaPoly:
        return cls.from_list(p, json.loads(text), cap)

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        pieces = []
        for monomial, coeff in reversed(self.terms()):
            factors = '*'.join(str(a) if e == 1 else f"{a}^{e}" for a, e in monomial)
            c = str(coeff)
            if not factors:
                pieces.append(c)
            elif c == '1':
                pieces.append(factors)
            elif c == '-1':
                pieces.append(f"-{factors}")
            else:
                pieces.append(f"{c}*{factors}")
        return ' + '.join(pieces).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f"ThetaPoly(p={self._p}, {self})"


def psi(f: ThetaPoly) -> ThetaPoly:
    """The Frobenius lift: the ring homomorphism fixing constants with
    psi(x_{g,i}) = x_{g,i}^p + p x_{g,i+1}.
    """
    p = f.p()
    old = f.atoms()
    atoms = _atoms(old + tuple(a.successor() for a in old))
    ring = _ring(atoms)
    images = [ring.gens[atoms.index(a)]**p + p*ring.gens[atoms.index(a.successor())] for a in old]
    powers: Dict[Tuple[int, int], PolyElement] = {}

    result = ring.zero
    for monom, coeff in f.poly().items():
        term = ring(coeff)
        for idx, e in enumerate(monom):
            if e:
                if (idx, e) not in powers:
                    powers[(idx, e)] = images[idx]**e
                term = term*powers[(idx, e)]
        result += term
        if len(result) > f.cap():
            raise ResourceCapExceeded(f"psi exceeded the cap of {f.cap()} monomials")
    return ThetaPoly(p, atoms, result, f.cap())

def theta(f: ThetaPoly) -> ThetaPoly:
    """theta(f) = (psi(f) - f^p)/p.

    For integral f the division is exact; anything else is an internal
    inconsistency of the engine.
    """
    p = f.p()
    result = (psi(f) - f**p).scale(QQ(1, p))
    if f.is_integral() and not result.is_integral():
        raise InternalConsistencyError(f"theta({f}) is not integral")
    return result
