from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple, Union
from sympy import ZZ
from sympy.ntheory import divisors
from sympy.polys.densearith import dup_mul
from sympy.polys.densebasic import dup_strip

# Import objects
from ..exc.exc_mod import UniPoly
from ..exc.numbers import require_prime, units_mod
from ..errors import DomainError

__all__ = ['cyclotomic_polynomial', 'CycloRing', 'CycloElem', 'zeta_power',
            'geometric_unit', 'evaluate', 'is_cyclotomic_root',
            'multiplicative_order', 'is_primitive_image', 'candidate_images']

_SPARSE_FACTOR = 8

@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int, k: int) -> UniPoly:
    """Phi_{p^k}(x) = Phi_p(x^{p^{k-1}}) = sum_{i=0}^{p-1} x^{i p^{k-1}}"""
    p = require_prime(p)
    if k < 1:
        raise DomainError(f"Level k must be at least 1, got {k}")
    m = p**(k-1)
    coeffs = [0]*((p-1)*m + 1)
    for i in range(p):
        coeffs[i*m] = 1
    return UniPoly(coeffs, ZZ)

@dataclass(frozen=True)
class CycloRing:
    """Z[x]/Phi_{p^k}(x), the ring of integers of the p^k-th cyclotomic field."""
    p: int
    k: int

    def __post_init__(self):
        require_prime(self.p)
        if self.k < 1:
            raise DomainError(f"Level k must be at least 1, got {self.k}")

    def degree(self) -> int:
        return self.p**(self.k-1)*(self.p-1)

    def order(self) -> int:
        """Multiplicative order p^k of the generator zeta."""
        return self.p**self.k

    def modulus(self) -> UniPoly:
        return cyclotomic_polynomial(self.p, self.k)

    def zero(self) -> CycloElem:
        return CycloElem(self, [])

    def one(self) -> CycloElem:
        return CycloElem(self, [1])

    def zeta(self) -> CycloElem:
        return zeta_power(self, 1)

    def __str__(self) -> str:
        return f"Z[zeta_{self.order()}] (p={self.p}, k={self.k}, degree {self.degree()})"

def _reduce(ring: CycloRing, coeffs: List[int]) -> List[int]:
    """Canonical representative of sum c_e x^e modulo Phi_{p^k}.

    Exponents are first folded modulo p^k (x^{p^k} = 1). An exponent
    e = (p-1)m + r with 0 <= r < m = p^{k-1} is then rewritten with
    x^{(p-1)m} = -sum_{i=0}^{p-2} x^{im}.
    """
    n, d, m = ring.order(), ring.degree(), ring.p**(ring.k-1)
    folded = [0]*n
    for e, c in enumerate(coeffs):
        if c:
            folded[e % n] += int(c)
    out = folded[:d]
    for r in range(m):
        c = folded[d + r]
        if c:
            for i in range(ring.p - 1):
                out[r + i*m] -= c
    return out

class CycloElem:
    """Element of Z[zeta_{p^k}] on the power basis 1, zeta, ..., zeta^{d-1}.

    The coefficient vector always has length exactly d and is the canonical
    representative of degree < d.
    """

    def __init__(self, ring: CycloRing, coeffs: Iterable[int]) -> None:
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > ring.degree():
            coeffs = _reduce(ring, coeffs)
        self._ring = ring
        self._coeffs = tuple(coeffs + [0]*(ring.degree() - len(coeffs)))

    @classmethod
    def from_poly(cls, ring: CycloRing, poly: UniPoly) -> CycloElem:
        return cls(ring, poly.to_domain(ZZ).coeffs())

    def ring(self) -> CycloRing:
        return self._ring

    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def to_poly(self) -> UniPoly:
        return UniPoly(self._coeffs, ZZ)

    def _other(self, other: Union[CycloElem, int]) -> CycloElem:
        if isinstance(other, CycloElem):
            if other._ring != self._ring:
                raise DomainError(f"Cannot combine elements of {self._ring} and {other._ring}")
            return other
        return CycloElem(self._ring, [int(other)])

    def __add__(self, other) -> CycloElem:
        other = self._other(other)
        return CycloElem(self._ring, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> CycloElem:
        other = self._other(other)
        return CycloElem(self._ring, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __rsub__(self, other) -> CycloElem:
        return self._other(other) - self

    def __neg__(self) -> CycloElem:
        return CycloElem(self._ring, [-a for a in self._coeffs])

    def __mul__(self, other) -> CycloElem:
        other = self._other(other)
        a = [(e, c) for e, c in enumerate(self._coeffs) if c]
        b = [(e, c) for e, c in enumerate(other._coeffs) if c]
        if min(len(a), len(b)) <= _SPARSE_FACTOR:
            # Powers of zeta and binomials like zeta^a - 1 have few terms
            product = [0]*(2*self._ring.degree())
            for e, c in a:
                for f, d in b:
                    product[e + f] += c*d
            return CycloElem(self._ring, _reduce(self._ring, product))
        # sympy wants the leading coefficient first
        f = dup_strip(list(reversed(self._coeffs)))
        g = dup_strip(list(reversed(other._coeffs)))
        product = dup_mul(f, g, ZZ)
        return CycloElem(self._ring, _reduce(self._ring, list(reversed(product))))

    __rmul__ = __mul__

    def scale(self, c: int) -> CycloElem:
        return CycloElem(self._ring, [int(c)*a for a in self._coeffs])

    def __pow__(self, n: int) -> CycloElem:
        if n < 0:
            raise DomainError("Only non-negative powers are supported")
        result, base = self._ring.one(), self
        while n:
            if n & 1:
                result = result*base
            n >>= 1
            if n:
                base = base*base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloElem(self._ring, [other])
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self._ring == other._ring and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._ring, self._coeffs))

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_constant(self) -> bool:
        return not any(self._coeffs[1:])

    def divisible_by_p(self) -> bool:
        """True iff the element lies in p*Z[zeta].

        Z[zeta] is free on the power basis, so this is a coefficientwise test.
        """
        p = self._ring.p
        return all(c % p == 0 for c in self._coeffs)

    def exact_divide_by_p(self) -> CycloElem:
        if not self.divisible_by_p():
            raise DomainError(f"{self} is not divisible by {self._ring.p}")
        p = self._ring.p
        return CycloElem(self._ring, [c // p for c in self._coeffs])

    def to_dict(self) -> dict:
        return {'p': self._ring.p, 'k': self._ring.k,
                'coeffs': [str(c) for c in self._coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> CycloElem:
        ring = CycloRing(int(data['p']), int(data['k']))
        return cls(ring, [int(c) for c in data['coeffs']])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> CycloElem:
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return self.to_poly().pretty('z')

    def __repr__(self) -> str:
        return f"CycloElem(p={self._ring.p}, k={self._ring.k}, {list(self._coeffs)})"


def zeta_power(ring: CycloRing, j: int) -> CycloElem:
    """Canonical representative of zeta^j (j is read modulo p^k)."""
    e = j % ring.order()
    coeffs = [0]*(e + 1)
    coeffs[e] = 1
    return CycloElem(ring, coeffs)

def geometric_unit(ring: CycloRing, j: int) -> CycloElem:
    """1 + zeta + ... + zeta^{j-1}, the algebraic integer (1-zeta^j)/(1-zeta)."""
    if j < 1:
        raise DomainError(f"geometric_unit needs j >= 1, got {j}")
    return CycloElem(ring, [1]*j)

def evaluate(poly: UniPoly, elem: CycloElem) -> CycloElem:
    """poly(elem) computed with Horner's scheme inside the ring of elem."""
    result = elem.ring().zero()
    for c in reversed(poly.to_domain(ZZ).coeffs()):
        result = result*elem + int(c)
    return result

def is_cyclotomic_root(elem: CycloElem, level: int=None) -> bool:
    """True if Phi_{p^level}(elem) = 0 (level defaults to the ring's k).

    Uses Phi_{p^l}(z) = Phi_p(z^{p^{l-1}}), so only one power is taken.
    """
    ring = elem.ring()
    level = ring.k if level is None else level
    w = elem**(ring.p**(level-1))
    total, power = ring.zero(), ring.one()
    for __ in range(ring.p):
        total = total + power
        power = power*w
    return total.is_zero()

def multiplicative_order(elem: CycloElem) -> Optional[int]:
    """Order of elem if it is a root of unity, otherwise None.

    Roots of unity in Z[zeta_{p^k}] have order dividing 2p^k.
    """
    ring = elem.ring()
    for n in divisors(2*ring.order()):
        if elem**n == 1:
            return n
    return None

def is_primitive_image(ring: CycloRing, j: int) -> bool:
    """True if zeta^j is a root of Phi_{p^k} and zeta^{j p^{k-1}} != 1.

    Powers of zeta are evaluated by exponent arithmetic.
    """
    m = ring.p**(ring.k-1)
    phi_value = ring.zero()
    for i in range(ring.p):
        phi_value = phi_value + zeta_power(ring, j*i*m)
    return phi_value.is_zero() and zeta_power(ring, j*m) != 1

def candidate_images(ring: CycloRing) -> List[Tuple[int, bool]]:
    """For every unit j, whether zeta^j is again a primitive p^k-th root.

    This is the step psi(Phi(zeta)) = Phi(psi(zeta)) = 0: the image of zeta
    under a ring endomorphism is a root of Phi_{p^k}, and the roots are
    exactly the zeta^j with gcd(j, p) = 1.
    """
    return [(j, is_primitive_image(ring, j)) for j in units_mod(ring.p, ring.k)]
