from __future__ import annotations

import json
from typing import Any, Iterable, List, Tuple
from sympy import ZZ, QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.densearith import (dup_add, dup_sub, dup_neg, dup_mul,
                                    dup_pow, dup_div, dup_mul_ground)
from sympy.polys.densetools import dup_compose

from ..errors import DomainError, InternalConsistencyError

Scalar = Any

def _unify(K0: Domain, K1: Domain) -> Domain:
    if K0 == QQ or K1 == QQ:
        return QQ
    return ZZ

def _coeff_to_str(c) -> str:
    if hasattr(c, 'denominator') and int(c.denominator) != 1:
        return f"{int(c.numerator)}/{int(c.denominator)}"
    if hasattr(c, 'numerator'):
        return str(int(c.numerator))
    return str(int(c))

def _coeff_from_str(s: str, domain: Domain):
    if '/' in s:
        numerator, denominator = s.split('/')
        return domain.convert(QQ(int(numerator), int(denominator)))
    return domain.convert(int(s))

class UniPoly:
    """Univariate polynomial over ZZ or QQ.

    Coefficients are stored constant term first and never end in a zero,
    so two equal polynomials always have identical coefficient tuples. The
    heavy lifting is done by sympy's dense arithmetic (which expects the
    leading coefficient first), so the order is flipped at the boundary.
    """

    def __init__(self, coeffs: Iterable=(), domain: Domain=ZZ) -> None:
        cs = [domain.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)
        self._domain = domain

    @classmethod
    def x(cls, domain: Domain=ZZ) -> UniPoly:
        return cls([0, 1], domain)

    @classmethod
    def constant(cls, c: Scalar, domain: Domain=ZZ) -> UniPoly:
        return cls([c], domain)

    @classmethod
    def monomial(cls, n: int, c: Scalar=1, domain: Domain=ZZ) -> UniPoly:
        return cls([0]*n + [c], domain)

    @classmethod
    def _from_dup(cls, f: list, domain: Domain) -> UniPoly:
        return cls(reversed(f), domain)

    def _dup(self) -> list:
        return list(reversed(self._coeffs))

    def coeffs(self) -> Tuple:
        return self._coeffs

    def domain(self) -> Domain:
        return self._domain

    def degree(self) -> int:
        """Degree of the polynomial (-1 for the zero polynomial)."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def lc(self):
        if self.is_zero():
            return self._domain.zero
        return self._coeffs[-1]

    def coeff(self, n: int):
        if 0 <= n < len(self._coeffs):
            return self._coeffs[n]
        return self._domain.zero

    def is_integral(self) -> bool:
        """True if every coefficient has denominator 1."""
        if self._domain == ZZ:
            return True
        return all(int(c.denominator) == 1 for c in self._coeffs)

    def to_domain(self, domain: Domain) -> UniPoly:
        if domain == ZZ and not self.is_integral():
            raise DomainError(f"{self} has non-integral coefficients")
        if domain == ZZ and self._domain == QQ:
            return UniPoly([int(c.numerator) for c in self._coeffs], ZZ)
        return UniPoly(self._coeffs, domain)

    def _coerce(self, other) -> Tuple[list, list, Domain]:
        if not isinstance(other, UniPoly):
            fractional = hasattr(other, "denominator") and int(other.denominator) != 1
            other = UniPoly.constant(other, QQ if fractional else self._domain)
        K = _unify(self._domain, other._domain)
        f = [K.convert(c) for c in self._dup()]
        g = [K.convert(c) for c in other._dup()]
        return f, g, K

    def __add__(self, other) -> UniPoly:
        f, g, K = self._coerce(other)
        return UniPoly._from_dup(dup_add(f, g, K), K)

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        f, g, K = self._coerce(other)
        return UniPoly._from_dup(dup_sub(f, g, K), K)

    def __rsub__(self, other) -> UniPoly:
        f, g, K = self._coerce(other)
        return UniPoly._from_dup(dup_sub(g, f, K), K)

    def __neg__(self) -> UniPoly:
        return UniPoly._from_dup(dup_neg(self._dup(), self._domain), self._domain)

    def __mul__(self, other) -> UniPoly:
        f, g, K = self._coerce(other)
        return UniPoly._from_dup(dup_mul(f, g, K), K)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise DomainError("Negative powers of polynomials are not defined")
        return UniPoly._from_dup(dup_pow(self._dup(), int(n), self._domain), self._domain)

    def scale(self, c: Scalar) -> UniPoly:
        K = self._domain
        return UniPoly._from_dup(dup_mul_ground(self._dup(), K.convert(c), K), K)

    def divisible_by(self, c: int) -> bool:
        """True if every coefficient is an integer divisible by c."""
        if not self.is_integral():
            return False
        return all(int(coeff) % c == 0 for coeff in self.to_domain(ZZ).coeffs())

    def exquo_ground(self, c: int) -> UniPoly:
        """Divides every coefficient by c; the division has to be exact."""
        if not self.divisible_by(c):
            raise InternalConsistencyError(f"{self} is not divisible by {c}")
        return UniPoly([int(coeff) // c for coeff in self.to_domain(ZZ).coeffs()], ZZ)

    def compose(self, other: UniPoly) -> UniPoly:
        """self(other(x))"""
        f, g, K = self._coerce(other)
        return UniPoly._from_dup(dup_compose(f, g, K), K)

    def __call__(self, value):
        """Evaluates the polynomial at a scalar (Horner) or composes with a
        UniPoly."""
        if isinstance(value, UniPoly):
            return self.compose(value)
        result = self._domain.zero
        for c in reversed(self._coeffs):
            result = result*value + c
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            if self.degree() <= 0:
                return self.coeff(0) == other
            return False
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(_coeff_to_str(c) for c in self._coeffs))

    def to_list(self) -> List[str]:
        """Decimal strings, constant term first ('p/q' for fractions)."""
        return [_coeff_to_str(c) for c in self._coeffs]

    @classmethod
    def from_list(cls, strings: List[str]) -> UniPoly:
        domain = QQ if any('/' in s for s in strings) else ZZ
        return cls([_coeff_from_str(s, domain) for s in strings], domain)

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text: str) -> UniPoly:
        return cls.from_list(json.loads(text))

    def pretty(self, var: str='x') -> str:
        if self.is_zero():
            return '0'
        terms = []
        for n in range(self.degree(), -1, -1):
            c = self._coeffs[n]
            if not c:
                continue
            text = _coeff_to_str(c)
            sign = '-' if text.startswith('-') else '+'
            text = text.lstrip('-')
            if n == 0:
                body = text
            else:
                power = var if n == 1 else f"{var}^{n}"
                body = power if text == '1' else f"{text}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_list()})"


def poly_divmod(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Division with remainder: a = b*q + r with deg r < deg b.

    The leading coefficient of b has to be a unit of the coefficient ring
    (+1 or -1 over ZZ, anything nonzero over QQ).
    """
    if b.is_zero():
        raise DomainError("Division by the zero polynomial")
    f, g, K = a._coerce(b)
    lc = g[0]
    if K == ZZ and lc not in (K.one, -K.one):
        raise DomainError(f"Leading coefficient {lc} of {b} is not a unit in ZZ")
    q, r = dup_div(f, g, K)
    return UniPoly._from_dup(q, K), UniPoly._from_dup(r, K)
