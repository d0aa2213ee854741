from __future__ import annotations

from dataclasses import dataclass
from typing import Union
from sympy.ntheory import multiplicity

from .numbers import require_prime
from ..errors import DomainError

@dataclass(frozen=True)
class PadicResidue:
    """An element of Z_p known modulo p^N.

    Arithmetic is only defined between residues with the same (p, N); mixing
    precisions raises a DomainError instead of silently truncating.
    Plain integers are lifted into the residue's context.
    """
    p: int
    N: int
    residue: int

    def __post_init__(self):
        require_prime(self.p)
        if self.N < 1:
            raise DomainError(f"Precision N must be at least 1, got {self.N}")
        object.__setattr__(self, 'residue', int(self.residue) % self.modulus())

    def modulus(self) -> int:
        return self.p**self.N

    def _other(self, other: Union[PadicResidue, int]) -> PadicResidue:
        if isinstance(other, PadicResidue):
            if (other.p, other.N) != (self.p, self.N):
                raise DomainError(f"Cannot mix Z/{self.p}^{self.N} and Z/{other.p}^{other.N}")
            return other
        return PadicResidue(self.p, self.N, int(other))

    def __add__(self, other) -> PadicResidue:
        return PadicResidue(self.p, self.N, self.residue + self._other(other).residue)

    __radd__ = __add__

    def __sub__(self, other) -> PadicResidue:
        return PadicResidue(self.p, self.N, self.residue - self._other(other).residue)

    def __rsub__(self, other) -> PadicResidue:
        return PadicResidue(self.p, self.N, self._other(other).residue - self.residue)

    def __neg__(self) -> PadicResidue:
        return PadicResidue(self.p, self.N, -self.residue)

    def __mul__(self, other) -> PadicResidue:
        return PadicResidue(self.p, self.N, self.residue * self._other(other).residue)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PadicResidue:
        if n < 0:
            return self.inverse()**(-n)
        return PadicResidue(self.p, self.N, pow(self.residue, n, self.modulus()))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.residue == other % self.modulus()
        if not isinstance(other, PadicResidue):
            return NotImplemented
        return (self.p, self.N, self.residue) == (other.p, other.N, other.residue)

    def __hash__(self) -> int:
        return hash((self.p, self.N, self.residue))

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def inverse(self) -> PadicResidue:
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit")
        return PadicResidue(self.p, self.N, pow(self.residue, -1, self.modulus()))

    def valuation(self) -> int:
        """p-adic valuation of the residue; N for the zero residue."""
        return self.N if self.residue == 0 else multiplicity(self.p, self.residue)

    def fermat_theta(self) -> PadicResidue:
        """theta(c) = (c - c^p)/p for the identity Frobenius lift on Z_p.

        If c is known modulo p^N then c^p is known modulo p^(N+1), so the
        quotient is well defined modulo p^(N-1).
        """
        if self.N < 2:
            raise DomainError("theta loses one digit of precision, N must be at least 2")
        c = self.residue
        return PadicResidue(self.p, self.N - 1, (c - c**self.p) // self.p)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.p}^{self.N}"
