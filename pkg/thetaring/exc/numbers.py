from __future__ import annotations

from typing import List
from scipy.special import comb
from sympy import ZZ
from sympy.ntheory import isprime

from ..errors import DomainError, InternalConsistencyError

__all__ = ['require_prime', 'binomial', 'divided_binomial', 'fermat_theta',
            'units_mod', 'parse_primes']

def require_prime(p) -> int:
    """Returns p as an int, or raises DomainError if it is not a prime."""
    if isinstance(p, bool) or int(p) != p or not isprime(int(p)):
        raise DomainError(f"{p} is not a prime!")
    return int(p)

def binomial(n: int, i: int):
    """n!/(i!(n-i)!) as an exact ZZ element."""
    if n < 0 or i < 0 or i > n:
        raise DomainError(f"Binomial coefficient C({n},{i}) needs 0 <= i <= n")
    return ZZ(int(comb(n, i, exact=True)))

def divided_binomial(p: int, i: int):
    """C(p,i)/p, which is integral for 1 <= i <= p-1."""
    p = require_prime(p)
    if not 1 <= i <= p - 1:
        raise DomainError(f"C({p},{i})/{p} is only integral for 1 <= i <= {p-1}")
    quotient, remainder = divmod(binomial(p, i), ZZ(p))
    if remainder:
        raise InternalConsistencyError(f"C({p},{i}) is not divisible by {p}")
    return quotient

def fermat_theta(c, p: int):
    """The value of theta on an integer constant: (c - c^p)/p.

    On Z_p the Frobenius lift psi is the identity, so theta(c) is the Fermat
    quotient, which is integral by Fermat's little theorem.
    """
    p = require_prime(p)
    c = ZZ(int(c))
    quotient, remainder = divmod(c - c**p, ZZ(p))
    if remainder:
        raise InternalConsistencyError(f"({c} - {c}^{p})/{p} is not integral")
    return quotient

def units_mod(p: int, k: int) -> List[int]:
    """The exponents 0 < j < p^k with gcd(j, p) = 1, in increasing order."""
    if k < 1:
        raise DomainError(f"Level k must be at least 1, got {k}")
    return [j for j in range(1, p**k) if j % p]

def parse_primes(primes) -> List[int]:
    """Reads '2,3,5' or [2, 3, 5] into a sorted list of distinct primes."""
    if isinstance(primes, str):
        entries = [entry.strip() for entry in primes.split(',') if entry.strip()]
        try:
            primes = [int(entry) for entry in entries]
        except ValueError:
            raise DomainError(f"Could not read list of primes from '{','.join(entries)}'")
    if not primes:
        raise DomainError("At least one prime is needed!")
    return sorted(set(require_prime(p) for p in primes))
