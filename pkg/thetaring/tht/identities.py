from __future__ import annotations

import numpy as np
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List
from sympy import QQ

# Import objects
from .tht_mod import ThetaPoly, ThetaVar, psi, theta, MONOMIAL_CAP
from ..exc.numbers import require_prime, divided_binomial, fermat_theta

# Import auxiliry functions
from .. import msg
from ..errors import DomainError, VerificationFailure

__all__ = ['ADDITIVITY_SIGN', 'SignReport', 'verify_additivity', 'multsum_rhs', 'verify_multsum',
            'verify_theta_power', 'product_rule_rhs', 'verify_product_rule',
            'verify_homomorphism', 'verify_integrality', 'verify_frobenius_lift',
            'verify_atom_successor', 'verify_constant', 'random_integral_poly',
            'IdentityCheck', 'Additivity', 'ThetaPower', 'MultiSum', 'ProductRule',
            'AtomSuccessor', 'DeltaRingAxioms', 'identity_checks']

# theta(x+y) = theta(x) + theta(y) + ADDITIVITY_SIGN*sum_i C(p,i)/p x^i y^(p-i)
# Fixed by expanding psi(x+y) = (x+y)^p + p*theta(x+y); verify_additivity rechecks it.
ADDITIVITY_SIGN = -1

@dataclass(frozen=True)
class SignReport:
    p: int
    sign: int
    delta: ThetaPoly
    matches: Dict[int, bool]

    def to_dict(self) -> dict:
        return {'p': self.p, 'sign': self.sign, 'delta': self.delta.to_list(),
                'matches': {str(s): m for s, m in self.matches.items()}}

def _cross_terms(p: int, x: ThetaPoly, y: ThetaPoly) -> ThetaPoly:
    """sum_{i=1}^{p-1} C(p,i)/p x^i y^(p-i)"""
    total = ThetaPoly.constant(p, 0, x.cap())
    for i in range(1, p):
        total = total + (x**i * y**(p-i)).scale(divided_binomial(p, i))
    return total

def verify_additivity(p: int, cap: int=MONOMIAL_CAP) -> SignReport:
    """Compares theta(x+y) - theta(x) - theta(y) with both signs of the
    divided binomial cross terms. Exactly one sign has to match.
    """
    p = require_prime(p)
    x, y = ThetaPoly.var(p, 0, cap=cap), ThetaPoly.var(p, 1, cap=cap)
    delta = theta(x + y) - theta(x) - theta(y)
    cross = _cross_terms(p, x, y)
    matches = {+1: delta == cross, -1: delta == -cross}
    signs = [s for s, m in matches.items() if m]
    if len(signs) != 1:
        raise VerificationFailure(f"theta(x+y) - theta(x) - theta(y) matches no unique sign at p={p}", delta - cross.scale(ADDITIVITY_SIGN))
    return SignReport(p=p, sign=signs[0], delta=delta, matches=matches)

def multsum_rhs(p: int, m: int, sign: int=ADDITIVITY_SIGN, cap: int=MONOMIAL_CAP) -> ThetaPoly:
    """sum_g theta(x_g) + sign*sum_i C(p,i)/p sum_{j=1}^{m-1} x_j^(p-i) (x_0 + ... + x_{j-1})^i"""
    xs = [ThetaPoly.var(p, g, cap=cap) for g in range(m)]
    rhs = ThetaPoly.constant(p, 0, cap)
    for x in xs:
        rhs = rhs + theta(x)
    partial_sums = [xs[0]]
    for j in range(1, m - 1):
        partial_sums.append(partial_sums[-1] + xs[j])
    cross = ThetaPoly.constant(p, 0, cap)
    for i in range(1, p):
        inner = ThetaPoly.constant(p, 0, cap)
        for j in range(1, m):
            inner = inner + xs[j]**(p-i) * partial_sums[j-1]**i
        cross = cross + inner.scale(divided_binomial(p, i))
    return rhs + cross.scale(sign)

def verify_multsum(p: int, m: int, sign: int=ADDITIVITY_SIGN, cap: int=MONOMIAL_CAP) -> bool:
    """theta of a sum of m generators, compared with the iterated additivity formula."""
    p = require_prime(p)
    if m < 2:
        raise DomainError(f"verify_multsum needs at least two summands, got {m}")
    if sign not in (-1, 1):
        raise DomainError(f"The additivity sign has to be +1 or -1, got {sign}")
    total = ThetaPoly.constant(p, 0, cap)
    for g in range(m):
        total = total + ThetaPoly.var(p, g, cap=cap)
    lhs = theta(total)
    rhs = multsum_rhs(p, m, sign, cap)
    if lhs != rhs:
        raise VerificationFailure(f"theta(x_0 + ... + x_{m-1}) differs from the summation formula at p={p}", lhs - rhs)
    return True

def verify_theta_power(p: int, n: int, cap: int=MONOMIAL_CAP) -> bool:
    """theta(x^n) = ((x^p + p*theta(x))^n - x^(np))/p"""
    p = require_prime(p)
    if n < 1:
        raise DomainError(f"verify_theta_power needs n >= 1, got {n}")
    x = ThetaPoly.var(p, 0, cap=cap)
    lhs = theta(x**n)
    rhs = ((x**p + theta(x).scale(p))**n - x**(n*p)).scale(QQ(1, p))
    if lhs != rhs:
        raise VerificationFailure(f"theta(x^{n}) differs from the power formula at p={p}", lhs - rhs)
    return True

def product_rule_rhs(f: ThetaPoly, g: ThetaPoly) -> ThetaPoly:
    p = f.p()
    tf, tg = theta(f), theta(g)
    return tf*g**p + f**p*tg + (tf*tg).scale(p)

def verify_product_rule(f: ThetaPoly, g: ThetaPoly) -> bool:
    lhs = theta(f*g)
    rhs = product_rule_rhs(f, g)
    if lhs != rhs:
        raise VerificationFailure("theta(fg) differs from the product rule", lhs - rhs)
    return True

def verify_homomorphism(f: ThetaPoly, g: ThetaPoly) -> bool:
    """psi(f+g) = psi(f) + psi(g), psi(fg) = psi(f)psi(g) and psi(1) = 1"""
    if psi(f + g) != psi(f) + psi(g):
        raise VerificationFailure("psi is not additive", psi(f + g) - psi(f) - psi(g))
    if psi(f*g) != psi(f)*psi(g):
        raise VerificationFailure("psi is not multiplicative", psi(f*g) - psi(f)*psi(g))
    one = ThetaPoly.constant(f.p(), 1, f.cap())
    if psi(one) != one:
        raise VerificationFailure("psi(1) is not 1", psi(one) - one)
    return True

def verify_integrality(f: ThetaPoly) -> bool:
    if not f.is_integral():
        raise DomainError("theta-integrality is only claimed for integral polynomials")
    if not theta(f).is_integral():
        raise VerificationFailure(f"theta({f}) is not integral", theta(f))
    return True

def verify_frobenius_lift(f: ThetaPoly) -> bool:
    """Every coefficient of psi(f) - f^p is divisible by p."""
    p = f.p()
    difference = psi(f) - f**p
    for __, coeff in difference.terms():
        if int(coeff.denominator) != 1 or int(coeff.numerator) % p:
            raise VerificationFailure(f"psi(f) is not congruent to f^{p} modulo {p}", difference)
    return True

def verify_atom_successor(p: int, g: int, i: int, cap: int=MONOMIAL_CAP) -> bool:
    """theta(x_{g,i}) = x_{g,i+1}"""
    lhs = theta(ThetaPoly.var(p, g, i, cap))
    rhs = ThetaPoly.var(p, g, i + 1, cap)
    if lhs != rhs:
        raise VerificationFailure(f"theta({ThetaVar(g, i)}) is not {ThetaVar(g, i + 1)}", lhs - rhs)
    return True

def verify_constant(p: int, c: int) -> bool:
    """theta of an integer constant is its Fermat quotient."""
    lhs = theta(ThetaPoly.constant(p, c))
    rhs = fermat_theta(c, p)
    if lhs != int(rhs):
        raise VerificationFailure(f"theta({c}) is not the Fermat quotient {rhs} at p={p}", lhs - int(rhs))
    return True

def random_integral_poly(p: int, rng: np.random.Generator, generators: int=3, degree: int=4,
                        max_terms: int=3, max_coeff: int=3, cap: int=MONOMIAL_CAP) -> ThetaPoly:
    """Random integral ThetaPoly with at most max_terms monomials of total
    degree <= degree in the atoms x_{g,0}, x_{g,1} for g < generators."""
    atoms = [ThetaVar(g, i) for g in range(generators) for i in range(2)]
    terms = {}
    for __ in range(int(rng.integers(1, max_terms + 1))):
        total_degree = int(rng.integers(0, degree + 1))
        exps = {}
        for __ in range(total_degree):
            a = atoms[int(rng.integers(0, len(atoms)))]
            exps[a] = exps.get(a, 0) + 1
        monomial = tuple(sorted(exps.items()))
        coeff = int(rng.integers(-max_coeff, max_coeff + 1))
        terms[monomial] = terms.get(monomial, 0) + coeff
    return ThetaPoly.from_terms(p, terms, cap)


class IdentityCheck(ABC):
    """IdentityChecks verify one theta-ring identity exactly. Calling the
    object returns a JSON-compatible detail dict, or raises a
    VerificationFailure carrying the difference."""
    def __init__(self, p: int, cap: int=MONOMIAL_CAP):
        self.p = require_prime(p)
        self.cap = cap

    def name(self) -> str:
        return type(self).__name__

    def parameters(self) -> dict:
        return {'p': self.p}

    @abstractmethod
    def __call__(self) -> dict:
        return

    @abstractmethod
    def __str__(self):
        pass

class Additivity(IdentityCheck):
    """theta(x+y) = theta(x) + theta(y) +- sum_i C(p,i)/p x^i y^(p-i).

    Fails unless the resolved sign agrees with the given sign
    (ADDITIVITY_SIGN by default).
    """
    def __init__(self, p: int, cap: int=MONOMIAL_CAP, sign: int=ADDITIVITY_SIGN):
        super().__init__(p, cap)
        self.sign = sign

    def __call__(self) -> dict:
        report = verify_additivity(self.p, self.cap)
        if report.sign != self.sign:
            raise VerificationFailure(f"Resolved additivity sign {report.sign:+d} disagrees with the frozen constant {self.sign:+d}", report.delta)
        return {'sign': report.sign, 'delta': str(report.delta)}

    def __str__(self):
        return f"Resolving the sign of theta(x+y) - theta(x) - theta(y) at p={self.p}."

class ThetaPower(IdentityCheck):
    def __init__(self, p: int, n: int, cap: int=MONOMIAL_CAP):
        super().__init__(p, cap)
        self.n = n

    def parameters(self) -> dict:
        return {'p': self.p, 'n': self.n}

    def __call__(self) -> dict:
        verify_theta_power(self.p, self.n, self.cap)
        return {'identity': f"theta(x^{self.n}) = ((x^{self.p} + {self.p}*x1)^{self.n} - x^{self.n*self.p})/{self.p}"}

    def __str__(self):
        return f"Checking theta(x^{self.n}) against the power formula at p={self.p}."

class MultiSum(IdentityCheck):
    def __init__(self, p: int, m: int, cap: int=MONOMIAL_CAP, sign: int=ADDITIVITY_SIGN):
        super().__init__(p, cap)
        self.m = m
        self.sign = sign

    def parameters(self) -> dict:
        return {'p': self.p, 'm': self.m}

    def __call__(self) -> dict:
        verify_multsum(self.p, self.m, self.sign, self.cap)
        return {'summands': self.m, 'sign': self.sign}

    def __str__(self):
        return f"Checking theta of a sum of {self.m} generators at p={self.p}."

class ProductRule(IdentityCheck):
    """theta(xy) = theta(x)y^p + x^p theta(y) + p theta(x)theta(y) on the generators."""
    def __call__(self) -> dict:
        x, y = ThetaPoly.var(self.p, 0, cap=self.cap), ThetaPoly.var(self.p, 1, cap=self.cap)
        verify_product_rule(x, y)
        return {'theta(xy)': str(theta(x*y))}

    def __str__(self):
        return f"Checking the product rule on generators at p={self.p}."

class AtomSuccessor(IdentityCheck):
    def __init__(self, p: int, depth: int=3, cap: int=MONOMIAL_CAP):
        super().__init__(p, cap)
        self.depth = depth

    def __call__(self) -> dict:
        for g in range(2):
            for i in range(self.depth):
                verify_atom_successor(self.p, g, i, self.cap)
        for c in (-2, -1, 0, 1, 2, self.p):
            verify_constant(self.p, c)
        return {'atoms': 2*self.depth}

    def __str__(self):
        return f"Checking theta on atoms and on integer constants at p={self.p}."

class DeltaRingAxioms(IdentityCheck):
    """Randomized check of the psi homomorphism laws, theta-integrality, the
    product rule and psi(f) = f^p mod p on integral polynomials."""
    def __init__(self, p: int, cases: int, seed: int, generators: int=3, degree: int=4, cap: int=MONOMIAL_CAP):
        super().__init__(p, cap)
        self.cases = cases
        self.seed = seed
        self.generators = generators
        self.degree = degree

    def parameters(self) -> dict:
        return {'p': self.p, 'cases': self.cases, 'seed': self.seed,
                'generators': self.generators, 'degree': self.degree}

    def __call__(self) -> dict:
        rng = np.random.default_rng(self.seed)
        for __ in range(self.cases):
            f = random_integral_poly(self.p, rng, self.generators, self.degree, cap=self.cap)
            g = random_integral_poly(self.p, rng, self.generators, self.degree, cap=self.cap)
            verify_homomorphism(f, g)
            verify_integrality(f)
            verify_product_rule(f, g)
            verify_frobenius_lift(f)
        return {'cases': self.cases}

    def __str__(self):
        return f"Checking the theta-ring axioms on {self.cases} random pairs at p={self.p}."

def identity_checks(p: int, theta_power_max: int, summands: int, cases: int, seed: int,
                    generators: int=3, degree: int=4,
                    cap: int=MONOMIAL_CAP, sign: int=ADDITIVITY_SIGN) -> List[IdentityCheck]:
    """The identity checks for one prime, in reporting order."""
    checks = [Additivity(p, cap, sign)]
    checks += [ThetaPower(p, n, cap) for n in range(1, theta_power_max + 1)]
    checks += [MultiSum(p, m, cap, sign) for m in range(2, summands + 1)]
    checks += [ProductRule(p, cap), AtomSuccessor(p, cap=cap)]
    if cases > 0:
        checks.append(DeltaRingAxioms(p, cases, seed, generators, degree, cap=cap))
    msg.info(f"{len(checks)} identity checks for p={p}")
    return checks
