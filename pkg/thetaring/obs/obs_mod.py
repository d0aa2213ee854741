from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

# Import objects
from ..cyc.cyc_mod import CycloRing, CycloElem, zeta_power, is_primitive_image
from ..exc.exc_mod import UniPoly
from ..exc.numbers import require_prime, units_mod
from .sums import telescoping_sum, theta_sum_divisibility

# Import auxiliry functions
from .. import msg
from ..errors import DomainError

__all__ = ['Conclusion', 'CandidateVerdict', 'ObstructionReport', 'check_candidate',
            'obstruction_report']

class Conclusion(Enum):
    NO_THETA_STRUCTURE = 'NoThetaStructure'
    THETA_POSSIBLE = 'ThetaPossible'

@dataclass(frozen=True)
class CandidateVerdict:
    """The Frobenius lift candidate zeta -> zeta^j on Z[zeta_{p^k}].

    A theta-structure needs theta(zeta) = (zeta^j - zeta^p)/p to be integral,
    i.e. witness = zeta^j - zeta^p has to be divisible by p.
    """
    p: int
    k: int
    j: int
    divisible: bool
    witness: CycloElem
    image_is_primitive_root: bool

    def to_dict(self) -> dict:
        return {'j': self.j, 'divisible': self.divisible, 'witness': self.witness.to_dict(),
                'image_is_primitive_root': self.image_is_primitive_root}

    @classmethod
    def from_dict(cls, data: dict) -> CandidateVerdict:
        witness = CycloElem.from_dict(data['witness'])
        return cls(p=witness.ring().p, k=witness.ring().k, j=int(data['j']),
                    divisible=bool(data['divisible']), witness=witness,
                    image_is_primitive_root=bool(data['image_is_primitive_root']))

@dataclass(frozen=True)
class ObstructionReport:
    p: int
    k: int
    verdicts: Tuple[CandidateVerdict, ...]
    conclusion: Conclusion
    telescoping_sum: CycloElem
    theta_sum_poly: UniPoly
    informational: bool = field(default=False)

    def failing(self) -> List[int]:
        """Exponents j whose theta(zeta) would be integral."""
        return [v.j for v in self.verdicts if v.divisible]

    def to_dict(self) -> dict:
        return {'p': self.p, 'k': self.k,
                'candidates': [v.to_dict() for v in self.verdicts],
                'telescoping_sum': self.telescoping_sum.to_dict(),
                'theta_sum_poly': self.theta_sum_poly.to_list(),
                'conclusion': self.conclusion.value,
                'informational': self.informational}

    def __str__(self) -> str:
        return f"p={self.p}, k={self.k}: {self.conclusion.value} ({len(self.verdicts)} candidates, {len(self.failing())} with integral theta(zeta))"

def check_candidate(p: int, k: int, j: int) -> CandidateVerdict:
    p = require_prime(p)
    ring = CycloRing(p, k)
    if j % p == 0 or not 0 < j < ring.order():
        raise DomainError(f"Exponent j={j} is not a unit modulo {p}^{k}")
    witness = zeta_power(ring, j) - zeta_power(ring, p)
    return CandidateVerdict(p=p, k=k, j=j, divisible=witness.divisible_by_p(),
                            witness=witness, image_is_primitive_root=is_primitive_image(ring, j))

def obstruction_report(p: int, k: int) -> ObstructionReport:
    """Runs check_candidate over every unit j modulo p^k.

    (p, k) = (2, 1) is reported but marked informational: Z[zeta_2] = Z has
    the theta-structure of the integers.
    """
    p = require_prime(p)
    verdicts = tuple(check_candidate(p, k, j) for j in units_mod(p, k))
    if any(v.divisible for v in verdicts):
        conclusion = Conclusion.THETA_POSSIBLE
    else:
        conclusion = Conclusion.NO_THETA_STRUCTURE
    for v in verdicts:
        if not v.image_is_primitive_root:
            msg.warning(f"zeta^{v.j} is not a primitive {p}^{k}-th root of unity!")

    tele = telescoping_sum(p)
    poly, __ = theta_sum_divisibility(p)
    report = ObstructionReport(p=p, k=k, verdicts=verdicts, conclusion=conclusion,
                               telescoping_sum=tele, theta_sum_poly=poly,
                               informational=(p == 2 and k == 1))
    msg.plain(str(report))
    return report
