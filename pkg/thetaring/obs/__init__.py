"""
This is the obstruction-module. It turns the non-existence arguments for
theta-structures on rings with a primitive p^k-th root of unity into finite
exact computations.

The CandidateVerdict- and ObstructionReport-objects are defined in obs_mod.py
together with the enumeration of the Frobenius lift candidates zeta -> zeta^j.

In addition it contains the following sub-modules:

sums: The telescoping sum, its binomial rewriting and the polynomial
S(t) = sum_i theta(zeta^i) with its divisibility by p.

contradiction: Assembles the contradiction for odd p, and the exhaustive
residue search together with the product rule derivation for p = 2.
"""

from .obs_mod import *
from .sums import *
from .contradiction import *
