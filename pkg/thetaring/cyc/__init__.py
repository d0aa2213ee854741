"""
This is the cyclotomic module, responsible for exact arithmetic in
Z[x]/Phi_{p^k}(x), the ring of integers of the p^k-th cyclotomic field.

The CycloRing- and CycloElem-objects are defined in cyc_mod.py together with
the operations on them (powers of zeta, the geometric units
1 + zeta + ... + zeta^{j-1}, divisibility by p, evaluation of polynomials and
the checks that the images of zeta under ring endomorphisms are again
primitive roots of unity).
"""

from .cyc_mod import *
