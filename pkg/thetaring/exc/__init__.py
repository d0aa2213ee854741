"""
This is the exact arithmetic module that every other part of thetaring is
built on.

exc_mod: Contains the UniPoly-object (univariate polynomials with exact
integer or rational coefficients, constant term first) and poly_divmod.

numbers: Contains binomial utilities, the Fermat quotient and prime checks.

padic: Contains the PadicResidue-object (an element of Z_p known modulo p^N).

Integers and fractions are the sympy ZZ and QQ domain elements, so nothing
here ever rounds.
"""

from .exc_mod import UniPoly, poly_divmod
from .numbers import *
from .padic import PadicResidue
