"""
This is the theta-module, the symbolic engine for free theta-rings.

The ThetaVar- and ThetaPoly-objects are defined in tht_mod.py together with
the Frobenius lift psi and theta = (psi - (.)^p)/p.

In addition it contains the following sub-module:

identities: Contains the IdentityCheck classes that verify the additivity
formula, theta of a power, theta of a sum of many generators, the product rule
and the theta-ring axioms on random polynomials.
"""

from .tht_mod import *
from .identities import *
