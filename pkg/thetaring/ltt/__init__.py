"""
This is the tower-module for the height one Lubin-Tate tower of the
multiplicative formal group F(x, y) = x + y + xy.

The MultiplicativeFormalGroup- and TowerPresentation-objects are defined in
ltt_mod.py together with the p-series, the tower construction and the
flattening of the tower to a single generator.

In addition it contains the following sub-module:

level: Identifies the tower with the cyclotomic integers, and checks that the
level structure a -> (1+y)^a - 1 is a homomorphism whose p-torsion divisor
divides [p](x).
"""

from .ltt_mod import *
from .level import *
