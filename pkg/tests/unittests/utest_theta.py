import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '../../'))
from sympy import QQ
from thetaring.exc import UniPoly
from thetaring.tht import (ThetaVar, ThetaPoly, psi, theta, ADDITIVITY_SIGN, verify_additivity,
                            verify_multsum, multsum_rhs, verify_theta_power, verify_product_rule,
                            verify_constant, verify_atom_successor, identity_checks, Additivity,
                            MultiSum, DeltaRingAxioms)
from thetaring.errors import DomainError, ResourceCapExceeded, VerificationFailure

class Atoms(unittest.TestCase):
	def test_names(self):
		self.assertEqual(str(ThetaVar(0)), 'x')
		self.assertEqual(str(ThetaVar(1, 2)), 'y2')
		self.assertEqual(str(ThetaVar(5, 1)), 'u51')

	def test_order(self):
		self.assertLess(ThetaVar(0, 3), ThetaVar(1, 0))
		self.assertEqual(ThetaVar(2, 1).successor(), ThetaVar(2, 2))

	def test_negative_index(self):
		with self.assertRaises(DomainError):
			ThetaVar(-1)

class Arithmetic(unittest.TestCase):
	def test_ring_operations(self):
		x, y = ThetaPoly.var(3, 0), ThetaPoly.var(3, 1)
		self.assertEqual((x + y)**2, x*x + 2*x*y + y*y)
		self.assertEqual(x - x, 0)
		self.assertTrue((x - x).is_zero())
		self.assertEqual(2 - x + x, 2)

	def test_primes_do_not_mix(self):
		with self.assertRaises(DomainError):
			ThetaPoly.var(3, 0) + ThetaPoly.var(5, 0)

	def test_cap(self):
		x, y, z = [ThetaPoly.var(3, g, cap=10) for g in range(3)]
		with self.assertRaises(ResourceCapExceeded):
			(x + y + z)**5

	def test_integrality(self):
		x = ThetaPoly.var(3, 0)
		self.assertTrue((3*x + 1).is_integral())
		self.assertFalse(x.scale(QQ(1, 2)).is_integral())

	def test_list_form(self):
		x, y = ThetaPoly.var(3, 0), ThetaPoly.var(3, 1)
		f = theta(x + y) + x.scale(QQ(2, 3))
		self.assertEqual(ThetaPoly.from_list(3, f.to_list()), f)
		self.assertEqual(ThetaPoly.from_json(3, f.to_json()), f)

	def test_evaluate(self):
		x = ThetaPoly.var(2, 0)
		values = {ThetaVar(0, 0): UniPoly([1]), ThetaVar(0, 1): UniPoly.x()}
		self.assertEqual(theta(x**2).evaluate(values, UniPoly()), UniPoly([0, 2, 2]))

	def test_evaluate_needs_integral(self):
		x = ThetaPoly.var(2, 0)
		with self.assertRaises(DomainError):
			x.scale(QQ(1, 2)).evaluate({ThetaVar(0, 0): 1}, 0)

	def test_evaluate_needs_values(self):
		x = ThetaPoly.var(2, 0)
		with self.assertRaises(DomainError):
			theta(x).evaluate({ThetaVar(0, 0): 1}, 0)

class Theta(unittest.TestCase):
	def test_psi_on_atoms(self):
		for p in [2, 3, 5]:
			x = ThetaPoly.var(p, 0)
			x1 = ThetaPoly.var(p, 0, 1)
			self.assertEqual(psi(x), x**p + p*x1)

	def test_theta_on_atoms(self):
		for p in [2, 3, 5]:
			self.assertEqual(theta(ThetaPoly.var(p, 1, 2)), ThetaPoly.var(p, 1, 3))
			self.assertTrue(verify_atom_successor(p, 0, 0))

	def test_theta_square(self):
		x, x1 = ThetaPoly.var(3, 0), ThetaPoly.var(3, 0, 1)
		self.assertEqual(theta(x**2), 2*x**3*x1 + 3*x1**2)

	def test_theta_of_constants(self):
		self.assertEqual(theta(ThetaPoly.constant(3, 2)), -2)
		self.assertEqual(theta(ThetaPoly.constant(2, -1)), -1)
		for p in [2, 3, 5, 7]:
			for c in [-3, 0, 1, 4]:
				self.assertTrue(verify_constant(p, c))

	def test_theta_of_sum_at_two(self):
		x, y = ThetaPoly.var(2, 0), ThetaPoly.var(2, 1)
		self.assertEqual(theta(x + y), theta(x) + theta(y) - x*y)

	def test_non_integral_input(self):
		x = ThetaPoly.var(3, 0)
		self.assertFalse(theta(x.scale(QQ(1, 3))).is_integral())

class Identities(unittest.TestCase):
	def test_additivity_sign(self):
		for p in [2, 3, 5, 7]:
			report = verify_additivity(p)
			self.assertEqual(report.sign, ADDITIVITY_SIGN)
			self.assertEqual(report.matches, {1: False, -1: True})

	def test_multsum(self):
		for p in [2, 3, 5]:
			for m in [2, 3, 4]:
				self.assertTrue(verify_multsum(p, m))

	def test_multsum_wrong_sign(self):
		with self.assertRaises(VerificationFailure) as context:
			verify_multsum(3, 3, sign=-ADDITIVITY_SIGN)
		self.assertFalse(context.exception.difference.is_zero())

	def test_multsum_arguments(self):
		with self.assertRaises(DomainError):
			verify_multsum(3, 1)
		with self.assertRaises(DomainError):
			verify_multsum(3, 2, sign=0)

	def test_multsum_two_summands_is_additivity(self):
		x, y = ThetaPoly.var(5, 0), ThetaPoly.var(5, 1)
		self.assertEqual(multsum_rhs(5, 2), theta(x + y))

	def test_theta_power(self):
		for p in [2, 3, 5]:
			for n in range(1, 6):
				self.assertTrue(verify_theta_power(p, n))
		with self.assertRaises(DomainError):
			verify_theta_power(3, 0)

	def test_product_rule(self):
		for p in [2, 3, 5]:
			x, y, z = [ThetaPoly.var(p, g) for g in range(3)]
			self.assertTrue(verify_product_rule(x, y))
			self.assertTrue(verify_product_rule(x + 2, y*z - 1))

class Checks(unittest.TestCase):
	def test_identity_checks(self):
		checks = identity_checks(3, theta_power_max=5, summands=4, cases=10, seed=1)
		self.assertEqual(len(checks), 12)
		self.assertEqual(checks[0].name(), 'Additivity')
		self.assertEqual(checks[-1].parameters(), {'p': 3, 'cases': 10, 'seed': 1, 'generators': 3, 'degree': 4})

	def test_random_case_shape(self):
		checks = identity_checks(3, theta_power_max=1, summands=2, cases=4, seed=5, generators=1, degree=2)
		self.assertEqual(checks[-1].parameters(), {'p': 3, 'cases': 4, 'seed': 5, 'generators': 1, 'degree': 2})
		self.assertEqual(checks[-1](), {'cases': 4})

	def test_no_random_cases(self):
		checks = identity_checks(3, theta_power_max=1, summands=2, cases=0, seed=1)
		self.assertEqual([c.name() for c in checks], ['Additivity', 'ThetaPower', 'MultiSum', 'ProductRule', 'AtomSuccessor'])

	def test_checks_pass(self):
		for check in identity_checks(2, theta_power_max=3, summands=3, cases=5, seed=7):
			self.assertIsInstance(check(), dict)

	def test_flipped_sign_fails(self):
		with self.assertRaises(VerificationFailure):
			Additivity(3, sign=-ADDITIVITY_SIGN)()
		with self.assertRaises(VerificationFailure):
			MultiSum(3, 3, sign=-ADDITIVITY_SIGN)()

	def test_random_axioms(self):
		self.assertEqual(DeltaRingAxioms(3, cases=5, seed=11)(), {'cases': 5})

if __name__ == '__main__':
	unittest.main()
