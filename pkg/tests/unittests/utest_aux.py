import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '../../'))
from sympy import ZZ, QQ
from thetaring.aux_funcs import primes_label, jsonable, run_check
from thetaring.cyc import CycloRing
from thetaring.errors import DomainError, InternalConsistencyError

class PrimesLabel(unittest.TestCase):
	def test_label(self):
		self.assertEqual(primes_label([2, 3, 5]), '2-3-5')
		self.assertEqual(primes_label([7]), '7')

class Jsonable(unittest.TestCase):
	def test_plain_values(self):
		self.assertEqual(jsonable({'a': [1, 'b', None, True, 0.5]}), {'a': [1, 'b', None, True, 0.5]})

	def test_domain_elements(self):
		self.assertEqual(jsonable(ZZ(12)), 12)
		self.assertIsInstance(jsonable(ZZ(12)), int)
		self.assertEqual(jsonable(QQ(1, 3)), '1/3')

	def test_objects(self):
		zeta = CycloRing(3, 1).zeta()
		self.assertEqual(jsonable({'zeta': zeta}), {'zeta': {'p': 3, 'k': 1, 'coeffs': ['0', '1']}})
		self.assertEqual(jsonable((1, 2)), [1, 2])
		self.assertEqual(jsonable({3: 'x'}), {'3': 'x'})

class RunCheck(unittest.TestCase):
	def test_pass(self):
		status, detail, seconds = run_check('A', {}, lambda: (True, {'n': ZZ(2)}))
		self.assertEqual(status, 'pass')
		self.assertEqual(detail, {'n': 2})
		self.assertGreaterEqual(seconds, 0)

	def test_inexact_division_fails(self):
		def inexact():
			raise InternalConsistencyError('remainder 1')
		self.assertEqual(run_check('A', {}, inexact)[0], 'fail')

	def test_domain_error_fails(self):
		def bad():
			raise DomainError('not a unit')
		status, detail, __ = run_check('A', {}, bad)
		self.assertEqual(status, 'fail')
		self.assertEqual(detail, {'error': 'not a unit'})

if __name__ == '__main__':
	unittest.main()
