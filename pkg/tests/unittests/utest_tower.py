import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '../../'))
from sympy import ZZ, Symbol
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing
from thetaring.exc import UniPoly
from thetaring.cyc import CycloRing, cyclotomic_polynomial
from thetaring.ltt import (MultiplicativeFormalGroup, p_series, formal_group_multiple,
                            TowerPresentation, build_tower, flatten_tower, verify_cyclotomic_iso,
                            LevelStructure, level_pairs, verify_level_homomorphism,
                            drinfeld_divisibility)
from thetaring.errors import DomainError, VerificationFailure

class FormalGroup(unittest.TestCase):
	def test_law(self):
		group = MultiplicativeFormalGroup(3)
		self.assertEqual(group.law(2, 3), 11)
		x = UniPoly.x()
		self.assertEqual(group.law(x, UniPoly()), x)

	def test_p_series(self):
		self.assertEqual(p_series(3), UniPoly([0, 3, 3, 1]))
		self.assertEqual(p_series(2, 2), UniPoly([1, 1])**4 - 1)
		self.assertEqual(MultiplicativeFormalGroup(5).p_series(), p_series(5))

	def test_multiples(self):
		self.assertEqual(MultiplicativeFormalGroup(3).multiple(9), p_series(3, 2))
		self.assertEqual(formal_group_multiple(3, 5), UniPoly([1, 1])**5 - 1)
		self.assertTrue(formal_group_multiple(3, 0).is_zero())
		with self.assertRaises(DomainError):
			formal_group_multiple(3, -1)
		with self.assertRaises(DomainError):
			p_series(3, 0)

class Tower(unittest.TestCase):
	def test_first_stage(self):
		tower = build_tower(3, 1)
		self.assertEqual(tower.stage_coefficients(1), ['3', '3', '1'])
		self.assertEqual(tower.degree(), 2)

	def test_second_stage_at_two(self):
		tower = build_tower(2, 2)
		y2 = tower.gen(2)
		self.assertEqual(tower.stages[1], y2**2 + 2*y2 + 2)

	def test_ranks(self):
		for p, k in [(2, 3), (3, 2), (3, 3), (5, 2)]:
			tower = build_tower(p, k)
			self.assertEqual(tower.stage_degrees(), [p - 1] + [p]*(k - 1))
			self.assertEqual(tower.degree(), CycloRing(p, k).degree())

	def test_flatten(self):
		for p, k in [(2, 1), (2, 3), (3, 2), (5, 2), (7, 1)]:
			flat = flatten_tower(build_tower(p, k))
			self.assertEqual(flat, cyclotomic_polynomial(p, k).compose(UniPoly([1, 1])))

	def test_reduce(self):
		tower = build_tower(3, 2)
		y2, y1 = tower.gen(2), tower.gen(1)
		self.assertEqual(tower.reduce((1 + y2)**3), tower.reduce(1 + y1))

	def test_dict_form(self):
		tower = build_tower(3, 2)
		self.assertEqual(TowerPresentation.from_dict(tower.to_dict()), tower)
		self.assertEqual(TowerPresentation.from_json(tower.to_json()), tower)

	def test_bad_arguments(self):
		with self.assertRaises(DomainError):
			build_tower(3, 0)
		with self.assertRaises(DomainError):
			build_tower(4, 1)
		with self.assertRaises(DomainError):
			build_tower(3, 2).gen(3)

	def test_cyclotomic_iso(self):
		for p, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (13, 1)]:
			self.assertTrue(verify_cyclotomic_iso(p, k))

	def test_flatten_higher(self):
		for p, k in [(5, 3), (7, 2)]:
			flat = flatten_tower(build_tower(p, k))
			self.assertEqual(flat.degree(), (p - 1)*p**(k - 1))
			self.assertEqual(flat, cyclotomic_polynomial(p, k).compose(UniPoly([1, 1])))

	def test_reduce_with_extra_variable(self):
		tower = build_tower(3, 2)
		R = PolyRing([Symbol('x')] + list(tower.ring().symbols), ZZ, lex)
		x, y2, y1 = R.gens
		self.assertEqual(tower.reduce(x*y1**2), x*(-3*y1 - 3))
		self.assertEqual(tower.reduce(x*(1 + y2)**3), x*(1 + y1))

class CorruptedTower(unittest.TestCase):
	def setUp(self):
		self.tower = build_tower(3, 2)
		g1, g2 = self.tower.stages
		self.bad = TowerPresentation(p=3, k=2, stages=(g1, g2 + 3))

	def test_flatten_sees_upper_stage(self):
		self.assertNotEqual(flatten_tower(self.bad), flatten_tower(self.tower))

	def test_torsion_divisor_fails(self):
		self.assertFalse(drinfeld_divisibility(3, 2, tower=self.bad).holds())

	def test_level_structure_fails(self):
		self.assertFalse(verify_level_homomorphism(3, 2, level=LevelStructure(3, 2, self.bad)))

	def test_cyclotomic_iso_fails(self):
		with self.assertRaises(VerificationFailure):
			verify_cyclotomic_iso(3, 2, tower=self.bad)

	def test_stage_not_monic(self):
		g1, g2 = self.tower.stages
		bad = TowerPresentation(p=3, k=2, stages=(g1, 2*g2))
		with self.assertRaises(DomainError):
			bad.reduce(self.tower.top()**3)


class Level(unittest.TestCase):
	def test_values(self):
		level = LevelStructure(3, 2)
		self.assertFalse(level(0))
		self.assertEqual(level(9), level(0))
		self.assertEqual(level(1), level.tower.top())
		self.assertEqual(level.law(4, 8), level(12))
		self.assertEqual(len(level.values()), 9)

	def test_integers(self):
		level = LevelStructure(2, 1)
		self.assertEqual(level(1), -2)

	def test_pairs(self):
		pairs, exhaustive = level_pairs(4)
		self.assertTrue(exhaustive)
		self.assertEqual(len(pairs), 10)

		pairs, exhaustive = level_pairs(200, exhaustive_limit=128, sample_size=50, seed=1)
		self.assertFalse(exhaustive)
		self.assertEqual(len(pairs), 50)
		self.assertEqual(pairs, level_pairs(200, exhaustive_limit=128, sample_size=50, seed=1)[0])
		self.assertTrue(all(0 <= a < 200 and 0 <= b < 200 for a, b in pairs))

	def test_homomorphism(self):
		for p, k in [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)]:
			self.assertTrue(verify_level_homomorphism(p, k))

	def test_sampled_homomorphism(self):
		self.assertTrue(verify_level_homomorphism(3, 2, exhaustive_limit=4, sample_size=20, seed=3))

class TorsionDivisor(unittest.TestCase):
	def test_divides_p_series(self):
		for p, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]:
			result = drinfeld_divisibility(p, k)
			self.assertTrue(result.holds())
			self.assertEqual(result.to_dict()['remainder'], '0')

	def test_integers(self):
		result = drinfeld_divisibility(2, 1)
		x = result.product.ring.gens[0]
		self.assertEqual(result.product, x**2 + 2*x)

if __name__ == '__main__':
	unittest.main()
