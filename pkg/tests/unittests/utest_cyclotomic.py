import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '../../'))
from hypothesis import given, settings, strategies as st
from thetaring.exc import UniPoly
from thetaring.cyc import (cyclotomic_polynomial, CycloRing, CycloElem, zeta_power, geometric_unit,
                            evaluate, is_cyclotomic_root, multiplicative_order, is_primitive_image,
                            candidate_images)
from thetaring.errors import DomainError

class CyclotomicPolynomial(unittest.TestCase):
	def test_small(self):
		self.assertEqual(cyclotomic_polynomial(3, 1), UniPoly([1, 1, 1]))
		self.assertEqual(cyclotomic_polynomial(2, 2), UniPoly([1, 0, 1]))
		self.assertEqual(cyclotomic_polynomial(3, 2), UniPoly([1, 0, 0, 1, 0, 0, 1]))

	def test_degree(self):
		for p, k in [(2, 3), (3, 3), (5, 2), (7, 1)]:
			self.assertEqual(cyclotomic_polynomial(p, k).degree(), CycloRing(p, k).degree())

	def test_value_at_one(self):
		for p in [2, 3, 5, 7, 11, 13]:
			for k in [1, 2, 3]:
				self.assertEqual(cyclotomic_polynomial(p, k)(1), p)

	def test_level_zero(self):
		with self.assertRaises(DomainError):
			cyclotomic_polynomial(3, 0)

class Ring(unittest.TestCase):
	def test_ring(self):
		ring = CycloRing(5, 2)
		self.assertEqual(ring.degree(), 20)
		self.assertEqual(ring.order(), 25)
		self.assertEqual(len(ring.one().coeffs()), 20)

	def test_bad_ring(self):
		with self.assertRaises(DomainError):
			CycloRing(6, 1)
		with self.assertRaises(DomainError):
			CycloRing(3, 0)

class Elements(unittest.TestCase):
	def test_zeta_order(self):
		for p, k in [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 2)]:
			ring = CycloRing(p, k)
			zeta = ring.zeta()
			self.assertEqual(zeta**ring.order(), 1)
			self.assertEqual(multiplicative_order(zeta), ring.order())

	def test_relation(self):
		ring = CycloRing(3, 1)
		zeta = ring.zeta()
		self.assertTrue((1 + zeta + zeta*zeta).is_zero())
		self.assertEqual(zeta*zeta, -1 - zeta)

	def test_two_power_relation(self):
		ring = CycloRing(2, 2)
		i = ring.zeta()
		self.assertEqual(i*i, -1)
		self.assertEqual(multiplicative_order(-ring.one()), 2)

	def test_zeta_power_reduces(self):
		ring = CycloRing(5, 1)
		self.assertEqual(zeta_power(ring, 4), -1 - ring.zeta() - zeta_power(ring, 2) - zeta_power(ring, 3))
		self.assertEqual(zeta_power(ring, 7), zeta_power(ring, 2))
		self.assertEqual(zeta_power(ring, -1), zeta_power(ring, 4))

	def test_dense_and_sparse_products_agree(self):
		ring = CycloRing(3, 3)
		a = CycloElem(ring, [(3*e + 1) % 7 - 3 for e in range(ring.degree())])
		b = CycloElem(ring, [(5*e + 2) % 9 - 4 for e in range(ring.degree())])
		product = ring.zero()
		for e, c in enumerate(b.coeffs()):
			if c:
				product = product + (a*zeta_power(ring, e)).scale(c)
		self.assertEqual(a*b, product)

	def test_mixing_rings(self):
		with self.assertRaises(DomainError):
			CycloRing(3, 1).zeta() + CycloRing(5, 1).zeta()

	def test_negative_power(self):
		with self.assertRaises(DomainError):
			CycloRing(3, 1).zeta()**-1

	def test_divisibility(self):
		ring = CycloRing(3, 1)
		self.assertTrue(CycloElem(ring, [3, -6]).divisible_by_p())
		self.assertEqual(CycloElem(ring, [3, -6]).exact_divide_by_p(), CycloElem(ring, [1, -2]))
		self.assertFalse(ring.zeta().divisible_by_p())
		with self.assertRaises(DomainError):
			CycloElem(ring, [1, 3]).exact_divide_by_p()

	@settings(max_examples=200, deadline=None)
	@given(st.data(), st.sampled_from([(2, 3), (3, 2), (5, 1), (7, 1)]))
	def test_divide_multiple_of_p(self, data, level):
		ring = CycloRing(*level)
		coeffs = data.draw(st.lists(st.integers(-50, 50), min_size=ring.degree(), max_size=ring.degree()))
		a = CycloElem(ring, coeffs)
		self.assertTrue(a.scale(ring.p).divisible_by_p())
		self.assertEqual(a.scale(ring.p).exact_divide_by_p(), a)

	def test_dict_form(self):
		ring = CycloRing(5, 1)
		x = CycloElem(ring, [1, -2, 0, 4])
		self.assertEqual(CycloElem.from_dict(x.to_dict()), x)
		self.assertEqual(CycloElem.from_json(x.to_json()), x)

class Roots(unittest.TestCase):
	def test_geometric_unit(self):
		ring = CycloRing(5, 1)
		zeta = ring.zeta()
		for j in range(1, 5):
			self.assertEqual(geometric_unit(ring, j)*(1 - zeta), 1 - zeta_power(ring, j))
		with self.assertRaises(DomainError):
			geometric_unit(ring, 0)

	def test_evaluate(self):
		ring = CycloRing(3, 2)
		self.assertTrue(evaluate(cyclotomic_polynomial(3, 2), ring.zeta()).is_zero())
		self.assertFalse(evaluate(cyclotomic_polynomial(3, 1), ring.zeta()).is_zero())

	def test_is_cyclotomic_root(self):
		ring = CycloRing(3, 2)
		self.assertTrue(is_cyclotomic_root(ring.zeta()))
		self.assertTrue(is_cyclotomic_root(zeta_power(ring, 3), level=1))
		self.assertFalse(is_cyclotomic_root(zeta_power(ring, 3)))

	def test_not_a_root_of_unity(self):
		ring = CycloRing(5, 1)
		self.assertIsNone(multiplicative_order(1 + ring.zeta()*2))

	def test_candidate_images(self):
		for p, k in [(2, 2), (3, 2), (5, 1)]:
			ring = CycloRing(p, k)
			images = candidate_images(ring)
			self.assertEqual(len(images), ring.degree())
			self.assertTrue(all(primitive for __, primitive in images))
		self.assertFalse(is_primitive_image(CycloRing(3, 2), 3))

if __name__ == '__main__':
	unittest.main()
