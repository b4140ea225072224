import unittest
from fractions import Fraction

import sympy

import rueppel_lab.tests.utils as utils
from rueppel_lab.config import Config
from rueppel_lab.exceptions import (DegreeBoundExceeded,
                                    DivisionByZero,
                                    InexactDivision,
                                    RingMismatch,
                                    ZeroDenominator)
from rueppel_lab.services.rings import (B, C, INT, POLY, RAT, RATFUNC,
                                        Poly2,
                                        RatFunc,
                                        coerce,
                                        format_value,
                                        inverse,
                                        join_rings,
                                        ratfunc_normalize,
                                        ring_arith,
                                        ring_of,
                                        simplify)


TRIALS = 1000
MAGNITUDE = 10 ** 6


def suite():
    test_suite = unittest.TestSuite()
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_product_matches_sympy'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_sum_matches_sympy'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_exact_div_success'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_exact_div_inexact'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_degree_bound'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_subs_and_evaluate'))
    test_suite.addTest(Poly2ArithmeticTestCase('test_poly2_format'))
    test_suite.addTest(RatFuncTestCase('test_ratfunc_equality'))
    test_suite.addTest(RatFuncTestCase('test_ratfunc_zero_denominator'))
    test_suite.addTest(RatFuncTestCase('test_poly2_negative_power'))
    test_suite.addTest(RatFuncTestCase('test_ratfunc_normalize'))
    test_suite.addTest(RatFuncTestCase('test_ratfunc_arithmetic_is_canonical'))
    test_suite.addTest(RingHelpersTestCase('test_ring_of'))
    test_suite.addTest(RingHelpersTestCase('test_join_rings'))
    test_suite.addTest(RingHelpersTestCase('test_coerce'))
    test_suite.addTest(RingHelpersTestCase('test_simplify'))
    test_suite.addTest(RingHelpersTestCase('test_inverse'))
    test_suite.addTest(RingHelpersTestCase('test_ring_arith_exact_div'))
    test_suite.addTest(RingPropertiesTestCase('test_ring_axioms'))
    test_suite.addTest(RingPropertiesTestCase('test_exact_div_undoes_mul'))
    test_suite.addTest(RingPropertiesTestCase('test_normalize_idempotent'))
    return test_suite


###########################
#        Unit Tests       #
###########################

class Poly2ArithmeticTestCase(unittest.TestCase):
    """Tests for `services/rings.py - Poly2`."""

    def setUp(self):
        self.rng = utils.seeded()

    def test_poly2_product_matches_sympy(self):
        """With random polynomials, does the product agree with sympy?"""

        for _ in range(100):
            p = utils.random_poly2(self.rng)
            q = utils.random_poly2(self.rng)
            expected = sympy.expand(utils.to_sympy(p) * utils.to_sympy(q))
            self.assertEqual(sympy.expand(utils.to_sympy(p * q) - expected), 0)

    def test_poly2_sum_matches_sympy(self):
        """With random polynomials, do sums and differences agree with sympy?"""

        for _ in range(100):
            p = utils.random_poly2(self.rng)
            q = utils.random_poly2(self.rng)
            self.assertEqual(sympy.expand(utils.to_sympy(p + q)
                                          - utils.to_sympy(p) - utils.to_sympy(q)), 0)
            self.assertEqual(sympy.expand(utils.to_sympy(p - q)
                                          - utils.to_sympy(p) + utils.to_sympy(q)), 0)

    def test_poly2_exact_div_success(self):
        """With a known product, does exact division recover the factor?"""

        for _ in range(100):
            p = utils.random_poly2(self.rng)
            q = utils.random_poly2(self.rng)
            if not q:
                continue
            self.assertEqual((p * q).exact_div(q), p)

        self.assertEqual((B ** 2 - C ** 2).exact_div(B - C), B + C)

    def test_poly2_exact_div_inexact(self):
        """With a divisor that leaves a remainder, is InexactDivision raised?"""

        self.assertRaises(InexactDivision, (B + 1).exact_div, C)
        self.assertRaises(InexactDivision, (3 * B).exact_div, 2)
        self.assertRaises(DivisionByZero, B.exact_div, 0)

    def test_poly2_degree_bound(self):
        """With an exponent above the degree bound, is DegreeBoundExceeded raised?"""

        self.assertRaises(DegreeBoundExceeded, Poly2.monomial, Config.DEGREE_BOUND + 1, 0)
        self.assertRaises(DegreeBoundExceeded, Poly2.monomial, 0, Config.DEGREE_BOUND + 1)

        # zero coefficients are dropped before the bound applies
        self.assertFalse(Poly2({(Config.DEGREE_BOUND + 1, 0): 0}))

    def test_poly2_subs_and_evaluate(self):
        """With values for b and c, are substitution and evaluation exact?"""

        self.assertEqual((B ** 2 + C).subs(c=B), B ** 2 + B)
        self.assertEqual((B * C).subs(b=2, c=3), 6)
        self.assertEqual((B ** 2 + C).evaluate(2, 3), 7)
        self.assertEqual((B + C).evaluate(Fraction(1, 2), 1), Fraction(3, 2))

    def test_poly2_format(self):
        """Are polynomials printed in graded order with b before c?"""

        self.assertEqual(str(B ** 2 - 2 * B * C + 1), 'b^2 - 2*b*c + 1')
        self.assertEqual(str(-C), '-c')
        self.assertEqual(str(Poly2()), '0')


class RatFuncTestCase(unittest.TestCase):
    """Tests for `services/rings.py - RatFunc`."""

    def test_ratfunc_equality(self):
        """With equal quotients written differently, do they compare equal?"""

        self.assertEqual(RatFunc(B * C, C ** 2), RatFunc(B, C))
        self.assertEqual(RatFunc(2 * B, 4), RatFunc(B, 2))
        self.assertEqual(RatFunc(B ** 2 - 1, B - 1), B + 1)
        self.assertNotEqual(RatFunc(B, C), RatFunc(C, B))

    def test_ratfunc_zero_denominator(self):
        """With a zero denominator, is ZeroDenominator raised?"""

        self.assertRaises(ZeroDenominator, RatFunc, B, 0)
        self.assertRaises(DivisionByZero, RatFunc(B).__truediv__, 0)

    def test_poly2_negative_power(self):
        """With a negative power, is the result a rational function?"""

        value = B ** -1
        self.assertIsInstance(value, RatFunc)
        self.assertEqual(value * B, 1)
        self.assertIsInstance(B * Fraction(1, 2), RatFunc)

    def test_ratfunc_normalize(self):
        """With unreduced quotients, is the canonical representative returned?"""

        value = ratfunc_normalize(RatFunc.from_parts(2 * B, 2 * C ** 2))
        self.assertEqual((value.num, value.den), (B, C ** 2))
        value = ratfunc_normalize(RatFunc.from_parts(Poly2(), B + C))
        self.assertEqual((value.num, value.den), (Poly2(), Poly2.constant(1)))
        value = ratfunc_normalize(RatFunc.from_parts(B ** 2 - 1, B - 1))
        self.assertEqual((value.num, value.den), (B + 1, Poly2.constant(1)))
        value = ratfunc_normalize(RatFunc.from_parts(B, -C))
        self.assertEqual((value.num, value.den), (-B, C))
        self.assertRaises(ZeroDenominator, ratfunc_normalize, RatFunc.from_parts(B, 0))

    def test_ratfunc_arithmetic_is_canonical(self):
        """Are the results of RatFunc arithmetic already in canonical form?"""

        for value in (RatFunc(B, C) * RatFunc(2 * C, 4 * B ** 2), RatFunc(B, C) + RatFunc(B, C),
                      RatFunc(B ** 2, C) / RatFunc(B, C ** 2), RatFunc(2 * B, 3 * C) ** 2):
            canonical = ratfunc_normalize(value)
            self.assertEqual((value.num, value.den), (canonical.num, canonical.den))


class RingHelpersTestCase(unittest.TestCase):
    """Tests for `services/rings.py - ring_of(), join_rings(), coerce(), simplify()`."""

    def test_ring_of(self):
        """Is every ring element classified, and are booleans refused?"""

        self.assertEqual(ring_of(3), INT)
        self.assertEqual(ring_of(Fraction(1, 3)), RAT)
        self.assertEqual(ring_of(B), POLY)
        self.assertEqual(ring_of(RatFunc(B, C)), RATFUNC)
        self.assertRaises(TypeError, ring_of, True)
        self.assertRaises(TypeError, ring_of, 1.5)

    def test_join_rings(self):
        """Does joining follow the ring table, and fail for rationals with polynomials?"""

        self.assertEqual(join_rings(INT, RAT), RAT)
        self.assertEqual(join_rings(POLY, INT), POLY)
        self.assertEqual(join_rings(RAT, RATFUNC), RATFUNC)
        self.assertRaises(RingMismatch, join_rings, RAT, POLY)

    def test_coerce(self):
        """With a larger target ring, is the value lifted; with a smaller one, refused?"""

        value = coerce(2, RAT)
        self.assertIsInstance(value, Fraction)
        self.assertEqual(value, 2)
        self.assertEqual(coerce(2, POLY), Poly2.constant(2))
        self.assertRaises(RingMismatch, coerce, Fraction(1, 2), INT)
        self.assertRaises(RingMismatch, coerce, B, INT)

    def test_simplify(self):
        """Does simplify move values to the smallest ring holding them?"""

        self.assertIsInstance(simplify(Fraction(4, 2)), int)
        self.assertEqual(simplify(Fraction(4, 2)), 2)
        self.assertEqual(simplify(RatFunc(6, 4)), Fraction(3, 2))
        self.assertEqual(simplify(RatFunc(B * C, C)), B)
        self.assertEqual(simplify(Poly2.constant(5)), 5)
        self.assertEqual(format_value(RatFunc(B * C, C)), 'b')

    def test_inverse(self):
        """Are units inverted in their own ring, and non-units refused?"""

        self.assertEqual(inverse(-1), -1)
        self.assertEqual(inverse(Fraction(2, 3)), Fraction(3, 2))
        self.assertEqual(inverse(Poly2.constant(-1)), -1)
        self.assertRaises(DivisionByZero, inverse, 2)
        self.assertRaises(DivisionByZero, inverse, B)

    def test_ring_arith_exact_div(self):
        """With exact and inexact quotients, does ring_arith divide correctly?"""

        self.assertEqual(ring_arith(12, 4, 'exact_div'), 3)
        self.assertRaises(InexactDivision, ring_arith, 7, 2, 'exact_div')
        self.assertRaises(DivisionByZero, ring_arith, 7, 0, 'exact_div')
        self.assertEqual(ring_arith(B * C + B, C + 1, 'exact_div'), B)
        self.assertEqual(ring_arith(Fraction(1, 2), 2, 'exact_div'), Fraction(1, 4))
        self.assertRaises(ValueError, ring_arith, 1, 2, 'pow')


def _nonzero(make):
    value = make()
    while not value:
        value = make()
    return value


class RingPropertiesTestCase(unittest.TestCase):
    """Tests for `services/rings.py - ring_arith(), simplify(), ratfunc_normalize()`."""

    def setUp(self):
        self.rng = utils.seeded(7)

    def _makers(self):
        rng = self.rng

        def integer():
            return rng.randint(-MAGNITUDE, MAGNITUDE)

        def rational():
            return Fraction(integer(), rng.randint(1, MAGNITUDE))

        def polynomial():
            return utils.random_poly2(rng, terms=3, degree=6, bound=MAGNITUDE)

        def quotient():
            return RatFunc(utils.random_poly2(rng), _nonzero(lambda: utils.random_poly2(rng)))

        return ((INT, integer), (RAT, rational), (POLY, polynomial), (RATFUNC, quotient))

    def test_ring_axioms(self):
        """With random triples in each ring, do addition and multiplication satisfy the ring axioms?"""

        for ring, make in self._makers():
            for _ in range(TRIALS):
                x, y, z = make(), make(), make()
                self.assertEqual(ring_arith(x, y, 'add'), ring_arith(y, x, 'add'), ring)
                self.assertEqual(ring_arith(x, y, 'mul'), ring_arith(y, x, 'mul'), ring)
                self.assertEqual(ring_arith(ring_arith(x, y, 'add'), z, 'add'),
                                 ring_arith(x, ring_arith(y, z, 'add'), 'add'), ring)
                self.assertEqual(ring_arith(ring_arith(x, y, 'mul'), z, 'mul'),
                                 ring_arith(x, ring_arith(y, z, 'mul'), 'mul'), ring)
                self.assertEqual(ring_arith(x, ring_arith(y, z, 'add'), 'mul'),
                                 ring_arith(ring_arith(x, y, 'mul'), ring_arith(x, z, 'mul'),
                                            'add'), ring)
                self.assertEqual(ring_arith(ring_arith(x, y, 'sub'), y, 'add'), x, ring)

    def test_exact_div_undoes_mul(self):
        """With random x and nonzero y in each ring, is exact_div(mul(x, y), y) equal to x?"""

        for ring, make in self._makers():
            for _ in range(TRIALS):
                x, y = make(), _nonzero(make)
                self.assertEqual(ring_arith(ring_arith(x, y, 'mul'), y, 'exact_div'), x, ring)

    def test_normalize_idempotent(self):
        """Does normalizing twice give the same representative as normalizing once?"""

        for ring, make in self._makers():
            for _ in range(TRIALS // 10):
                value = simplify(make())
                self.assertEqual(simplify(value), value, ring)
        for _ in range(TRIALS):
            num = utils.random_poly2(self.rng)
            den = _nonzero(lambda: utils.random_poly2(self.rng))
            once = ratfunc_normalize(RatFunc.from_parts(2 * B * num, 2 * B * den))
            twice = ratfunc_normalize(once)
            self.assertEqual((twice.num, twice.den), (once.num, once.den))
            self.assertEqual(once, RatFunc.from_parts(num, den))
            self.assertGreater(once.den.leading_coefficient(), 0)


if __name__ == '__main__':
    unittest.main()
