"""
Pruebas unitarias para AsymptoticService: sumas de Dedekind, raíces de la
unidad, Bessel I₀, términos principales y umbrales de dominancia.
"""
from fractions import Fraction
from math import gcd

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from ..exceptions import PrecisionExhaustedError, ValidationError
from ..models import precision_context
from ..services.asymptotic_service import AsymptoticService
from ..services.bicrank_service import BicrankService
from ..services.series_service import SeriesService


class ExactArithmeticTestCase(SimpleTestCase):
    """Pruebas de la aritmética exacta: ((x)), s(d, c) y ω"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = AsymptoticService()

    def test_sawtooth(self):
        self.assertEqual(self.service.sawtooth(Fraction(1, 3)), Fraction(-1, 6))
        self.assertEqual(self.service.sawtooth(Fraction(-1, 4)), Fraction(1, 4))
        self.assertEqual(self.service.sawtooth(Fraction(2)), 0)

    def test_dedekind_sums(self):
        self.assertEqual(self.service.dedekind_sum(1, 3), Fraction(1, 18))
        self.assertEqual(self.service.dedekind_sum(2, 3), Fraction(-1, 18))
        self.assertEqual(self.service.dedekind_sum(1, 4), Fraction(1, 8))
        self.assertEqual(self.service.dedekind_sum(5, 1), 0)

    def test_dedekind_sum_requires_coprime(self):
        with self.assertRaises(ValidationError):
            self.service.dedekind_sum(2, 4)

    def test_dedekind_reciprocity(self):
        """s(d, c) + s(c, d) = -1/4 + (d/c + c/d + 1/(dc)) / 12"""
        for c in range(2, 61):
            for d in range(1, c):
                if gcd(d, c) != 1:
                    continue
                total = self.service.dedekind_sum(d, c) + self.service.dedekind_sum(c, d)
                expected = Fraction(-1, 4) + (Fraction(d, c) + Fraction(c, d) + Fraction(1, d * c)) / 12
                self.assertEqual(total, expected, (d, c))

    def test_omega(self):
        self.assertEqual(self.service.omega(1, 1, 3).turns, Fraction(8, 9))
        self.assertEqual(self.service.omega(1, 1, 4).turns, Fraction(3, 4))

    def test_omega_pairs_conjugate(self):
        """ω_{h,k'} y ω_{k-h,k'} son conjugados"""
        for modulus, kprime in ((3, 1), (4, 1), (4, 2)):
            k = modulus * kprime
            for h in range(1, k):
                if Fraction(h, k).denominator != k:
                    continue
                total = self.service.omega(h, kprime, modulus) + self.service.omega(k - h, kprime, modulus)
                self.assertEqual(total.turns, 0)

    def test_invalid_modulus(self):
        with self.assertRaises(ValidationError):
            self.service.omega(1, 1, 5)


class BesselTestCase(SimpleTestCase):
    """Pruebas para I₀ y sus cotas elementales"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = AsymptoticService()

    def test_known_values(self):
        self.assertAlmostEqual(float(self.service.bessel_i0(0)), 1.0, places=15)
        self.assertAlmostEqual(float(self.service.bessel_i0(1)), 1.2660658777520082, places=14)
        self.assertAlmostEqual(float(self.service.bessel_i0(10)), 2815.716628466254, places=8)

    def test_matches_mpmath_besseli(self):
        """La serie propia coincide con besseli de mpmath"""
        ctx = precision_context(192)
        for x in ('0.25', 3, 17, 120):
            ours = self.service.bessel_i0(x, 192).value
            reference = ctx.besseli(0, ctx.mpf(x))
            self.assertLess(abs(ours - reference), ctx.ldexp(reference, -180))

    def test_small_and_moderate_arguments(self):
        ctx = precision_context(192)
        for x in ('0.1', 2, 10):
            ours = self.service.bessel_i0(x, 192).value
            reference = ctx.besseli(0, ctx.mpf(x))
            self.assertLess(abs(ours - reference), ctx.ldexp(reference, -180), x)

    def test_negative_argument(self):
        with self.assertRaises(ValidationError):
            self.service.bessel_i0(-1)

    def test_elementary_bounds(self):
        for x in ('0.5', 1, 5, 50, 400):
            verdict = self.service.bessel_bounds_check(x)
            self.assertTrue(verdict.passed, x)
        self.assertIsNone(self.service.bessel_bounds_check('0.5').lower_holds)


class MainTermTestCase(SimpleTestCase):
    """Pruebas para los términos principales y las cotas de error"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = AsymptoticService()
        self.bicrank = BicrankService(series_service=SeriesService())

    def test_reference_values(self):
        self.assertAlmostEqual(float(self.service.main_term(3, 1)), -5.36979, places=4)
        self.assertAlmostEqual(float(self.service.error_bound(3, 1)), 386.736, places=2)
        self.assertAlmostEqual(float(self.service.main_term(4, 1)), -3.76222, places=4)
        self.assertAlmostEqual(float(self.service.error_bound(4, 1)), 458.873, places=2)
        self.assertAlmostEqual(float(self.service.main_term(4, 2)), 3.19554, places=4)
        self.assertAlmostEqual(float(self.service.error_bound(4, 2)), 778.613, places=2)

    def test_closed_forms_match_exponential_sums(self):
        """Los coeficientes cerrados coinciden con las sumas de raíces de la unidad"""
        for modulus in (3, 4):
            for n in range(1, 17):
                closed = self.service.main_term(modulus, n).value
                summed = self.service.main_term_from_sums(modulus, n).value
                self.assertLess(abs(closed - summed), 1e-40 * max(1, abs(closed)), (modulus, n))

    def test_exponential_sums_are_real(self):
        for kprime in (1, 2):
            total = self.service.root_of_unity_main(4, kprime, 7)
            self.assertLess(float(total.imag_residual.value), 1e-40)

    def test_exponential_sums_are_real_for_small_moduli(self):
        """La parte imaginaria se cancela para m = 3, 4, k' <= 4 y n <= 24"""
        for modulus in (3, 4):
            for kprime in range(1, 5):
                for n in range(25):
                    total = self.service.root_of_unity_main(modulus, kprime, n)
                    self.assertLess(float(total.imag_residual.value), 1e-40, (modulus, kprime, n))

    def test_mod4_coefficients_vanish(self):
        c1, c2 = self.service.main_coeff(4, 2)
        self.assertEqual(float(c1), 0.0)
        c1, c2 = self.service.main_coeff(4, 3)
        self.assertEqual(float(c2), 0.0)

    def test_asymptotic_bound_holds(self):
        for modulus in (3, 4):
            exact = self.bicrank.diff_series(modulus, 40)
            for n in range(1, 41):
                verdict = self.service.check_asymptotic(modulus, n, exact[n])
                self.assertTrue(verdict.passed, (modulus, n))

    def test_large_violation_detected(self):
        verdict = self.service.check_asymptotic(3, 10, 10 ** 6)
        self.assertFalse(verdict.passed)

    def test_kotesovec_ratio(self):
        exact = self.bicrank.diff_series(2, 100)
        ratio = exact[100] / float(self.service.kotesovec_estimate(100))
        self.assertAlmostEqual(ratio, 0.9723, places=2)
        self.assertLess(float(self.service.kotesovec_estimate(99)), 0)

    def test_kotesovec_ratio_at_two_thousand(self):
        exact = self.bicrank.diff_series(2, 2000)
        ratio = exact[2000] / float(self.service.kotesovec_estimate(2000))
        self.assertAlmostEqual(ratio, 1.0, delta=0.05)
        self.assertAlmostEqual(ratio, 0.9937, places=2)


class DominanceTestCase(SimpleTestCase):
    """Pruebas para la búsqueda de umbrales de dominancia"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = AsymptoticService()

    def test_mod3_threshold(self):
        report = self.service.dominance_scan(3, 100, 120)
        self.assertEqual(report.last_nonpositive, 107)
        self.assertEqual(report.stable_from, 108)
        self.assertTrue(report.holds_from_threshold)
        self.assertEqual(report.published_threshold, 114)

    def test_mod4_threshold(self):
        report = self.service.dominance_scan(4, 2100, 2125)
        self.assertEqual(report.last_nonpositive, 2112)
        self.assertEqual(report.stable_from, 2113)

    def test_fully_dominant_range(self):
        report = self.service.dominance_scan(3, 200, 205)
        self.assertEqual(report.nonpositive, [])
        self.assertEqual(report.stable_from, 200)

    def test_invalid_range(self):
        with self.assertRaises(ValidationError):
            self.service.dominance_scan(3, 10, 5)

    @override_settings(BICRANK_LAB={**settings.BICRANK_LAB, 'MAX_PRECISION': 256})
    def test_precision_exhausted(self):
        """Un margen exactamente nulo nunca se decide"""
        with self.assertRaises(PrecisionExhaustedError):
            self.service._decide(lambda bits: (0, 1, None), 128, 'prueba')
