"""
Pruebas unitarias para BicrankService: tabla bivariada, conteos por clase,
series de diferencias y patrones de signo.
"""
from django.test import SimpleTestCase

from ..exceptions import OrderOutOfRangeError, ResourceLimitError, ValidationError
from ..models.reports import EXCEPTION, MATCH
from ..services.bicrank_service import (
    OBSERVED_SIGN_EXCEPTIONS,
    SIGN_EXCEPTIONS,
    BicrankService,
    expected_sign,
    known_exceptions,
)
from ..services.series_service import SeriesService

DIFF2 = [1, -2, 1, -2, 4, -4, 5, -6, 9, -12, 13, -16, 21, -26, 29, -36, 46, -54, 62, -74, 90]
DIFF3 = [1, -4, 2, 10, -13, 0, 11, -22, 11, 30, -35, 2, 40, -66, 13, 68, -88, 22, 89, -132, 35]
DIFF4 = [1, -4, 3, 4, 0, -8, -5, 12, 1, -8, 3, 16, -7, -20, -5, 24, 2, -28, 6, 36, 2, -36,
         -10, 44, 3]

# Filas M*(m, n) desde z^(-2n) hasta z^(2n)
TABLE_ROWS = {
    1: [1, 1, -2, 1, 1],
    2: [1, 1, 0, 0, 1, 0, 0, 1, 1],
    3: [1, 1, 0, 2, -1, 0, 4, 0, -1, 2, 0, 1, 1],
    4: [1, 1, 0, 2, 2, -1, 3, 2, 0, 2, 3, -1, 2, 2, 0, 1, 1],
}


class BicrankTableTestCase(SimpleTestCase):
    """Pruebas para la construcción de la tabla bivariada"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = BicrankService(series_service=SeriesService())
        self.table = self.service.build_table(20)

    def test_small_rows(self):
        for n, expected in TABLE_ROWS.items():
            row = self.table.row(n)
            self.assertEqual(
                [row.coefficient(m) for m in range(-2 * n, 2 * n + 1)], expected, f'fila {n}'
            )

    def test_rows_are_symmetric(self):
        for row in self.table.rows:
            self.assertTrue(row.is_symmetric())

    def test_row_totals_are_p_minus_two(self):
        """En z = 1 la tabla se reduce a 1/(q;q)²"""
        p2 = self.service.p2_series(20)
        self.assertEqual([row.total() for row in self.table.rows], list(p2))

    def test_specializations(self):
        report = self.service.verify_specializations(self.table, 20)
        self.assertTrue(report.passed, report.first_failure)

    def test_specialization_bound_beyond_table(self):
        with self.assertRaises(OrderOutOfRangeError):
            self.service.verify_specializations(self.table, 21)

    def test_table_limit(self):
        with self.assertRaises(ResourceLimitError):
            self.service.build_table(30, max_order=25)

    def test_row_out_of_range(self):
        with self.assertRaises(OrderOutOfRangeError):
            self.table.row(21)


class ResidueCountsTestCase(SimpleTestCase):
    """Pruebas para los conteos por clase de residuo sin tabla completa"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = BicrankService(series_service=SeriesService())

    def test_mod5_counts(self):
        counts = self.service.residue_counts(14, 5)
        self.assertEqual(counts.row(2), (1,) * 5)
        self.assertEqual(counts.row(3), (6, 1, 1, 1, 1))
        self.assertEqual(counts.row(4), (4,) * 5)
        self.assertEqual(counts.row(7), (22,) * 5)
        self.assertEqual(counts.row(8), (41, 36, 36, 36, 36))
        self.assertEqual(counts.row(9), (60,) * 5)
        self.assertEqual(counts.row(13), (362, 352, 352, 352, 352))
        self.assertEqual(counts.row(14), (533,) * 5)

    def test_mod3_and_mod4_counts(self):
        mod3 = self.service.residue_counts(5, 3)
        self.assertEqual(mod3.row(1), (-2, 2, 2))
        self.assertEqual(mod3.row(3), (10, 0, 0))
        self.assertEqual(mod3.row(5), (12, 12, 12))
        mod4 = self.service.residue_counts(7, 4)
        self.assertEqual(mod4.row(1), (-2, 1, 2, 1))
        self.assertEqual(mod4.row(4), (6, 4, 6, 4))
        self.assertEqual(mod4.row(7), (32, 29, 20, 29))

    def test_counts_agree_with_table(self):
        table = self.service.build_table(15)
        counts = self.service.residue_counts(15, 4)
        for n in range(16):
            self.assertEqual(
                counts.row(n), tuple(self.service.class_count(table, j, 4, n) for j in range(4))
            )

    def test_invalid_class(self):
        table = self.service.build_table(3)
        with self.assertRaises(ValidationError):
            self.service.class_count(table, 4, 4, 1)


class DifferenceSeriesTestCase(SimpleTestCase):
    """Pruebas para las series de diferencias y los teoremas de signo"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.service = BicrankService(series_service=SeriesService())

    def test_known_prefixes(self):
        self.assertEqual(list(self.service.diff_series(2, 20)), DIFF2)
        self.assertEqual(list(self.service.diff_series(3, 20)), DIFF3)
        self.assertEqual(list(self.service.diff_series(4, 24)), DIFF4)

    def test_alternated_mod2_series_is_positive(self):
        """Con q -> -q la diferencia mod 2 tiene coeficientes positivos"""
        alternated = self.service.diff_series(2, 500).alternate()
        self.assertTrue(all(c > 0 for c in alternated))
        self.assertEqual(list(alternated)[:5], [1, 2, 1, 2, 4])

    def test_unknown_modulus(self):
        with self.assertRaises(ValidationError):
            self.service.diff_series(5, 10)

    def test_expected_sign_patterns(self):
        self.assertEqual([expected_sign(2, n) for n in range(4)], [1, -1, 1, -1])
        self.assertEqual([expected_sign(3, n) for n in range(3)], [1, -1, 1])
        self.assertEqual(
            [expected_sign(4, n) for n in range(8)], [1, -1, 1, 1, -1, -1, -1, 1]
        )

    def test_mod2_sign_pattern(self):
        report = self.service.sign_report(2, 300)
        self.assertTrue(report.passed)
        self.assertEqual(report.exceptions_found, ())

    def test_mod3_exception_at_five(self):
        report = self.service.sign_report(3, 300)
        self.assertTrue(report.passed)
        self.assertEqual(report.exceptions_found, (5,))
        self.assertEqual(report.rows[5].status, EXCEPTION)
        self.assertEqual(report.rows[4].status, MATCH)

    def test_mod4_exceptions(self):
        """Además de las excepciones publicadas, el coeficiente de q^56 es nulo"""
        report = self.service.sign_report(4, 300)
        self.assertTrue(report.passed)
        self.assertEqual(report.exceptions_found, (4, 20, 56))
        self.assertEqual(report.expected_exceptions, known_exceptions(4))

    def test_mod4_zero_at_fifty_six(self):
        series = self.service.diff_series(4, 56)
        self.assertEqual(series[56], 0)
        self.assertNotEqual(series[55], 0)

    def test_published_mod4_exceptions_alone_flag_fifty_six(self):
        report = self.service.sign_report(4, 60, expected_exceptions=SIGN_EXCEPTIONS[4])
        self.assertEqual([row.n for row in report.violations], [56])
        self.assertFalse(report.passed)
        self.assertEqual(OBSERVED_SIGN_EXCEPTIONS[4], (56,))

    def test_missing_exception_fails(self):
        """Declarar una excepción que no aparece hace fallar el reporte"""
        report = self.service.sign_report(3, 40, expected_exceptions=(5, 7))
        self.assertEqual(report.missing_exceptions, (7,))
        self.assertFalse(report.passed)

    def test_undeclared_exception_is_violation(self):
        report = self.service.sign_report(4, 30, expected_exceptions=(4,))
        self.assertEqual([row.n for row in report.violations], [20])
        self.assertFalse(report.passed)

    def test_mod5_structure(self):
        report = self.service.verify_mod5(12)
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(report.checked_up_to, 64)

    def test_mod5_with_table(self):
        table = self.service.build_table(14)
        self.assertTrue(self.service.verify_mod5(2, table).passed)
        with self.assertRaises(OrderOutOfRangeError):
            self.service.verify_mod5(3, table)

    def test_mod4_odd_congruence(self):
        table = self.service.build_table(30)
        report = self.service.mod4_odd_congruence(120, table)
        self.assertTrue(report.passed, report.first_failure)

    def test_table_triples(self):
        table = self.service.build_table(1)
        self.assertEqual(
            self.service.table_triples(table),
            [(0, 0, 1), (1, -2, 1), (1, -1, 1), (1, 0, -2), (1, 1, 1), (1, 2, 1)],
        )
