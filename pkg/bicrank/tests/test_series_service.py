"""
Pruebas unitarias para SeriesService: productos de Pochhammer, cocientes eta
y las series theta y de Lambert.
"""
from django.test import SimpleTestCase

from ..exceptions import InvalidFactorError, OrderOutOfRangeError
from ..models import EtaQuotientSpec, PowerSeries
from ..repositories import SeriesRepository
from ..services.series_service import SeriesService, generalized_pentagonals

EULER = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
P_MINUS_TWO = [1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, 752, 1165]


class SeriesServiceTestCase(SimpleTestCase):
    """Pruebas para el servicio de series"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.repository = SeriesRepository()
        self.service = SeriesService(self.repository)

    def test_generalized_pentagonals(self):
        self.assertEqual(
            list(generalized_pentagonals(12)),
            [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)],
        )

    def test_euler_pentagonal_matches_product(self):
        """El teorema pentagonal coincide con el producto directo"""
        self.assertEqual(list(self.service.euler_pentagonal(12)), EULER)
        self.assertEqual(self.service.euler_pentagonal(80), self.service.euler_product(80))

    def test_partition_numbers_against_euler(self):
        partitions = PowerSeries(self.service.partition_numbers(100))
        self.assertEqual(partitions, self.service.pochhammer(1, 1, -1, 100))
        self.assertEqual(partitions[100], 190569292)

    def test_p_minus_two(self):
        self.assertEqual(list(self.service.pochhammer(1, 1, -2, 12)), P_MINUS_TWO)

    def test_order_zero(self):
        self.assertEqual(self.service.eta(0, (1, 1, 4), (3, 3, -2)).coefficients, (1,))

    def test_non_full_factor(self):
        """(q; q²)_∞ = (q;q)_∞ / (q²;q²)_∞"""
        direct = self.service.pochhammer(1, 2, 3, 60)
        quotient = self.service.eta(60, (1, 1, 3), (2, 2, -3))
        self.assertEqual(direct, quotient)

    def test_negated_pochhammer(self):
        """(-q; q)_∞ cuenta particiones en partes distintas"""
        distinct = self.service.negated_pochhammer(1, 1, 1, 10)
        self.assertEqual(list(distinct), [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10])

    def test_inverse_round_trip(self):
        spec = EtaQuotientSpec.of((1, 1, 4), (2, 2, -1), (4, 4, -1))
        forward = self.service.eta_quotient(spec, 50)
        backward = self.service.eta(50, (1, 1, -4), (2, 2, 1), (4, 4, 1))
        self.assertEqual(forward * backward, PowerSeries.one(50))

    def test_zero_exponent_is_one(self):
        self.assertEqual(self.service.eta(8, (1, 3, 2), (1, 3, -2)), PowerSeries.one(8))

    def test_invalid_factor(self):
        with self.assertRaises(InvalidFactorError):
            self.service.pochhammer(3, 2, 1, 10)
        with self.assertRaises(InvalidFactorError):
            self.service.pochhammer(0, 2, 1, 10)

    def test_negative_order(self):
        with self.assertRaises(OrderOutOfRangeError):
            self.service.pochhammer(1, 1, 1, -1)

    def test_cache_serves_lower_orders(self):
        """Una expansión memorizada a orden alto sirve para órdenes menores"""
        high = self.service.pochhammer(1, 1, -2, 40)
        low = self.service.pochhammer(1, 1, -2, 12)
        self.assertEqual(low, high.truncate(12))
        self.assertEqual(len(self.repository.keys()), 1)

    def test_cubic_forms_of_p(self):
        """Las dos representaciones de P(q) coinciden"""
        self.assertEqual(
            list(self.service.lambert_p(12)),
            [1, 5, -7, 0, 0, -11, 0, 13, 0, 0, 0, 0, 17],
        )
        self.assertEqual(self.service.lambert_p(150), self.service.cubic_theta(150))

    def test_gauss_theta(self):
        self.assertEqual(self.service.gauss_theta(12).nonzero_terms(), [(0, 1), (2, 1), (6, 1), (12, 1)])

    def test_pochhammer_zero_exponent(self):
        self.assertEqual(self.service.pochhammer(3, 5, 0, 10), PowerSeries.one(10))

    def test_partitions_at_two_thousand(self):
        """1/(q;q)_∞ reproduce p(n) hasta n = 2000"""
        partitions = self.service.partition_numbers(2000)
        self.assertEqual(list(self.service.pochhammer(1, 1, -1, 2000)), partitions)
        self.assertEqual(partitions[1000], 24061467864032622473692149727991)

    def test_euler_pentagonal_at_five_hundred(self):
        self.assertEqual(self.service.euler_pentagonal(500), self.service.euler_product(500))
