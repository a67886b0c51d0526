"""
Servicio de la estadística bicrank: tabla M*(m, n), conteos por clase de
residuo, series de diferencias para los módulos 2, 3 y 4 y las verificaciones
de signo y de congruencia.
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import OrderOutOfRangeError, ResourceLimitError, ValidationError
from ..models import (
    BicrankTable,
    CheckReport,
    ClassCountTable,
    EtaQuotientSpec,
    Failure,
    LaurentPoly,
    PowerSeries,
    SignReport,
    SignVerdict,
)
from ..models.reports import EXCEPTION, MATCH, VIOLATION
from ..repositories import TableRepository
from .base_service import BaseService, lab_setting
from .series_service import SeriesService

logger = logging.getLogger(__name__)

# Pesos z^w de los factores 1/(1 - z^w q^j), en este orden fijo
Z_WEIGHTS = (1, -1, 2, -2)

# (q;q²)² se expande como (q;q)²/(q²;q²)²
DIFF_SPECS: Dict[int, EtaQuotientSpec] = {
    2: EtaQuotientSpec.of((1, 1, 2), (2, 2, -2)),
    3: EtaQuotientSpec.of((1, 1, 4), (3, 3, -2)),
    4: EtaQuotientSpec.of((1, 1, 4), (2, 2, -1), (4, 4, -1)),
}

# Clases comparadas por cada serie de diferencias: M*(r0,k,n) - M*(r1,k,n)
DIFF_CLASSES: Dict[int, Tuple[int, int]] = {2: (0, 1), 3: (0, 1), 4: (0, 2)}


def expected_sign(modulus: int, n: int) -> int:
    """Signo que predicen los teoremas para el coeficiente n de la serie de diferencias"""
    if modulus == 2:
        return 1 if n % 2 == 0 else -1
    if modulus == 3:
        return -1 if n % 3 == 1 else 1
    if modulus == 4:
        return 1 if n % 8 in (0, 2, 3, 7) else -1
    raise ValidationError(f'No hay patrón de signos para el módulo {modulus}.')


# Excepciones publicadas de cada patrón de signos
SIGN_EXCEPTIONS: Dict[int, Tuple[int, ...]] = {2: (), 3: (5,), 4: (4, 20)}

# Coeficientes nulos encontrados por cálculo que no figuran en la lista publicada
OBSERVED_SIGN_EXCEPTIONS: Dict[int, Tuple[int, ...]] = {2: (), 3: (), 4: (56,)}


def known_exceptions(modulus: int) -> Tuple[int, ...]:
    return tuple(sorted(
        SIGN_EXCEPTIONS.get(modulus, ()) + OBSERVED_SIGN_EXCEPTIONS.get(modulus, ())
    ))


class BicrankService(BaseService[TableRepository]):
    """
    Servicio para construir la tabla bivariada y derivar de ella conteos
    y verificaciones. Las tablas terminadas se memorizan en el repositorio.
    """

    def __init__(self, repository: Optional[TableRepository] = None,
                 series_service: Optional[SeriesService] = None):
        super().__init__(repository or TableRepository())
        self.series_service = series_service or SeriesService()

    def _check_order(self, order: int):
        if order < 0:
            raise OrderOutOfRangeError('El orden debe ser no negativo.')

    # Tablas

    def build_table(self, order: int, max_order: Optional[int] = None) -> BicrankTable:
        """
        Filas de (q;q)² / ((zq)(z⁻¹q)(z²q)(z⁻²q); q)_∞ hasta q^N.
        Cada factor 1/(1 - z^w q^j) se incorpora con T[n] += z^w T[n-j] en n creciente.
        """
        self._check_order(order)
        cap = lab_setting('TABLE_MAX_ORDER') if max_order is None else max_order
        if order > cap:
            raise ResourceLimitError(
                f'La tabla completa a orden {order} excede el límite {cap}; '
                f'use residue_counts para conteos por clase.'
            )

        def compute() -> BicrankTable:
            offset = 2 * order
            table = np.zeros((order + 1, 4 * order + 1), dtype=object)
            table[:, offset] = self.series_service.pochhammer(1, 1, 2, order).as_array()
            for weight in Z_WEIGHTS:
                for part in range(1, order + 1):
                    for n in range(part, order + 1):
                        source = n - part
                        lo, hi = offset - 2 * source, offset + 2 * source + 1
                        table[n, lo + weight:hi + weight] += table[source, lo:hi]
            rows = tuple(
                LaurentPoly(table[n, offset - 2 * n:offset + 2 * n + 1].tolist(), -2 * n)
                for n in range(order + 1)
            )
            logger.info(f"Tabla de bicrank construida a orden {order}")
            return BicrankTable(order, rows)

        return self._cached(('full', 0), order, compute)

    def residue_counts(self, order: int, modulus: int) -> ClassCountTable:
        """Misma recurrencia con el grado en z reducido módulo k"""
        self._check_order(order)
        if modulus < 1:
            raise ValidationError('El módulo debe ser positivo.')

        def compute() -> ClassCountTable:
            counts = np.zeros((order + 1, modulus), dtype=object)
            counts[:, 0] = self.series_service.pochhammer(1, 1, 2, order).as_array()
            for weight in Z_WEIGHTS:
                for part in range(1, order + 1):
                    for n in range(part, order + 1):
                        counts[n] += np.roll(counts[n - part], weight % modulus)
            return ClassCountTable(
                order, modulus, tuple(tuple(row) for row in counts.tolist())
            )

        return self._cached(('mod', modulus), order, compute)

    def class_count(self, table: BicrankTable, residue: int, modulus: int, n: int) -> int:
        """M*(j, k, n): suma de la fila n sobre los grados ≡ j (mod k)"""
        if modulus < 1 or not 0 <= residue < modulus:
            raise ValidationError(f'Se requiere 0 <= j < k (j={residue}, k={modulus}).')
        return table.class_count(residue, modulus, n)

    # Series de diferencias

    def diff_series(self, modulus: int, order: int) -> PowerSeries:
        if modulus not in DIFF_SPECS:
            raise ValidationError(f'No hay serie de diferencias para el módulo {modulus}.')
        return self.series_service.eta_quotient(DIFF_SPECS[modulus], order)

    def p2_series(self, order: int) -> PowerSeries:
        """Σ p₋₂(n) q^n = 1/(q;q)²"""
        return self.series_service.pochhammer(1, 1, -2, order)

    # Verificaciones

    def verify_specializations(self, table: BicrankTable, bound: int) -> CheckReport:
        """
        Compara diferencias de clases de la tabla con las tres series de
        diferencias y revisa M*(1,3,n) = M*(2,3,n), M*(1,4,n) = M*(3,4,n).
        """
        if bound > table.order:
            raise OrderOutOfRangeError(
                f'La cota {bound} excede el orden de la tabla ({table.order}).'
            )
        failures: List[Failure] = []
        diffs = {k: self.diff_series(k, bound) for k in DIFF_SPECS}
        for n in range(bound + 1):
            row = table.row(n)
            for k, (first, second) in DIFF_CLASSES.items():
                difference = row.class_sum(first, k) - row.class_sum(second, k)
                if difference != diffs[k][n]:
                    failures.append(Failure('diferencia', n, diffs[k][n], difference, k))
            for k, (first, second) in ((3, (1, 2)), (4, (1, 3))):
                left, right = row.class_sum(first, k), row.class_sum(second, k)
                if left != right:
                    failures.append(Failure('simetría', n, left, right, k))
        report = CheckReport('specializations', bound, tuple(failures))
        self._log_report(report)
        return report

    def verify_mod5(self, n_max: int, table: Optional[BicrankTable] = None) -> CheckReport:
        """
        Para 0 <= n <= n_max: las cinco clases mod 5 coinciden en 5n+2 y 5n+4 y
        valen p₋₂/5; en 5n+3 son congruentes mod 5; p₋₂(5n+2..5n+4) ≡ 0 (mod 5).
        Sin tabla se usan los conteos por residuo.
        """
        if n_max < 0:
            raise OrderOutOfRangeError('La cota debe ser no negativa.')
        order = 5 * n_max + 4
        if table is not None:
            if table.order < order:
                raise OrderOutOfRangeError(
                    f'Se requiere una tabla de orden {order} (tiene {table.order}).'
                )

            def classes(index):
                return [table.class_count(j, 5, index) for j in range(5)]
        else:
            counts = self.residue_counts(order, 5)

            def classes(index):
                return list(counts.row(index))
        p2 = self.p2_series(order)
        failures: List[Failure] = []
        for n in range(n_max + 1):
            for index in (5 * n + 2, 5 * n + 4):
                values = classes(index)
                if p2[index] % 5 or any(v * 5 != p2[index] for v in values):
                    failures.append(Failure('igualdad', index, p2[index] // 5, values, 5))
            index = 5 * n + 3
            values = classes(index)
            if len({v % 5 for v in values}) != 1:
                failures.append(Failure('congruencia', index, 'clases ≡ mod 5', values, 5))
            for index in (5 * n + 2, 5 * n + 3, 5 * n + 4):
                if p2[index] % 5:
                    failures.append(Failure('divisibilidad', index, 0, p2[index] % 5, 5))
        report = CheckReport('mod5', order, tuple(failures), {'n_max': n_max})
        self._log_report(report)
        return report

    def sign_report(self, modulus: int, order: int,
                    expected_exceptions: Optional[Tuple[int, ...]] = None) -> SignReport:
        """
        Clasifica cada coeficiente de la serie de diferencias: coincide con el
        signo predicho, es una excepción conocida o es una violación. Un
        coeficiente nulo nunca cuenta como coincidencia.
        """
        if expected_exceptions is None:
            expected_exceptions = known_exceptions(modulus)
        series = self.diff_series(modulus, order)
        rows = []
        for n, coefficient in enumerate(series):
            sign = expected_sign(modulus, n)
            if coefficient * sign > 0:
                status = MATCH
            elif n in expected_exceptions:
                status = EXCEPTION
            else:
                status = VIOLATION
            rows.append(SignVerdict(n, coefficient, sign, status))
        report = SignReport(modulus, order, tuple(rows), tuple(expected_exceptions))
        if report.violations:
            logger.warning(
                f"Patrón de signos mod {modulus}: {len(report.violations)} violaciones, "
                f"primera en n={report.violations[0].n}"
            )
        else:
            logger.info(
                f"Patrón de signos mod {modulus} hasta {order}: excepciones {report.exceptions_found}"
            )
        return report

    def g_series(self, order: int) -> PowerSeries:
        """g(q) = -4 (q;q)(q⁴;q⁴)⁴ / (q²;q²)³"""
        return -4 * self.series_service.eta(order, (1, 1, 1), (4, 4, 4), (2, 2, -3))

    def mod4_odd_congruence(self, order: int, table: Optional[BicrankTable] = None) -> CheckReport:
        """
        4 | M*(0,4,n) - M*(2,4,n) para todo n impar <= N; además la disección
        impar coincide con g(q) y, si hay tabla, con los conteos de la tabla.
        """
        self._check_order(order)
        diff4 = self.diff_series(4, order)
        failures: List[Failure] = []
        for n in range(1, order + 1, 2):
            if diff4[n] % 4:
                failures.append(Failure('congruencia mod 4', n, 0, diff4[n] % 4, 4))
        if order >= 1:
            odd = diff4.dissect(1, 2)
            g = self.g_series(odd.order)
            mismatch = odd.first_difference(g)
            if mismatch is not None:
                failures.append(
                    Failure('g(q)', 2 * mismatch + 1, g[mismatch], odd[mismatch], 4)
                )
        if table is not None:
            for n in range(1, min(order, table.order) + 1, 2):
                difference = table.class_count(0, 4, n) - table.class_count(2, 4, n)
                if difference != diff4[n]:
                    failures.append(Failure('tabla', n, diff4[n], difference, 4))
        report = CheckReport('mod4_odd', order, tuple(failures))
        self._log_report(report)
        return report

    def _log_report(self, report: CheckReport):
        if report.passed:
            logger.info(f"Verificación {report.name} hasta {report.checked_up_to}: ok")
        else:
            logger.warning(
                f"Verificación {report.name}: {len(report.failures)} fallas; "
                f"primera: {report.first_failure}"
            )

    # Exportación

    def table_triples(self, table: BicrankTable) -> List[Tuple[int, int, int]]:
        """Ternas (n, m, M*(m, n)) con coeficiente no nulo"""
        return [
            (n, m, value)
            for n, row in enumerate(table.rows)
            for m, value in row.items()
            if value
        ]

    def class_count_rows(self, counts: ClassCountTable) -> List[Tuple[int, ...]]:
        return [(n,) + tuple(row) for n, row in enumerate(counts.counts)]
