"""
Servicio del anillo de series truncadas: símbolos de Pochhammer, cocientes eta,
sustituciones, disecciones y las series theta/Lambert del catálogo de identidades.
"""
import logging
from math import isqrt
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..exceptions import InvalidFactorError, OrderOutOfRangeError
from ..models import EtaQuotientSpec, PowerSeries
from ..repositories import SeriesRepository
from ..validators import EtaQuotientValidator
from .base_service import BaseService

logger = logging.getLogger(__name__)


def generalized_pentagonals(limit: int) -> Iterator[Tuple[int, int]]:
    """
    Pares (k(3k-1)/2, (-1)^k) para k = 0, 1, -1, 2, -2, ... con exponente <= limit,
    en orden creciente de exponente.
    """
    yield 0, 1
    k = 1
    while True:
        sign = -1 if k % 2 else 1
        first = k * (3 * k - 1) // 2
        if first > limit:
            return
        yield first, sign
        second = k * (3 * k + 1) // 2
        if second > limit:
            return
        yield second, sign
        k += 1


def _multiply_sparse(array: np.ndarray, terms: List[Tuple[int, int]], order: int) -> np.ndarray:
    result = np.zeros(order + 1, dtype=object)
    for j, c in terms:
        if j > order:
            break
        result[j:] += c * array[:order + 1 - j]
    return result


def _divide_sparse(array: np.ndarray, terms: List[Tuple[int, int]], order: int) -> np.ndarray:
    # terms[0] == (0, 1): divisores con término constante 1
    numerator = array.tolist()
    tail = [(j, c) for j, c in terms[1:] if j <= order]
    quotient = [0] * (order + 1)
    for n in range(order + 1):
        acc = numerator[n]
        for j, c in tail:
            if j > n:
                break
            acc -= c * quotient[n - j]
        quotient[n] = acc
    result = np.empty(order + 1, dtype=object)
    result[:] = quotient
    return result


def _multiply_binomial(array: np.ndarray, step: int, order: int) -> np.ndarray:
    """array · (1 - q^step)"""
    array[step:] = array[step:] - array[:order + 1 - step]
    return array


def _divide_binomial(array: np.ndarray, step: int, order: int) -> np.ndarray:
    """array / (1 - q^step): suma acumulada dentro de cada clase de residuo"""
    rows = -(-(order + 1) // step)
    padded = np.zeros(rows * step, dtype=object)
    padded[:order + 1] = array
    return np.cumsum(padded.reshape(rows, step), axis=0).ravel()[:order + 1].copy()


class SeriesService(BaseService[SeriesRepository]):
    """
    Servicio para expandir productos infinitos y operar con series truncadas.
    Las expansiones de cocientes eta se memorizan en el repositorio.
    """

    def __init__(self, repository: Optional[SeriesRepository] = None):
        super().__init__(repository or SeriesRepository())

    # Operaciones de anillo

    def add(self, a: PowerSeries, b: PowerSeries) -> PowerSeries:
        return a + b

    def negate(self, a: PowerSeries) -> PowerSeries:
        return -a

    def mul(self, a: PowerSeries, b: PowerSeries) -> PowerSeries:
        return a * b

    def invert(self, a: PowerSeries) -> PowerSeries:
        return a.invert()

    def compose_power(self, a: PowerSeries, k: int) -> PowerSeries:
        return a.compose_power(k)

    def alternate(self, a: PowerSeries) -> PowerSeries:
        return a.alternate()

    def dissect(self, a: PowerSeries, residue: int, modulus: int) -> PowerSeries:
        return a.dissect(residue, modulus)

    # Productos de Pochhammer

    def _validate(self, triples, order: int):
        validator = EtaQuotientValidator({'factors': list(triples), 'order': order})
        if not validator.is_valid():
            errors = validator.get_error_dict()
            if 'order' in errors:
                raise OrderOutOfRangeError(validator.get_error_message())
            raise InvalidFactorError(validator.get_error_message())

    def euler_pentagonal(self, order: int) -> PowerSeries:
        """(q;q)_∞ por el teorema de los números pentagonales"""
        self._validate([], order)
        values = [0] * (order + 1)
        for exponent, sign in generalized_pentagonals(order):
            values[exponent] = sign
        return PowerSeries(values, order)

    def euler_product(self, order: int) -> PowerSeries:
        """(q;q)_∞ como producto directo de los binomios (1 - q^j), j <= order"""
        self._validate([], order)
        array = np.zeros(order + 1, dtype=object)
        array[0] = 1
        for step in range(1, order + 1):
            array = _multiply_binomial(array, step, order)
        return PowerSeries._wrap(array)

    def _apply_factor(self, array: np.ndarray, offset: int, modulus: int,
                      exponent: int, order: int) -> np.ndarray:
        if offset == modulus:
            terms = [(modulus * j, c) for j, c in generalized_pentagonals(order // modulus)]
            for _ in range(abs(exponent)):
                if exponent > 0:
                    array = _multiply_sparse(array, terms, order)
                else:
                    array = _divide_sparse(array, terms, order)
            return array
        for step in range(offset, order + 1, modulus):
            for _ in range(abs(exponent)):
                if exponent > 0:
                    array = _multiply_binomial(array, step, order)
                else:
                    array = _divide_binomial(array, step, order)
        return array

    def pochhammer(self, offset: int, modulus: int, exponent: int, order: int) -> PowerSeries:
        """(q^a; q^b)_∞^e a orden N"""
        return self.eta_quotient(EtaQuotientSpec.of((offset, modulus, exponent)), order)

    def negated_pochhammer(self, offset: int, modulus: int, exponent: int,
                           order: int) -> PowerSeries:
        """(-q^a; q^b)_∞^e = (q^{2a}; q^{2b})^e / (q^a; q^b)^e"""
        spec = EtaQuotientSpec.of(
            (2 * offset, 2 * modulus, exponent),
            (offset, modulus, -exponent),
        )
        return self.eta_quotient(spec, order)

    def eta_quotient(self, spec: EtaQuotientSpec, order: int) -> PowerSeries:
        """Producto de todos los factores del cociente a orden N, exacto"""
        self._validate(spec.as_triples(), order)
        normalized = spec.normalized()

        def compute() -> PowerSeries:
            array = np.zeros(order + 1, dtype=object)
            array[0] = 1
            # primero los factores con exponente positivo
            factors = sorted(normalized.factors, key=lambda f: f.exponent < 0)
            for factor in factors:
                array = self._apply_factor(
                    array, factor.offset, factor.modulus, factor.exponent, order
                )
            series = PowerSeries._wrap(array)
            logger.debug(
                f"Expandido {normalized} a orden {order}: {series.nonzero_count()} términos no nulos"
            )
            return series

        return self._cached(('eta', normalized), order, compute)

    def eta(self, order: int, *triples: Tuple[int, int, int]) -> PowerSeries:
        """Atajo: ``eta(N, (1, 1, 4), (3, 3, -2))``"""
        return self.eta_quotient(EtaQuotientSpec.of(*triples), order)

    def partition_numbers(self, order: int) -> List[int]:
        """p(n) para n <= N por programación dinámica de partes (independiente de Euler)"""
        self._validate([], order)
        counts = [1] + [0] * order
        for part in range(1, order + 1):
            for n in range(part, order + 1):
                counts[n] += counts[n - part]
        return counts

    # Series theta y de Lambert

    def lambert_p(self, order: int) -> PowerSeries:
        """
        P(q) = (q;q)_∞ (1 + 6 Σ_{n>=0} (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2}))).
        """
        self._validate([], order)

        def compute() -> PowerSeries:
            lambert = np.zeros(order + 1, dtype=object)
            lambert[0] = 1
            for k in range(1, order + 1):
                if k % 3 == 1:
                    lambert[k::k] += 6
                elif k % 3 == 2:
                    lambert[k::k] -= 6
            return PowerSeries._wrap(lambert) * self.pochhammer(1, 1, 1, order)

        return self._cached(('lambert_p', None), order, compute)

    def cubic_lattice_sum(self, order: int) -> PowerSeries:
        """Σ_{m,n ∈ Z} q^{m²+mn+n²}"""
        self._validate([], order)
        counts = [0] * (order + 1)
        # m² + mn + n² >= 3m²/4
        radius = isqrt(4 * order // 3) + 1
        for m in range(-radius, radius + 1):
            for n in range(-radius, radius + 1):
                value = m * m + m * n + n * n
                if value <= order:
                    counts[value] += 1
        return PowerSeries(counts, order)

    def cubic_theta(self, order: int) -> PowerSeries:
        """P(q) = (q;q)_∞ · Σ_{m,n} q^{m²+mn+n²}"""
        return self._cached(
            ('cubic_theta', None), order,
            lambda: self.cubic_lattice_sum(order) * self.pochhammer(1, 1, 1, order),
        )

    def gauss_theta(self, order: int) -> PowerSeries:
        """Σ_{m>=0} q^{m(m+1)}"""
        self._validate([], order)
        values = [0] * (order + 1)
        m = 0
        while m * (m + 1) <= order:
            values[m * (m + 1)] = 1
            m += 1
        return PowerSeries(values, order)
