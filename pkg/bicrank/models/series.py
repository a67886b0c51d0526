"""
Serie de potencias truncada con coeficientes enteros de precisión arbitraria.

Los coeficientes viven en un arreglo numpy de ``dtype=object`` (enteros de
Python), de modo que las sumas desplazadas de la convolución se vectorizan
sin perder exactitud. Los arreglos quedan de solo lectura: una serie es
inmutable una vez construida.
"""
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import NonUnitConstantTermError, OrderOutOfRangeError, SeriesError

Scalar = Union[int, np.integer]


def _object_array(values: Sequence[int]) -> np.ndarray:
    array = np.empty(len(values), dtype=object)
    array[:] = list(values)
    return array


class PowerSeries:
    """
    Serie Σ c_n q^n conocida para 0 <= n <= order.

    Toda operación binaria trabaja al orden mínimo de sus operandos y nunca
    reporta coeficientes más allá de la truncación.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Scalar], order: Optional[int] = None):
        values = [int(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise OrderOutOfRangeError('El orden de truncación debe ser no negativo.')
        values = values[:order + 1]
        values.extend([0] * (order + 1 - len(values)))
        self._coeffs = _object_array(values)
        self._coeffs.flags.writeable = False

    @classmethod
    def _wrap(cls, array: np.ndarray) -> 'PowerSeries':
        instance = cls.__new__(cls)
        array.flags.writeable = False
        instance._coeffs = array
        return instance

    @classmethod
    def zero(cls, order: int) -> 'PowerSeries':
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> 'PowerSeries':
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> 'PowerSeries':
        """c·q^exponent truncada a ``order`` (nula si exponent > order)"""
        values = [0] * (order + 1)
        if 0 <= exponent <= order:
            values[exponent] = coefficient
        return cls(values, order)

    @classmethod
    def interleave(cls, components: Sequence['PowerSeries'], modulus: int) -> 'PowerSeries':
        """
        Reconstruye A a partir de sus m componentes de disección
        (componente r = coeficientes de q^{mn+r}).
        """
        if modulus < 1 or len(components) != modulus:
            raise SeriesError('Se requieren exactamente m componentes de disección.')
        order = min(modulus * (c.order + 1) + r for r, c in enumerate(components)) - 1
        result = np.zeros(order + 1, dtype=object)
        for residue, component in enumerate(components):
            count = len(result[residue::modulus])
            result[residue::modulus] = component._coeffs[:count]
        return cls._wrap(result)

    # Acceso

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return tuple(self._coeffs.tolist())

    def as_array(self) -> np.ndarray:
        """Vista de solo lectura de los coeficientes"""
        return self._coeffs

    def __getitem__(self, exponent: int) -> int:
        if not 0 <= exponent <= self.order:
            raise OrderOutOfRangeError(
                f'El exponente {exponent} está fuera del orden {self.order}.'
            )
        return int(self._coeffs[exponent])

    def __iter__(self):
        return iter(self._coeffs.tolist())

    def __len__(self) -> int:
        return len(self._coeffs)

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(int(j), int(self._coeffs[j])) for j in np.flatnonzero(self._coeffs)]

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._coeffs))

    def truncate(self, order: int) -> 'PowerSeries':
        if not 0 <= order <= self.order:
            raise OrderOutOfRangeError(
                f'No se puede truncar una serie de orden {self.order} a orden {order}.'
            )
        if order == self.order:
            return self
        return PowerSeries._wrap(self._coeffs[:order + 1].copy())

    def first_difference(self, other: 'PowerSeries') -> Optional[int]:
        """Primer exponente (dentro del orden común) donde difieren, o None"""
        order = min(self.order, other.order)
        mismatch = np.flatnonzero(self._coeffs[:order + 1] != other._coeffs[:order + 1])
        return int(mismatch[0]) if len(mismatch) else None

    # Anillo

    def _common(self, other: 'PowerSeries') -> Tuple[np.ndarray, np.ndarray, int]:
        order = min(self.order, other.order)
        return self._coeffs[:order + 1], other._coeffs[:order + 1], order

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            result = self._coeffs.copy()
            result[0] += int(other)
            return PowerSeries._wrap(result)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        a, b, _ = self._common(other)
        return PowerSeries._wrap(a + b)

    __radd__ = __add__

    def __neg__(self) -> 'PowerSeries':
        return PowerSeries._wrap(-self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, np.integer, PowerSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return PowerSeries._wrap(self._coeffs * int(other))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        a, b, order = self._common(other)
        # se recorre el operando con menos términos no nulos
        if np.count_nonzero(a) > np.count_nonzero(b):
            a, b = b, a
        result = np.zeros(order + 1, dtype=object)
        for j in np.flatnonzero(a):
            result[j:] += a[j] * b[:order + 1 - j]
        return PowerSeries._wrap(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'PowerSeries':
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, steps: int) -> 'PowerSeries':
        """Multiplica por q^steps conservando el orden"""
        if steps < 0:
            raise SeriesError('El desplazamiento debe ser no negativo.')
        result = np.zeros(self.order + 1, dtype=object)
        if steps <= self.order:
            result[steps:] = self._coeffs[:self.order + 1 - steps]
        return PowerSeries._wrap(result)

    def divide(self, divisor: 'PowerSeries') -> 'PowerSeries':
        """
        Cociente exacto self / divisor para divisor con término constante ±1.
        Recurrencia hacia adelante sobre los términos no nulos del divisor.
        """
        unit = int(divisor._coeffs[0])
        if unit not in (1, -1):
            raise NonUnitConstantTermError(
                f'No se puede dividir por una serie con término constante {unit}.'
            )
        order = min(self.order, divisor.order)
        terms = [
            (int(j) + 1, int(divisor._coeffs[j + 1]))
            for j in np.flatnonzero(divisor._coeffs[1:order + 1])
        ]
        numerator = self._coeffs[:order + 1].tolist()
        quotient = [0] * (order + 1)
        for n in range(order + 1):
            acc = numerator[n]
            for j, c in terms:
                if j > n:
                    break
                acc -= c * quotient[n - j]
            quotient[n] = unit * acc
        return PowerSeries._wrap(_object_array(quotient))

    def invert(self) -> 'PowerSeries':
        return PowerSeries.one(self.order).divide(self)

    # Sustituciones

    def compose_power(self, k: int) -> 'PowerSeries':
        """A(q^k) truncada al mismo orden"""
        if k < 1:
            raise SeriesError('El exponente de la sustitución q -> q^k debe ser positivo.')
        result = np.zeros(self.order + 1, dtype=object)
        result[::k] = self._coeffs[:self.order // k + 1]
        return PowerSeries._wrap(result)

    def alternate(self) -> 'PowerSeries':
        """A(-q)"""
        result = self._coeffs.copy()
        result[1::2] = -result[1::2]
        return PowerSeries._wrap(result)

    def dissect(self, residue: int, modulus: int) -> 'PowerSeries':
        """Serie con coeficiente n igual al de q^{mn+r} en A"""
        if modulus < 1 or not 0 <= residue < modulus:
            raise SeriesError(f'Disección inválida: r={residue}, m={modulus}.')
        if residue > self.order:
            raise OrderOutOfRangeError(
                f'El residuo {residue} excede el orden {self.order}.'
            )
        return PowerSeries._wrap(self._coeffs[residue::modulus].copy())

    # Comparación

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs.tolist() == other._coeffs.tolist()

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        head = ', '.join(str(c) for c in self._coeffs[:8].tolist())
        tail = ', ...' if self.order >= 8 else ''
        return f'PowerSeries([{head}{tail}], order={self.order})'
