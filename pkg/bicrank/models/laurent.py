"""
Polinomios de Laurent en z y la tabla bivariada M*(m, n).
"""
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..exceptions import OrderOutOfRangeError, ValidationError


class LaurentPoly:
    """Σ c_m z^m para min_degree <= m <= max_degree, en forma canónica (sin ceros extremos)"""

    __slots__ = ('min_degree', 'coeffs')

    def __init__(self, coeffs: Sequence[int], min_degree: int = 0):
        values = [int(c) for c in coeffs]
        start, stop = 0, len(values)
        while start < stop and values[start] == 0:
            start += 1
        while stop > start and values[stop - 1] == 0:
            stop -= 1
        self.coeffs: Tuple[int, ...] = tuple(values[start:stop])
        self.min_degree: int = min_degree + start if self.coeffs else 0

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> int:
        index = degree - self.min_degree
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def items(self) -> Iterator[Tuple[int, int]]:
        for index, value in enumerate(self.coeffs):
            yield self.min_degree + index, value

    def total(self) -> int:
        """Evaluación en z = 1"""
        return sum(self.coeffs)

    def class_sum(self, residue: int, modulus: int) -> int:
        """Σ de los coeficientes con grado ≡ residue (mod modulus)"""
        return sum(value for degree, value in self.items() if degree % modulus == residue)

    def is_symmetric(self) -> bool:
        return self.is_zero() or (
            self.min_degree == -self.max_degree and self.coeffs == self.coeffs[::-1]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_degree, self.coeffs))

    def __repr__(self) -> str:
        return f'LaurentPoly({list(self.coeffs)}, min_degree={self.min_degree})'


@dataclass(frozen=True)
class BicrankTable:
    """Filas n = 0..order; el coeficiente de z^m en la fila n es M*(m, n)"""
    order: int
    rows: Tuple[LaurentPoly, ...]

    def row(self, n: int) -> LaurentPoly:
        if not 0 <= n <= self.order:
            raise OrderOutOfRangeError(f'La fila {n} está fuera del orden {self.order}.')
        return self.rows[n]

    def coefficient(self, m: int, n: int) -> int:
        return self.row(n).coefficient(m)

    def class_count(self, residue: int, modulus: int, n: int) -> int:
        return self.row(n).class_sum(residue, modulus)


@dataclass(frozen=True)
class ClassCountTable:
    """
    Conteos M*(j, k, n) para un módulo fijo, sin conservar los polinomios de
    Laurent. ``counts[n][j]`` es M*(j, k, n).
    """
    order: int
    modulus: int
    counts: Tuple[Tuple[int, ...], ...]

    def count(self, residue: int, n: int) -> int:
        if not 0 <= residue < self.modulus:
            raise ValidationError(f'El residuo {residue} no está en 0..{self.modulus - 1}.')
        if not 0 <= n <= self.order:
            raise OrderOutOfRangeError(f'La fila {n} está fuera del orden {self.order}.')
        return self.counts[n][residue]

    def row(self, n: int) -> Tuple[int, ...]:
        if not 0 <= n <= self.order:
            raise OrderOutOfRangeError(f'La fila {n} está fuera del orden {self.order}.')
        return self.counts[n]
