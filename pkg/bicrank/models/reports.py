"""
Registros inmutables que devuelven las verificaciones del laboratorio.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .numeric import HighPrecReal

MATCH = 'match'
EXCEPTION = 'exception'
VIOLATION = 'violation'

PASS = 'pass'
FAIL = 'fail'
REPORTED = 'reported'


@dataclass(frozen=True)
class Failure:
    """Primera discrepancia de una verificación"""
    check: str
    n: int
    expected: Any
    actual: Any
    modulus: Optional[int] = None

    def __str__(self) -> str:
        where = f'k={self.modulus}, n={self.n}' if self.modulus is not None else f'n={self.n}'
        return f'{self.check} ({where}): se esperaba {self.expected}, se obtuvo {self.actual}'


@dataclass(frozen=True)
class CheckReport:
    """Resultado de una verificación por lotes: cuántos índices se revisaron y qué falló"""
    name: str
    checked_up_to: int
    failures: Tuple[Failure, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None


@dataclass(frozen=True)
class SignVerdict:
    n: int
    coefficient: int
    expected_sign: int
    status: str


@dataclass(frozen=True)
class SignReport:
    modulus: int
    order: int
    rows: Tuple[SignVerdict, ...]
    expected_exceptions: Tuple[int, ...]

    @property
    def exceptions_found(self) -> Tuple[int, ...]:
        return tuple(row.n for row in self.rows if row.status == EXCEPTION)

    @property
    def violations(self) -> Tuple[SignVerdict, ...]:
        return tuple(row for row in self.rows if row.status == VIOLATION)

    @property
    def unexpected_exceptions(self) -> Tuple[int, ...]:
        return tuple(n for n in self.exceptions_found if n not in self.expected_exceptions)

    @property
    def missing_exceptions(self) -> Tuple[int, ...]:
        found = set(self.exceptions_found)
        return tuple(n for n in self.expected_exceptions if n <= self.order and n not in found)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.unexpected_exceptions and not self.missing_exceptions


@dataclass(frozen=True)
class ExponentialSum:
    """Suma de raíces de la unidad del término principal para un k' dado"""
    modulus: int
    kprime: int
    n: int
    real: HighPrecReal
    imag_residual: HighPrecReal


@dataclass(frozen=True)
class AsymptoticVerdict:
    modulus: int
    n: int
    exact: int
    main: HighPrecReal
    bound: HighPrecReal
    margin: HighPrecReal
    passed: bool
    precision: int


@dataclass(frozen=True)
class DominanceRow:
    n: int
    main: HighPrecReal
    bound: HighPrecReal
    margin: HighPrecReal

    @property
    def dominant(self) -> bool:
        return self.margin.value > 0


@dataclass(frozen=True)
class DominanceReport:
    modulus: int
    lo: int
    hi: int
    rows: Tuple[DominanceRow, ...]
    published_threshold: int

    @property
    def nonpositive(self) -> List[int]:
        return [row.n for row in self.rows if not row.dominant]

    @property
    def last_nonpositive(self) -> Optional[int]:
        nonpositive = self.nonpositive
        return nonpositive[-1] if nonpositive else None

    @property
    def stable_from(self) -> Optional[int]:
        """Menor n0 del rango tal que el margen es positivo para todo n >= n0"""
        last = self.last_nonpositive
        if last is None:
            return self.lo
        return last + 1 if last < self.hi else None

    @property
    def holds_from_threshold(self) -> bool:
        """El margen es positivo en todo el tramo [umbral publicado, hi] cubierto"""
        return all(row.dominant for row in self.rows if row.n >= self.published_threshold)


@dataclass(frozen=True)
class BesselBoundsVerdict:
    x: HighPrecReal
    value: HighPrecReal
    upper: HighPrecReal
    lower: Optional[HighPrecReal]
    upper_holds: bool
    lower_holds: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.upper_holds and self.lower_holds is not False


@dataclass(frozen=True)
class IdentityVerdict:
    identity_id: str
    order: int
    verdict: str
    failure: Optional[Failure] = None
    representation: Optional[str] = None
    sign_counts: Optional[Dict[str, int]] = None
    description: str = ''

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL


@dataclass
class Report:
    """Salida de un comando: filas serializadas, resumen y líneas de texto"""
    command: str
    config: Dict[str, Any]
    rows: List[Dict[str, Any]]
    summary: Dict[str, Any]
    passed: bool = True
    text: List[str] = field(default_factory=list)
    first_failure: Optional[str] = None
