"""
Tipos numéricos exactos y de alta precisión.

ExactRational es ``fractions.Fraction``. La precisión de mpmath nunca se toma
del contexto global: cada evaluación usa un ``MPContext`` propio con los bits
solicitados.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import mpmath

ExactRational = Fraction

REPORT_DIGITS = 25


@lru_cache(maxsize=32)
def precision_context(bits: int) -> mpmath.MPContext:
    """Contexto mpmath con ``bits`` de precisión. No debe mutarse."""
    context = mpmath.MPContext()
    context.prec = bits
    return context


@dataclass(frozen=True)
class RationalAngle:
    """e(turns) = exp(2πi·turns), con turns reducido módulo 1"""
    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'turns', Fraction(self.turns) % 1)

    def __add__(self, other: 'RationalAngle') -> 'RationalAngle':
        return RationalAngle(self.turns + other.turns)

    def __neg__(self) -> 'RationalAngle':
        return RationalAngle(-self.turns)

    def to_complex(self, context: mpmath.MPContext):
        half_turns = context.mpf(2 * self.turns.numerator) / self.turns.denominator
        return context.expjpi(half_turns)

    def __str__(self) -> str:
        return f'e({self.turns})'


@dataclass(frozen=True)
class HighPrecReal:
    """Valor mpmath junto con la precisión (en bits) con la que fue calculado"""
    value: Any
    precision: int

    def __float__(self) -> float:
        return float(self.value)

    def to_scientific(self, digits: int = REPORT_DIGITS) -> str:
        return mpmath.nstr(self.value, digits, min_fixed=0, max_fixed=0)

    def __str__(self) -> str:
        return self.to_scientific()
