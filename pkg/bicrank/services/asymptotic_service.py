"""
Servicio de asintótica explícita: sumas de Dedekind, raíces de la unidad ω,
coeficientes de los términos principales, Bessel I₀ y cotas de error.

Toda comparación que produce un veredicto se recalcula con el doble de bits
si el margen queda por debajo de 2^(-P/4) veces la escala de los operandos.
"""
from fractions import Fraction
import logging
from math import floor, gcd, log
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar, Union

from ..exceptions import PrecisionExhaustedError, ValidationError
from ..models import (
    AsymptoticVerdict,
    BesselBoundsVerdict,
    DominanceReport,
    DominanceRow,
    ExactRational,
    ExponentialSum,
    HighPrecReal,
    RationalAngle,
    precision_context,
)
from .base_service import lab_setting

logger = logging.getLogger(__name__)

T = TypeVar('T')

GUARD_BITS = 16

# Valores k' con término principal para cada módulo
KPRIMES: Dict[int, Tuple[int, ...]] = {3: (1,), 4: (1, 2)}

# Constantes de |E(n)| y divisor d del exponente π√(n-1/12)/(d√3)
ERROR_CONSTANTS: Dict[int, Tuple[str, str, str, int]] = {
    3: ('173.1', '74.3', '2.8', 3),
    4: ('224.2', '55.6', '2.4', 6),
}

PUBLISHED_THRESHOLDS: Dict[int, int] = {3: 114, 4: 2160}

RealLike = Union[int, float, str, HighPrecReal, Any]


def _check_modulus(modulus: int):
    if modulus not in KPRIMES:
        raise ValidationError(f'El módulo debe ser 3 o 4, no {modulus}.')


class AsymptoticService:
    """
    Servicio para evaluar los términos principales y las cotas de error de
    las diferencias mod 3 y mod 4. No guarda estado: la precisión se pasa en
    cada llamada.
    """

    def __init__(self, default_precision: Optional[int] = None):
        self.default_precision = default_precision or lab_setting('DEFAULT_PRECISION')

    def _bits(self, precision: Optional[int]) -> int:
        bits = precision or self.default_precision
        if bits < 16:
            raise ValidationError('La precisión debe ser de al menos 16 bits.')
        return bits

    # Aritmética exacta

    def sawtooth(self, x: ExactRational) -> ExactRational:
        """((x)) = x - ⌊x⌋ - 1/2, y 0 en los enteros"""
        x = Fraction(x)
        if x.denominator == 1:
            return Fraction(0)
        return x - floor(x) - Fraction(1, 2)

    def dedekind_sum(self, d: int, c: int) -> ExactRational:
        """s(d, c) = Σ_{n mod c} ((dn/c))((n/c))"""
        if c < 1:
            raise ValidationError(f'c debe ser positivo (c={c}).')
        if gcd(d, c) != 1:
            raise ValidationError(f'Se requiere mcd(d, c) = 1 (d={d}, c={c}).')
        return sum(
            (self.sawtooth(Fraction(d * n, c)) * self.sawtooth(Fraction(n, c)) for n in range(c)),
            Fraction(0),
        )

    def omega(self, h: int, kprime: int, modulus: int) -> RationalAngle:
        """Ángulo de ω_{h,k'}: la combinación de sumas de Dedekind dividida por 2"""
        _check_modulus(modulus)
        if kprime < 1:
            raise ValidationError("k' debe ser positivo.")
        if gcd(h, modulus * kprime) != 1:
            raise ValidationError(f"Se requiere mcd(h, {modulus}k') = 1 (h={h}, k'={kprime}).")
        s = self.dedekind_sum
        if modulus == 3:
            combination = 2 * s(h, kprime) - 4 * s(h, 3 * kprime)
        else:
            combination = s(h, 2 * kprime) + s(h, kprime) - 4 * s(h, 4 * kprime)
        return RationalAngle(combination / 2)

    # Bessel I₀

    def _to_mpf(self, context, x: RealLike):
        if isinstance(x, HighPrecReal):
            x = x.value
        if isinstance(x, Fraction):
            return context.mpf(x.numerator) / x.denominator
        return context.mpf(x)

    def bessel_i0(self, x: RealLike, precision: Optional[int] = None) -> HighPrecReal:
        """
        I₀(x) = Σ (x/2)^{2m} / (m!)² sumada hasta que el siguiente término cae
        bajo 2^(-P-8) veces la suma parcial (y ya pasó el máximo de los términos).
        """
        bits = self._bits(precision)
        rough = self._to_mpf(precision_context(64), x)
        if rough < 0:
            raise ValidationError('I₀ solo se evalúa para x >= 0.')
        working = max(bits, int(float(rough) / log(2)) + 64) + GUARD_BITS
        context = precision_context(working)
        value = self._to_mpf(context, x)
        half_square = (value / 2) ** 2
        epsilon = context.ldexp(1, -bits - 8)
        term = context.mpf(1)
        total = term
        m = 0
        while True:
            m += 1
            term = term * half_square / (m * m)
            total += term
            # para m > x la razón entre términos consecutivos es < 1/4
            if m > value and term < epsilon * total:
                break
        return HighPrecReal(precision_context(bits).mpf(total), bits)

    # Términos principales

    def main_coeff(self, modulus: int, n: int,
                   precision: Optional[int] = None) -> Tuple[HighPrecReal, ...]:
        """
        Coeficientes en forma cerrada: (c(n),) para el módulo 3 y (c₁(n), c₂(n))
        para el módulo 4.
        """
        _check_modulus(modulus)
        if n < 0:
            raise ValidationError('n debe ser no negativo.')
        bits = self._bits(precision)
        ctx = precision_context(bits)
        pi = ctx.pi
        if modulus == 3:
            c = {
                0: 4 * pi / 3 * ctx.cospi(ctx.mpf(2) / 9),
                1: -4 * pi / 3 * ctx.cospi(ctx.mpf(1) / 9),
                2: 4 * pi / 3 * ctx.sinpi(ctx.mpf(1) / 18),
            }[n % 3]
            return (HighPrecReal(c, bits),)
        c1 = {1: -pi, 3: pi}.get(n % 4, ctx.zero)
        sin8, cos8 = ctx.sinpi(ctx.mpf(1) / 8), ctx.cospi(ctx.mpf(1) / 8)
        c2 = {0: pi * sin8, 2: pi * cos8, 4: -pi * sin8, 6: -pi * cos8}.get(n % 8, ctx.zero)
        return HighPrecReal(ctx.mpf(c1), bits), HighPrecReal(ctx.mpf(c2), bits)

    def root_of_unity_main(self, modulus: int, kprime: int, n: int,
                           precision: Optional[int] = None) -> ExponentialSum:
        """
        Σ_{h mod mk', (h, mk') = 1} e(-nh/(mk')) ω_{h,k'} · 2π/(mk'), con las fases
        sumadas exactamente antes de evaluarlas.
        """
        _check_modulus(modulus)
        if kprime < 1:
            raise ValidationError("k' debe ser positivo.")
        bits = self._bits(precision)
        ctx = precision_context(bits + GUARD_BITS)
        k = modulus * kprime
        total = ctx.mpc(0)
        for h in range(k):
            if gcd(h, k) != 1:
                continue
            phase = RationalAngle(Fraction(-n * h, k)) + self.omega(h, kprime, modulus)
            total += phase.to_complex(ctx)
        value = total * 2 * ctx.pi / k
        out = precision_context(bits)
        return ExponentialSum(
            modulus, kprime, n,
            HighPrecReal(out.mpf(value.real), bits),
            HighPrecReal(out.mpf(abs(value.imag)), bits),
        )

    def bessel_arguments(self, modulus: int, n: int, precision: Optional[int] = None) -> List[Any]:
        """2π√(n-1/12) / (√3·m·k') para cada k' del módulo"""
        _check_modulus(modulus)
        if n < 1:
            raise ValidationError('n debe ser al menos 1.')
        bits = self._bits(precision)
        ctx = precision_context(bits)
        root = ctx.sqrt(ctx.mpf(n) - ctx.mpf(1) / 12)
        return [2 * ctx.pi * root / (ctx.sqrt(3) * modulus * kprime) for kprime in KPRIMES[modulus]]

    def _main_products(self, modulus: int, n: int, bits: int,
                       coefficients: List[Any]) -> List[Any]:
        products = []
        for coefficient, argument in zip(coefficients, self.bessel_arguments(modulus, n, bits)):
            if coefficient == 0:
                products.append(precision_context(bits).zero)
            else:
                products.append(coefficient * self.bessel_i0(argument, bits).value)
        return products

    def main_term(self, modulus: int, n: int, precision: Optional[int] = None) -> HighPrecReal:
        """Σ_{k'} c_{k'}(n) · I₀(2π√(n-1/12)/(√3·m·k')) con los coeficientes en forma cerrada"""
        bits = self._bits(precision)
        coefficients = [c.value for c in self.main_coeff(modulus, n, bits)]
        return HighPrecReal(sum(self._main_products(modulus, n, bits, coefficients)), bits)

    def main_term_from_sums(self, modulus: int, n: int,
                            precision: Optional[int] = None) -> HighPrecReal:
        """El mismo término principal, con coeficientes tomados de las sumas exponenciales"""
        bits = self._bits(precision)
        coefficients = [
            self.root_of_unity_main(modulus, kprime, n, bits).real.value
            for kprime in KPRIMES[modulus]
        ]
        return HighPrecReal(sum(self._main_products(modulus, n, bits, coefficients)), bits)

    def error_bound(self, modulus: int, n: int, precision: Optional[int] = None) -> HighPrecReal:
        """
        A·y·(log√(2π y²) + 1) + B·y + C·y·exp(π y/(d√3)) con y = √(n-1/12),
        inflada por (1 + 2^(-P/2)).
        """
        _check_modulus(modulus)
        if n < 1:
            raise ValidationError('n debe ser al menos 1.')
        bits = self._bits(precision)
        ctx = precision_context(bits + GUARD_BITS)
        first, second, third, divisor = (
            ctx.mpf(value) if isinstance(value, str) else value
            for value in ERROR_CONSTANTS[modulus]
        )
        square = ctx.mpf(n) - ctx.mpf(1) / 12
        y = ctx.sqrt(square)
        bound = (
            first * y * (ctx.log(ctx.sqrt(2 * ctx.pi * square)) + 1)
            + second * y
            + third * y * ctx.exp(ctx.pi * y / (divisor * ctx.sqrt(3)))
        )
        bound *= 1 + ctx.ldexp(1, -(bits // 2))
        return HighPrecReal(precision_context(bits).mpf(bound), bits)

    # Veredictos

    def _decide(self, evaluate: Callable[[int], Tuple[Any, Any, T]], precision: int,
                label: str) -> T:
        """
        ``evaluate(P) -> (margen, escala, resultado)``. Duplica P mientras
        |margen| < 2^(-P/4)·escala.
        """
        ceiling = lab_setting('MAX_PRECISION')
        bits = precision
        while True:
            margin, scale, result = evaluate(bits)
            ctx = precision_context(bits)
            if abs(margin) >= ctx.ldexp(scale, -(bits // 4)):
                return result
            if bits * 2 > ceiling:
                raise PrecisionExhaustedError(
                    f'{label}: margen {margin} sin resolver a {bits} bits.'
                )
            logger.warning(f"{label}: margen casi nulo a {bits} bits; se repite a {bits * 2}")
            bits *= 2

    def check_asymptotic(self, modulus: int, n: int, exact: int,
                         precision: Optional[int] = None) -> AsymptoticVerdict:
        """|exacto - término principal| <= cota de error"""

        def evaluate(bits: int):
            ctx = precision_context(bits)
            main = self.main_term(modulus, n, bits)
            bound = self.error_bound(modulus, n, bits)
            margin = bound.value - abs(ctx.mpf(exact) - main.value)
            scale = max(abs(main.value), bound.value, ctx.one)
            verdict = AsymptoticVerdict(
                modulus, n, exact, main, bound, HighPrecReal(margin, bits), margin >= 0, bits
            )
            return margin, scale, verdict

        verdict = self._decide(evaluate, self._bits(precision), f'asintótica mod {modulus}, n={n}')
        if not verdict.passed:
            logger.warning(f"Cota asintótica violada: módulo {modulus}, n={n}")
        return verdict

    def dominance_margin(self, modulus: int, n: int,
                         precision: Optional[int] = None) -> DominanceRow:
        """
        |término dominante| - Σ |términos restantes| - cota de error. Con a lo
        sumo un coeficiente no nulo, es |término principal| - cota.
        """

        def evaluate(bits: int):
            ctx = precision_context(bits)
            coefficients = [c.value for c in self.main_coeff(modulus, n, bits)]
            signed = self._main_products(modulus, n, bits, coefficients)
            products = [abs(p) for p in signed]
            dominant = max(products)
            lower = 2 * dominant - sum(products)
            bound = self.error_bound(modulus, n, bits)
            margin = lower - bound.value
            row = DominanceRow(
                n,
                HighPrecReal(ctx.mpf(sum(signed)), bits),
                bound,
                HighPrecReal(margin, bits),
            )
            return margin, max(bound.value, dominant, ctx.one), row

        return self._decide(evaluate, self._bits(precision), f'dominancia mod {modulus}, n={n}')

    def dominance_scan(self, modulus: int, lo: int, hi: int,
                       precision: Optional[int] = None) -> DominanceReport:
        _check_modulus(modulus)
        if lo < 1 or lo > hi:
            raise ValidationError(f'Rango inválido [{lo}, {hi}].')
        rows = tuple(self.dominance_margin(modulus, n, precision) for n in range(lo, hi + 1))
        report = DominanceReport(modulus, lo, hi, rows, PUBLISHED_THRESHOLDS[modulus])
        logger.info(
            f"Dominancia mod {modulus} en [{lo}, {hi}]: último margen no positivo "
            f"{report.last_nonpositive}, estable desde {report.stable_from}"
        )
        return report

    def kotesovec_estimate(self, n: int, precision: Optional[int] = None) -> HighPrecReal:
        """(-1)^n / (2^{3/2}·3^{1/4}·n^{3/4}) · exp(π√(n/3))"""
        if n < 1:
            raise ValidationError('n debe ser al menos 1.')
        bits = self._bits(precision)
        ctx = precision_context(bits)
        magnitude = ctx.exp(ctx.pi * ctx.sqrt(ctx.mpf(n) / 3)) / (
            ctx.power(2, ctx.mpf(3) / 2) * ctx.power(3, ctx.mpf(1) / 4) * ctx.power(n, ctx.mpf(3) / 4)
        )
        return HighPrecReal(magnitude if n % 2 == 0 else -magnitude, bits)

    def bessel_bounds_check(self, x: RealLike,
                            precision: Optional[int] = None) -> BesselBoundsVerdict:
        """
        I₀(x) < √(π/8)·e^x/√x para x > 0, y I₀(x) > (4√2/(5π))·e^x/√x para x >= 1.
        """

        def evaluate(bits: int):
            ctx = precision_context(bits)
            value = self._to_mpf(ctx, x)
            if value <= 0:
                raise ValidationError('Las cotas de I₀ requieren x > 0.')
            i0 = self.bessel_i0(value, bits).value
            envelope = ctx.exp(value) / ctx.sqrt(value)
            upper = ctx.sqrt(ctx.pi / 8) * envelope
            margins = [upper - i0]
            lower = None
            if value >= 1:
                lower = 4 * ctx.sqrt(2) / (5 * ctx.pi) * envelope
                margins.append(i0 - lower)
            verdict = BesselBoundsVerdict(
                HighPrecReal(value, bits),
                HighPrecReal(i0, bits),
                HighPrecReal(upper, bits),
                HighPrecReal(lower, bits) if lower is not None else None,
                margins[0] > 0,
                margins[1] > 0 if lower is not None else None,
            )
            return min(margins, key=abs), max(upper, ctx.one), verdict

        return self._decide(evaluate, self._bits(precision), f'cotas de I₀ en x={x}')
