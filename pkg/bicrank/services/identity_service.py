"""
Catálogo de identidades entre series y de afirmaciones de signo, cada una
verificada coeficiente a coeficiente hasta un orden dado.
"""
from dataclasses import dataclass
import logging
from typing import Callable, Dict, List, Optional

from ..exceptions import NotFoundError, ValidationError
from ..models import Failure, IdentityVerdict, PowerSeries
from ..models.reports import FAIL, MATCH, PASS, REPORTED
from .base_service import lab_setting
from .bicrank_service import BicrankService
from .series_service import SeriesService

logger = logging.getLogger(__name__)

EQUALITY = 'equality'
ALL_POSITIVE = 'all-coeffs-positive'
ALL_NEGATIVE = 'all-coeffs-negative'
ALL_NONNEGATIVE = 'all-coeffs-nonnegative'
SIGN_PATTERN = 'sign-pattern'
CONGRUENCE = 'congruence'

PREDICATE_KINDS = (ALL_POSITIVE, ALL_NEGATIVE, ALL_NONNEGATIVE, SIGN_PATTERN, CONGRUENCE)

# Representaciones de P(q)
LAMBERT = 'lambert'
CUBIC = 'cubic'

# lhs/rhs reciben (orden, representación de P)
SeriesBuilder = Callable[[int, str], PowerSeries]


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    kind: str
    lhs: SeriesBuilder
    rhs: Optional[SeriesBuilder] = None
    uses_p: bool = False
    modulus: Optional[int] = None
    description: str = ''


class IdentityService:
    """
    Servicio que arma el catálogo a partir del motor de series y lo verifica.
    """

    def __init__(self, series_service: Optional[SeriesService] = None,
                 bicrank_service: Optional[BicrankService] = None):
        self.series = series_service or SeriesService()
        self.bicrank = bicrank_service or BicrankService(series_service=self.series)
        self._catalog: Dict[str, IdentityCase] = {case.identity_id: case for case in self._build()}

    # Bloques de construcción

    def _eta(self, order: int, *triples) -> PowerSeries:
        return self.series.eta(order, *triples)

    def _p(self, order: int, representation: str) -> PowerSeries:
        if representation == CUBIC:
            return self.series.cubic_theta(order)
        return self.series.lambert_p(order)

    def _triple27(self, order: int, a: int, b: int) -> PowerSeries:
        """(q^a, q^b, q^27; q^27)_∞"""
        return self._eta(order, (a, 27, 1), (b, 27, 1), (27, 27, 1))

    def _triple9(self, order: int, a: int, b: int) -> PowerSeries:
        """(q^a, q^b, q^9; q^9)_∞"""
        return self._eta(order, (a, 9, 1), (b, 9, 1), (9, 9, 1))

    def _diff_part(self, modulus: int, residue: int, step: int, order: int) -> PowerSeries:
        """Disección (residue, step) de la serie de diferencias, a orden N"""
        return self.bicrank.diff_series(modulus, step * order + residue).dissect(residue, step)

    def _cube3(self, order: int) -> PowerSeries:
        return self._eta(order, (3, 3, 3))

    # Lados derechos

    def _f1_dissection(self, order: int, _p: str) -> PowerSeries:
        return (
            self._triple27(order, 12, 15)
            - self._triple27(order, 6, 21).shift(1)
            - self._triple27(order, 3, 24).shift(2)
        )

    def _f3_dissection(self, order: int, p: str) -> PowerSeries:
        return self._p(order, p).compose_power(3) - 3 * self._eta(order, (9, 9, 3)).shift(1)

    def _entry25(self, order: int, _p: str) -> PowerSeries:
        return (
            self._eta(order, (4, 4, 10), (2, 2, -2), (8, 8, -4))
            - 4 * self._eta(order, (2, 2, 2), (8, 8, 4), (4, 4, -2)).shift(1)
        )

    def _two_dissection(self, order: int, _p: str) -> PowerSeries:
        negated = self.series.negated_pochhammer
        even = negated(6, 16, 1, order) * negated(10, 16, 1, order)
        odd = negated(2, 16, 1, order) * negated(14, 16, 1, order)
        return self._eta(order, (16, 16, 1), (2, 2, -2)) * (even + odd.shift(1))

    def _gf_3n(self, order: int, p: str) -> PowerSeries:
        numerator = (
            self._triple9(order, 4, 5) * self._p(order, p)
            + 3 * (self._triple9(order, 1, 8) * self._cube3(order)).shift(1)
        )
        return numerator * self._eta(order, (1, 1, -2))

    def _gf_3n1(self, order: int, p: str) -> PowerSeries:
        numerator = (
            3 * self._triple9(order, 4, 5) * self._cube3(order)
            + self._triple9(order, 2, 7) * self._p(order, p)
        )
        return -(numerator * self._eta(order, (1, 1, -2)))

    def _gf_3n2(self, order: int, p: str) -> PowerSeries:
        inner = (
            3 * self._eta(order, (2, 9, 1), (7, 9, 1)) * self._cube3(order)
            - self._eta(order, (1, 9, 1), (8, 9, 1)) * self._p(order, p)
        )
        return self._eta(order, (9, 9, 1), (1, 1, -2)) * inner

    def _add_m4(self, order: int, _p: str) -> PowerSeries:
        return (
            self._eta(order, (4, 4, 9), (2, 2, -3), (8, 8, -4))
            - 4 * self._eta(order, (2, 2, 1), (8, 8, 4), (4, 4, -3)).shift(1)
        )

    def _gf_4n(self, order: int, _p: str) -> PowerSeries:
        prefactor = ((2, 2, 2), (8, 8, 1), (1, 1, -2), (4, 4, -2))
        first = self._eta(order, *prefactor, (3, 8, 1), (5, 8, 1), (4, 4, 5), (8, 8, -2))
        second = self._eta(order, *prefactor, (1, 8, 1), (7, 8, 1), (2, 2, 2), (8, 8, 2), (4, 4, -1))
        return first - 2 * second.shift(1)

    def _gf_4n2(self, order: int, _p: str) -> PowerSeries:
        prefactor = ((2, 2, 2), (8, 8, 1), (1, 1, -2), (4, 4, -2))
        first = self._eta(order, *prefactor, (3, 8, 1), (5, 8, 1), (2, 2, 2), (8, 8, 2), (4, 4, -1))
        second = self._eta(order, *prefactor, (1, 8, 1), (7, 8, 1), (4, 4, 5), (8, 8, -2))
        return 2 * first + second

    def _build(self) -> List[IdentityCase]:
        eta = self._eta
        part = self._diff_part
        return [
            IdentityCase(
                'f1-3dissect', EQUALITY,
                lambda n, p: eta(n, (1, 1, 1)), self._f1_dissection,
                description='3-disección de (q;q)_∞',
            ),
            IdentityCase(
                'f3-3dissect', EQUALITY,
                lambda n, p: eta(n, (1, 1, 3)), self._f3_dissection, uses_p=True,
                description='(q;q)³ = P(q³) - 3q(q⁹;q⁹)³',
            ),
            IdentityCase(
                'P-two-forms', EQUALITY,
                lambda n, p: self.series.lambert_p(n),
                lambda n, p: self.series.cubic_theta(n),
                description='forma de Lambert y forma theta cúbica de P(q)',
            ),
            IdentityCase(
                'entry25', EQUALITY,
                lambda n, p: eta(n, (1, 1, 4)), self._entry25,
                description='(q;q)⁴ en términos de q², q⁴ y q⁸',
            ),
            IdentityCase(
                'two-dissect', EQUALITY,
                lambda n, p: eta(n, (1, 1, -1)), self._two_dissection,
                description='2-disección de 1/(q;q)_∞',
            ),
            IdentityCase(
                'gf-3n', EQUALITY,
                lambda n, p: part(3, 0, 3, n), self._gf_3n, uses_p=True,
                description='Σ (M*(0,3,3n) - M*(1,3,3n)) q^n',
            ),
            IdentityCase(
                'gf-3n1', EQUALITY,
                lambda n, p: part(3, 1, 3, n), self._gf_3n1, uses_p=True,
                description='Σ (M*(0,3,3n+1) - M*(1,3,3n+1)) q^n',
            ),
            IdentityCase(
                'gf-3n2', EQUALITY,
                lambda n, p: part(3, 2, 3, n), self._gf_3n2, uses_p=True,
                description='Σ (M*(0,3,3n+2) - M*(1,3,3n+2)) q^n',
            ),
            IdentityCase(
                'add-M4', EQUALITY,
                lambda n, p: self.bicrank.diff_series(4, n), self._add_m4,
                description='separación par/impar de la diferencia mod 4',
            ),
            IdentityCase(
                'add-M04-2n', EQUALITY,
                lambda n, p: part(4, 0, 2, n),
                lambda n, p: eta(n, (2, 2, 9), (1, 1, -3), (4, 4, -4)),
                description='Σ (M*(0,4,2n) - M*(2,4,2n)) q^n',
            ),
            IdentityCase(
                'g-dissect', EQUALITY,
                lambda n, p: part(4, 1, 2, n),
                lambda n, p: self.bicrank.g_series(n),
                description='Σ (M*(0,4,2n+1) - M*(2,4,2n+1)) q^n = g(q)',
            ),
            IdentityCase(
                'gf-4n', EQUALITY,
                lambda n, p: part(4, 0, 4, n).alternate(), self._gf_4n,
                description='Σ (M*(0,4,4n) - M*(2,4,4n)) (-q)^n',
            ),
            IdentityCase(
                'gf-4n2', EQUALITY,
                lambda n, p: part(4, 2, 4, n).alternate(), self._gf_4n2,
                description='Σ (M*(0,4,4n+2) - M*(2,4,4n+2)) (-q)^n',
            ),
            IdentityCase(
                'gauss-theta', EQUALITY,
                lambda n, p: self.series.gauss_theta(n),
                lambda n, p: eta(n, (4, 4, 2), (2, 2, -1)),
                description='Σ q^{m(m+1)} = (q⁴;q⁴)²/(q²;q²)',
            ),
            IdentityCase(
                'g-theta', EQUALITY,
                lambda n, p: self.bicrank.g_series(n).alternate(),
                lambda n, p: -4 * eta(n, (4, 4, 3), (1, 1, -1)),
                description='g(-q) = -4 (q⁴;q⁴)³ / (q;q)',
            ),
            IdentityCase(
                '3core-nonneg', ALL_NONNEGATIVE,
                lambda n, p: eta(n, (3, 3, 3), (1, 1, -1)),
                description='particiones 3-core',
            ),
            IdentityCase(
                'gf3n-positive', ALL_POSITIVE,
                lambda n, p: part(3, 0, 3, n),
                description='M*(0,3,3n) > M*(1,3,3n)',
            ),
            IdentityCase(
                'gf3n1-negative', ALL_NEGATIVE,
                lambda n, p: part(3, 1, 3, n),
                description='M*(0,3,3n+1) < M*(1,3,3n+1)',
            ),
            IdentityCase(
                'g-neg', ALL_NEGATIVE,
                lambda n, p: self.bicrank.g_series(n).alternate(),
                description='g(-q) tiene coeficientes negativos',
            ),
            IdentityCase(
                'g-mod4', CONGRUENCE,
                lambda n, p: part(4, 1, 2, n), modulus=4,
                description='M*(0,4,2n+1) ≡ M*(2,4,2n+1) (mod 4)',
            ),
            IdentityCase(
                'sign-4n', SIGN_PATTERN,
                lambda n, p: part(4, 0, 4, n).alternate(),
                description='signos de Σ (M*(0,4,4n) - M*(2,4,4n)) (-q)^n',
            ),
            IdentityCase(
                'sign-4n2', SIGN_PATTERN,
                lambda n, p: part(4, 2, 4, n).alternate(),
                description='signos de Σ (M*(0,4,4n+2) - M*(2,4,4n+2)) (-q)^n',
            ),
        ]

    # Consultas

    def catalog(self) -> List[IdentityCase]:
        return list(self._catalog.values())

    def get(self, identity_id: str) -> IdentityCase:
        try:
            return self._catalog[identity_id]
        except KeyError:
            raise NotFoundError(f"La identidad '{identity_id}' no está en el catálogo.")

    def _order(self, order: Optional[int]) -> int:
        order = lab_setting('IDENTITY_ORDER') if order is None else order
        if order < 0:
            raise ValidationError('El orden debe ser no negativo.')
        return order

    # Verificación

    def verify_identity(self, identity_id: str, order: Optional[int] = None) -> IdentityVerdict:
        """
        Expande ambos lados y exige igualdad exacta; las entradas con P(q) se
        verifican con sus dos representaciones. Las entradas de signo o
        congruencia se delegan a positivity_report.
        """
        case = self.get(identity_id)
        order = self._order(order)
        if case.kind != EQUALITY:
            return self.positivity_report(identity_id, order)
        representations = (LAMBERT, CUBIC) if case.uses_p else (None,)
        for representation in representations:
            lhs = case.lhs(order, representation)
            rhs = case.rhs(order, representation)
            mismatch = lhs.first_difference(rhs)
            if mismatch is not None:
                failure = Failure(identity_id, mismatch, lhs[mismatch], rhs[mismatch])
                logger.warning(f"Identidad {identity_id} falla: {failure}")
                return IdentityVerdict(identity_id, order, FAIL, failure, representation,
                                       description=case.description)
        logger.info(f"Identidad {identity_id} verificada a orden {order}")
        return IdentityVerdict(identity_id, order, PASS, representation=representations[-1],
                               description=case.description)

    def positivity_report(self, identity_id: str, order: Optional[int] = None) -> IdentityVerdict:
        """Revisa el predicado de signo (o congruencia) de la entrada coeficiente a coeficiente"""
        case = self.get(identity_id)
        order = self._order(order)
        if case.kind not in PREDICATE_KINDS:
            raise ValidationError(f"La entrada '{identity_id}' no es un predicado de signo.")
        series = case.lhs(order, LAMBERT)
        counts = {'positive': 0, 'negative': 0, 'zero': 0}
        failure = None
        for n, coefficient in enumerate(series):
            counts['positive' if coefficient > 0 else 'negative' if coefficient < 0 else 'zero'] += 1
            if failure is None and not self._holds(case, coefficient):
                failure = Failure(identity_id, n, case.kind, coefficient)
        if case.kind == SIGN_PATTERN:
            return IdentityVerdict(identity_id, order, REPORTED, sign_counts=counts,
                                   description=case.description)
        verdict = PASS if failure is None else FAIL
        if failure is not None:
            logger.warning(f"Predicado {identity_id} falla: {failure}")
        return IdentityVerdict(identity_id, order, verdict, failure, sign_counts=counts,
                               description=case.description)

    def _holds(self, case: IdentityCase, coefficient: int) -> bool:
        if case.kind == ALL_POSITIVE:
            return coefficient > 0
        if case.kind == ALL_NEGATIVE:
            return coefficient < 0
        if case.kind == ALL_NONNEGATIVE:
            return coefficient >= 0
        if case.kind == CONGRUENCE:
            return coefficient % case.modulus == 0
        return True

    def verify_catalog(self, order: Optional[int] = None,
                       crosscheck_order: Optional[int] = None) -> List[IdentityVerdict]:
        """
        Todas las entradas en orden de catálogo, el contraste de los predicados
        de signo y la comparación de las dos formas de P(q) al orden de
        contraste si este es mayor.
        """
        order = self._order(order)
        crosscheck = lab_setting('P_CROSSCHECK_ORDER') if crosscheck_order is None else crosscheck_order
        verdicts = [self.verify_identity(case.identity_id, order) for case in self.catalog()]
        verdicts.append(self.sign_crosscheck(order))
        if order < crosscheck:
            verdicts.append(self.verify_identity('P-two-forms', crosscheck))
        return verdicts

    def sign_crosscheck(self, order: Optional[int] = None) -> IdentityVerdict:
        """
        Contrasta los predicados de signo del catálogo con las series de
        diferencias calculadas por separado: gf3n-positive y gf3n1-negative
        contra las clases 0 y 1 (mod 3) de sign_report(3), y g-neg contra la
        alternancia de diff4 en los índices impares. Ambos lados deben fallar
        en el mismo índice o no fallar.
        """
        order = self._order(order)
        sign3 = self.bicrank.sign_report(3, 3 * order + 2)
        diff4 = self.bicrank.diff_series(4, 2 * order + 1)
        independent = {
            'gf3n-positive': _first_index(
                sign3.rows[3 * m].status == MATCH for m in range(order + 1)
            ),
            'gf3n1-negative': _first_index(
                sign3.rows[3 * m + 1].status == MATCH for m in range(order + 1)
            ),
            'g-neg': _first_index(
                diff4[2 * m + 1] * (-1) ** (m + 1) > 0 for m in range(order + 1)
            ),
        }
        for identity_id, expected in independent.items():
            predicate = self.positivity_report(identity_id, order)
            actual = predicate.failure.n if predicate.failure else None
            if actual != expected:
                n = min(i for i in (expected, actual) if i is not None)
                failure = Failure(f'sign-crosscheck:{identity_id}', n, expected, actual)
                logger.warning(f"Contraste de signos falla: {failure}")
                return IdentityVerdict('sign-crosscheck', order, FAIL, failure,
                                       description='predicados de signo contra sign_report')
        logger.info(f"Contraste de signos verificado a orden {order}")
        return IdentityVerdict('sign-crosscheck', order, PASS,
                               description='predicados de signo contra sign_report')


def _first_index(holds) -> Optional[int]:
    """Primer índice en que la condición no se cumple, o None"""
    return next((m for m, ok in enumerate(holds) if not ok), None)
