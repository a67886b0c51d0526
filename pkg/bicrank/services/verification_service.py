"""
Orquestación de los comandos: expandir series, verificar teoremas y buscar
umbrales de dominancia. Cada método devuelve un Report listo para renderizar.
"""
import logging
from typing import Any, Dict, Optional

from ..exceptions import ValidationError
from ..models import Report, RunConfig
from ..serializers import (
    AsymptoticRowSerializer,
    DominanceRowSerializer,
    FailureRowSerializer,
    IdentityRowSerializer,
    SeriesRowSerializer,
    SignRowSerializer,
    TableRowSerializer,
)
from ..validators.run_config_validator import EXPAND_TARGETS
from .asymptotic_service import AsymptoticService
from .bicrank_service import BicrankService
from .identity_service import IdentityService
from .series_service import SeriesService

logger = logging.getLogger(__name__)

# Tabla de comandos de verificación; las excepciones publicadas y las observadas
# por cálculo se guardan por separado
THEOREM_TABLE: Dict[str, Dict[str, Any]] = {
    't1': {'kind': 'sign', 'modulus': 2, 'order': 5000, 'expected_exceptions': (),
           'observed_exceptions': (), 'crosscheck_order': 200},
    't2': {'kind': 'sign', 'modulus': 3, 'order': 2000, 'expected_exceptions': (5,),
           'observed_exceptions': ()},
    't4': {'kind': 'sign', 'modulus': 4, 'order': 5000, 'expected_exceptions': (4, 20),
           'observed_exceptions': (56,)},
    'mod5': {'kind': 'mod5', 'order': 304},
    'identities': {'kind': 'identities', 'order': 600},
    'asy3': {'kind': 'asymptotic', 'modulus': 3, 'range': (1, 1200)},
    'asy5': {'kind': 'asymptotic', 'modulus': 4, 'range': (1, 1200)},
}


def _join(values) -> str:
    return ','.join(str(v) for v in values)


class VerificationService:
    """
    Servicio de fachada para los comandos de gestión. Comparte un único
    SeriesService para que las expansiones se memoricen entre verificaciones.
    """

    def __init__(self, series_service: Optional[SeriesService] = None,
                 bicrank_service: Optional[BicrankService] = None,
                 asymptotic_service: Optional[AsymptoticService] = None,
                 identity_service: Optional[IdentityService] = None):
        self.series = series_service or SeriesService()
        self.bicrank = bicrank_service or BicrankService(series_service=self.series)
        self.asymptotic = asymptotic_service or AsymptoticService()
        self.identities = identity_service or IdentityService(self.series, self.bicrank)

    # expand

    def cmd_expand(self, config: RunConfig) -> Report:
        target, order = config.target, config.order
        if target not in EXPAND_TARGETS:
            raise ValidationError(f"Serie desconocida: '{target}'")
        if target == 'table':
            return self._expand_table(config)
        if target == 'p2':
            series = self.bicrank.p2_series(order)
        else:
            series = self.bicrank.diff_series(int(target[-1]), order)
        rows = SeriesRowSerializer(
            [{'exponent': n, 'coefficient': c} for n, c in enumerate(series)], many=True
        ).data
        return Report(
            'expand', config.as_dict(), [dict(row) for row in rows],
            {'series': target, 'order': series.order},
            text=[_join(series)],
        )

    def _expand_table(self, config: RunConfig) -> Report:
        order = config.order
        if config.modulus:
            counts = self.bicrank.residue_counts(order, config.modulus)
            rows = [
                dict(zip(['n'] + [f'class_{j}' for j in range(config.modulus)], map(str, row)))
                for row in self.bicrank.class_count_rows(counts)
            ]
            text = [f'{n}: {_join(row)}' for n, row in enumerate(counts.counts)]
            summary = {'series': 'table', 'order': order, 'modulus': config.modulus}
        else:
            table = self.bicrank.build_table(order)
            rows = [
                dict(row) for row in TableRowSerializer(
                    [{'n': n, 'm': m, 'value': v} for n, m, v in self.bicrank.table_triples(table)],
                    many=True,
                ).data
            ]
            text = [f'{n}|{row.min_degree}|{_join(row.coeffs)}' for n, row in enumerate(table.rows)]
            summary = {'series': 'table', 'order': order}
        return Report('expand', config.as_dict(), rows, summary, text=text)

    # verify

    def cmd_verify(self, config: RunConfig) -> Report:
        entry = THEOREM_TABLE.get(config.target)
        if entry is None:
            raise ValidationError(f"Teorema desconocido: '{config.target}'")
        handler = {
            'sign': self._verify_sign,
            'mod5': self._verify_mod5,
            'identities': self._verify_identities,
            'asymptotic': self._verify_asymptotic,
        }[entry['kind']]
        report = handler(config, entry)
        logger.info(f"verify {config.target}: {'ok' if report.passed else 'FALLA'}")
        return report

    def _verify_sign(self, config: RunConfig, entry: Dict[str, Any]) -> Report:
        order = entry['order'] if config.order is None else config.order
        modulus = entry['modulus']
        published = tuple(entry['expected_exceptions'])
        observed = tuple(entry.get('observed_exceptions', ()))
        sign = self.bicrank.sign_report(modulus, order, tuple(sorted(published + observed)))
        passed = sign.passed
        summary: Dict[str, Any] = {
            'theorem': config.target,
            'modulus': modulus,
            'order': order,
            'exceptions_expected': list(sign.expected_exceptions),
            'exceptions_published': list(published),
            'exceptions_observed': list(observed),
            'exceptions_found': list(sign.exceptions_found),
            'violations': [row.n for row in sign.violations],
        }
        first_failure = None
        if sign.violations:
            first = sign.violations[0]
            first_failure = f'n={first.n}: coeficiente {first.coefficient}'
        elif sign.missing_exceptions:
            first_failure = f'excepciones no encontradas: {list(sign.missing_exceptions)}'
        crosscheck = entry.get('crosscheck_order')
        if crosscheck is not None:
            bound = min(order, crosscheck)
            check = self.bicrank.verify_specializations(self.bicrank.build_table(bound), bound)
            summary['table_crosscheck'] = {'order': bound, 'passed': check.passed}
            if not check.passed:
                passed = False
                first_failure = first_failure or str(check.first_failure)
        summary['passed'] = passed
        rows = [dict(row) for row in SignRowSerializer(sign.rows, many=True).data]
        text = [
            f'verify {config.target}: {"pass" if passed else "FAIL"}',
            f'orden: {order}',
            f'excepciones publicadas: {list(published)}',
            f'excepciones observadas: {list(observed)}',
            f'excepciones encontradas: {list(sign.exceptions_found)}',
            f'violaciones: {len(sign.violations)}',
        ]
        return Report('verify', config.as_dict(), rows, summary, passed, text, first_failure)

    def _verify_mod5(self, config: RunConfig, entry: Dict[str, Any]) -> Report:
        order = entry['order'] if config.order is None else config.order
        if order < 4:
            raise ValidationError('mod5 requiere orden >= 4.')
        n_max = (order - 4) // 5
        check = self.bicrank.verify_mod5(n_max)
        rows = [dict(row) for row in FailureRowSerializer(check.failures, many=True).data]
        summary = {
            'theorem': 'mod5', 'order': check.checked_up_to, 'n_max': n_max,
            'failures': len(check.failures), 'passed': check.passed,
        }
        text = [
            f'verify mod5: {"pass" if check.passed else "FAIL"}',
            f'n <= {n_max} (orden {check.checked_up_to}), fallas: {len(check.failures)}',
        ]
        failure = str(check.first_failure) if check.first_failure else None
        return Report('verify', config.as_dict(), rows, summary, check.passed, text, failure)

    def _verify_identities(self, config: RunConfig, entry: Dict[str, Any]) -> Report:
        order = entry['order'] if config.order is None else config.order
        verdicts = self.identities.verify_catalog(order)
        passed = all(v.passed for v in verdicts)
        rows = [dict(row) for row in IdentityRowSerializer(verdicts, many=True).data]
        failed = [v for v in verdicts if not v.passed]
        summary = {
            'theorem': 'identities', 'order': order, 'entries': len(verdicts),
            'failed': [v.identity_id for v in failed], 'passed': passed,
        }
        text = [f'{v.identity_id}: {v.verdict}' for v in verdicts]
        failure = str(failed[0].failure) if failed else None
        return Report('verify', config.as_dict(), rows, summary, passed, text, failure)

    def _verify_asymptotic(self, config: RunConfig, entry: Dict[str, Any]) -> Report:
        lo, hi = entry['range']
        if config.lo is not None:
            lo, hi = config.lo, config.hi
        modulus = entry['modulus']
        exact = self.bicrank.diff_series(modulus, hi)
        verdicts = [
            self.asymptotic.check_asymptotic(modulus, n, exact[n], config.precision)
            for n in range(lo, hi + 1)
        ]
        failed = [v.n for v in verdicts if not v.passed]
        passed = not failed
        rows = [dict(row) for row in AsymptoticRowSerializer(verdicts, many=True).data]
        summary = {
            'theorem': config.target, 'modulus': modulus, 'range': [lo, hi],
            'precision': config.precision, 'failed': failed, 'passed': passed,
        }
        text = [
            f'verify {config.target}: {"pass" if passed else "FAIL"}',
            f'n en [{lo}, {hi}], fallas: {len(failed)}',
        ]
        failure = f'n={failed[0]}: |exacto - principal| > cota' if failed else None
        return Report('verify', config.as_dict(), rows, summary, passed, text, failure)

    # threshold

    def cmd_threshold(self, config: RunConfig) -> Report:
        report = self.asymptotic.dominance_scan(
            config.modulus, config.lo, config.hi, config.precision
        )
        rows = [dict(row) for row in DominanceRowSerializer(report.rows, many=True).data]
        summary = {
            'modulus': report.modulus,
            'range': [report.lo, report.hi],
            'nonpositive': report.nonpositive,
            'last_nonpositive': report.last_nonpositive,
            'stable_from': report.stable_from,
            'published_threshold': report.published_threshold,
            'holds_from_threshold': report.holds_from_threshold,
        }
        text = [
            f'módulo {report.modulus}, n en [{report.lo}, {report.hi}]',
            f'último margen no positivo: {report.last_nonpositive}',
            f'dominancia estable desde: {report.stable_from}',
            f'umbral publicado {report.published_threshold}: '
            f'{"se cumple" if report.holds_from_threshold else "NO se cumple"} en el rango',
        ]
        return Report('threshold', config.as_dict(), rows, summary, True, text)

    def run(self, config: RunConfig) -> Report:
        return {
            'expand': self.cmd_expand,
            'verify': self.cmd_verify,
            'threshold': self.cmd_threshold,
        }[config.command](config)
