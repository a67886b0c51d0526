"""
Base de los comandos del laboratorio. Centraliza el manejo de excepciones:
los errores del dominio se convierten en CommandError con su código de salida
y cualquier otro error se registra con su traza.
"""
import logging
import traceback

from django.core.management.base import BaseCommand, CommandError

from ..exceptions import LabError, ValidationError, VerificationFailedError
from ..serializers import RunConfigSerializer
from ..services import ReportService, VerificationService

logger = logging.getLogger(__name__)


class LabCommand(BaseCommand):
    """Comando con parámetros comunes, validación y reporte"""

    command_name = None

    def add_common_arguments(self, parser):
        parser.add_argument('--order', type=int, help='Orden de truncación N')
        parser.add_argument('--precision', type=int, help='Precisión en bits (por defecto 192)')
        parser.add_argument('--range', type=int, nargs=2, metavar=('LO', 'HI'),
                            help='Rango de índices n')
        parser.add_argument('--format', choices=['text', 'csv', 'json'], default='text',
                            help='Formato de salida')
        parser.add_argument('--output', help='Ruta del archivo de salida')

    def build_config(self, target, options):
        lo, hi = options.get('range') or (None, None)
        serializer = RunConfigSerializer(data={
            'command': self.command_name,
            'target': target,
            'order': options.get('order'),
            'modulus': options.get('modulus'),
            'precision': options.get('precision'),
            'lo': lo,
            'hi': hi,
            'output': options.get('output'),
            'format': options.get('format') or 'text',
        })
        if not serializer.is_valid():
            messages = [
                f"{field}: {' '.join(str(e) for e in errors)}"
                for field, errors in serializer.errors.items()
            ]
            raise ValidationError('; '.join(messages))
        return serializer.save()

    def get_target(self, options):
        return options.get('target')

    def handle(self, *args, **options):
        try:
            config = self.build_config(self.get_target(options), options)
            report = VerificationService().run(config)
            ReportService().write(report, config.format, config.output, self.stdout)
            if not report.passed:
                raise VerificationFailedError(report.first_failure)
        except LabError as exc:
            logger.warning(f"{self.command_name} terminó con error [{exc.code}]: {exc}")
            raise CommandError(f'[{exc.code}] {exc}', returncode=exc.exit_code)
        except CommandError:
            raise
        except Exception as exc:
            logger.error(f"Error no manejado: {str(exc)}")
            logger.error(traceback.format_exc())
            raise CommandError('Ha ocurrido un error en el laboratorio.', returncode=1)
