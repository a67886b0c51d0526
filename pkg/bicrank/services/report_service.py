"""
Render de reportes en texto, CSV y JSON. La salida depende solo del reporte:
mismo RunConfig, mismos bytes.
"""
import csv
import io
import logging
from typing import Any, List, Optional

from rest_framework.renderers import JSONRenderer

from ..exceptions import ValidationError
from ..models import Report
from .base_service import lab_setting

logger = logging.getLogger(__name__)


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ' '.join(_cell(v) for v in value)
    return str(value)


class ReportService:
    """Convierte un Report al formato pedido y lo escribe"""

    def render(self, report: Report, output_format: str) -> str:
        if output_format == 'text':
            return self.render_text(report)
        if output_format == 'csv':
            return self.render_csv(report)
        if output_format == 'json':
            return self.render_json(report)
        raise ValidationError(f'Formato no soportado: {output_format}')

    def render_text(self, report: Report) -> str:
        lines: List[str] = list(report.text)
        if not lines:
            lines = [f'{key}: {_cell(value)}' for key, value in report.summary.items()]
        return '\n'.join(lines) + '\n'

    def render_csv(self, report: Report) -> str:
        """Línea de versión de esquema, encabezado y filas"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['schema_version', lab_setting('REPORT_SCHEMA_VERSION')])
        if report.rows:
            columns = list(report.rows[0].keys())
            writer.writerow(columns)
            for row in report.rows:
                writer.writerow([_cell(row.get(column)) for column in columns])
        return buffer.getvalue()

    def render_json(self, report: Report) -> str:
        payload = {
            'schema_version': lab_setting('REPORT_SCHEMA_VERSION'),
            'command': report.command,
            'config': report.config,
            'rows': report.rows,
            'summary': report.summary,
        }
        rendered = JSONRenderer().render(payload, renderer_context={'indent': 2})
        return rendered.decode('utf-8') + '\n'

    def write(self, report: Report, output_format: str, output: Optional[str] = None,
              stream=None) -> str:
        """Escribe en ``output`` si se indicó una ruta; si no, en ``stream``"""
        content = self.render(report, output_format)
        if output:
            try:
                with open(output, 'w', encoding='utf-8', newline='') as handle:
                    handle.write(content)
            except OSError as exc:
                raise ValidationError(f'No se pudo escribir {output}: {exc}')
            logger.info(f"Reporte {report.command} escrito en {output}")
        elif stream is not None:
            stream.write(content, ending='')
        return content
