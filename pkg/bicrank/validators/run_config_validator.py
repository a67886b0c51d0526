import os
from typing import Any, Dict

from django.conf import settings

from .base_validator import BaseValidator

EXPAND_TARGETS = ('p2', 'diff2', 'diff3', 'diff4', 'table')
VERIFY_TARGETS = ('t1', 't2', 't4', 'mod5', 'identities', 'asy3', 'asy5')
THRESHOLD_MODULI = (3, 4)
FORMATS = ('text', 'csv', 'json')
MIN_PRECISION = 64


class RunConfigValidator(BaseValidator):
    """
    Validador de los parámetros de una ejecución por línea de comandos.
    Revisa las reglas que cruzan varios campos (rango, objetivo, ruta).
    """

    def __init__(self, data: Dict[str, Any]):
        super().__init__()
        self.data = data

    def _validate(self):
        self._validate_target()
        self._validate_order()
        self._validate_precision()
        self._validate_range()
        self._validate_modulus()
        self._validate_format()
        self._validate_output()

    def _validate_target(self):
        command = self.data.get('command')
        target = self.data.get('target')
        allowed = {
            'expand': EXPAND_TARGETS,
            'verify': VERIFY_TARGETS,
            'threshold': ('dominance',),
        }.get(command)
        if allowed is None:
            self.add_error('command', f'Comando desconocido: {command}')
        elif target not in allowed:
            self.add_error('target', f"'{target}' no es válido; opciones: {', '.join(allowed)}")

    def _validate_order(self):
        order = self.data.get('order')
        if order is not None and order < 0:
            self.add_error('order', 'El orden debe ser no negativo')
        if self.data.get('command') == 'expand' and order is None:
            self.add_error('order', 'El orden es obligatorio para expand')

    def _validate_precision(self):
        precision = self.data.get('precision')
        if precision is None:
            return
        ceiling = settings.BICRANK_LAB['MAX_PRECISION']
        if precision < MIN_PRECISION:
            self.add_error('precision', f'La precisión debe ser al menos {MIN_PRECISION} bits')
        elif precision > ceiling:
            self.add_error('precision', f'La precisión no puede superar {ceiling} bits')

    def _validate_range(self):
        lo, hi = self.data.get('lo'), self.data.get('hi')
        if lo is None and hi is None:
            if self.data.get('command') == 'threshold':
                self.add_error('range', 'El rango es obligatorio para threshold')
            return
        if lo is None or hi is None:
            self.add_error('range', 'El rango requiere LO y HI')
        elif lo < 1:
            self.add_error('range', 'LO debe ser al menos 1')
        elif lo > hi:
            self.add_error('range', 'LO no puede ser mayor que HI')

    def _validate_modulus(self):
        if self.data.get('command') != 'threshold':
            return
        if self.data.get('modulus') not in THRESHOLD_MODULI:
            self.add_error('modulus', 'El módulo debe ser 3 o 4')

    def _validate_format(self):
        if self.data.get('format', 'text') not in FORMATS:
            self.add_error('format', f"Formato no soportado; opciones: {', '.join(FORMATS)}")

    def _validate_output(self):
        output = self.data.get('output')
        if not output:
            return
        directory = os.path.dirname(os.path.abspath(output))
        if not os.path.isdir(directory):
            self.add_error('output', f'El directorio {directory} no existe')
        elif not os.access(directory, os.W_OK):
            self.add_error('output', f'No se puede escribir en {directory}')
