from typing import Any, Dict

from .base_validator import BaseValidator


class EtaQuotientValidator(BaseValidator):
    """
    Validador de expansiones de cocientes eta.
    Espera ``{'factors': [(a, b, e), ...], 'order': N}``.
    """

    def __init__(self, data: Dict[str, Any]):
        super().__init__()
        self.data = data

    def _validate(self):
        self._validate_order()
        self._validate_factors()

    def _validate_order(self):
        order = self.data.get('order')
        if not isinstance(order, int) or isinstance(order, bool):
            self.add_error('order', 'El orden debe ser un entero')
        elif order < 0:
            self.add_error('order', 'El orden debe ser no negativo')

    def _validate_factors(self):
        factors = self.data.get('factors')
        if factors is None:
            self.add_error('factors', 'La lista de factores es obligatoria')
            return
        for index, (offset, modulus, exponent) in enumerate(factors):
            field = f'factors[{index}]'
            if offset < 1:
                self.add_error(field, f'El desplazamiento a={offset} debe ser al menos 1')
            if offset > modulus:
                self.add_error(field, f'Se requiere a <= b (a={offset}, b={modulus})')
