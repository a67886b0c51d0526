"""
Módulo de excepciones personalizadas para la aplicación bicrank.
Centraliza la gestión de errores del laboratorio y asocia a cada excepción
un código estable y un código de salida para los comandos de gestión.
"""


class LabError(Exception):
    """Excepción base para todos los errores del laboratorio"""
    exit_code = 1
    default_detail = 'Ha ocurrido un error en el laboratorio.'
    default_code = 'error'

    def __init__(self, detail=None, code=None):
        self.detail = detail or self.default_detail
        self.code = code or self.default_code
        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)


class ValidationError(LabError):
    """Excepción para errores de validación de parámetros"""
    exit_code = 2
    default_detail = 'Los datos proporcionados no son válidos.'
    default_code = 'invalid'


class NotFoundError(LabError):
    """Excepción para nombres desconocidos (series, teoremas, identidades)"""
    exit_code = 2
    default_detail = 'El recurso solicitado no existe.'
    default_code = 'not_found'


class SeriesError(LabError):
    """Excepción para operaciones inválidas sobre series de potencias"""
    exit_code = 2
    default_detail = 'La operación sobre la serie no es válida.'
    default_code = 'series_error'


class InvalidFactorError(SeriesError):
    """Factor de Pochhammer fuera de rango (se exige 1 <= a <= b)"""
    default_detail = 'El factor de Pochhammer no es válido.'
    default_code = 'invalid_factor'


class NonUnitConstantTermError(SeriesError):
    """La serie no es invertible sobre los enteros"""
    default_detail = 'El término constante debe ser 1 o -1.'
    default_code = 'non_unit_constant_term'


class OrderOutOfRangeError(SeriesError, IndexError):
    """Se pidió un coeficiente o un orden fuera de la truncación"""
    default_detail = 'El índice está fuera del orden de truncación.'
    default_code = 'order_out_of_range'


class ResourceLimitError(LabError):
    """El cálculo solicitado excede los límites configurados"""
    exit_code = 3
    default_detail = 'El cálculo excede los límites configurados.'
    default_code = 'resource_limit'


class PrecisionExhaustedError(LabError):
    """No se pudo decidir un veredicto antes de alcanzar la precisión máxima"""
    exit_code = 3
    default_detail = 'No se alcanzó un veredicto con la precisión máxima.'
    default_code = 'precision_exhausted'


class VerificationFailedError(LabError):
    """Una verificación encontró una falla no esperada"""
    exit_code = 1
    default_detail = 'La verificación encontró fallas inesperadas.'
    default_code = 'verification_failed'

    def __init__(self, detail=None, code=None, failure=None):
        super().__init__(detail, code)
        self.failure = failure
